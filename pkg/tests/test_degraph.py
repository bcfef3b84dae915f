import json

import pytest

from queerdeg.errors import GraphConstructionError, MalformedGraphError, UnknownLabelError
from queerdeg.degraph import (
    DEGraph,
    build_graph,
    components,
    concat_graph,
    descent_multiset,
    is_descent_edge_isomorphic,
    max_special_edge_need,
    restrict_descents,
    sst_graph,
    syt_graph,
    to_dot,
)
from queerdeg.shapes import strict_partitions_of
from queerdeg.tableaux import superstandard


def test_build_sst_31():
    g = sst_graph((3, 1))
    assert len(g) == 8
    assert [len(g.edges(lb)) for lb in (0, 2, 3)] == [4, 3, 3]


def test_build_single_object():
    g = build_graph(["x"], lambda x: set(), {2: lambda x: x}, n=3, key=str)
    assert len(g) == 1 and g.edge_count() == 0


def test_build_graph_errors_carry_witness():
    with pytest.raises(GraphConstructionError) as exc:
        build_graph([1, 2], lambda x: set(), {2: lambda x: x + 1}, n=3)
    assert exc.value.witness == (2, "2", "3")
    with pytest.raises(GraphConstructionError) as exc:
        build_graph([0, 1, 2], lambda x: set(), {2: lambda x: (x + 1) % 3}, n=3)
    assert exc.value.witness[0] == 2


def test_components():
    g = sst_graph((3, 1))
    assert [len(c) for c in components(g, [0, 2, 3])] == [8]
    assert sorted(len(c) for c in components(g, [2, 3])) == [2, 3, 3]
    h = concat_graph((2,), (2,))
    # three classes; a printed figure draws two of them
    assert sorted(len(c) for c in components(h, [0, 2, 3])) == [8, 8, 8]
    with pytest.raises(UnknownLabelError):
        components(g, [4])


@pytest.mark.parametrize(
    "D, h, i, out",
    [({1, 3}, 2, 4, {2}), ({1, 2, 3}, 1, 4, {1, 2, 3}), ({2}, 3, 5, set())],
)
def test_restrict_descents(D, h, i, out):
    assert restrict_descents(D, h, i) == out


def test_restrict_descents_range():
    with pytest.raises(ValueError):
        restrict_descents({1}, 3, 2)
    with pytest.raises(ValueError):
        restrict_descents({1}, 1, 6, n=5)


def test_max_special_edge_need():
    for n in range(3, 8):
        for gm in strict_partitions_of(n):
            g = sst_graph(gm)
            assert max_special_edge_need(g, g.labels, n - 1) <= 2
    chain = DEGraph.from_edges(4, "abc", {v: set() for v in "abc"}, {2: [("a", "b")]}, labels={2, 3})
    assert max_special_edge_need(chain, [2, 3], 3) == 0


def test_descent_multiset():
    g = sst_graph((3, 1))
    ms = descent_multiset(g.vertices, g)
    want = [{1}, {2}, {2}, {3}, {1, 2}, {1, 3}, {1, 3}, {2, 3}]
    assert sorted(map(sorted, ms.elements())) == sorted(map(sorted, want))
    h = syt_graph((3, 1))
    assert sorted(map(sorted, descent_multiset(h.vertices, h).elements())) == [[1], [2], [3]]


def test_isomorphism():
    assert is_descent_edge_isomorphic(sst_graph((4,)), sst_graph((3, 1))) == (False, None)
    ok, witness = is_descent_edge_isomorphic(sst_graph((3, 1)), sst_graph((3, 1)))
    assert ok and all(k == v for k, v in witness.items())
    empty = DEGraph(3, [], {}, {})
    assert is_descent_edge_isomorphic(empty, empty) == (True, {})


def test_to_dot():
    text = to_dot(sst_graph((3, 1)))
    assert text.count("[label=") == 8 + 10
    assert text.count(" -- ") == 10
    assert "color=violet" in text and "color=red" in text and "color=blue" in text
    assert to_dot(DEGraph(3, [], {}, {})).strip() == "graph {}"
    g41 = to_dot(sst_graph((4, 1)))
    assert g41.count("color=magenta") == 8
    assert g41.count("[label=") - g41.count(" -- ") == 24


def test_structured_round_trip():
    g = sst_graph((3, 2))
    h = DEGraph.from_dict(json.loads(g.to_json()))
    assert h.to_dict() == g.to_dict()
    assert is_descent_edge_isomorphic(g, h)[0]


def test_malformed_input():
    with pytest.raises(MalformedGraphError):
        DEGraph.from_dict({"n": 3, "vertices": [{"id": "a", "des": [3]}]})
    with pytest.raises(MalformedGraphError):
        DEGraph.from_dict(
            {
                "n": 3,
                "vertices": [{"id": v, "des": []} for v in "abc"],
                "edges": [{"label": 2, "a": "a", "b": "b"}, {"label": 2, "a": "a", "b": "c"}],
            }
        )
    with pytest.raises(MalformedGraphError):
        DEGraph.from_dict({"vertices": []})


def test_unique_superstandard_vertex():
    for n in range(1, 8):
        for gm in strict_partitions_of(n):
            g = sst_graph(gm)
            target = superstandard(gm).descents
            assert [v for v in g.vertices if g.descents[v] == target] == [str(superstandard(gm))]
