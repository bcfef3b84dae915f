"""Hand-transcribed reference graphs and pairings.

Tableaux use the text grammar of :mod:`queerdeg.tableaux` (rows bottom to top,
``'`` marks). Standard Young tableaux in pairings are named by their row
reading word.
"""

from __future__ import annotations

from .degraph import DEGraph
from .tableaux import generate_syt

# edge pattern shared by the 8-vertex pictures of shape (3,1)
_PATTERN_31 = {
    2: [("A1", "A2"), ("B1", "B2"), ("C2", "C3")],
    3: [("A2", "A3"), ("B1", "B2"), ("C1", "C2")],
    0: [("A1", "A2"), ("A3", "B1"), ("B2", "C1"), ("C2", "C3")],
}
_PATTERN_4 = {
    2: [("T2", "T3"), ("U4", "U5")],
    3: [("T3", "T4"), ("U3", "U4")],
    0: [("T1", "T2"), ("T3", "U3"), ("T4", "U4"), ("U5", "U6")],
}

QDEG_31 = {
    "A1": "1,2',4/3", "A2": "1,2,4/3", "A3": "1,2,3/4",
    "B1": "1,2',3/4", "B2": "1,2,3'/4",
    "C1": "1,2',3'/4", "C2": "1,2',4'/3", "C3": "1,2,4'/3",
}

QDEG_4 = {
    "T1": "1,2,3,4", "T2": "1,2',3,4", "T3": "1,2,3',4", "T4": "1,2,3,4'",
    "U3": "1,2',3',4", "U4": "1,2',3,4'", "U5": "1,2,3',4'", "U6": "1,2',3',4'",
}


def _extend_row1(text: str, cell: str) -> str:
    rows = text.split("/")
    rows[0] += "," + cell
    return "/".join(rows)


def _imbed_41() -> tuple[dict, dict]:
    names = {}
    for k, v in QDEG_31.items():
        names[k] = _extend_row1(v, "5'")
        names[k.lower()] = _extend_row1(v, "5")
    for k, v in QDEG_4.items():
        names[k] = v + "/5"
    edges = {label: [] for label in (0, 2, 3, 4)}
    for label, pairs in _PATTERN_31.items():
        edges[label] += pairs + [(a.lower(), b.lower()) for a, b in pairs]
    for label, pairs in _PATTERN_4.items():
        edges[label] += pairs
    edges[4] = [(_D4_RELABEL.get(a, a), _D4_RELABEL.get(b, b)) for a, b in IMBED_41_D4_PRINTED]
    return names, edges


# d_4 edges as drawn. Four of them join tableaux that differ in the mark on 2,
# which d_4 never touches; swapping T1<->U6 and T2<->U5 in those edges repairs them.
IMBED_41_D4_PRINTED = [
    ("A1", "c2"), ("A2", "c3"), ("C1", "T1"), ("B2", "T2"),
    ("b1", "U5"), ("a3", "U6"), ("T3", "T4"), ("U3", "U4"),
]
_D4_RELABEL = {"T1": "U6", "U6": "T1", "T2": "U5", "U5": "T2"}
IMBED_41_NAMES, IMBED_41_EDGES = _imbed_41()

P_PRODUCT_LEFT = {
    "A1": "1,2'/3|4", "A2": "1,2/3|4", "A3": "1,2/4|3",
    "B1": "1,2'/4|3", "B2": "1,3'/4|2",
    "C1": "2,3'/4|1", "C2": "2,3/4|1", "C3": "1,3/4|2",
}
P_PRODUCT_RIGHT = {
    "A1": "2|1,3'/4", "A2": "1|2,3'/4", "A3": "1|2,3/4",
    "B1": "2|1,3/4", "B2": "3|1,2/4",
    "C1": "3|1,2'/4", "C2": "4|1,2'/3", "C3": "4|1,2/3",
}
P_PRODUCT2_FIRST = {
    "A1": "2,3|1,4", "A2": "1,3|2,4", "A3": "1,4|2,3",
    "B1": "2,4|1,3", "B2": "3,4|1,2",
    "C1": "3,4|1,2'", "C2": "2,4|1,3'", "C3": "1,4|2,3'",
}
P_PRODUCT2_SECOND = {
    "T1": "1,2|3,4", "T2": "1,2'|3,4", "T3": "1,3'|2,4", "T4": "1,4'|2,3",
    "U3": "2,3'|1,4", "U4": "2,4'|1,3", "U5": "3,4'|1,2", "U6": "3,4'|1,2'",
}


def named_edges(names: dict, pattern: dict) -> dict[int, set[frozenset]]:
    """Translate figure node names to tableau ids; edges become unordered pairs."""
    return {label: {frozenset((names[a], names[b])) for a, b in pairs} for label, pairs in pattern.items()}


def graph_edges(g: DEGraph, within=None) -> dict[int, set[frozenset]]:
    """Edges of ``g`` per label as unordered pairs, optionally restricted to a vertex set."""
    out = {}
    for label in g.labels:
        pairs = {frozenset(e) for e in g.edges(label)}
        if within is not None:
            pairs = {e for e in pairs if e & within}
        out[label] = pairs
    return out


# (family, objects, queer edges expected) for the figure comparisons
FIGURES = {
    "qdeg-31": ("sst", ((3, 1),), QDEG_31, _PATTERN_31),
    "qdeg-4": ("sst", ((4,),), QDEG_4, _PATTERN_4),
    "imbed-41": ("sst", ((4, 1),), IMBED_41_NAMES, IMBED_41_EDGES),
    "P-product-left": ("concat", ((2, 1), (1,)), P_PRODUCT_LEFT, _PATTERN_31),
    "P-product-right": ("concat", ((1,), (2, 1)), P_PRODUCT_RIGHT, _PATTERN_31),
    "P-product2-first": ("concat", ((2,), (2,)), P_PRODUCT2_FIRST, _PATTERN_31),
    "P-product2-second": ("concat", ((2,), (2,)), P_PRODUCT2_SECOND, _PATTERN_4),
}


# ---------------------------------------------------------------- pairings on SYT

SST2_OBJECTS = ((2,), (1, 1))
SST2_PAIRING = [("12", "21")]
SST3_LEFT_OBJECTS = ((2, 1),)
SST3_LEFT_PAIRING = [("213", "312")]
SST3_RIGHT_OBJECTS = ((3,), (2, 1), (1, 1, 1))
SST3_RIGHT_PAIRING = [("123", "213"), ("312", "321")]
SST4_OBJECTS = ((3, 1), (2, 2), (2, 1, 1))
SST4_GOOD_PAIRING = [("2134", "3124"), ("4213", "4312"), ("4123", "2413"), ("3214", "3412")]
SST4_BAD_PAIRING = [("4123", "2134"), ("3124", "3214"), ("4213", "3412"), ("4312", "2413")]
SST4_GOOD2_OBJECTS = ((4,), (3, 1), (2, 1, 1), (1, 1, 1, 1))
SST4_GOOD2_PAIRING = [("1234", "2134"), ("3124", "3214"), ("4123", "4213"), ("4312", "4321")]


def syt_by_word(shapes) -> dict[str, object]:
    """Map row reading words (as digit strings) to tableaux over the given shapes."""
    return {
        "".join(str(x) for x in T.reading_word): T
        for lam in shapes
        for T in generate_syt(tuple(lam))
    }


def pairing_by_ids(shapes, pairing) -> set[frozenset]:
    words = syt_by_word(shapes)
    return {frozenset((str(words[a]), str(words[b]))) for a, b in pairing}


def syt_pairing_graph(shapes, pairing) -> DEGraph:
    """SYT graph on the union of ``shapes`` with d_2..d_{n-1} and a given psi_0 pairing."""
    from .degraph import syt_graph

    g = syt_graph(*shapes)
    words = syt_by_word(shapes)
    psi0 = {}
    for a, b in pairing:
        x, y = str(words[a]), str(words[b])
        psi0[x], psi0[y] = y, x
    moves = {**g.moves, 0: psi0}
    return DEGraph(g.n, g.vertices, g.descents, moves, g.objects)


def sst4_bad_graph() -> DEGraph:
    return syt_pairing_graph(SST4_OBJECTS, SST4_BAD_PAIRING)


def fixed_point_graph() -> DEGraph:
    """SST(3,1) with psi_0 fixing two tableaux it should swap."""
    from .degraph import sst_graph

    g = sst_graph((3, 1))
    psi0 = dict(g.moves[0])
    a, b = QDEG_31["A3"], QDEG_31["B1"]
    psi0[a], psi0[b] = a, b
    return DEGraph(g.n, g.vertices, g.descents, {**g.moves, 0: psi0}, g.objects)


def cover_graph() -> DEGraph:
    """The double cover of SST(4,1): six restricted classes on a cycle of d_4 edges.

    A class meets two d_4 edges, which a single vertex cannot carry in a
    matching, so each class is a pair of vertices ``X.p``/``X.q`` joined by psi_0.
    """
    classes = ["T1", "a1", "A2", "T2", "a2", "A1"]
    base = {"T": {4}, "a": set(), "A": {4}}
    vertices, des = [], {}
    for c in classes:
        for port, extra in (("p", {1}), ("q", set())):
            vertices.append(f"{c}.{port}")
            des[f"{c}.{port}"] = base[c[0]] | extra
    edges = {
        0: [(f"{c}.p", f"{c}.q") for c in classes],
        4: [(f"{classes[k]}.p", f"{classes[(k + 1) % 6]}.q") for k in range(6)],
    }
    return DEGraph.from_edges(5, vertices, des, edges)
