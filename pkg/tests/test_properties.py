from hypothesis import given, settings, strategies as st

from queerdeg.involutions import deg_concat, deg_sst, deg_syt, queer_concat, queer_sst
from queerdeg.shapes import partitions_of, strict_partitions_of
from queerdeg.tableaux import (
    format_tableau,
    from_dict,
    generate_concat,
    generate_sst,
    generate_syt,
    parse,
    to_dict,
)

STRICT = [g for n in range(2, 8) for g in strict_partitions_of(n)]
PARTS = [lam for n in range(3, 8) for lam in partitions_of(n)]


@st.composite
def sst(draw):
    objs = generate_sst(draw(st.sampled_from(STRICT)))
    return objs[draw(st.integers(0, len(objs) - 1))]


@st.composite
def syt(draw):
    objs = generate_syt(draw(st.sampled_from(PARTS)))
    return objs[draw(st.integers(0, len(objs) - 1))]


@st.composite
def concat(draw):
    g = draw(st.sampled_from(STRICT[:6]))
    d = draw(st.sampled_from([(1,), (2,), (2, 1), (3,)]))
    objs = generate_concat(g, d)
    return objs[draw(st.integers(0, len(objs) - 1))]


def _outside(D, i):
    # d_i moves the letters i-1, i, i+1, so only descents i-2..i+1 may change
    return {d for d in D if not i - 2 <= d <= i + 1}


@settings(max_examples=150, deadline=None)
@given(sst(), st.data())
def test_sst_moves(S, data):
    n = S.size
    assert queer_sst(queer_sst(S)) == S
    flips = queer_sst(S).descents ^ S.descents
    assert 1 in flips and flips <= {1, 2}
    if n >= 3:
        i = data.draw(st.integers(2, n - 1))
        T = deg_sst(S, i)
        assert deg_sst(T, i) == S
        assert T.shape == S.shape and T.violation() is None
        assert _outside(T.descents, i) == _outside(S.descents, i)


@settings(max_examples=150, deadline=None)
@given(syt(), st.data())
def test_syt_moves(T, data):
    i = data.draw(st.integers(2, T.size - 1))
    U = deg_syt(T, i)
    assert deg_syt(U, i) == T
    assert U.violation() is None
    assert _outside(U.descents, i) == _outside(T.descents, i)


@settings(max_examples=100, deadline=None)
@given(concat(), st.data())
def test_concat_moves(ST, data):
    n = sum(map(sum, ST.shape))
    assert queer_concat(queer_concat(ST)) == ST
    i = data.draw(st.integers(2, n - 1))
    assert deg_concat(deg_concat(ST, i), i) == ST


@settings(max_examples=100, deadline=None)
@given(st.one_of(sst(), syt(), concat()))
def test_round_trips(T):
    kind = {"SignedShiftedTableau": "sst", "YoungTableau": "syt", "ConcatTableau": "concat"}
    k = kind[type(T).__name__]
    assert parse(format_tableau(T), k) == T
    assert from_dict(to_dict(T), k) == T
