import pytest

from queerdeg.errors import InvalidWordError, TableauParseError
from queerdeg.shapes import partitions_of, strict_partitions_of
from queerdeg.tableaux import (
    ConcatTableau,
    descent_set,
    from_dict,
    generate,
    generate_concat,
    generate_sst,
    generate_syt,
    hook_reading_word,
    parse,
    parse_concat,
    parse_sst,
    parse_syt,
    row_reading_word,
    superstandard,
    to_dict,
)


def word(text):
    return tuple(int(c) for c in text)


@pytest.mark.parametrize("text, w", [("1,3,4/2", "2134"), ("1,2,3/4", "4123"), ("1", "1")])
def test_row_reading_word(text, w):
    assert row_reading_word(parse_syt(text)) == word(w)


@pytest.mark.parametrize(
    "text, w",
    [
        ("1,2',4/3", "2314"),
        ("1,2',3'/4", "3241"),
        # the letter-by-letter rule; a printed figure shows 4213 with the same descents
        ("1,2',4'/3", "4231"),
    ],
)
def test_hook_reading_word(text, w):
    assert hook_reading_word(parse_sst(text)) == word(w)


def test_hook_word_descents_agree_with_printed_variant():
    assert descent_set(word("4231")) == descent_set(word("4213")) == {1, 3}


@pytest.mark.parametrize("w, des", [("2134", {1}), ("3241", {1, 2}), ("12345", set())])
def test_descent_set(w, des):
    assert descent_set(word(w)) == des


@pytest.mark.parametrize("bad", [(1, 1), (2, 3), (0, 1)])
def test_descent_set_rejects_non_permutations(bad):
    with pytest.raises(InvalidWordError):
        descent_set(bad)


@pytest.mark.parametrize("text, des", [("1,2/3|4", {2}), ("1|2", set()), ("2|1", {1})])
def test_concat_descents(text, des):
    assert parse_concat(text).descents == des


def test_generate_counts():
    assert len(generate("syt", (3, 1))) == 3
    assert len(generate("sst", (3, 1))) == 8
    assert len(generate("concat", (2, 1), (1,))) == 8
    assert len(generate_sst((4,))) == 8
    assert len(generate_sst((4, 1))) == 24


def test_syt_and_sst_descent_lists():
    assert [T.descents for T in sorted(generate_syt((3, 1)), key=lambda T: T.reading_word)] == [
        {1},
        {2},
        {3},
    ]
    expected = {
        "1,2',4/3": {1},
        "1,2,4/3": {2},
        "1,2,3/4": {3},
        "1,2',3/4": {1, 3},
        "1,2,3'/4": {2},
        "1,2',3'/4": {1, 2},
        "1,2',4'/3": {1, 3},
        "1,2,4'/3": {2, 3},
    }
    assert {str(S): S.descents for S in generate_sst((3, 1))} == expected


@pytest.mark.parametrize("shape, des", [((3, 1), {3}), ((1,), set()), ((2, 1), {2})])
def test_superstandard(shape, des):
    S = superstandard(shape)
    assert S.descents == des
    matches = [T for T in generate_sst(shape) if T.descents == des and T == S]
    assert matches == [S]


def test_superstandard_descents_unique_in_family():
    for n in range(1, 9):
        for g in strict_partitions_of(n):
            target = superstandard(g).descents
            assert sum(1 for S in generate_sst(g) if S.descents == target) == 1


def test_parse_examples():
    S = parse("1,2',4/3")
    assert S.rows == ((1, -2, 4), (3,))
    ST = parse("1,2/3|4")
    assert isinstance(ST, ConcatTableau)
    assert ST.left.shape == (2, 1) and ST.right.shape == (1,)
    with pytest.raises(TableauParseError, match="duplicate absolute value"):
        parse("1,1'")


@pytest.mark.parametrize(
    "text, kind, why",
    [
        ("1',2", "sst", "main diagonal"),
        ("2,1", "sst", "rows"),
        ("1,2/3,4", "sst", "row lengths"),
        ("1,3/2", "sst", "columns"),
        ("1,2,4", "sst", "exactly 1..n"),
        ("1,2'", "syt", "marked"),
        ("2,3/1", "syt", "columns"),
        ("1|2|3", "concat", "exactly one"),
        ("1,x", "sst", "malformed"),
    ],
)
def test_parse_errors_name_the_invariant(text, kind, why):
    with pytest.raises(TableauParseError, match=why):
        parse(text, kind)


def test_round_trip_text_and_dict():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for T in generate_syt(lam):
                assert parse_syt(str(T)) == T
                assert from_dict(to_dict(T), kind="syt") == T
    for n in range(1, 10):
        for g in strict_partitions_of(n):
            for S in generate_sst(g):
                assert parse_sst(str(S)) == S
    for ST in generate_concat((2, 1), (2,)):
        assert parse_concat(str(ST)) == ST
        assert from_dict(to_dict(ST)) == ST


def test_hook_word_is_a_permutation_of_letters():
    for n in range(1, 9):
        for g in strict_partitions_of(n):
            for S in generate_sst(g):
                assert sorted(S.hook_word) == list(range(1, n + 1))
