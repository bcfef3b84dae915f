import pytest

from queerdeg.errors import EmptyInputError, InvalidShapeError
from queerdeg.shapes import (
    boundary_cells,
    conjugate,
    parse_shape,
    partitions_of,
    shifted_diagram,
    strict_partitions_of,
    sym_diagram,
)


@pytest.mark.parametrize(
    "n, expected",
    [
        (4, [(4,), (3, 1)]),
        (1, [(1,)]),
        (6, [(6,), (5, 1), (4, 2), (3, 2, 1)]),
    ],
)
def test_strict_partitions(n, expected):
    assert list(strict_partitions_of(n)) == expected


def test_strict_partitions_of_zero():
    with pytest.raises(EmptyInputError):
        strict_partitions_of(0)


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize(
    "shape, cells",
    [
        ((3, 1), {(1, 1), (1, 2), (1, 3), (2, 2)}),
        ((1,), {(1, 1)}),
        ((2, 1), {(1, 1), (1, 2), (2, 2)}),
    ],
)
def test_shifted_diagram(shape, cells):
    assert shifted_diagram(shape) == cells


@pytest.mark.parametrize(
    "shape, expected",
    [((6, 4, 3, 1), (6, 5, 5, 4, 3, 1)), ((1,), (1,)), ((2, 1), (2, 2))],
)
def test_sym_diagram(shape, expected):
    assert sym_diagram(shape) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_sym_diagram_is_self_conjugate(n):
    # shifted diagram and its transpose share the l(gamma) diagonal cells
    for g in strict_partitions_of(n):
        lam = sym_diagram(g)
        assert conjugate(lam) == lam
        assert sum(lam) == 2 * n - len(g)


def test_boundary_cells():
    assert boundary_cells((3, 1))[1] == {(1, 3), (2, 2)}
    # removing (1,2) would leave rows (1,1), which is not strict
    assert boundary_cells((2, 1))[1] == {(2, 2)}
    assert boundary_cells((1,))[0] == {(1, 2)}
    assert boundary_cells((2, 1), shifted=False) == ({(1, 3), (2, 2), (3, 1)}, {(1, 2), (2, 1)})


def test_parse_shape():
    assert parse_shape("3,1") == (3, 1)
    assert parse_shape("") == ()
    with pytest.raises(InvalidShapeError):
        parse_shape("1,3")
    with pytest.raises(InvalidShapeError):
        parse_shape("a")
