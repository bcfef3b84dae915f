"""Partitions, strict partitions and their diagrams.

Shapes are plain tuples of positive integers. Cells are ``(row, col)`` pairs,
1-indexed, with row 1 at the bottom (French notation). Row ``r`` of a shifted
diagram occupies columns ``r .. r + parts[r-1] - 1``.
"""

from __future__ import annotations

from functools import cache

from .errors import EmptyInputError, InvalidShapeError

Partition = tuple[int, ...]
StrictPartition = tuple[int, ...]
Cell = tuple[int, int]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))


def is_strict(parts) -> bool:
    parts = tuple(parts)
    return is_partition(parts) and all(parts[k] > parts[k + 1] for k in range(len(parts) - 1))


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise InvalidShapeError(f"{parts} is not a partition")
    return parts


def check_strict(parts) -> StrictPartition:
    parts = tuple(parts)
    if not is_strict(parts):
        raise InvalidShapeError(f"{parts} is not a strict partition")
    return parts


def parse_shape(text: str) -> Partition:
    """Parse ``"3,1"`` into ``(3, 1)``. The empty string is the empty shape."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InvalidShapeError(f"cannot parse shape {text!r}") from None
    return check_partition(parts)


def format_shape(parts) -> str:
    return ",".join(str(p) for p in parts)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return tuple(rec(n, n))


@cache
def strict_partitions_of(n: int) -> tuple[StrictPartition, ...]:
    """All strict partitions of n in decreasing lexicographic order."""
    if n <= 0:
        raise EmptyInputError("strict partitions are enumerated for n >= 1 only")

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first - 1):
                yield (first,) + rest

    return tuple(rec(n, n))


def conjugate(parts) -> Partition:
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def young_diagram(parts) -> frozenset[Cell]:
    return frozenset((r, c) for r, p in enumerate(parts, 1) for c in range(1, p + 1))


def shifted_diagram(parts) -> frozenset[Cell]:
    return frozenset((r, c) for r, p in enumerate(parts, 1) for c in range(r, r + p))


def sym_diagram(gamma) -> Partition:
    """Partition whose diagram is the shifted diagram of gamma glued to its transpose."""
    gamma = check_strict(gamma)
    ell = len(gamma)
    arms = [g + j - 1 for j, g in enumerate(gamma, 1)]
    rows = arms[:]
    i = ell + 1
    while True:
        count = sum(1 for a in arms if a >= i)
        if count == 0:
            break
        rows.append(count)
        i += 1
    return tuple(rows)


def _diagram_to_shape(cells, shifted: bool):
    """Inverse of young_diagram / shifted_diagram, or None if cells form no such diagram."""
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    parts = []
    for r in range(1, len(rows) + 1):
        if r not in rows:
            return None
        cols = sorted(rows[r])
        start = r if shifted else 1
        if cols != list(range(start, start + len(cols))):
            return None
        parts.append(len(cols))
    parts = tuple(parts)
    ok = is_strict(parts) if shifted else is_partition(parts)
    return parts if ok else None


def boundary_cells(shape, shifted: bool = True) -> tuple[frozenset[Cell], frozenset[Cell]]:
    """Addable and removable cells of a Young (``shifted=False``) or shifted diagram.

    Found by trying every candidate cell and keeping those that leave a valid
    diagram of the same kind.
    """
    shape = check_strict(shape) if shifted else check_partition(shape)
    diagram = shifted_diagram(shape) if shifted else young_diagram(shape)
    addable, removable = set(), set()
    for r in range(1, len(shape) + 2):
        length = shape[r - 1] if r <= len(shape) else 0
        start = r if shifted else 1
        end_col = start + length  # first free column in row r
        cand = (r, end_col)
        if _diagram_to_shape(diagram | {cand}, shifted) is not None:
            addable.add(cand)
        if length:
            last = (r, end_col - 1)
            if _diagram_to_shape(diagram - {last}, shifted) is not None:
                removable.add(last)
    return frozenset(addable), frozenset(removable)


def remove_cell(shape, row: int) -> tuple[int, ...]:
    """Shape with the last cell of the given row removed (trailing zero dropped)."""
    parts = list(shape)
    parts[row - 1] -= 1
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)
