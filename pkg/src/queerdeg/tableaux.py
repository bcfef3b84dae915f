"""Standard Young tableaux, signed shifted tableaux and concatenated tableaux.

Rows are stored bottom-to-top. A signed entry is stored as a negative integer,
so ``-2`` is the marked letter 2'. Text form lists rows bottom-to-top separated
by ``/``, entries separated by ``,``, marks written as a trailing ``'`` and the
two factors of a concatenated tableau separated by ``|``::

    "1,2',4/3"      shape (3,1), 2 marked
    "1,2/3|4"       shape (2,1) (x) (1)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, cached_property

from .errors import InvalidShapeError, InvalidWordError, TableauParseError
from .shapes import boundary_cells, check_partition, check_strict, remove_cell

Word = tuple[int, ...]
DescentSet = frozenset[int]


def descent_set(word) -> DescentSet:
    """Letters i that appear to the right of i+1 in a permutation of [n]."""
    word = tuple(word)
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise InvalidWordError(f"{word} is not a permutation of 1..{n}")
    pos = [0] * (n + 2)
    for k, letter in enumerate(word):
        pos[letter] = k
    return frozenset(i for i in range(1, n) if pos[i] > pos[i + 1])


def _fmt_entry(v: int) -> str:
    return f"{-v}'" if v < 0 else str(v)


def _fmt_rows(rows) -> str:
    return "/".join(",".join(_fmt_entry(v) for v in row) for row in rows)


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def reading_word(self) -> Word:
        return tuple(v for row in reversed(self.rows) for v in row)

    @cached_property
    def descents(self) -> DescentSet:
        return descent_set(self.reading_word)

    def __str__(self):
        return _fmt_rows(self.rows)

    def cell_of(self, letter: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows, 1):
            if letter in row:
                return r, row.index(letter) + 1
        raise KeyError(letter)

    def violation(self) -> str | None:
        shape = self.shape
        if not all(shape) or any(shape[k] < shape[k + 1] for k in range(len(shape) - 1)):
            return "row lengths must weakly decrease"
        letters = [v for row in self.rows for v in row]
        if any(v <= 0 for v in letters):
            return "entries must be positive and unmarked"
        if len(set(letters)) != len(letters):
            return "duplicate value"
        if sorted(letters) != list(range(1, len(letters) + 1)):
            return "values must be exactly 1..n"
        for row in self.rows:
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                return "rows must increase left to right"
        for r in range(len(self.rows) - 1):
            lower, upper = self.rows[r], self.rows[r + 1]
            if any(upper[c] <= lower[c] for c in range(len(upper))):
                return "columns must increase bottom to top"
        return None


def row_reading_word(T: YoungTableau) -> Word:
    """Rows read left to right, top row first."""
    return T.reading_word


@dataclass(frozen=True)
class SignedShiftedTableau:
    """Bijective signed filling of a shifted diagram.

    Letters are distinct positive integers; they need not be ``1..n`` (factors
    of a concatenated tableau carry arbitrary letters).
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def where(self) -> dict[int, tuple[int, int, bool]]:
        """Absolute value -> (row, col, marked)."""
        out = {}
        for r, row in enumerate(self.rows, 1):
            for k, v in enumerate(row):
                out[abs(v)] = (r, r + k, v < 0)
        return out

    @property
    def letters(self) -> frozenset[int]:
        return frozenset(self.where)

    @cached_property
    def hook_word(self) -> Word:
        return hook_reading_word(self)

    @cached_property
    def descents(self) -> DescentSet:
        return descent_set(self.hook_word)

    def entry(self, row: int, col: int) -> int:
        return self.rows[row - 1][col - row]

    def __str__(self):
        return _fmt_rows(self.rows)

    def violation(self, standard: bool = True) -> str | None:
        shape = self.shape
        if not all(shape) or any(shape[k] <= shape[k + 1] for k in range(len(shape) - 1)):
            return "row lengths must strictly decrease"
        flat = [v for row in self.rows for v in row]
        if any(v == 0 for v in flat):
            return "entries must be nonzero"
        absolute = [abs(v) for v in flat]
        if len(set(absolute)) != len(absolute):
            return "duplicate absolute value"
        if standard and sorted(absolute) != list(range(1, len(absolute) + 1)):
            return "absolute values must be exactly 1..n"
        for row in self.rows:
            if row[0] < 0:
                return "marked entry on the main diagonal"
            if any(abs(row[k]) >= abs(row[k + 1]) for k in range(len(row) - 1)):
                return "rows must increase left to right"
        for r in range(1, len(self.rows)):
            lower, upper = self.rows[r - 1], self.rows[r]
            # cell (r+1, c) sits above (r, c); upper[k] is column r+1+k, lower index c-r
            for k, v in enumerate(upper):
                if abs(v) <= abs(lower[k + 1]):
                    return "columns must increase bottom to top"
        return None

    def with_rows(self, rows) -> "SignedShiftedTableau":
        return SignedShiftedTableau(tuple(tuple(r) for r in rows))


def hook_reading_word(S: SignedShiftedTableau) -> Word:
    """For i from the largest index down to 1: the marked letters of column i
    bottom to top, then the unmarked letters of row i left to right."""
    if not S.rows:
        return ()
    width = len(S.rows[0])
    columns: dict[int, list[int]] = {}
    for r, row in enumerate(S.rows, 1):
        for k, v in enumerate(row):
            if v < 0:
                columns.setdefault(r + k, []).append(-v)
    word = []
    for i in range(width, 0, -1):
        word.extend(columns.get(i, ()))
        if i <= len(S.rows):
            word.extend(v for v in S.rows[i - 1] if v > 0)
    return tuple(word)


@dataclass(frozen=True)
class ConcatTableau:
    left: SignedShiftedTableau
    right: SignedShiftedTableau

    @property
    def shape(self):
        return self.left.shape, self.right.shape

    @property
    def size(self) -> int:
        return self.left.size + self.right.size

    @cached_property
    def hook_word(self) -> Word:
        return self.left.hook_word + self.right.hook_word

    @cached_property
    def descents(self) -> DescentSet:
        return descent_set(self.hook_word)

    def __str__(self):
        return f"{self.left}|{self.right}"

    def violation(self) -> str | None:
        for factor in (self.left, self.right):
            if factor.rows:
                bad = factor.violation(standard=False)
                if bad:
                    return bad
        both = sorted(self.left.letters | self.right.letters)
        if len(both) != self.size:
            return "duplicate absolute value"
        if both != list(range(1, self.size + 1)):
            return "absolute values must be exactly 1..n"
        return None


def concat_descents(ST: ConcatTableau) -> DescentSet:
    return ST.descents


# ---------------------------------------------------------------- text forms


def _parse_rows(text: str, allow_marks: bool) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not text:
        return ()
    rows = []
    for chunk in text.split("/"):
        row = []
        for token in chunk.split(","):
            token = token.strip()
            marked = token.endswith("'")
            if marked:
                if not allow_marks:
                    raise TableauParseError(f"marked entry {token!r} in an unsigned tableau")
                token = token[:-1]
            if not token.isdigit() or int(token) == 0:
                raise TableauParseError(f"malformed entry {token!r}")
            row.append(-int(token) if marked else int(token))
        rows.append(tuple(row))
    return tuple(rows)


def parse_syt(text: str) -> YoungTableau:
    T = YoungTableau(_parse_rows(text, allow_marks=False))
    bad = T.violation()
    if bad:
        raise TableauParseError(f"{text!r}: {bad}")
    return T


def parse_sst(text: str, standard: bool = True) -> SignedShiftedTableau:
    S = SignedShiftedTableau(_parse_rows(text, allow_marks=True))
    bad = S.violation(standard=standard)
    if bad:
        raise TableauParseError(f"{text!r}: {bad}")
    return S


def parse_concat(text: str) -> ConcatTableau:
    if text.count("|") != 1:
        raise TableauParseError(f"{text!r}: expected exactly one '|' between factors")
    a, b = text.split("|")
    ST = ConcatTableau(
        SignedShiftedTableau(_parse_rows(a, True)), SignedShiftedTableau(_parse_rows(b, True))
    )
    bad = ST.violation()
    if bad:
        raise TableauParseError(f"{text!r}: {bad}")
    return ST


def parse(text: str, kind: str | None = None):
    """Parse a tableau; ``kind`` is ``"syt"``, ``"sst"`` or ``"concat"``.

    Without a kind, text containing ``|`` is a concatenated tableau and anything
    else is a signed shifted tableau.
    """
    if kind is None:
        kind = "concat" if "|" in text else "sst"
    if kind == "syt":
        return parse_syt(text)
    if kind == "sst":
        return parse_sst(text)
    if kind == "concat":
        return parse_concat(text)
    raise ValueError(f"unknown tableau kind {kind!r}")


def format_tableau(T) -> str:
    return str(T)


def _rows_to_dict(rows):
    return [[{"value": abs(v), "marked": v < 0} for v in row] for row in rows]


def _rows_from_dict(rows):
    return tuple(tuple(-e["value"] if e.get("marked") else e["value"] for e in row) for row in rows)


def to_dict(T) -> dict:
    if isinstance(T, ConcatTableau):
        return {"left": to_dict(T.left), "right": to_dict(T.right)}
    return {"shape": list(T.shape), "rows": _rows_to_dict(T.rows)}


def from_dict(data: dict, kind: str = "sst"):
    if "left" in data:
        ST = ConcatTableau(
            SignedShiftedTableau(_rows_from_dict(data["left"]["rows"])),
            SignedShiftedTableau(_rows_from_dict(data["right"]["rows"])),
        )
        bad = ST.violation()
    elif kind == "syt":
        ST = YoungTableau(_rows_from_dict(data["rows"]))
        bad = ST.violation()
    else:
        ST = SignedShiftedTableau(_rows_from_dict(data["rows"]))
        bad = ST.violation()
    if bad:
        raise TableauParseError(bad)
    if "shape" in data and list(ST.shape) != list(data["shape"]):
        raise TableauParseError("declared shape does not match rows")
    return ST


# ---------------------------------------------------------------- enumeration


@cache
def standard_fillings(shape, shifted: bool) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Unmarked increasing bijective fillings by 1..n, built by placing n, n-1, ...
    into removable corners."""
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    _, removable = boundary_cells(shape, shifted)
    for r, _c in sorted(removable):
        smaller = remove_cell(shape, r)
        for filling in standard_fillings(smaller, shifted):
            rows = [list(row) for row in filling]
            if r > len(rows):
                rows.append([])
            rows[r - 1].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def _signings(rows, letters=None):
    """All sign patterns on off-diagonal cells, optionally relabelling k -> letters[k-1]."""
    if letters is not None:
        rows = tuple(tuple(letters[v - 1] for v in row) for row in rows)
    slots = [(r, k) for r, row in enumerate(rows) for k in range(1, len(row))]
    for signs in itertools.product((1, -1), repeat=len(slots)):
        grid = [list(row) for row in rows]
        for (r, k), s in zip(slots, signs):
            grid[r][k] *= s
        yield tuple(tuple(row) for row in grid)


@cache
def generate_syt(shape) -> tuple[YoungTableau, ...]:
    shape = check_partition(shape)
    return tuple(
        sorted((YoungTableau(f) for f in standard_fillings(shape, False)), key=str)
    )


@cache
def generate_sst(shape) -> tuple[SignedShiftedTableau, ...]:
    shape = check_strict(shape)
    out = [
        SignedShiftedTableau(signed)
        for f in standard_fillings(shape, True)
        for signed in _signings(f)
    ]
    return tuple(sorted(out, key=str))


@cache
def generate_concat(gamma, delta) -> tuple[ConcatTableau, ...]:
    gamma, delta = check_strict(gamma), check_strict(delta)
    a, b = sum(gamma), sum(delta)
    n = a + b
    out = []
    left_fill = standard_fillings(gamma, True)
    right_fill = standard_fillings(delta, True)
    for chosen in itertools.combinations(range(1, n + 1), a):
        rest = tuple(v for v in range(1, n + 1) if v not in chosen)
        lefts = [SignedShiftedTableau(s) for f in left_fill for s in _signings(f, chosen)]
        rights = [SignedShiftedTableau(s) for f in right_fill for s in _signings(f, rest)]
        out.extend(ConcatTableau(L, R) for L in lefts for R in rights)
    return tuple(sorted(out, key=str))


def generate(family: str, *shapes):
    """Enumerate ``"syt"`` (one partition), ``"sst"`` (one strict partition) or
    ``"concat"`` (two strict partitions)."""
    if family == "syt":
        return generate_syt(tuple(shapes[0]))
    if family == "sst":
        return generate_sst(tuple(shapes[0]))
    if family == "concat":
        return generate_concat(tuple(shapes[0]), tuple(shapes[1]))
    raise ValueError(f"unknown family {family!r}")


def superstandard(gamma) -> SignedShiftedTableau:
    """Unmarked filling of 1..n along rows, bottom row first."""
    gamma = check_strict(gamma)
    if not gamma:
        raise InvalidShapeError("empty shape has no superstandard tableau")
    rows, nxt = [], 1
    for part in gamma:
        rows.append(tuple(range(nxt, nxt + part)))
        nxt += part
    return SignedShiftedTableau(tuple(rows))
