"""Fundamental quasisymmetric functions and Schur / Schur P / Schur Q expansions.

Everything is exact: integer coefficients, ``Fraction`` arithmetic for solving
and evaluation.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .errors import NotInSpanError
from .shapes import check_partition, check_strict, format_shape, partitions_of, strict_partitions_of
from .tableaux import generate_sst, generate_syt


class QSymF:
    """Homogeneous integer combination of fundamental quasisymmetric functions F_D."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        clean = {}
        for key, c in (coeffs or {}).items():
            key = frozenset(key)
            if any(not 1 <= d <= n - 1 for d in key):
                raise ValueError(f"descent set {sorted(key)} is not a subset of [{n - 1}]")
            if c:
                clean[key] = clean.get(key, 0) + c
        self.coeffs = {k: c for k, c in clean.items() if c}

    @classmethod
    def from_descents(cls, n: int, descents) -> "QSymF":
        return cls(n, Counter(frozenset(d) for d in descents))

    @classmethod
    def fundamental(cls, n: int, D=()) -> "QSymF":
        return cls(n, {frozenset(D): 1})

    def __eq__(self, other):
        if not isinstance(other, QSymF):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def _check_degree(self, other):
        if self.coeffs and other.coeffs and self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check_degree(other)
        merged = Counter(self.coeffs)
        merged.update(other.coeffs)
        return QSymF(self.n if self.coeffs else other.n, merged)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int) -> "QSymF":
        return QSymF(self.n, {d: k * c for d, c in self.coeffs.items()})

    def __rmul__(self, k):
        return self.scale(k)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return product(self, other)

    def __bool__(self):
        return bool(self.coeffs)

    def terms(self):
        return sorted(self.coeffs.items(), key=lambda kv: tuple(sorted(kv[0])))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for key, c in self.terms():
            name = "F{" + ",".join(str(d) for d in sorted(key)) + "}"
            coef = "" if c == 1 else "-" if c == -1 else str(c)
            parts.append(f"{coef}{name}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


# ---------------------------------------------------------------- expansions


@cache
def schur_F(lam) -> QSymF:
    lam = check_partition(lam)
    return QSymF.from_descents(sum(lam), (T.descents for T in generate_syt(lam)))


@cache
def schurP_F(gamma) -> QSymF:
    gamma = check_strict(gamma)
    return QSymF.from_descents(sum(gamma), (S.descents for S in generate_sst(gamma)))


def schurQ_F(gamma) -> QSymF:
    gamma = check_strict(gamma)
    return schurP_F(gamma).scale(2 ** len(gamma))


@dataclass
class BasisExpansion:
    basis: str  # "schur" or "schurP"
    coefficients: dict[tuple[int, ...], int] = field(default_factory=dict)

    @property
    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients.values())

    def __str__(self):
        if not self.coefficients:
            return "0"
        sym = "s" if self.basis == "schur" else "P"
        out = []
        for shape, c in self.coefficients.items():
            coef = "" if c == 1 else f"{c}*"
            out.append(f"{coef}{sym}({format_shape(shape)})")
        return " + ".join(out)

    def to_csv(self) -> str:
        lines = ["shape,coefficient"]
        lines += [f'"{format_shape(s)}",{c}' for s, c in self.coefficients.items()]
        return "\n".join(lines) + "\n"


def basis_functions(basis: str, n: int) -> list[tuple[tuple[int, ...], QSymF]]:
    if basis in ("schur", "s"):
        return [(lam, schur_F(lam)) for lam in partitions_of(n)]
    if basis in ("schurP", "P"):
        return [(g, schurP_F(g)) for g in strict_partitions_of(n)]
    raise ValueError(f"unknown basis {basis!r}")


def solve_exact(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve sum_j x_j columns[j] = target exactly; None if inconsistent.

    Columns are assumed linearly independent; free variables are set to zero.
    """
    n_rows = len(target)
    n_cols = len(columns)
    m = [[Fraction(columns[j][r]) for j in range(n_cols)] + [Fraction(target[r])] for r in range(n_rows)]
    pivots = []
    piv_r = 0
    for c in range(n_cols):
        pr = next((r for r in range(piv_r, n_rows) if m[r][c] != 0), None)
        if pr is None:
            continue
        m[piv_r], m[pr] = m[pr], m[piv_r]
        p = m[piv_r][c]
        m[piv_r] = [v / p for v in m[piv_r]]
        for r in range(n_rows):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_r])]
        pivots.append(c)
        piv_r += 1
    if any(m[r][-1] != 0 for r in range(piv_r, n_rows)):
        return None
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = m[r][-1]
    return x


def decompose(f: QSymF, basis: str = "schur") -> BasisExpansion:
    """Unique integer expansion of f in the Schur or Schur P basis."""
    tag = "schur" if basis in ("schur", "s") else "schurP"
    if not f.coeffs:
        return BasisExpansion(tag, {})
    funcs = basis_functions(basis, f.n)
    keys = sorted(set(f.coeffs).union(*(g.coeffs for _, g in funcs)), key=lambda k: (len(k), sorted(k)))
    columns = [[g.coeffs.get(k, 0) for k in keys] for _, g in funcs]
    target = [f.coeffs.get(k, 0) for k in keys]
    x = solve_exact(columns, target)
    if x is None:
        raise NotInSpanError(f"{f} is not in the span of the {tag} basis")
    if any(v.denominator != 1 for v in x):
        raise NotInSpanError(f"{f} has a non-integral {tag} expansion")
    return BasisExpansion(tag, {shape: int(v) for (shape, _), v in zip(funcs, x) if v})


# ---------------------------------------------------------------- shuffles


def word_descents(word) -> frozenset[int]:
    """Positions j (1-indexed) with word[j] > word[j+1]."""
    return frozenset(j + 1 for j in range(len(word) - 1) if word[j] > word[j + 1])


def word_with_descents(D, length: int, offset: int = 0) -> tuple[int, ...]:
    """A word on letters offset+1..offset+length whose position descents are D."""
    cuts = [0] + sorted(D) + [length]
    runs = [cuts[k + 1] - cuts[k] for k in range(len(cuts) - 1)]
    word = []
    top = offset + length
    for size in runs:
        word.extend(range(top - size + 1, top + 1))
        top -= size
    return tuple(word)


def shuffles(alpha, beta):
    a, b = len(alpha), len(beta)
    for spots in itertools.combinations(range(a + b), a):
        spots = set(spots)
        ia, ib = iter(alpha), iter(beta)
        yield tuple(next(ia) if k in spots else next(ib) for k in range(a + b))


def shuffle_product(A, a: int, B, b: int, descents=word_descents) -> QSymF:
    """F_A (degree a) times F_B (degree b) as a sum over shuffles of two
    representative words. The statistic on shuffled words is position descents;
    pass ``descents`` to try another."""
    alpha = word_with_descents(A, a)
    beta = word_with_descents(B, b, offset=a)
    return QSymF.from_descents(a + b, (descents(w) for w in shuffles(alpha, beta)))


def product(f: QSymF, g: QSymF) -> QSymF:
    out = QSymF(f.n + g.n)
    for A, ca in f.coeffs.items():
        for B, cb in g.coeffs.items():
            out = out + shuffle_product(A, f.n, B, g.n).scale(ca * cb)
    return out


# ---------------------------------------------------------------- evaluation


def evaluate_fundamental(n: int, D, point) -> Fraction:
    """F_D with x_k = point[k-1] and all later variables zero.

    Sums x_{i_1} ... x_{i_n} over i_1 <= ... <= i_n with i_j < i_{j+1} for j in D.
    """
    point = [Fraction(p) for p in point]
    m = len(point)
    if n == 0:
        return Fraction(1)
    D = set(D)
    # ways[v] = weighted count of admissible prefixes ending at index v
    ways = list(point)
    for j in range(1, n):
        strict = j in D
        new = [Fraction(0)] * m
        running = Fraction(0)
        for v in range(m):
            if not strict:
                running += ways[v]
                new[v] = running * point[v]
            else:
                new[v] = running * point[v]
                running += ways[v]
        ways = new
    return sum(ways, Fraction(0))


def evaluate(f: QSymF, m: int, point) -> Fraction:
    point = list(point)
    if len(point) != m:
        raise ValueError(f"expected {m} values, got {len(point)}")
    if m < 1:
        raise ValueError("need at least one variable")
    return sum((c * evaluate_fundamental(f.n, D, point) for D, c in f.coeffs.items()), Fraction(0))
