"""Elementary dual equivalence involutions and the queer involution.

``deg_syt``     d_i on standard Young tableaux
``deg_sst``     d_i on signed shifted tableaux (diagonal rule)
``queer_sst``   d_0, toggles the mark on the letter 2
``deg_concat``  psi_i on concatenated tableaux
``queer_concat`` psi_0 on concatenated tableaux
``odd_psi3``    the composite odd involution psi'_3 (diagnostic only)
"""

from __future__ import annotations

from .errors import IndexRangeError, InvariantViolation, NotDefinedError
from .tableaux import ConcatTableau, SignedShiftedTableau, YoungTableau


def diagonal(row: int, col: int, marked: bool) -> int:
    """Row minus column if unmarked, column minus row if marked."""
    return col - row if marked else row - col


def _check_index(i: int, n: int):
    if not 1 < i < n:
        raise IndexRangeError(f"index {i} outside 1 < i < {n}")


def extreme_pair(word, i: int) -> tuple[int, int] | None:
    """The two letters of {i-1, i, i+1} at the extreme positions of ``word``, or
    None when i already sits between i-1 and i+1."""
    pos = {}
    for k, letter in enumerate(word):
        if letter in (i - 1, i, i + 1):
            pos[letter] = k
    lo, hi = sorted((pos[i - 1], pos[i + 1]))
    if lo < pos[i] < hi:
        return None
    ordered = sorted((i - 1, i, i + 1), key=pos.__getitem__)
    return ordered[0], ordered[2]


def _swap_values(rows, x: int, y: int):
    """Exchange absolute values x and y, leaving each cell's mark in place."""
    def sub(v):
        a = abs(v)
        if a == x:
            a = y
        elif a == y:
            a = x
        return -a if v < 0 else a

    return tuple(tuple(sub(v) for v in row) for row in rows)


def _toggle(rows, letters):
    return tuple(tuple(-v if abs(v) in letters else v for v in row) for row in rows)


def deg_syt(T: YoungTableau, i: int) -> YoungTableau:
    _check_index(i, T.size)
    pair = extreme_pair(T.reading_word, i)
    if pair is None:
        return T
    out = YoungTableau(_swap_values(T.rows, *pair))
    bad = out.violation()
    if bad:
        raise InvariantViolation(f"d_{i}({T}) = {out}: {bad}")
    return out


def _sst_step(S: SignedShiftedTableau, i: int) -> SignedShiftedTableau:
    where = S.where
    diag = {}
    for letter in (i - 1, i, i + 1):
        if letter not in where:
            raise IndexRangeError(f"letter {letter} not in {S}")
        diag[letter] = diagonal(*where[letter])
    la, lb, lc = sorted(diag, key=lambda x: (diag[x], x))
    a, b, c = diag[la], diag[lb], diag[lc]
    if diag[i] == b:
        if list(diag.values()).count(b) > 1:
            raise InvariantViolation(f"d_{i}: letter {i} shares a diagonal in {S}")
        return S
    if a == b:
        return S.with_rows(_toggle(S.rows, {lc}))
    if b == c:
        return S.with_rows(_toggle(S.rows, {la}))
    if abs(abs(a) - abs(c)) == 1:
        return S.with_rows(_toggle(S.rows, {la, lc}))
    return S.with_rows(_swap_values(S.rows, la, lc))


def deg_sst_case(S: SignedShiftedTableau, i: int) -> tuple[int, tuple[int, int, int]]:
    """Which branch (1-4) of the diagonal rule applies, with the sorted diagonals."""
    where = S.where
    diag = {x: diagonal(*where[x]) for x in (i - 1, i, i + 1)}
    a, b, c = sorted(diag.values())
    if diag[i] == b:
        case = 1
    elif a == b or b == c:
        case = 2
    elif abs(abs(a) - abs(c)) == 1:
        case = 3
    else:
        case = 4
    return case, (a, b, c)


def deg_sst(S: SignedShiftedTableau, i: int, standard: bool = True) -> SignedShiftedTableau:
    """d_i on a signed shifted tableau. With ``standard=False`` the letters may be
    any distinct integers (a factor of a concatenated tableau)."""
    if standard:
        _check_index(i, S.size)
    out = _sst_step(S, i)
    if out is not S:
        bad = out.violation(standard=standard)
        if bad:
            raise InvariantViolation(f"d_{i}({S}) = {out}: {bad}")
    return out


def queer_sst(S: SignedShiftedTableau, standard: bool = True) -> SignedShiftedTableau:
    if standard and S.size < 2:
        raise IndexRangeError("d_0 needs n >= 2")
    if 2 not in S.where:
        raise IndexRangeError(f"no letter 2 in {S}")
    out = S.with_rows(_toggle(S.rows, {2}))
    bad = out.violation(standard=standard)
    if bad:
        raise InvariantViolation(f"d_0({S}) = {out}: {bad}")
    return out


def deg_concat(ST: ConcatTableau, i: int) -> ConcatTableau:
    _check_index(i, ST.size)
    pair = extreme_pair(ST.hook_word, i)
    if pair is None:
        return ST
    triple = {i - 1, i, i + 1}
    if triple <= ST.left.letters:
        out = ConcatTableau(deg_sst(ST.left, i, standard=False), ST.right)
    elif triple <= ST.right.letters:
        out = ConcatTableau(ST.left, deg_sst(ST.right, i, standard=False))
    else:
        out = ConcatTableau(
            ST.left.with_rows(_swap_values(ST.left.rows, *pair)),
            ST.right.with_rows(_swap_values(ST.right.rows, *pair)),
        )
        bad = out.violation()
        if bad:
            raise InvariantViolation(f"psi_{i}({ST}) = {out}: {bad}")
    return out


def queer_concat(ST: ConcatTableau) -> ConcatTableau:
    if ST.size < 2:
        raise IndexRangeError("psi_0 needs n >= 2")
    if {1, 2} <= ST.left.letters:
        return ConcatTableau(queer_sst(ST.left, standard=False), ST.right)
    if {1, 2} <= ST.right.letters:
        return ConcatTableau(ST.left, queer_sst(ST.right, standard=False))
    # 1 and 2 each sit unmarked in the corner cell of their factor
    out = ConcatTableau(
        ST.left.with_rows(_swap_values(ST.left.rows, 1, 2)),
        ST.right.with_rows(_swap_values(ST.right.rows, 1, 2)),
    )
    bad = out.violation()
    if bad:
        raise InvariantViolation(f"psi_0({ST}) = {out}: {bad}")
    return out


def odd_psi3(psi0, psi2, S):
    """psi'_3 built from psi_0 and psi_2.

    Returns psi_0 psi_2 (S) when psi_2 fixes psi_0(S), psi_2 psi_0 (S) when
    psi_0 psi_2 (S) = psi_0(S), and S when psi_2(S) = psi_0(S). Raises
    NotDefinedError when no guard holds or the holding guards disagree.
    """
    p0 = psi0(S)
    p2 = psi2(S)
    p20 = psi2(p0)
    p02 = psi0(p2)
    results = []
    if p20 == p0:
        results.append(p02)
    if p02 == p0:
        results.append(p20)
    if p2 == p0:
        results.append(S)
    if not results:
        raise NotDefinedError(f"psi'_3 is not defined at {S}")
    if any(r != results[0] for r in results):
        raise NotDefinedError(f"psi'_3 guards disagree at {S}")
    return results[0]
