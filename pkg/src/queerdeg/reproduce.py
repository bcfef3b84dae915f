"""The reproduction suite: eleven numbered checks with one pass/fail line each.

Each check returns a list of problems (empty on success) and a short summary.
``run_all`` is shared by ``queerdeg repro`` and the acceptance tests.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations
from math import factorial, prod

from . import figures
from .axioms import check_deg, check_queer_deg, classify_class, unique_extension_search
from .degraph import (
    components,
    concat_graph,
    find_isomorphisms,
    max_special_edge_need,
    sst_graph,
    syt_graph,
)
from .involutions import deg_syt
from .product import product_F, structure_constants
from .qsym import QSymF, decompose, evaluate, product, schur_F, schurP_F
from .shapes import partitions_of, shifted_diagram, strict_partitions_of
from .tableaux import generate_sst, generate_syt

GENERIC_POINTS = (
    (Fraction(1, 2), Fraction(2, 3), Fraction(3, 5)),
    (Fraction(2), Fraction(-1, 3), Fraction(5, 7)),
    (Fraction(-3, 4), Fraction(1, 5), Fraction(7, 2)),
)


def _F(n, *sets):
    return QSymF.from_descents(n, sets)


def strict_upto(n):
    return [g for m in range(1, n + 1) for g in strict_partitions_of(m)]


def strict_pairs_upto(n):
    """Pairs of nonempty strict partitions with total size at most n."""
    return [
        (g, d)
        for total in range(2, n + 1)
        for a in range(1, total)
        for g in strict_partitions_of(a)
        for d in strict_partitions_of(total - a)
    ]


# ---------------------------------------------------------------- 1


def c1_expansions():
    bad = []
    s31 = _F(4, {1}, {2}, {3})
    p31 = _F(4, {1}, {2}, {2}, {3}, {1, 2}, {1, 3}, {1, 3}, {2, 3})
    if schur_F((3, 1)) != s31:
        bad.append(f"s(3,1) = {schur_F((3, 1))}")
    if schurP_F((3, 1)) != p31:
        bad.append(f"P(3,1) = {schurP_F((3, 1))}")
    if product_F((2, 1), (1,)) != p31:
        bad.append(f"P(2,1)P(1) = {product_F((2, 1), (1,))}")
    return bad, f"P(3,1) = {p31}"


# ---------------------------------------------------------------- 2


def c2_schur_positivity():
    bad = []
    e = decompose(schurP_F((3, 1)), "schur")
    if e.coefficients != {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}:
        bad.append(f"P(3,1) = {e}")
    shapes = strict_upto(8)
    for g in shapes:
        e = decompose(schurP_F(g), "schur")
        if not e.nonnegative:
            bad.append(f"P{g} = {e}")
    return bad, f"{len(shapes)} shapes nonnegative"


# ---------------------------------------------------------------- 3


def c3_figures():
    bad = []
    for name, (family, shapes, names, pattern) in figures.FIGURES.items():
        g = sst_graph(*shapes) if family == "sst" else concat_graph(*shapes)
        ids = set(names.values())
        missing = ids - set(g.vertices)
        if missing:
            bad.append(f"{name}: tableaux not generated: {sorted(missing)}")
            continue
        expected = figures.named_edges(names, pattern)
        got = figures.graph_edges(g, within=ids)
        for label in g.labels:
            if got[label] != expected.get(label, set()):
                bad.append(f"{name}: label {label} edges differ")
        if family == "concat" and any(set(c) & ids and not set(c) <= ids for c in components(g, g.labels)):
            bad.append(f"{name}: drawn vertices are not a union of classes")
    g = concat_graph((2,), (2,))
    drawn = set(figures.P_PRODUCT2_FIRST.values()) | set(figures.P_PRODUCT2_SECOND.values())
    rest = [c for c in components(g, g.labels) if not c & drawn]
    if [classify_class(c, g) for c in rest] != [(3, 1)]:
        bad.append("SST((2)x(2)): undrawn vertices do not form one (3,1) class")
    return bad, f"{len(figures.FIGURES)} figures; imbed-41 uses corrected d_4 labels"


# ---------------------------------------------------------------- 4


def c4_connectivity():
    bad = []
    for g in strict_upto(8):
        h = sst_graph(g)
        k = len(components(h, h.labels))
        if k != 1:
            bad.append(f"H{g} has {k} classes")
    worst = 0
    for g in strict_upto(7):
        h = sst_graph(g)
        if h.n < 3:
            continue
        need = max_special_edge_need(h, h.labels, h.n - 1)
        worst = max(worst, need)
        if need > 2:
            bad.append(f"H{g} needs {need} edges labelled {h.n - 1}")
    return bad, f"connected up to 8; max need {worst} up to 7"


# ---------------------------------------------------------------- 5


def c5_soundness():
    bad = []
    for g in strict_upto(7):
        r = check_queer_deg(sst_graph(g))
        if not r.passed:
            bad.append(f"H{g}: {r.failures[0][2]}")
    pairs = strict_pairs_upto(7)
    for g, d in pairs:
        r = check_queer_deg(concat_graph(g, d))
        if not r.passed:
            bad.append(f"SST({g}x{d}): {r.failures[0][2]}")
    lams = [lam for m in range(1, 8) for lam in partitions_of(m)]
    for lam in lams:
        r = check_deg(syt_graph(lam))
        if not r.passed:
            bad.append(f"SYT{lam}: {r.failures[0][2]}")
    return bad, f"{len(strict_upto(7))} H, {len(pairs)} products, {len(lams)} SYT graphs"


# ---------------------------------------------------------------- 6


def c6_negative():
    bad = []
    r = check_queer_deg(figures.sst4_bad_graph())
    hits = [f for f in r.failures if f[0] == "(i)" and "2*P(2,1)" in f[2]]
    if not hits:
        bad.append(f"SST4-bad: no 2P(2,1) witness under (i): {r.failures}")
    r = check_queer_deg(figures.fixed_point_graph())
    if not any(f[0] == "(i)" and "fixed-point-free" in f[2] for f in r.failures):
        bad.append("fixed point of psi_0 not reported under (i)")
    c = figures.cover_graph()
    need = max_special_edge_need(c, c.labels, 4)
    r = check_queer_deg(c)
    if need != 3 or "(iii)" not in r.conditions():
        bad.append(f"cover: need {need}, conditions {sorted(r.conditions())}")
    return bad, f"SST4-bad (i) 2*P(2,1); fixed point (i); cover (iii) need {need}"


# ---------------------------------------------------------------- 7


def _search(shapes):
    objects = [T for lam in shapes for T in generate_syt(lam)]
    n = sum(shapes[0])
    existing = {i: (lambda T, i=i: deg_syt(T, i)) for i in range(2, n)}
    found = unique_extension_search(objects, lambda T: T.descents, existing, n=n)
    return [{frozenset((a, b)) for a, b in m.items() if a != b} for m in found]


UNIQUENESS_CASES = (
    ("SST2", figures.SST2_OBJECTS, figures.SST2_PAIRING),
    ("SST3-left", figures.SST3_LEFT_OBJECTS, figures.SST3_LEFT_PAIRING),
    ("SST3-right", figures.SST3_RIGHT_OBJECTS, figures.SST3_RIGHT_PAIRING),
    ("SST4-good", figures.SST4_OBJECTS, figures.SST4_GOOD_PAIRING),
    ("SST4-good-2", figures.SST4_GOOD2_OBJECTS, figures.SST4_GOOD2_PAIRING),
)


def c7_uniqueness():
    bad = []
    for name, shapes, pairing in UNIQUENESS_CASES:
        found = _search(shapes)
        want = figures.pairing_by_ids(shapes, pairing)
        if found != [want]:
            bad.append(f"{name}: {len(found)} candidates")
    return bad, f"{len(UNIQUENESS_CASES)} configurations, one candidate each"


# ---------------------------------------------------------------- 8


def c8_structure_constants():
    bad = []
    t = structure_constants((2, 1), (1,))
    if t.entries != {(3, 1): 1}:
        bad.append(f"f((2,1),(1)) = {t}")
    pairs = strict_pairs_upto(8)
    for g, d in pairs:
        t = structure_constants(g, d)
        f = product_F(g, d)
        if t.entries != structure_constants(d, g).entries:
            bad.append(f"f{g},{d} not symmetric")
        if t.as_function() != f:
            bad.append(f"f{g},{d}: tally disagrees with product_F")
        if decompose(f, "P").coefficients != t.entries:
            bad.append(f"f{g},{d}: tally disagrees with linear decomposition")
        if product(schurP_F(g), schurP_F(d)) != f:
            bad.append(f"f{g},{d}: shuffle product disagrees")
        for p in GENERIC_POINTS:
            if evaluate(f, 3, p) != evaluate(schurP_F(g), 3, p) * evaluate(schurP_F(d), 3, p):
                bad.append(f"f{g},{d}: evaluation at {p} disagrees")
    return bad, f"{len(pairs)} ordered pairs agree on all oracles"


# ---------------------------------------------------------------- 9


def _check_involutions(g, shape_of, bad, name):
    labels = g.labels
    for v in g.vertices:
        for lb in labels:
            w = g.moves[lb][v]
            if g.moves[lb][w] != v:
                bad.append(f"{name}: label {lb} not involutive at {v}")
            if shape_of(g.objects[w]) != shape_of(g.objects[v]):
                bad.append(f"{name}: label {lb} changes shape at {v}")
        for i in labels:
            for j in labels:
                if i < j and (j - i >= 3 if i else j > 3):
                    mi, mj = g.moves[i], g.moves[j]
                    if mi[mj[v]] != mj[mi[v]]:
                        bad.append(f"{name}: labels {i},{j} do not commute at {v}")
        if 0 in g.moves:
            w = g.moves[0][v]
            dv, dw = g.descents[v], g.descents[w]
            if w == v or (1 in dv) == (1 in dw):
                bad.append(f"{name}: psi_0 does not toggle 1 at {v}")
            if {d for d in dv if d >= 3} != {d for d in dw if d >= 3}:
                bad.append(f"{name}: psi_0 changes a descent >= 3 at {v}")


def c9_involution_suites():
    bad = []
    count = 0
    for m in range(1, 9):
        for lam in partitions_of(m):
            g = syt_graph(lam)
            count += len(g)
            _check_involutions(g, lambda T: T.shape, bad, f"SYT{lam}")
    for g_ in strict_upto(8):
        g = sst_graph(g_)
        count += len(g)
        _check_involutions(g, lambda S: S.shape, bad, f"SST{g_}")
    for a, b in strict_pairs_upto(8):
        g = concat_graph(a, b)
        count += len(g)
        _check_involutions(g, lambda T: T.shape, bad, f"SST({a}x{b})")
    return bad[:20], f"{count} tableaux"


# ---------------------------------------------------------------- 10


def c10_rigidity():
    bad = []
    checked = 0
    for m in range(1, 7):
        shapes = strict_partitions_of(m)
        for g in shapes:
            autos = list(find_isomorphisms(sst_graph(g), sst_graph(g)))
            if len(autos) != 1 or any(k != v for k, v in autos[0].items()):
                bad.append(f"H{g} has {len(autos)} automorphisms")
        for g, d in combinations(shapes, 2):
            checked += 1
            if next(find_isomorphisms(sst_graph(g), sst_graph(d)), None) is not None:
                bad.append(f"H{g} and H{d} are isomorphic")
    return bad, f"{checked} pairs non-isomorphic; identity only"


# ---------------------------------------------------------------- 11


def count_shifted_fillings(gamma) -> int:
    """Independent count: place 1, 2, ... one at a time into cells whose left
    and lower neighbours are already filled."""
    cells = shifted_diagram(gamma)
    n = len(cells)

    def rec(filled, k):
        if k > n:
            return 1
        total = 0
        for r, c in cells - filled:
            if ((r, c - 1) in filled or (r, c - 1) not in cells) and (
                (r - 1, c) in filled or (r - 1, c) not in cells
            ):
                total += rec(filled | {(r, c)}, k + 1)
        return total

    return rec(frozenset(), 1)


def shifted_hook_count(gamma) -> int:
    n = sum(gamma)
    num = factorial(n) * prod(gamma[i] - gamma[j] for i in range(len(gamma)) for j in range(i + 1, len(gamma)))
    den = prod(factorial(p) for p in gamma) * prod(
        gamma[i] + gamma[j] for i in range(len(gamma)) for j in range(i + 1, len(gamma))
    )
    return num // den


def c11_counting():
    bad = []
    figure_counts = {
        "SST(3,1)": (len(generate_sst((3, 1))), 8),
        "SST(4)": (len(generate_sst((4,))), 8),
        "SST(4,1)": (len(generate_sst((4, 1))), len(figures.IMBED_41_NAMES)),
        "SYT(3,1)": (len(generate_syt((3, 1))), 3),
    }
    for name, (got, want) in figure_counts.items():
        if got != want:
            bad.append(f"|{name}| = {got}, expected {want}")
    shapes = strict_upto(9)
    for g in shapes:
        unmarked = count_shifted_fillings(g)
        if unmarked != shifted_hook_count(g):
            bad.append(f"{g}: backtracking {unmarked} vs hook formula {shifted_hook_count(g)}")
        if len(generate_sst(g)) != 2 ** (sum(g) - len(g)) * unmarked:
            bad.append(f"|SST{g}| = {len(generate_sst(g))}")
    n41 = figure_counts["SST(4,1)"][0]
    note = f"{count_shifted_fillings((4, 1))} unmarked fillings x 2^3, not 16"
    return bad, f"|SST(4,1)| = {n41} ({note}); {len(shapes)} shapes up to 9"


CRITERIA = (
    (1, "F-expansions", c1_expansions),
    (2, "Schur expansion and positivity", c2_schur_positivity),
    (3, "figure edge sets", c3_figures),
    (4, "connectivity and two-edge bound", c4_connectivity),
    (5, "axiom soundness", c5_soundness),
    (6, "negative fixtures", c6_negative),
    (7, "uniqueness searches", c7_uniqueness),
    (8, "structure constants", c8_structure_constants),
    (9, "involution property suites", c9_involution_suites),
    (10, "non-isomorphism and rigidity", c10_rigidity),
    (11, "counting", c11_counting),
)


def run_criterion(number: int):
    _, title, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    bad, summary = fn()
    return number, title, not bad, summary if not bad else "; ".join(bad[:5]), time.perf_counter() - start


def run_all(only=None):
    return [run_criterion(k) for k, _, _ in CRITERIA if only is None or k in only]


def format_line(number, title, ok, detail, seconds) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail} ({seconds:.1f}s)"
