"""Auditors for dual equivalence and queer dual equivalence graphs.

Interpretation of the local windows (see README, "Axiom windows"):

* dual equivalence (i): windows 2 <= h <= i <= n-1 with i - h <= 3; the class
  under labels h..i, with descents cut to [h-1, i] and shifted down by h-2,
  must be the descent multiset of some SYT(lambda), |lambda| = i - h + 3.
* queer (i): for i = 1, 2, 3 (i < n), the class under labels {0, 2, .., i}
  with descents cut to [i] must be the multiset of some SST(gamma), |gamma| = i + 1.
* queer (iii): for 3 <= k <= n, within classes under labels {0, 2, .., k-1},
  every reachable pair needs at most two edges labelled k-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from .degraph import (
    DEGraph,
    build_graph,
    class_function,
    components,
    max_special_edge_need,
    restrict_descents,
)
from .errors import CapacityError, MalformedGraphError, NotInSpanError, NotQueerDEGError
from .qsym import QSymF, decompose, schur_F, schurP_F
from .shapes import partitions_of, strict_partitions_of

MAX_SEARCH_N = 5


@dataclass
class AxiomReport:
    failures: list[tuple[str, tuple, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def conditions(self) -> set[str]:
        return {cond for cond, _, _ in self.failures}

    def add(self, condition: str, witness, explanation: str):
        self.failures.append((condition, tuple(witness), explanation))

    def __str__(self):
        lines = [f"verdict: {self.verdict}"]
        for cond, witness, why in self.failures:
            lines.append(f"  condition {cond}: {why}")
            lines.append(f"    witness: {', '.join(str(w) for w in witness)}")
        return "\n".join(lines)


@cache
def _schur_lookup(m: int) -> dict[QSymF, tuple]:
    return {schur_F(lam): lam for lam in partitions_of(m)}


@cache
def _schurP_lookup(m: int) -> dict[QSymF, tuple]:
    return {schurP_F(g): g for g in strict_partitions_of(m)}


def _ordered(g: DEGraph, cls):
    return sorted(cls, key=g.index.__getitem__)


def _expansion_hint(f: QSymF, basis: str) -> str:
    try:
        return str(decompose(f, basis))
    except NotInSpanError:
        return "outside the span"


def _require_labels(g: DEGraph, labels):
    missing = set(labels) - set(g.moves)
    if missing:
        raise MalformedGraphError(f"graph lacks labels {sorted(missing)}")


def check_deg(g: DEGraph, report: AxiomReport | None = None, prefix: str = "") -> AxiomReport:
    """Audit labels 2..n-1 of ``g`` as a dual equivalence."""
    report = report if report is not None else AxiomReport()
    n = g.n
    _require_labels(g, range(2, n))
    for h in range(2, n):
        for i in range(h, min(h + 3, n - 1) + 1):
            m = i - h + 3
            lookup = _schur_lookup(m)
            for cls in components(g, range(h, i + 1)):
                f = class_function(cls, g, m, lambda D: restrict_descents(D, h - 1, i + 1))
                if f not in lookup:
                    report.add(
                        f"{prefix}(i)",
                        _ordered(g, cls),
                        f"labels {h}..{i}: restricted class gives {f} = "
                        f"{_expansion_hint(f, 'schur')}, not a single Schur function of size {m}",
                    )
    for i in range(2, n):
        for j in range(i + 3, n):
            mi, mj = g.moves[i], g.moves[j]
            for v in g.vertices:
                if mi[mj[v]] != mj[mi[v]]:
                    report.add(f"{prefix}(ii)", (v,), f"labels {i} and {j} do not commute at {v}")
    return report


def check_queer_deg(g: DEGraph) -> AxiomReport:
    n = g.n
    report = AxiomReport()
    if n < 2:
        return report
    _require_labels(g, [0, *range(2, n)])
    check_deg(g, report, prefix="deg ")
    psi0 = g.moves[0]

    # (i)
    for i in range(1, min(3, n - 1) + 1):
        labels = [0, *range(2, i + 1)]
        lookup = _schurP_lookup(i + 1)
        for cls in components(g, labels):
            f = class_function(cls, g, i + 1, lambda D: frozenset(d for d in D if d <= i))
            if f in lookup:
                continue
            witness = _ordered(g, cls)
            if i == 1 and len(cls) == 1:
                why = f"psi_0 fixes {witness[0]}; it must be fixed-point-free"
            elif i == 1:
                why = f"psi_0 pairs {witness[0]} and {witness[1]} without toggling 1 in the descent set"
            else:
                why = (
                    f"labels {labels}: restricted class gives {f} = {_expansion_hint(f, 'P')}, "
                    f"not a single Schur P function of size {i + 1}"
                )
            report.add("(i)", witness, why)

    # (ii)
    for i in range(4, n):
        mi = g.moves[i]
        for v in g.vertices:
            if psi0[mi[v]] != mi[psi0[v]]:
                report.add("(ii)", (v,), f"psi_0 and psi_{i} do not commute at {v}")

    # (iii)
    for k in range(3, n + 1):
        labels = [0, *range(2, k)]
        sub = g.restrict_labels(labels)
        for cls in components(sub, labels):
            if not any(sub.moves[k - 1][v] != v for v in cls):
                continue
            part = DEGraph(
                n, _ordered(g, cls), g.descents, {lb: {v: sub.moves[lb][v] for v in cls} for lb in labels}
            )
            need = max_special_edge_need(part, labels, k - 1)
            if need > 2:
                report.add(
                    "(iii)",
                    _ordered(g, cls),
                    f"k={k}: some pair in a class needs {need} > 2 edges labelled {k - 1}",
                )
    return report


def classify_class(cls, g: DEGraph) -> tuple[int, ...]:
    """The strict partition whose SST descent multiset equals that of ``cls``."""
    f = class_function(cls, g)
    shape = _schurP_lookup(g.n).get(f)
    if shape is None:
        raise NotQueerDEGError(f"class of size {len(cls)} has {f}, matching no SST(delta) of size {g.n}")
    return shape


def classify_deg_class(cls, g: DEGraph) -> tuple[int, ...]:
    f = class_function(cls, g)
    shape = _schur_lookup(g.n).get(f)
    if shape is None:
        raise NotQueerDEGError(f"class of size {len(cls)} has {f}, matching no SYT(lambda) of size {g.n}")
    return shape


# ---------------------------------------------------------------- uniqueness search


def unique_extension_search(objects, descent_fn, existing: dict, n: int | None = None) -> list[dict]:
    """Every queer involution completing ``existing`` to a queer dual equivalence.

    Candidates pair vertices with 1 in the descent set against vertices
    without, agree on descents >= 3, and are closed under commutation with the
    labels above 3. Survivors are audited with :func:`check_queer_deg`.
    """
    objects = list(objects)
    if n is None:
        n = objects[0].size if objects else 0
    if n > MAX_SEARCH_N:
        raise CapacityError(f"search is exhaustive; n = {n} exceeds {MAX_SEARCH_N}")
    base = build_graph(objects, descent_fn, existing, n=n)
    des = base.descents
    low = [v for v in base.vertices if 1 not in des[v]]
    high = [v for v in base.vertices if 1 in des[v]]
    if len(low) != len(high):
        return []

    def compatible(x, y):
        return {d for d in des[x] if d >= 3} == {d for d in des[y] if d >= 3}

    options = {x: [y for y in high if compatible(x, y)] for x in low}
    upper = [base.moves[i] for i in range(4, n)]

    def assign(match, x, y):
        match = dict(match)
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            if match.get(a, b) != b or match.get(b, a) != a:
                return None
            if a in match:
                continue
            if (1 in des[a]) == (1 in des[b]) or not compatible(a, b):
                return None
            match[a], match[b] = b, a
            queue.extend((m[a], m[b]) for m in upper)
        return match

    found = []

    def search(match):
        x = next((v for v in low if v not in match), None)
        if x is None:
            found.append(match)
            return
        for y in options[x]:
            if y in match:
                continue
            step = assign(match, x, y)
            if step is not None:
                search(step)

    search({})
    out = []
    for match in found:
        g = DEGraph(n, base.vertices, des, {**base.moves, 0: match}, base.objects)
        if check_queer_deg(g).passed:
            out.append(match)
    return out


def pairing_edges(match: dict, order=None) -> list[tuple]:
    """Unordered pairs of an involution given as a dict, deterministically sorted."""
    key = (lambda v: order.index(v)) if order else str
    pairs = {tuple(sorted((a, b), key=key)) for a, b in match.items() if a != b}
    return sorted(pairs, key=lambda p: (key(p[0]), key(p[1])))

