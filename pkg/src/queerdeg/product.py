"""Products of Schur P functions via graphs on concatenated tableaux."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cache

from .axioms import classify_class, classify_deg_class
from .degraph import components, concat_graph, sst_graph
from .errors import InvariantViolation, NotQueerDEGError
from .qsym import BasisExpansion, QSymF, schurP_F
from .shapes import check_strict, format_shape
from .tableaux import generate_concat


@dataclass
class StructureTable:
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)

    def as_function(self) -> QSymF:
        n = sum(self.gamma) + sum(self.delta)
        out = QSymF(n)
        for eps, c in self.entries.items():
            out = out + schurP_F(eps).scale(c)
        return out

    def __str__(self):
        if not self.entries:
            return "0"
        return " + ".join(
            ("" if c == 1 else f"{c}*") + f"P({format_shape(e)})" for e, c in self.entries.items()
        )

    def to_dict(self) -> dict:
        return {
            "gamma": list(self.gamma),
            "delta": list(self.delta),
            "entries": [{"epsilon": list(e), "coefficient": c} for e, c in self.entries.items()],
        }

    def to_csv(self, header: bool = True) -> str:
        lines = ["gamma,delta,epsilon,coefficient"] if header else []
        g, d = format_shape(self.gamma), format_shape(self.delta)
        lines += [f'"{g}","{d}","{format_shape(e)}",{c}' for e, c in self.entries.items()]
        return "\n".join(lines) + "\n"


def product_F(gamma, delta) -> QSymF:
    """Sum of F_Des over all concatenated tableaux of shape gamma (x) delta."""
    gamma, delta = check_strict(gamma), check_strict(delta)
    n = sum(gamma) + sum(delta)
    return QSymF.from_descents(n, (ST.descents for ST in generate_concat(gamma, delta)))


def _sorted_tally(tally: Counter) -> dict:
    return {shape: tally[shape] for shape in sorted(tally, reverse=True)}


def structure_constants(gamma, delta) -> StructureTable:
    """Tally the shapes of the full classes of the concatenated-tableau graph."""
    gamma, delta = check_strict(gamma), check_strict(delta)
    if not gamma or not delta:
        # empty factor: the product is the other factor
        shape = gamma or delta
        return StructureTable(gamma, delta, {shape: 1} if shape else {})
    return StructureTable(gamma, delta, dict(_class_tally(gamma, delta)))


@cache
def _class_tally(gamma, delta) -> tuple:
    g = concat_graph(gamma, delta)
    tally = Counter(classify_class(cls, g) for cls in components(g, g.labels))
    return tuple(_sorted_tally(tally).items())


def schur_coeffs_of_P(gamma) -> BasisExpansion:
    """Schur expansion of P_gamma read off the d_i classes of SST(gamma)."""
    gamma = check_strict(gamma)
    g = sst_graph(gamma, queer=False)
    try:
        tally = Counter(classify_deg_class(cls, g) for cls in components(g, g.labels))
    except NotQueerDEGError as exc:
        raise InvariantViolation(f"SST{gamma}: {exc}") from None
    return BasisExpansion("schur", _sorted_tally(tally))
