"""Shape of the positive steady-state variety for 2-species 2-reaction networks.

Two independent routes: :func:`classify_by_reactants` reads combinatorial
conditions off the reactant complexes, :func:`classify_by_binomial` reads
the normalized exponent vector of the defining monomial relation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .network import Complex, Network, support
from .pssv import CanonicalBinomial, PssvTag, canonical_binomial, pssv_status

__all__ = [
    "VarietyClass",
    "AcrReport",
    "SHAPE_EXPONENTS",
    "classify_by_reactants",
    "shape_from_reactants",
    "classify_by_binomial",
    "detect_acr",
]


class VarietyClass(str, enum.Enum):
    EMPTY_PSSV = "EmptyPSSV"
    TUNED_FULL_ORTHANT = "TunedFullOrthant"
    AXIS_PARALLEL_LINE = "AxisParallelLine"
    LINE_THROUGH_ORIGIN = "LineThroughOrigin"
    PARABOLA = "Parabola"
    HYPERBOLA = "Hyperbola"
    SEMICUBICAL_PARABOLA = "SemicubicalParabola"
    CUBIC = "Cubic"
    OTHER_TORIC_CURVE = "OtherToricCurve"

    def __str__(self) -> str:
        return self.value


# x**a * y**b = c, one representative per named curve (species swap aside)
SHAPE_EXPONENTS: dict[VarietyClass, tuple[int, int]] = {
    VarietyClass.AXIS_PARALLEL_LINE: (1, 0),
    VarietyClass.LINE_THROUGH_ORIGIN: (1, -1),
    VarietyClass.PARABOLA: (2, -1),
    VarietyClass.HYPERBOLA: (1, 1),
    VarietyClass.SEMICUBICAL_PARABOLA: (3, -2),
    VarietyClass.CUBIC: (3, -1),
}


@dataclass(frozen=True)
class AcrReport:
    """Species whose concentration is the same at every positive steady state.

    The value is ``q * (kappa2/kappa1)**rate_power``.
    """

    species_index: int
    species_name: str
    q: Fraction
    rate_power: int

    @property
    def value_str(self) -> str:
        ratio = "k2/k1" if self.rate_power == 1 else "k1/k2"
        return ratio if self.q == 1 else f"{self.q}*{ratio}"

    def value(self, rates) -> float:
        k1, k2 = float(rates[0]), float(rates[1])
        return float(self.q) * (k2 / k1) ** self.rate_power


def _check_2x2(net: Network) -> None:
    if net.n_species != 2 or net.n_reactions != 2:
        raise ValueError(
            "shape classification needs 2 species and 2 reactions, "
            f"got {net.n_species} and {net.n_reactions}"
        )


_AB = Complex((1, 1))
_ZERO = Complex((0, 0))


def classify_by_reactants(net: Network) -> VarietyClass:
    _check_2x2(net)
    status = pssv_status(net)
    if status.tag is PssvTag.EMPTY_ALL_RATES:
        return VarietyClass.EMPTY_PSSV
    if status.tag is PssvTag.TUNED_FULL_ORTHANT:
        return VarietyClass.TUNED_FULL_ORTHANT

    return shape_from_reactants(*net.reactants)


def shape_from_reactants(r1: Complex, r2: Complex) -> VarietyClass:
    """Named curve implied by a 2-species reactant pair alone.

    Assumes the stoichiometric columns are negatively proportional; the
    conditions are checked as an unordered pair, up to swapping species.
    """
    m = sorted((r1.molecularity, r2.molecularity))
    s1, s2 = support(r1), support(r2)
    disjoint = not (s1 & s2)
    pair = {r1, r2}

    if _AB in pair and m[0] == 1:
        return VarietyClass.AXIS_PARALLEL_LINE
    if pair == {_AB, _ZERO}:
        return VarietyClass.HYPERBOLA
    if m == [1, 2] and disjoint:
        return VarietyClass.PARABOLA
    if m == [2, 3] and disjoint:
        return VarietyClass.SEMICUBICAL_PARABOLA
    if m == [1, 3] and disjoint:
        return VarietyClass.CUBIC
    if m[0] == m[1] and s1 and s2 and s1 != s2:
        return VarietyClass.LINE_THROUGH_ORIGIN
    return VarietyClass.OTHER_TORIC_CURVE


def _normalize(u: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-e for e in u) if next(e for e in u if e) < 0 else tuple(u)


def classify_by_binomial(b: CanonicalBinomial) -> VarietyClass:
    """Name the curve ``x**u = c`` up to swapping the two species."""
    if len(b.u) != 2:
        raise ValueError("shape names are defined for 2 species only")
    forms = {_normalize(b.u), _normalize(b.u[::-1])}
    for cls, exps in SHAPE_EXPONENTS.items():
        if exps in forms:
            return cls
    return VarietyClass.OTHER_TORIC_CURVE


def detect_acr(net: Network) -> AcrReport | None:
    """Report absolute concentration robustness, present only for axis-parallel lines."""
    _check_2x2(net)
    if classify_by_reactants(net) is not VarietyClass.AXIS_PARALLEL_LINE:
        return None
    b = canonical_binomial(net)
    # u is a unit vector here, so x_i = c with g == 1
    i = next(k for k, e in enumerate(b.u) if e)
    return AcrReport(i, net.species_names[i], b.q, b.rate_power)
