"""Nonemptiness of the positive steady-state variety for two-reaction networks.

A two-reaction network has a nonempty positive steady-state variety for
generic rates exactly when the two columns of its stoichiometric matrix are
negative multiples of each other and the reactant complexes differ.  In
that case the positive part is cut out by a single monomial relation
``x**u = c``, which :func:`canonical_binomial` returns in normal form.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .massaction import RateAssignment, stoichiometric_matrix
from .network import Network

__all__ = [
    "PssvTag",
    "PssvStatus",
    "CanonicalBinomial",
    "columns_negatively_proportional",
    "pssv_status",
    "canonical_binomial",
]


class PssvTag(str, enum.Enum):
    NONEMPTY_RATE_INDEPENDENT = "NonemptyRateIndependent"
    EMPTY_ALL_RATES = "EmptyAllRates"
    TUNED_FULL_ORTHANT = "TunedFullOrthant"
    NOT_TWO_REACTION = "NotTwoReaction"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PssvStatus:
    """Status tag plus, for ``TunedFullOrthant``, the ratio ``q`` with kappa1 = q*kappa2."""

    tag: PssvTag
    tuning_ratio: Fraction | None = None

    def __post_init__(self) -> None:
        tuned = self.tag is PssvTag.TUNED_FULL_ORTHANT
        if tuned != (self.tuning_ratio is not None):
            raise ValueError("tuning_ratio is required for TunedFullOrthant and only there")
        if tuned and self.tuning_ratio <= 0:
            raise ValueError("tuning_ratio must be positive")

    @property
    def nonempty(self) -> bool:
        return self.tag is PssvTag.NONEMPTY_RATE_INDEPENDENT


@dataclass(frozen=True)
class CanonicalBinomial:
    """Positive solution set ``{x > 0 : x**u = c}``.

    ``c = (q * (kappa2/kappa1)**rate_power) ** (1/g)`` with ``rate_power``
    either +1 or -1.  ``u`` has gcd 1 and a positive first nonzero entry.
    """

    u: tuple[int, ...]
    q: Fraction
    g: int
    rate_power: int = 1

    def __post_init__(self) -> None:
        if not any(self.u):
            raise ValueError("u must be nonzero")
        if reduce(math.gcd, (abs(e) for e in self.u)) != 1:
            raise ValueError("u must be gcd-normalized")
        if next(e for e in self.u if e) < 0:
            raise ValueError("first nonzero entry of u must be positive")
        if self.q <= 0 or self.g < 1 or self.rate_power not in (1, -1):
            raise ValueError("invalid binomial coefficient")

    def constant(self, rates: RateAssignment | tuple[float, ...]) -> float:
        """Numeric value of ``c`` for concrete rate constants."""
        k1, k2 = float(rates[0]), float(rates[1])
        return (float(self.q) * (k2 / k1) ** self.rate_power) ** (1.0 / self.g)

    def coefficient_str(self) -> str:
        ratio = "k2/k1" if self.rate_power == 1 else "k1/k2"
        base = ratio if self.q == 1 else f"{self.q}*{ratio}"
        return base if self.g == 1 else f"({base})^(1/{self.g})"


def columns_negatively_proportional(N) -> Fraction | None:
    """Return ``lam > 0`` with ``col2 == -lam * col1``, or None.

    Both columns must be nonzero.
    """
    N = np.asarray(N)
    if N.ndim != 2 or N.shape[1] != 2:
        raise ValueError(f"expected a matrix with exactly 2 columns, got shape {N.shape}")
    c1 = [int(v) for v in N[:, 0]]
    c2 = [int(v) for v in N[:, 1]]
    if not any(c1) or not any(c2):
        return None
    k = next(i for i, v in enumerate(c1) if v)
    lam = Fraction(-c2[k], c1[k])
    if lam <= 0:
        return None
    if all(Fraction(b) == -lam * a for a, b in zip(c1, c2)):
        return lam
    return None


def pssv_status(net: Network) -> PssvStatus:
    if net.n_reactions != 2:
        return PssvStatus(PssvTag.NOT_TWO_REACTION)
    lam = columns_negatively_proportional(stoichiometric_matrix(net))
    if lam is None:
        return PssvStatus(PssvTag.EMPTY_ALL_RATES)
    r1, r2 = net.reactants
    if r1 == r2:
        # kappa1*N[:,0] + kappa2*N[:,1] vanishes iff kappa1 = lam*kappa2
        return PssvStatus(PssvTag.TUNED_FULL_ORTHANT, lam)
    return PssvStatus(PssvTag.NONEMPTY_RATE_INDEPENDENT)


def canonical_binomial(net: Network) -> CanonicalBinomial | None:
    """Normalized monomial relation for a ``NonemptyRateIndependent`` network.

    Returns None when the status is anything else.
    """
    if not pssv_status(net).nonempty:
        return None
    N = stoichiometric_matrix(net)
    r1, r2 = net.reactants
    d = [a - b for a, b in zip(r1.exponents, r2.exponents)]
    # any nonzero row: N[k,0] k1 x^r1 + N[k,1] k2 x^r2 = 0
    k = next(i for i in range(N.shape[0]) if N[i, 0] != 0)
    q = Fraction(abs(int(N[k, 1])), abs(int(N[k, 0])))
    g = reduce(math.gcd, (abs(e) for e in d))
    u = [e // g for e in d]
    power = 1
    if next(e for e in u if e) < 0:
        u = [-e for e in u]
        q = 1 / q
        power = -1
    return CanonicalBinomial(tuple(u), q, g, power)
