"""Stoichiometric/reactant matrices and steady-state polynomials.

Coefficients and exponents are exact integers and rate constants stay
symbolic (as 1-based indices).  Numbers only enter through
:class:`RateAssignment` when a polynomial is evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .network import Complex, Network

__all__ = [
    "MassActionTerm",
    "SteadyStatePolynomial",
    "RateAssignment",
    "stoichiometric_matrix",
    "reactant_matrix",
    "steady_state_polynomials",
    "factor_common_monomial",
    "evaluate",
    "normalized_residual",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def stoichiometric_matrix(net: Network) -> np.ndarray:
    """Species x reactions matrix of net changes, ``product - reactant``."""
    N = np.zeros((net.n_species, net.n_reactions), dtype=np.int64)
    for j, rxn in enumerate(net.reactions):
        N[:, j] = np.subtract(rxn.product.exponents, rxn.reactant.exponents)
    return _frozen(N)


def reactant_matrix(net: Network) -> np.ndarray:
    B = np.zeros((net.n_species, net.n_reactions), dtype=np.int64)
    for j, rxn in enumerate(net.reactions):
        B[:, j] = rxn.reactant.exponents
    return _frozen(B)


@dataclass(frozen=True)
class MassActionTerm:
    """``coeff * kappa_{rate_index} * x**monomial``."""

    coeff: int
    rate_index: int
    monomial: Complex

    def __post_init__(self) -> None:
        if self.coeff == 0:
            raise ValueError("zero terms are not stored")

    def format(self, var_names: Sequence[str]) -> str:
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(var_names, self.monomial.exponents)
            if e
        )
        body = f"k{self.rate_index}" + (f"*{mono}" if mono else "")
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return "-" + body
        return f"{self.coeff}*{body}"


@dataclass(frozen=True)
class SteadyStatePolynomial:
    species_index: int
    terms: tuple[MassActionTerm, ...]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c: int) -> SteadyStatePolynomial:
        if c == 0:
            return SteadyStatePolynomial(self.species_index, ())
        return SteadyStatePolynomial(
            self.species_index,
            tuple(MassActionTerm(t.coeff * c, t.rate_index, t.monomial) for t in self.terms),
        )

    def format(self, var_names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        out = self.terms[0].format(var_names)
        for t in self.terms[1:]:
            s = t.format(var_names)
            out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
        return out


@dataclass(frozen=True)
class RateAssignment:
    """Positive numeric values for ``kappa_1 .. kappa_n``."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ValueError("empty rate assignment")
        if not all(v > 0 and np.isfinite(v) for v in vals):
            raise ValueError(f"rate constants must be positive and finite: {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def kappa(self, rate_index: int) -> float:
        return self.values[rate_index - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def _as_rates(rates) -> RateAssignment:
    return rates if isinstance(rates, RateAssignment) else RateAssignment(tuple(rates))


def steady_state_polynomials(net: Network) -> list[SteadyStatePolynomial]:
    """One polynomial per species, the rows of ``N diag(kappa) x^B``."""
    N = stoichiometric_matrix(net)
    polys = []
    for k in range(net.n_species):
        terms = tuple(
            MassActionTerm(int(N[k, j]), rxn.rate_index, rxn.reactant)
            for j, rxn in enumerate(net.reactions)
            if N[k, j] != 0
        )
        polys.append(SteadyStatePolynomial(k, terms))
    return polys


def factor_common_monomial(
    polys: Sequence[SteadyStatePolynomial],
) -> tuple[Complex, list[SteadyStatePolynomial]]:
    """Pull the largest monomial dividing every nonzero polynomial.

    ``common[i]`` is the multiplicity of the coordinate hyperplane
    ``x_i = 0`` as a component of the steady-state variety.
    """
    monos = [t.monomial for p in polys for t in p.terms]
    if not monos:
        n = len(polys)
        return Complex.zero(n), list(polys)
    common = tuple(min(col) for col in zip(*(m.exponents for m in monos)))
    common_c = Complex(common)
    residuals = [
        SteadyStatePolynomial(
            p.species_index,
            tuple(MassActionTerm(t.coeff, t.rate_index, t.monomial - common_c) for t in p.terms),
        )
        for p in polys
    ]
    return common_c, residuals


def _term_values(poly: SteadyStatePolynomial, rates: RateAssignment, x: np.ndarray) -> np.ndarray:
    return np.array(
        [
            t.coeff * rates.kappa(t.rate_index) * np.prod(x ** np.asarray(t.monomial.exponents))
            for t in poly.terms
        ],
        dtype=float,
    )


def evaluate(poly: SteadyStatePolynomial, rates, point) -> float:
    """Numeric value of ``poly`` at ``point`` (``0**0 == 1``)."""
    rates = _as_rates(rates)
    x = np.asarray(point, dtype=float)
    return float(_term_values(poly, rates, x).sum())


def normalized_residual(polys: Sequence[SteadyStatePolynomial], rates, point) -> float:
    """``max_i |f_i(x)| / (1 + largest term magnitude)`` over all polynomials."""
    rates = _as_rates(rates)
    x = np.asarray(point, dtype=float)
    worst = 0.0
    for p in polys:
        vals = _term_values(p, rates, x)
        if vals.size == 0:
            continue
        scale = 1.0 + float(np.max(np.abs(vals)))
        worst = max(worst, abs(float(vals.sum())) / scale)
    return worst
