"""Numeric cross-checks for the symbolic analysis.

Everything here works in floating point on concrete rate constants and is
validated by evaluating the steady-state polynomials directly.  Randomness
is derived from explicit seeds only.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .classify import SHAPE_EXPONENTS, VarietyClass, classify_by_binomial
from .massaction import (
    RateAssignment,
    evaluate,
    normalized_residual,
    reactant_matrix,
    steady_state_polynomials,
    stoichiometric_matrix,
)
from .network import Network, canonical_key
from .pssv import canonical_binomial

__all__ = [
    "OracleConfig",
    "VarietySample",
    "UnsupportedNetwork",
    "network_seed",
    "sample_rates",
    "find_positive_steady_state",
    "sample_variety",
    "fit_residual",
    "identify_class",
    "verify_class",
    "write_sample_csv",
]

FIT_TOLERANCE = 1e-6


class UnsupportedNetwork(ValueError):
    """The oracle has no solver for this network shape."""


@dataclass(frozen=True)
class OracleConfig:
    seed: int = 0
    rate_low: float = 0.1
    rate_high: float = 10.0
    search_box: float = 100.0
    tolerance: float = 1e-9
    samples: int = 64

    def __post_init__(self) -> None:
        if not 0 < self.rate_low <= self.rate_high:
            raise ValueError("need 0 < rate_low <= rate_high")
        if self.tolerance <= 0 or self.search_box <= 1 or self.samples < 1:
            raise ValueError("invalid oracle configuration")


@dataclass(frozen=True)
class VarietySample:
    points: np.ndarray
    max_residual: float
    rates: RateAssignment | None = field(default=None, compare=False)


def network_seed(net: Network) -> int:
    """Stable 63-bit integer derived from the canonical form of ``net``."""
    digest = hashlib.sha256(canonical_key(net).encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def sample_rates(
    n_reactions: int, cfg: OracleConfig, draw: int, stream: int = 0
) -> RateAssignment:
    """Log-uniform rates in ``[rate_low, rate_high]``, a pure function of the seeds.

    ``stream`` separates independent consumers, e.g. :func:`network_seed`.
    """
    if n_reactions < 1:
        raise ValueError("n_reactions must be >= 1")
    rng = np.random.default_rng([cfg.seed, stream, draw])
    lo, hi = np.log(cfg.rate_low), np.log(cfg.rate_high)
    vals = np.exp(rng.uniform(lo, hi, size=n_reactions))
    return RateAssignment(tuple(np.clip(vals, cfg.rate_low, cfg.rate_high)))


def _as_rates(rates) -> RateAssignment:
    return rates if isinstance(rates, RateAssignment) else RateAssignment(tuple(rates))


def _two_reaction_witness(net: Network, rates: RateAssignment, cfg: OracleConfig):
    # On x > 0 divide each f_i by x^r2: N[i,0] k1 t + N[i,1] k2 = 0 with t = x^(r1-r2).
    N = stoichiometric_matrix(net).astype(float)
    B = reactant_matrix(net)
    k1, k2 = rates[0], rates[1]
    a, b = N[:, 0] * k1, N[:, 1] * k2
    d = (B[:, 0] - B[:, 1]).astype(int)
    scale = 1.0 + np.max(np.abs(np.concatenate([a, b])))

    cands = [-b[i] / a[i] for i in range(len(a)) if a[i] != 0]
    if any(a[i] == 0 and abs(b[i]) > cfg.tolerance * scale for i in range(len(a))):
        return None
    if not any(d):
        t = 1.0
    elif not cands:
        return None
    else:
        t = float(np.median(cands))
    if not t > 0:
        return None
    if not all(abs(a[i] * t + b[i]) <= cfg.tolerance * scale for i in range(len(a))):
        return None
    x = np.ones(net.n_species)
    if any(d):
        j = int(np.argmax(np.abs(d)))
        x[j] = t ** (1.0 / d[j])
    return x


def _univariate_witness(net: Network, rates: RateAssignment, cfg: OracleConfig):
    poly = steady_state_polynomials(net)[0]
    if poly.is_zero:
        return np.ones(1)

    def f(x):
        return evaluate(poly, rates, [x])

    grid = np.geomspace(1.0 / cfg.search_box, cfg.search_box, 4001)
    vals = np.array([f(x) for x in grid])
    for i, v in enumerate(vals):
        if v == 0.0:
            return np.array([grid[i]])
        if i and np.sign(v) != np.sign(vals[i - 1]):
            root = brentq(f, grid[i - 1], grid[i], xtol=1e-15, rtol=4 * np.finfo(float).eps)
            return np.array([root])
    return None


def find_positive_steady_state(net: Network, rates, cfg: OracleConfig | None = None):
    """A strictly positive steady state for ``rates``, or None if none is found.

    Two-reaction networks reduce to one linear condition on ``t = x**(r1-r2)``;
    one-species networks are scanned on ``[1/search_box, search_box]`` and
    refined by bracketing.  Any returned point is checked against the
    polynomials at ``cfg.tolerance``.
    """
    cfg = cfg or OracleConfig()
    rates = _as_rates(rates)
    if len(rates) != net.n_reactions:
        raise ValueError("rate count does not match reaction count")
    if net.n_reactions == 2:
        x = _two_reaction_witness(net, rates, cfg)
    elif net.n_species == 1:
        x = _univariate_witness(net, rates, cfg)
    else:
        raise UnsupportedNetwork(
            "numeric search supports 2-reaction or 1-species networks only"
        )
    if x is None or not np.all(x > 0):
        return None
    if normalized_residual(steady_state_polynomials(net), rates, x) > cfg.tolerance:
        return None
    return x


def sample_variety(net: Network, rates, cfg: OracleConfig | None = None) -> VarietySample:
    """Points on ``x**u = c`` swept log-uniformly along one free coordinate."""
    cfg = cfg or OracleConfig()
    rates = _as_rates(rates)
    b = canonical_binomial(net)
    if b is None:
        raise ValueError("network does not have a rate-independent nonempty positive variety")
    c = b.constant(rates)
    u = np.array(b.u)
    s = len(u)
    dep = int(np.argmax(np.abs(u)))
    free = next((k for k in range(s) if k != dep), None)

    sweep = np.geomspace(1.0 / cfg.search_box, cfg.search_box, cfg.samples)
    pts = np.ones((cfg.samples, s))
    if free is not None:
        pts[:, free] = sweep
        rest = np.prod(pts ** np.where(np.arange(s) == dep, 0, u), axis=1)
    else:
        rest = np.ones(cfg.samples)
    pts[:, dep] = (c / rest) ** (1.0 / u[dep])
    if free is None:
        pts = pts[:1]

    polys = steady_state_polynomials(net)
    worst = max(normalized_residual(polys, rates, p) for p in pts)
    return VarietySample(pts, worst, rates)


def fit_residual(points, exponents: Sequence[int]) -> float:
    """Max relative deviation of ``prod(x**exponents)`` from its geometric mean."""
    pts = np.asarray(points, dtype=float)
    logs = np.log(pts) @ np.asarray(exponents, dtype=float)
    c_log = logs.mean()
    return float(np.max(np.abs(np.expm1(logs - c_log))))


def _fits(points, cls: VarietyClass) -> bool:
    exps = SHAPE_EXPONENTS.get(cls)
    if exps is None:
        return False
    return min(fit_residual(points, exps), fit_residual(points, exps[::-1])) <= FIT_TOLERANCE


def identify_class(sample: VarietySample) -> VarietyClass:
    """The named curve the sampled points lie on, else ``OtherToricCurve``."""
    if sample.points.shape[1] != 2 or len(sample.points) < 2:
        raise ValueError("need at least two points in the plane")
    for cls in SHAPE_EXPONENTS:
        if _fits(sample.points, cls):
            return cls
    return VarietyClass.OTHER_TORIC_CURVE


def verify_class(
    net: Network, sample: VarietySample, expected: VarietyClass | None = None
) -> bool:
    """Do the points fit the canonical equation of ``expected``?

    ``expected`` defaults to the binomial classification of ``net``.  The
    constant is fitted as the geometric mean of the pointwise estimates.
    """
    if net.n_species != 2:
        raise ValueError("verify_class needs a 2-species network")
    if len(sample.points) == 0:
        raise ValueError("empty sample")
    if expected is None:
        b = canonical_binomial(net)
        if b is None:
            return False
        expected = classify_by_binomial(b)
    return _fits(sample.points, expected)


def write_sample_csv(sample: VarietySample, fh) -> None:
    """CSV with header ``x,y`` (or ``x1..xs``), 17 significant digits."""
    s = sample.points.shape[1]
    header = ["x", "y"] if s == 2 else [f"x{i + 1}" for i in range(s)]
    fh.write(",".join(header) + "\n")
    for p in sample.points:
        fh.write(",".join(f"{v:.17g}" for v in p) + "\n")
