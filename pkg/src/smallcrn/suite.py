"""Symbolic-vs-numeric agreement checks over an enumerated family of networks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import VarietyClass, classify_by_binomial, classify_by_reactants, detect_acr
from .enumeration import enumerate_networks
from .massaction import normalized_residual, steady_state_polynomials
from .network import Network, canonical_key
from .oracle import (
    OracleConfig,
    find_positive_steady_state,
    identify_class,
    network_seed,
    sample_rates,
    sample_variety,
)
from .pssv import PssvTag, canonical_binomial, pssv_status


@dataclass
class AgreementResult:
    networks: int = 0
    draws: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "networks": self.networks,
            "draws": self.draws,
            "checks": self.checks,
            "ok": self.ok,
            "failures": list(self.failures),
        }


def check_network(net: Network, cfg: OracleConfig, draws: int, result: AgreementResult) -> None:
    key = canonical_key(net).replace("\n", "; ")
    status = pssv_status(net)
    polys = steady_state_polynomials(net)
    stream = network_seed(net)

    def fail(msg: str) -> None:
        result.failures.append(f"[{key}] {msg}")

    by_r = classify_by_reactants(net) if net.n_species == 2 else None
    b = canonical_binomial(net)
    if b is not None and by_r is not None and by_r is not VarietyClass.OTHER_TORIC_CURVE:
        result.checks += 1
        if classify_by_binomial(b) is not by_r:
            fail(f"by_reactants={by_r} but by_binomial={classify_by_binomial(b)}")
    acr = detect_acr(net) if by_r is not None else None

    for draw in range(draws):
        rates = sample_rates(net.n_reactions, cfg, draw, stream)
        x = find_positive_steady_state(net, rates, cfg)
        result.checks += 1
        if (x is not None) != status.nonempty:
            fail(f"draw {draw}: witness={x is not None} but status={status.tag}")
        if x is not None and normalized_residual(polys, rates, x) > cfg.tolerance:
            fail(f"draw {draw}: witness residual too large")
        if not status.nonempty:
            continue
        sample = sample_variety(net, rates, cfg)
        result.checks += 1
        if sample.max_residual > cfg.tolerance:
            fail(f"draw {draw}: variety sample residual {sample.max_residual:.3g}")
        if by_r is not None and by_r is not VarietyClass.OTHER_TORIC_CURVE:
            result.checks += 1
            got = identify_class(sample)
            if got is not by_r:
                fail(f"draw {draw}: sampled points fit {got}, expected {by_r}")
        if acr is not None:
            result.checks += 1
            want = acr.value(rates)
            col = sample.points[:, acr.species_index]
            if abs(col - want).max() > cfg.tolerance * max(1.0, want):
                fail(f"draw {draw}: ACR species drifts from {acr.value_str}")

    if status.tag is PssvTag.TUNED_FULL_ORTHANT:
        # at the tuning ratio every positive point is a steady state
        q = float(status.tuning_ratio)
        rates = (q, 1.0)
        result.checks += 1
        if find_positive_steady_state(net, rates, cfg) is None:
            fail("no witness at the tuning ratio")


def agreement_suite(
    max_molecularity: int = 2, draws: int = 5, cfg: OracleConfig | None = None
) -> AgreementResult:
    cfg = cfg or OracleConfig()
    nets = enumerate_networks(2, 2, max_molecularity)
    result = AgreementResult(networks=len(nets), draws=draws)
    for net in nets:
        check_network(net, cfg, draws, result)
    return result
