"""Exhaustive generation of small networks up to isomorphism, and the census."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .classify import VarietyClass, classify_by_reactants
from .network import Complex, Network, canonical_key, is_genuine, parse_network

__all__ = ["CensusReport", "enumerate_complexes", "enumerate_networks", "census"]


def enumerate_complexes(species: int = 2, max_molecularity: int = 2) -> list[Complex]:
    """All complexes with molecularity ``<= max_molecularity``.

    Graded order: by molecularity, then first species' coefficient descending,
    so two species give ``0, A, B, 2A, A+B, 2B``.
    """
    if max_molecularity < 0:
        raise ValueError("max_molecularity must be >= 0")
    if species < 1:
        raise ValueError("species must be >= 1")
    rng = range(max_molecularity + 1)
    vecs = [v for v in itertools.product(rng, repeat=species) if sum(v) <= max_molecularity]
    vecs.sort(key=lambda v: (sum(v), tuple(-e for e in v)))
    return [Complex(v) for v in vecs]


def _raw_networks(species: int, reactions: int, max_molecularity: int):
    cx = enumerate_complexes(species, max_molecularity)
    rxns = [(r, p) for r in cx for p in cx if r != p]
    for combo in itertools.combinations(rxns, reactions):
        yield Network.from_pairs(
            ((r.exponents, p.exponents) for r, p in combo),
            [f"S{i + 1}" for i in range(species)],
        )


def enumerate_networks(
    species: int = 2, reactions: int = 2, max_molecularity: int = 2
) -> list[Network]:
    """Genuine networks, one per isomorphism class, sorted by canonical key."""
    if max_molecularity < 1:
        raise ValueError("max_molecularity must be >= 1 (no reactions exist otherwise)")
    keys = {
        canonical_key(net)
        for net in _raw_networks(species, reactions, max_molecularity)
        if is_genuine(net)
    }
    # genuine networks keep every species, so the parsed key is the canonical form
    return [parse_network(key) for key in sorted(keys)]


@dataclass
class CensusReport:
    total_networks: int = 0
    counts: dict[VarietyClass, int] = field(
        default_factory=lambda: {c: 0 for c in VarietyClass}
    )
    class_members: dict[VarietyClass, list[str]] = field(
        default_factory=lambda: {c: [] for c in VarietyClass}
    )

    def to_json(self) -> dict:
        return {
            "total_networks": self.total_networks,
            "counts": {c.value: n for c, n in self.counts.items()},
            "class_members": {c.value: list(m) for c, m in self.class_members.items()},
        }

    def table(self) -> str:
        width = max(len(c.value) for c in VarietyClass)
        rows = [f"{'class':<{width}}  count"]
        rows += [f"{c.value:<{width}}  {n:5d}" for c, n in self.counts.items()]
        rows.append(f"{'total':<{width}}  {self.total_networks:5d}")
        return "\n".join(rows)


def census(nets) -> CensusReport:
    """Tally :func:`classify_by_reactants` over ``nets``."""
    report = CensusReport()
    tally: Counter = Counter()
    for net in nets:
        cls = classify_by_reactants(net)
        tally[cls] += 1
        report.class_members[cls].append(canonical_key(net))
    for cls in VarietyClass:
        report.counts[cls] = tally[cls]
        report.class_members[cls].sort()
    report.total_networks = sum(tally.values())
    return report
