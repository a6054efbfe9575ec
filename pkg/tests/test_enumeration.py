import random

import numpy as np
import pytest
from scipy.linalg import null_space

from smallcrn import (
    Complex,
    VarietyClass as V,
    canonical_key,
    census,
    classify_by_binomial,
    classify_by_reactants,
    canonical_binomial,
    enumerate_complexes,
    enumerate_networks,
    is_genuine,
    pssv_status,
    stoichiometric_matrix,
)
from smallcrn.enumeration import _raw_networks

from oracles import brute_force_iso_count, shape_of, trace_curve


def test_complexes():
    got = enumerate_complexes(2, 2)
    assert got == [Complex(v) for v in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]]
    assert len(enumerate_complexes(2, 3)) == 10
    assert enumerate_complexes(2, 0) == [Complex((0, 0))]


def test_raw_pair_count():
    assert sum(1 for _ in _raw_networks(2, 2, 2)) == 435


@pytest.mark.parametrize("max_mol, expected", [(1, 8), (2, 210), (3, 1959)])
def test_counts_match_brute_force(max_mol, expected):
    oracle, _ = brute_force_iso_count(max_mol)
    assert oracle == expected
    assert len(enumerate_networks(2, 2, max_mol)) == expected


def test_max_mol_zero_rejected():
    with pytest.raises(ValueError):
        enumerate_networks(2, 2, 0)


def test_unique_and_complete(small_networks):
    keys = [canonical_key(n) for n in small_networks]
    assert len(set(keys)) == len(keys) == 210
    assert keys == sorted(keys)
    keyset = set(keys)
    for raw in _raw_networks(2, 2, 2):
        if is_genuine(raw):
            assert canonical_key(raw) in keyset


def test_census_bimolecular(small_networks):
    r = census(small_networks)
    assert r.counts[V.AXIS_PARALLEL_LINE] == 3
    assert r.counts[V.LINE_THROUGH_ORIGIN] == 7
    assert r.counts[V.PARABOLA] == 5
    assert r.counts[V.HYPERBOLA] == 3
    assert r.counts[V.OTHER_TORIC_CURVE] == 0
    assert r.counts[V.EMPTY_PSSV] + r.counts[V.TUNED_FULL_ORTHANT] == 192
    assert sum(r.counts.values()) == r.total_networks == 210
    assert all(len(r.class_members[c]) == r.counts[c] for c in V)


def _tunable(net):
    """Positive kernel vector of N, found by SVD (identical reactants only)."""
    if net.reactants[0] != net.reactants[1]:
        return False
    ker = null_space(stoichiometric_matrix(net).astype(float))
    if ker.shape[1] != 1:
        return False
    v = ker[:, 0]
    return bool(np.all(v > 1e-12) or np.all(v < -1e-12))


def test_empty_vs_tuned_split(small_networks):
    r = census(small_networks)
    tuned = [n for n in small_networks if _tunable(n)]
    assert r.counts[V.TUNED_FULL_ORTHANT] == len(tuned) == 1
    assert r.counts[V.EMPTY_PSSV] == 191
    for net in small_networks:
        if classify_by_reactants(net) is V.EMPTY_PSSV:
            assert trace_curve(net, (1.7, 0.6)) is None


def test_census_order_independent(small_networks):
    shuffled = list(small_networks)
    random.Random(7).shuffle(shuffled)
    a, b = census(small_networks), census(shuffled)
    assert a.counts == b.counts and a.class_members == b.class_members


def test_census_empty():
    r = census([])
    assert r.total_networks == 0 and set(r.counts.values()) == {0}


def test_trimolecular_census():
    nets = enumerate_networks(2, 2, 3)
    r = census(nets)
    assert r.counts[V.SEMICUBICAL_PARABOLA] == 11
    assert r.counts[V.CUBIC] == 11
    for net in nets:
        if not pssv_status(net).nonempty:
            continue
        by_b = classify_by_binomial(canonical_binomial(net))
        by_r = classify_by_reactants(net)
        if by_r is not V.OTHER_TORIC_CURVE:
            assert by_r is by_b
        if by_r in (V.SEMICUBICAL_PARABOLA, V.CUBIC):
            # numerically traced curve, no binomial involved
            assert shape_of(trace_curve(net, (1.7, 0.6))) is by_r
