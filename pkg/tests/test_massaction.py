import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smallcrn import (
    Complex,
    MassActionTerm,
    RateAssignment,
    SteadyStatePolynomial,
    evaluate,
    factor_common_monomial,
    parse_network,
    reactant_matrix,
    steady_state_polynomials,
    stoichiometric_matrix,
    translate_network,
)

from conftest import RUNNING
from test_network import networks2


def T(coeff, rate, *mono):
    return MassActionTerm(coeff, rate, Complex(tuple(mono)))


def test_stoichiometric_matrix_running(running):
    assert stoichiometric_matrix(running).tolist() == [[-1, 1], [2, -2]]


def test_stoichiometric_catalyst_column():
    N = stoichiometric_matrix(parse_network("A -> A + B\nB -> A + B"))
    assert N[:, 0].tolist() == [0, 1]


def test_reactant_matrix():
    assert reactant_matrix(parse_network(RUNNING)).tolist() == [[1, 0], [0, 2]]
    assert reactant_matrix(parse_network("0 -> A + B\nA + B -> 0")).tolist() == [[0, 1], [0, 1]]


def test_matrices_are_read_only(running):
    with pytest.raises(ValueError):
        stoichiometric_matrix(running)[0, 0] = 5


@given(networks2(), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_matrix_translation_rules(net, m):
    moved = translate_network(net, m)
    assert np.array_equal(stoichiometric_matrix(moved), stoichiometric_matrix(net))
    assert np.array_equal(reactant_matrix(moved), reactant_matrix(net) + np.array(m)[:, None])


def test_polynomials_running(running):
    fA, fB = steady_state_polynomials(running)
    assert fA.terms == (T(-1, 1, 1, 0), T(1, 2, 0, 2))
    assert fB.terms == (T(2, 1, 1, 0), T(-2, 2, 0, 2))


def test_polynomials_rate_dependent(rate_dependent):
    (fA,) = steady_state_polynomials(rate_dependent)
    assert fA.terms == (T(1, 1, 1), T(-1, 2, 1), T(-1, 3, 2))


def test_polynomials_semicubic(semicubic):
    # B appears first in the text, so exponents are ordered (B, A)
    assert semicubic.species_names == ("B", "A")
    fB, fA = steady_state_polynomials(semicubic)
    assert fA.terms == (T(1, 1, 3, 0), T(-1, 2, 0, 2))
    assert fB.terms == (T(-1, 1, 3, 0), T(1, 2, 0, 2))


def test_zero_polynomial_for_catalyst():
    # B is unchanged by both reactions
    (fA, fB) = steady_state_polynomials(parse_network("A + B -> 2A + B\nA + B -> B"))
    assert fB.is_zero and fB.terms == ()
    assert fA.terms == (T(1, 1, 1, 1), T(-1, 2, 1, 1))


@given(networks2(max_rxns=4))
def test_polynomials_match_matrix_product(net):
    # expand N diag(k) x^B entry by entry
    N, B = stoichiometric_matrix(net), reactant_matrix(net)
    polys = steady_state_polynomials(net)
    for k, p in enumerate(polys):
        expected = tuple(
            T(int(N[k, j]), j + 1, *B[:, j]) for j in range(N.shape[1]) if N[k, j]
        )
        assert p.species_index == k and p.terms == expected


@given(networks2(max_rxns=2))
def test_row_dependency_gives_proportional_polys(net):
    N = stoichiometric_matrix(net)
    fA, fB = steady_state_polynomials(net)
    a, b = N[0].tolist(), N[1].tolist()
    for c in (-3, -2, -1, 1, 2, 3):
        if b == [c * v for v in a]:
            assert fB.terms == fA.scaled(c).terms


def test_factor_overlap(overlap, running):
    common, residuals = factor_common_monomial(steady_state_polynomials(overlap))
    assert common == Complex((2, 1))
    assert residuals == steady_state_polynomials(running)


def test_factor_nothing_shared(running):
    polys = steady_state_polynomials(running)
    assert factor_common_monomial(polys) == (Complex((0, 0)), polys)


def test_factor_all_zero():
    polys = [SteadyStatePolynomial(0, ()), SteadyStatePolynomial(1, ())]
    assert factor_common_monomial(polys) == (Complex((0, 0)), polys)


def test_translation_residuals_exhaustive(running):
    base = steady_state_polynomials(running)
    for m in itertools.product(range(4), repeat=2):
        common, res = factor_common_monomial(steady_state_polynomials(translate_network(running, m)))
        assert common == Complex(m)
        assert res == base


def test_evaluate_examples(running, rate_dependent):
    fA = steady_state_polynomials(running)[0]
    assert evaluate(fA, (1, 1), (1, 1)) == 0
    assert evaluate(SteadyStatePolynomial(0, ()), (1, 1), (3.0, 2.0)) == 0
    assert evaluate(steady_state_polynomials(rate_dependent)[0], (2, 1, 1), [1.0]) == 0


def test_evaluate_zero_power_is_one():
    p = SteadyStatePolynomial(0, (T(3, 1, 0, 0),))
    assert evaluate(p, (2.0,), (0.0, 0.0)) == 6.0


def test_rate_assignment_validation():
    with pytest.raises(ValueError):
        RateAssignment((1.0, 0.0))
    with pytest.raises(ValueError):
        RateAssignment((1.0, -2.0))
    assert RateAssignment((1, 2)).kappa(2) == 2.0


@settings(max_examples=200)
@given(
    networks2(max_rxns=3),
    st.lists(st.floats(0.1, 10), min_size=3, max_size=3),
    st.tuples(st.floats(0.05, 5), st.floats(0.05, 5)),
)
def test_factoring_soundness(net, ks, x):
    rates = ks[: net.n_reactions]
    polys = steady_state_polynomials(net)
    common, residuals = factor_common_monomial(polys)
    mono = np.prod(np.asarray(x) ** np.asarray(common.exponents))
    for p, r in zip(polys, residuals):
        full = evaluate(p, rates, x)
        assert full == pytest.approx(mono * evaluate(r, rates, x), rel=1e-12, abs=1e-300)
