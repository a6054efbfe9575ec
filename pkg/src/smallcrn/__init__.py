"""Positive steady-state varieties of small mass-action reaction networks."""

from .classify import (
    AcrReport,
    VarietyClass,
    classify_by_binomial,
    classify_by_reactants,
    detect_acr,
)
from .enumeration import CensusReport, census, enumerate_complexes, enumerate_networks
from .massaction import (
    MassActionTerm,
    RateAssignment,
    SteadyStatePolynomial,
    evaluate,
    factor_common_monomial,
    normalized_residual,
    reactant_matrix,
    steady_state_polynomials,
    stoichiometric_matrix,
)
from .network import (
    Complex,
    Network,
    ParseError,
    Reaction,
    canonical_form,
    canonical_key,
    is_genuine,
    molecularity,
    multiset_shared,
    parse_network,
    reduced_reactants,
    serialize,
    support,
    translate_network,
)
from .oracle import (
    OracleConfig,
    UnsupportedNetwork,
    VarietySample,
    find_positive_steady_state,
    identify_class,
    network_seed,
    sample_rates,
    sample_variety,
    verify_class,
)
from .pssv import (
    CanonicalBinomial,
    PssvStatus,
    PssvTag,
    canonical_binomial,
    columns_negatively_proportional,
    pssv_status,
)

__version__ = "0.1.0"

__all__ = [
    "AcrReport",
    "VarietyClass",
    "classify_by_binomial",
    "classify_by_reactants",
    "detect_acr",
    "CensusReport",
    "census",
    "enumerate_complexes",
    "enumerate_networks",
    "MassActionTerm",
    "RateAssignment",
    "SteadyStatePolynomial",
    "evaluate",
    "factor_common_monomial",
    "normalized_residual",
    "reactant_matrix",
    "steady_state_polynomials",
    "stoichiometric_matrix",
    "Complex",
    "Network",
    "ParseError",
    "Reaction",
    "canonical_form",
    "canonical_key",
    "is_genuine",
    "molecularity",
    "multiset_shared",
    "parse_network",
    "reduced_reactants",
    "serialize",
    "support",
    "translate_network",
    "OracleConfig",
    "UnsupportedNetwork",
    "VarietySample",
    "find_positive_steady_state",
    "identify_class",
    "network_seed",
    "sample_rates",
    "sample_variety",
    "verify_class",
    "CanonicalBinomial",
    "PssvStatus",
    "PssvTag",
    "canonical_binomial",
    "columns_negatively_proportional",
    "pssv_status",
]
