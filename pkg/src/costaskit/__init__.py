"""Costas arrays from finite-field constructions, with the censuses
that track how often the conditional variants apply."""

from .costas import (
    NotAPermutation,
    difference_table,
    enumerate_costas,
    first_collision,
    is_costas,
    remove_leading,
)
from .constructions import (
    ConstructionSpec,
    build,
    expected_size,
    find_spec,
    golomb_g2,
    golomb_g3,
    golomb_g4,
    golomb_g4_char2,
    lempel_l2,
    taylor_t4,
    welch_w1,
    welch_w2,
)
from .density import (
    CensusRow,
    ExpExpr,
    artin_constant,
    census_g4,
    census_t4,
    exists_primitive_trinomial,
    predicted_constants,
    prime_sieve,
    trinomial_census,
    trinomial_predicted,
    trinomial_witnesses,
    verify_zero_density_claims,
)
from .ff import FieldDescriptor, FieldElement, make_field, prime_power
from .fpr import (
    FprReport,
    fpr_candidates,
    fpr_report,
    fpr_set,
    fpr_to_t4_root,
    g4_applicable,
    g4_witness,
    phong_check,
    t4_admissible,
    t4_applicable,
)

__version__ = "0.1.0"

__all__ = [
    "CensusRow",
    "ConstructionSpec",
    "ExpExpr",
    "FieldDescriptor",
    "FieldElement",
    "FprReport",
    "NotAPermutation",
    "artin_constant",
    "build",
    "census_g4",
    "census_t4",
    "difference_table",
    "enumerate_costas",
    "exists_primitive_trinomial",
    "expected_size",
    "find_spec",
    "first_collision",
    "fpr_candidates",
    "fpr_report",
    "fpr_set",
    "fpr_to_t4_root",
    "g4_applicable",
    "g4_witness",
    "golomb_g2",
    "golomb_g3",
    "golomb_g4",
    "golomb_g4_char2",
    "is_costas",
    "lempel_l2",
    "make_field",
    "phong_check",
    "predicted_constants",
    "prime_power",
    "prime_sieve",
    "remove_leading",
    "t4_admissible",
    "t4_applicable",
    "taylor_t4",
    "trinomial_census",
    "trinomial_predicted",
    "trinomial_witnesses",
    "verify_zero_density_claims",
    "welch_w1",
    "welch_w2",
]
