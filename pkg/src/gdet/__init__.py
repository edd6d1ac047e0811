"""Integer group determinants of the elementary abelian groups C2^n.

Exact evaluation via the signed character (Walsh-Hadamard) transform, a
matrix-determinant oracle, membership classification of achievable values
for n = 2, 3, 4, explicit witness constructions, exhaustive residue-class
verification, and brute-force sweeps over tuple boxes.
"""

from gdet.core import (
    Assignment,
    BcdeQuad,
    FactorTree,
    bcde_decompose,
    character_transform,
    d2_closed_form,
    det_group,
    det_matrix_oracle,
    factor_step,
    factor_tree,
)
from gdet.classify import (
    FactorizationInfeasibleError,
    NotMember,
    Odd16m1,
    OddFactorization,
    TwoAdicSplit,
    V16_4m1,
    V24_4m1,
    V24_8m3,
    V24_A,
    V26,
    classify_c22,
    classify_c23,
    classify_c24,
    factor_odd,
    is_in_A,
    odd_class_c2n,
    two_adic_split,
)
from gdet.witness import build, witness_for
from gdet.verify import (
    LemmaReport,
    verify_all,
    verify_d2_residue_lemma,
    verify_impossibility_cases,
    verify_parity_suite,
)
from gdet.sweep import SweepConfig, SweepResult, a_set_oracle, coverage_check, sweep

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BcdeQuad",
    "FactorTree",
    "FactorizationInfeasibleError",
    "LemmaReport",
    "NotMember",
    "Odd16m1",
    "OddFactorization",
    "SweepConfig",
    "SweepResult",
    "TwoAdicSplit",
    "V16_4m1",
    "V24_4m1",
    "V24_8m3",
    "V24_A",
    "V26",
    "a_set_oracle",
    "bcde_decompose",
    "build",
    "character_transform",
    "classify_c22",
    "classify_c23",
    "classify_c24",
    "coverage_check",
    "d2_closed_form",
    "det_group",
    "det_matrix_oracle",
    "factor_odd",
    "factor_step",
    "factor_tree",
    "is_in_A",
    "odd_class_c2n",
    "sweep",
    "two_adic_split",
    "verify_all",
    "verify_d2_residue_lemma",
    "verify_impossibility_cases",
    "verify_parity_suite",
    "witness_for",
]
