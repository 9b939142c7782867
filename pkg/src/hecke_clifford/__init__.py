"""Exact computer algebra for the Hecke-Clifford superalgebra and its fused idempotents."""

from .affine import (
    Character,
    IdempotentPairError,
    SingularFactorError,
    act_X,
    d_scalar,
    idempotency_defect,
    idempotency_holds,
    intertwiner_check,
    murphy_relations_hold,
    phi_on_identity,
    psi_factor,
    psi_factor_inverse,
    theta_factor,
)
from .algebra import (
    AlgebraElement,
    alpha,
    center_check,
    defining_relations_hold,
    elementary_symmetric_jm,
    jucys_murphy,
    mul,
    supercommutes_with_generators,
)
from .fusion import (
    PsiCache,
    SpecialPoint,
    divisibility_suite,
    fusion_plan,
    leading_check,
    proportionality,
    psi_tableau,
    special_point,
    symmetrizer,
)
from .representations import (
    SeminormalModule,
    build_U,
    build_module,
    central_character_table,
    commutant_dimension,
    dimension_identity,
    rho,
)
from .scalars import RationalFunction, TowerScalar, epsilon, q_power, special_value
from .tableaux import (
    ShiftedTableau,
    StrictPartition,
    column_tableau,
    enumerate_standard,
    enumerate_strict_partitions,
    row_tableau,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "Character",
    "IdempotentPairError",
    "PsiCache",
    "RationalFunction",
    "SeminormalModule",
    "ShiftedTableau",
    "SingularFactorError",
    "SpecialPoint",
    "StrictPartition",
    "TowerScalar",
    "act_X",
    "alpha",
    "build_U",
    "build_module",
    "center_check",
    "central_character_table",
    "column_tableau",
    "commutant_dimension",
    "d_scalar",
    "defining_relations_hold",
    "dimension_identity",
    "divisibility_suite",
    "elementary_symmetric_jm",
    "enumerate_standard",
    "enumerate_strict_partitions",
    "epsilon",
    "fusion_plan",
    "idempotency_defect",
    "idempotency_holds",
    "intertwiner_check",
    "jucys_murphy",
    "leading_check",
    "mul",
    "murphy_relations_hold",
    "phi_on_identity",
    "proportionality",
    "psi_factor",
    "psi_factor_inverse",
    "psi_tableau",
    "q_power",
    "rho",
    "row_tableau",
    "special_point",
    "special_value",
    "supercommutes_with_generators",
    "symmetrizer",
    "theta_factor",
]
