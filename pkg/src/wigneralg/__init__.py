"""Parity-deformed oscillator and spin algebras with exact verification.

Builds the deformed single- and two-mode oscillator operators, the deformed
su(2) block in its bilinear and single-mode square-root realizations, and the
derived deformed so(3) generators, then audits every algebraic relation both
exactly (symbolically in the deformation parameter) and numerically.
"""

from .errors import (
    DimensionMismatchError,
    DimensionTooSmallError,
    InvalidDimensionError,
    InvalidSpinError,
    NegativeRadicandError,
    NonInvariantSubspaceError,
    OddTwoJNotClosedError,
)
from .operators import (
    BasisLabel,
    FockLabel,
    OperatorMatrix,
    RelationSpec,
    SpinLabel,
    TwoModeLabel,
    anticommutator,
    check_relation,
    commutator,
    eval_matrix,
    tensor,
)
from .realizations import (
    BiPolynomial,
    QuasiPolyBasis,
    audit_realizations,
    build_quasi_basis,
    monomial_lowering,
    quasi_lowering,
    quasi_raising,
)
from .reports import AlgebraReport, CheckMode, Verdict, Witness
from .scalars import (
    GaussianRational,
    NuPolynomial,
    ParityClass,
    RadicalSum,
    Rational,
    check_cross_identity,
    check_pair_identities,
    deformed_factorial,
    deformed_number,
    numeric_eval,
    parity,
)
from .single_mode import SingleModeSet, audit_single_mode, build_single_mode
from .spin import (
    HPRep,
    SoNu3Rep,
    SuNu2Rep,
    audit_condensed_forms,
    audit_hp,
    audit_so_nu3,
    audit_su_nu2,
    build_hp_rep,
    build_js_spin_rep,
    build_so_nu3,
    errata_findings,
    extract_js_block,
    reference_matrix_registry,
)
from .two_mode import TwoModeSet, audit_two_mode, build_two_mode

__version__ = "0.1.0"

__all__ = [
    "AlgebraReport",
    "BasisLabel",
    "BiPolynomial",
    "CheckMode",
    "DimensionMismatchError",
    "DimensionTooSmallError",
    "FockLabel",
    "GaussianRational",
    "HPRep",
    "InvalidDimensionError",
    "InvalidSpinError",
    "NegativeRadicandError",
    "NonInvariantSubspaceError",
    "NuPolynomial",
    "OddTwoJNotClosedError",
    "OperatorMatrix",
    "ParityClass",
    "QuasiPolyBasis",
    "RadicalSum",
    "Rational",
    "RelationSpec",
    "SingleModeSet",
    "SoNu3Rep",
    "SpinLabel",
    "SuNu2Rep",
    "TwoModeLabel",
    "TwoModeSet",
    "Verdict",
    "Witness",
    "anticommutator",
    "audit_condensed_forms",
    "audit_hp",
    "audit_realizations",
    "audit_single_mode",
    "audit_so_nu3",
    "audit_su_nu2",
    "audit_two_mode",
    "build_hp_rep",
    "build_js_spin_rep",
    "build_quasi_basis",
    "build_single_mode",
    "build_so_nu3",
    "build_two_mode",
    "check_cross_identity",
    "check_pair_identities",
    "check_relation",
    "commutator",
    "deformed_factorial",
    "deformed_number",
    "errata_findings",
    "eval_matrix",
    "extract_js_block",
    "monomial_lowering",
    "numeric_eval",
    "parity",
    "quasi_lowering",
    "quasi_raising",
    "reference_matrix_registry",
    "tensor",
]
