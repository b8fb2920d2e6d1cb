"""Quadratic modules on *-rings: exact positivity certificates, the seminorm n_M,
finite-dimensional models of the associated C*-completion, positive forms and GNS."""

from .algebra import (
    Carrier,
    CarrierError,
    Complexified,
    FreeStar,
    GroupRing,
    IrrationalModulus,
    MatrixRing,
    StarElement,
    complex_pair,
    complexify,
    matrix_lift,
    matrix_unit,
)
from .certificates import (
    Certificate,
    CertificateError,
    CertTerm,
    ModulePresentation,
    NormCertificate,
    Verdict,
    bound_propagate,
    cert_eval,
    cert_verify,
    complex_presentation,
    l1_certificate,
    lemma3_join,
    lemma3_split,
    lift_complex_cert,
    lift_matrix_cert,
    matrix_presentation,
    norm_cert_c_star,
    norm_cert_pair_drop,
    norm_cert_product,
    norm_cert_scale,
    norm_cert_star,
    norm_cert_sum,
    norm_cert_sum_many,
    presentation,
    verify_norm,
)
from .expressions import ExpressionError, format_element, parse_carrier, parse_expression
from .forms import (
    FormError,
    GNSResult,
    PositiveForm,
    form_from_values,
    form_respects_module,
    gns,
    prop9_audit,
    prop10_audit,
)
from .groups import FiniteGroup, GroupError, parse_group
from .irreps import IrrepSet, decompose_irreps
from .linalg import hermitian_eig, operator_norm
from .positivity import (
    AMModel,
    CharacterSpace,
    DegeneratePresentation,
    NormEstimate,
    arch_membership,
    build_AM_model,
    character_space,
    classify_bounded,
    corollary8_audit,
    evaluation_map_audit,
    example9_audit,
    seminorm,
    theorem1_audit,
)
from .reports import Check, Report
from .representations import (
    BasisRepresentation,
    Representation,
    complexify_rep,
    conjugate_rep,
    is_M_positive,
    matrix_point_rep,
    regular_rep,
    rep_apply,
)
from .scalars import GaussianRational

__version__ = "0.1.0"

__all__ = [
    "Carrier",
    "CarrierError",
    "Complexified",
    "FreeStar",
    "GroupRing",
    "IrrationalModulus",
    "MatrixRing",
    "StarElement",
    "complex_pair",
    "complexify",
    "matrix_lift",
    "matrix_unit",
    "Certificate",
    "CertificateError",
    "CertTerm",
    "ModulePresentation",
    "NormCertificate",
    "Verdict",
    "bound_propagate",
    "cert_eval",
    "cert_verify",
    "complex_presentation",
    "l1_certificate",
    "lemma3_join",
    "lemma3_split",
    "lift_complex_cert",
    "lift_matrix_cert",
    "matrix_presentation",
    "norm_cert_c_star",
    "norm_cert_pair_drop",
    "norm_cert_product",
    "norm_cert_scale",
    "norm_cert_star",
    "norm_cert_sum",
    "norm_cert_sum_many",
    "presentation",
    "verify_norm",
    "ExpressionError",
    "format_element",
    "parse_carrier",
    "parse_expression",
    "FormError",
    "GNSResult",
    "PositiveForm",
    "form_from_values",
    "form_respects_module",
    "gns",
    "prop9_audit",
    "prop10_audit",
    "FiniteGroup",
    "GroupError",
    "parse_group",
    "IrrepSet",
    "decompose_irreps",
    "hermitian_eig",
    "operator_norm",
    "AMModel",
    "CharacterSpace",
    "DegeneratePresentation",
    "NormEstimate",
    "arch_membership",
    "build_AM_model",
    "character_space",
    "classify_bounded",
    "corollary8_audit",
    "evaluation_map_audit",
    "example9_audit",
    "seminorm",
    "theorem1_audit",
    "Check",
    "Report",
    "BasisRepresentation",
    "Representation",
    "complexify_rep",
    "conjugate_rep",
    "is_M_positive",
    "matrix_point_rep",
    "regular_rep",
    "rep_apply",
    "GaussianRational",
]
