"""Finite-group computation toolkit.

Builds cyclic, dihedral, direct-product, semidirect-product, and holomorph
groups as explicit multiplication tables; computes automorphism groups by
pruned exhaustive search; tests isomorphism; identifies groups against a
catalog of named families; and ships a self-checking verification suite
plus a command-line frontend with a small group-expression language.
"""

from .core import (
    DEFAULT_SIZE_CAP,
    AxiomVerdict,
    GroupTable,
    Morphism,
    SizeCapError,
    SubgroupRef,
    center,
    compose,
    element_order,
    element_orders,
    identity_morphism,
    image_subgroup,
    is_abelian,
    is_normal,
    is_subgroup,
    kernel,
    make_table,
    order_spectrum,
    quotient,
    subgroup_generated,
    subgroup_table,
    to_json_dict,
    verify_group_axioms,
)
from .numth import FactoredInteger, euler_phi, factorize, gcd, lcm, totatives
from .construct import (
    Action,
    SplitWitness,
    action_classes,
    actions,
    cyclic,
    dihedral,
    direct_product,
    hom_set,
    holomorph,
    kh_copies,
    recognize_split,
    semidirect,
    trivial_action,
)
from .aut import (
    DEFAULT_AUT_CAP,
    AutGroup,
    aut_group,
    automorphisms,
    is_characteristic,
    lambda_lift,
    mixed_pair_check,
    zeta_lift,
)
from .iso import CatalogName, abelian_invariants, are_isomorphic, identify
from .expr import (
    ExprError,
    ExprEvalError,
    ExprSyntaxError,
    GroupExpr,
    eval_expr,
    parse_and_eval,
    parse_expr,
)
from .verify import (
    RunSummary,
    VerifyConfig,
    VerifyReport,
    report_to_json,
    run_all,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_AUT_CAP",
    "DEFAULT_SIZE_CAP",
    "Action",
    "AutGroup",
    "AxiomVerdict",
    "CatalogName",
    "ExprError",
    "ExprEvalError",
    "ExprSyntaxError",
    "FactoredInteger",
    "GroupExpr",
    "GroupTable",
    "Morphism",
    "RunSummary",
    "SizeCapError",
    "SplitWitness",
    "SubgroupRef",
    "VerifyConfig",
    "VerifyReport",
    "abelian_invariants",
    "action_classes",
    "actions",
    "are_isomorphic",
    "aut_group",
    "automorphisms",
    "center",
    "compose",
    "cyclic",
    "dihedral",
    "direct_product",
    "element_order",
    "element_orders",
    "euler_phi",
    "eval_expr",
    "factorize",
    "gcd",
    "hom_set",
    "holomorph",
    "identify",
    "identity_morphism",
    "image_subgroup",
    "is_abelian",
    "is_characteristic",
    "is_normal",
    "is_subgroup",
    "kernel",
    "kh_copies",
    "lambda_lift",
    "lcm",
    "make_table",
    "mixed_pair_check",
    "order_spectrum",
    "parse_and_eval",
    "parse_expr",
    "quotient",
    "recognize_split",
    "report_to_json",
    "run_all",
    "semidirect",
    "subgroup_generated",
    "subgroup_table",
    "to_json_dict",
    "totatives",
    "trivial_action",
    "verify_group_axioms",
    "zeta_lift",
]
