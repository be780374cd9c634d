"""Symbolic layer: operator expressions over A+, A0, A-, P and their PBW normal form."""

from .expr import NCExpr, NCMonomial, anticommutator, commutator
from .identities import BUILTIN_IDENTITIES, builtin_suite, expanded, verify_identity
from .parser import parse, tokenize
from .rewrite import DEFINITIONS, normal_order, normal_order_counted, substitute_generators
from .scalars import ParamScalar

__all__ = [
    "NCExpr",
    "NCMonomial",
    "ParamScalar",
    "anticommutator",
    "commutator",
    "parse",
    "tokenize",
    "substitute_generators",
    "normal_order",
    "normal_order_counted",
    "verify_identity",
    "builtin_suite",
    "expanded",
    "BUILTIN_IDENTITIES",
    "DEFINITIONS",
]
