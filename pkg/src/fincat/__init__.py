"""Finite categories, functors, universal constructions and adjunctions, computed exhaustively."""

from .core import (
    DEFAULT_CAP,
    FinCategory,
    build_category,
    chain_category,
    discrete_category,
    free_category,
    indiscrete_category,
    initial_category,
    op,
    poset_category,
    product_category,
    set_self_check,
    structural_eq,
    terminal_category,
    validate_category,
    walking_arrow,
)
from .errors import (
    EnumerationCapExceeded,
    FinCatError,
    ParseError,
    ShapeMismatch,
    StrictnessViolation,
    ValidationError,
    ValidationReport,
)
from .functor import Functor, NatTrans, enumerate_functors, enumerate_nat_trans

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapExceeded",
    "FinCatError",
    "FinCategory",
    "Functor",
    "NatTrans",
    "ParseError",
    "ShapeMismatch",
    "StrictnessViolation",
    "ValidationError",
    "ValidationReport",
    "build_category",
    "chain_category",
    "discrete_category",
    "enumerate_functors",
    "enumerate_nat_trans",
    "free_category",
    "indiscrete_category",
    "initial_category",
    "op",
    "poset_category",
    "product_category",
    "set_self_check",
    "structural_eq",
    "terminal_category",
    "validate_category",
    "walking_arrow",
]
