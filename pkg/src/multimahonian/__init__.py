"""Kronecker coefficients of the symmetric group from descent-set counts,
refined multimahonian distributions and the enumeration identities around them."""

from .distributions import (
    count_tuples_with_descents,
    multimahonian_via_kronecker,
    refined_fake_degree,
    refined_multimahonian,
)
from .kronecker import KroneckerTable, kronecker_character, kronecker_recursive, tensor_decompose
from .permstat import BudgetExceeded
from .polyring import Polynomial, Window

__all__ = [
    "BudgetExceeded",
    "KroneckerTable",
    "Polynomial",
    "Window",
    "count_tuples_with_descents",
    "kronecker_character",
    "kronecker_recursive",
    "multimahonian_via_kronecker",
    "refined_fake_degree",
    "refined_multimahonian",
    "tensor_decompose",
]

__version__ = "0.1.0"
