"""Minimal approximant bases of polynomial matrices over a prime field.

Computes bases of the module A_d(F) = {p : p * F = 0 mod X^d} in canonical
shifted Popov form, with a divide-and-conquer solver, partial-linearization
pipelines for unbalanced orders and shifts, and a slow iterative oracle used
for cross-validation.
"""

from .polymat import PolyMat, NEG_INF, residual
from .forms import (
    BasisResult,
    leading_matrix,
    check_form,
    pivot_profile,
    normalize_to_popov,
    membership_reduce,
)
from .mbasis import mbasis1
from .pmbasis import pm_basis, pad_orders, popov_pm_basis
from .coldim import reduce_coldim
from .knowndeg import known_deg_appbasis
from .solver import popov_appbasis
from .unbalanced import shift_around_min, shift_around_max
from .oracle import iterative_appbasis, oracle_popov, verify_basis, matmul_embed

__version__ = "0.1.0"

__all__ = [
    "PolyMat",
    "NEG_INF",
    "residual",
    "BasisResult",
    "leading_matrix",
    "check_form",
    "pivot_profile",
    "normalize_to_popov",
    "membership_reduce",
    "mbasis1",
    "pm_basis",
    "pad_orders",
    "popov_pm_basis",
    "reduce_coldim",
    "known_deg_appbasis",
    "popov_appbasis",
    "shift_around_min",
    "shift_around_max",
    "iterative_appbasis",
    "oracle_popov",
    "verify_basis",
    "matmul_embed",
]
