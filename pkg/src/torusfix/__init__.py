"""Exact combinatorics of Dellac configurations, rook arrangements and
Bruhat intervals below the distinguished permutations tau_n."""

from .errors import (
    ConsistencyError,
    DomainError,
    NotRealizableError,
    PreconditionError,
    RankError,
    RestrictionError,
)
from .perm_core import CoxeterWord, Permutation, tau

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CoxeterWord",
    "DomainError",
    "NotRealizableError",
    "Permutation",
    "PreconditionError",
    "RankError",
    "RestrictionError",
    "tau",
]
