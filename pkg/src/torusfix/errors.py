"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class RankError(DomainError):
    """A Coxeter letter exceeds the number of available generators."""


class RestrictionError(DomainError):
    """A permutation does not fix both endpoints, so it cannot be restricted."""


class PreconditionError(DomainError):
    pass


class NotRealizableError(DomainError):
    """A support chain does not come from a coset representative below tau."""


class ConsistencyError(RuntimeError):
    """An internal identity that must always hold was violated."""
