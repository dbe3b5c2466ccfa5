"""Exception hierarchy shared across the package."""


class WhittakerMonoError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(WhittakerMonoError):
    """Input lies outside the domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class BranchError(WhittakerMonoError):
    """An argument met the branch cut [1, inf) where the principal
    branch of 2F1 is not single-valued; we refuse rather than guess
    an analytic continuation."""


class NonConvergence(WhittakerMonoError):
    """Series or quadrature failed to converge within budget."""


class UnverifiableError(WhittakerMonoError):
    """A quantity underflowed or degraded past the point where a
    verdict would be numerically meaningful."""


class UsageError(WhittakerMonoError):
    """Bad command-line usage; carries the offending flag name."""
