"""Exception hierarchy shared across the package."""


class MutlabError(Exception):
    """Base class for all package-specific failures."""


class NotSkewSymmetrizable(MutlabError):
    """The integer matrix admits no positive diagonal symmetrizer."""


class SignCoherenceViolation(MutlabError):
    """A c-vector came out with strictly mixed signs; hard failure."""


class NotAcyclic(MutlabError):
    """The diagram contains an oriented cycle where acyclicity is required."""


class NonIntegralPairing(MutlabError):
    """2(a,b)/(a,a) is not an integer; the vector is not a real root here."""


class CompanionMismatch(MutlabError):
    """A produced matrix fails the quasi-Cartan companion conditions."""


class PatternMismatch(MutlabError):
    """Two companions disagree in absolute value somewhere."""


class CycleBudgetExceeded(MutlabError):
    """Cycle/path enumeration exceeded the configured cap."""


class SearchBudgetExceeded(MutlabError):
    """Exhaustive sign-assignment search exceeded its edge cap."""


class FrontierBudgetExceeded(MutlabError):
    """Breadth-first exploration exceeded its seed cap."""
