"""Exception hierarchy shared by all iwaknot modules."""


class IwaknotError(Exception):
    """Base class for all library errors."""


class DomainMismatch(IwaknotError):
    """Operands live in different coefficient domains."""


class WrongDomain(IwaknotError):
    """Operation requires a specific coefficient domain."""


class ZeroPolynomial(IwaknotError):
    """Operation is undefined for the zero polynomial."""


class NonInvertibleEvaluationPoint(IwaknotError):
    """Evaluation of a Laurent polynomial at a non-unit with negative exponents."""


class NonIntegralResult(IwaknotError):
    """Norm computation left the rational integers."""


class InexactDivision(IwaknotError):
    """An exact division had a nonzero remainder."""


class NoStabilization(IwaknotError):
    """The nu-offset never became constant inside the sampled r-range."""


class MNotCoprime(IwaknotError):
    """The tame level m must be coprime to p."""


class ResourceCapExceeded(IwaknotError):
    """A requested cover level exceeds the configured resource cap."""


class ConvergenceFailure(IwaknotError):
    """A numerical root-finding step did not converge."""


class NotIrreducible(IwaknotError):
    """A character-variety point is not (absolutely) irreducible."""


class NoSquareRoot(IwaknotError):
    """A required square root does not exist in the coefficient field."""


class ReduciblePoint(IwaknotError):
    """The requested matrix model only exists for irreducible points."""


class DenominatorVanishes(IwaknotError):
    """det((rho x alpha)(g) - I) = 0 for the chosen generator."""


class DeficiencyMismatch(IwaknotError):
    """The presentation does not have deficiency one."""


class UnknownGenerator(IwaknotError):
    """A word refers to a generator absent from the presentation."""


class WordSyntaxError(IwaknotError):
    """A group word string could not be parsed."""


class PrecondFailed(IwaknotError):
    """An operation-specific precondition was violated."""


class EmptyReports(IwaknotError):
    """A verdict was requested over an empty report list."""


class ConfigParse(IwaknotError):
    """A suite configuration file could not be parsed."""
