"""Shared exception types."""


class PbtkError(Exception):
    """Base class for all toolkit errors."""


class InstanceTooLarge(PbtkError):
    """Instance exceeds the size guard of an exact enumeration path."""


class ResourceBound(PbtkError):
    """A table or search exceeded its configured cell cap."""


class KindMismatch(PbtkError):
    """Utility kind not applicable to the instance's preference format."""


class NumericFailure(PbtkError):
    """LP solver failed to reach a feasible optimum."""


class DegenerateParameter(PbtkError):
    """A parameterized scheme is undefined for this instance (division by zero)."""


class IllFormedTransformation(PbtkError):
    """Instance transformation violates its preconditions."""


class ConditionNotMet(PbtkError):
    """Arithmetic precondition of a constructive scheme does not hold."""


class InvalidBallots(PbtkError):
    """Probabilistic ballots violate unanimity or monotonicity."""


class UnknownRule(PbtkError):
    """Rule name not present in the registry."""


class ParseError(PbtkError):
    """Malformed election or parameter file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IdError(ParseError):
    """A vote or parameter references an unknown project id."""


class ValidationError(ParseError):
    """Parsed values violate a model invariant."""
