"""Exception types shared across the package.

All domain errors derive from ValueError so callers can catch broadly; the
distinct classes exist because the CLI maps them to specific exit codes and
tests pin which failure mode fires.
"""


class UnsupportedDegree(ValueError):
    """The field degree does not admit the requested representation."""


class DegreeMismatch(ValueError):
    """Two elements from fields of different degrees were combined."""


class NoGnbFound(ValueError):
    """No Gaussian normal basis of type <= the search bound exists for m."""


class InvalidParams(ValueError):
    """Normal-basis parameters fail their defining conditions."""


class ConstructionFailed(ValueError):
    """The explicit basis construction could not be carried out."""


class ExponentOutOfRange(ValueError):
    """A squaring exponent r lies outside 0..m."""


class DegreeTooSmall(ValueError):
    """Inversion needs m >= 3; smaller degrees have no multiplier ladder."""


class WidthMismatch(ValueError):
    """An input vector's length does not match the circuit width."""


class ParseError(ValueError):
    """A netlist file is malformed; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
