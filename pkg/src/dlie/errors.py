"""Shared exception types."""


class IneligibleParameterError(ValueError):
    """A radical-tower parameter fails an eligibility condition (square alpha, ...)."""


class MismatchError(ValueError):
    """Operands belong to different towers, algebras or ambient spaces."""


class ParseError(ValueError):
    """Malformed input in the text grammar."""
