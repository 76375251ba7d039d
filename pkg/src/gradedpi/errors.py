"""Exception hierarchy shared across the library."""


class GradedPiError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(GradedPiError):
    """Invalid field specification or scalar coercion."""


class GroupAxiomError(GradedPiError):
    """A Cayley table violates the group axioms."""


class GradingError(GradedPiError):
    """A degree constraint is violated (substitution, evaluation, grading)."""


class NonMultilinearError(GradedPiError):
    """An operation that requires a multilinear polynomial received another."""


class EvaluationError(GradedPiError):
    """A polynomial evaluation received an incomplete or invalid assignment."""


class PolySyntaxError(GradedPiError):
    """Polynomial text could not be parsed; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class AlgebraError(GradedPiError):
    """Structure constants violate associativity or grading compatibility."""


class ResourceGuardError(GradedPiError):
    """A computation would exceed the configured resource budget."""


class DegenerateBoundError(GradedPiError):
    """Bound parameters degenerate (the formula has no meaningful value)."""


class LoadError(GradedPiError):
    """An algebra description file is malformed; carries a JSON pointer."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{message}" + (f" [at {pointer}]" if pointer else ""))
        self.pointer = pointer
