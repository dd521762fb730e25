# -*- coding: utf-8 -*-
"""Exception hierarchy shared by the services, the CLI and the HTTP layer."""


class TwinvError(Exception):
    """Base class for every error raised by twinv."""


class RankMismatchError(TwinvError, ValueError):
    """Two operands live in symmetric groups of different rank."""

    def __init__(self, left: int, right: int):
        super().__init__(f"rank mismatch: {left} != {right}")
        self.left = left
        self.right = right


class InvalidInputError(TwinvError, ValueError):
    """Malformed text input or a value outside the configured bounds."""


class PreconditionError(TwinvError, ValueError):
    """An operation was called outside its stated domain."""


class NotDivisibleError(TwinvError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class InvariantViolation(TwinvError, AssertionError):
    """A runtime check of a theorem failed."""


class UniquenessViolation(InvariantViolation):
    """The bar-invariant basis is not uniquely determined by the triangular system."""


class SpecializationDegenerate(TwinvError, ArithmeticError):
    """Every specialization point tried hit a degenerate pivot or denominator."""

    def __init__(self, attempts: int, prime: int):
        super().__init__(f"specialization degenerate after {attempts} attempts modulo {prime}")
        self.attempts = attempts
        self.prime = prime
