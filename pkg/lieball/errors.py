"""Exception hierarchy shared by every lieball module."""

from __future__ import annotations

from typing import Optional


class LieBallError(RuntimeError):
    code = "LIEBALL_ERROR"


class DivisionByZero(LieBallError):
    code = "DIVISION_BY_ZERO"


class FieldMismatch(LieBallError):
    code = "FIELD_MISMATCH"


class ParseError(LieBallError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position

    def located(self, where: str) -> "ParseError":
        """The same error, prefixed with where it happened."""
        wrapped = ParseError(f"{where}: {self}")
        wrapped.position = self.position
        return wrapped


class DimensionMismatch(LieBallError):
    code = "DIMENSION_MISMATCH"


class ClosureBudgetExceeded(LieBallError):
    code = "CLOSURE_BUDGET_EXCEEDED"


class BadParams(LieBallError, ValueError):
    code = "BAD_PARAMS"


class AnalysisBudgetExceeded(LieBallError):
    code = "ANALYSIS_BUDGET_EXCEEDED"


class NotIrreducible(LieBallError):
    code = "NOT_IRREDUCIBLE"


class NotSymmetric(LieBallError):
    code = "NOT_SYMMETRIC"


class BadStructure(LieBallError):
    code = "BAD_STRUCTURE"


class NotInM(LieBallError):
    code = "NOT_IN_M"


class DomainViolation(LieBallError):
    code = "DOMAIN_VIOLATION"


class NotNegativePlane(LieBallError):
    code = "NOT_NEGATIVE_PLANE"


class NotInLieBall(LieBallError):
    code = "NOT_IN_LIEBALL"


class NotLightlike(LieBallError):
    code = "NOT_LIGHTLIKE"
