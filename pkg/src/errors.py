#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Errors Module

One exception hierarchy for the whole lab. Validators report mathematical
failures as data; the errors below are raised when an operation cannot
produce a value at all (a bad input shape, a zero ring, a non-split
semisimple quotient, malformed text).
"""

from typing import Optional


class AlgebraError(Exception):
    """Base class for every error raised by the lab."""


class DimensionMismatchError(AlgebraError, ValueError):
    """Vectors, matrices or modules of incompatible sizes."""


class FieldGuardError(AlgebraError):
    """Prime field too small for the trace-form radical (needs p > dim)."""


class NotIdempotentError(AlgebraError, ValueError):
    """An element expected to be idempotent is not."""


class NotAnIdealError(AlgebraError, ValueError):
    """A subspace used as an ideal is not closed under two-sided multiplication."""


class ZeroRingError(AlgebraError):
    """A construction would produce the zero ring, which is not an algebra value here."""


class NonSplitError(AlgebraError):
    """The semisimple quotient has a block that is not a full matrix algebra over the field."""


class ClosureError(AlgebraError):
    """Entry-wise products of a matrix pattern leave the declared entries."""


class InclusionError(AlgebraError):
    """A map that should be injective is not."""


class DimensionCapError(AlgebraError):
    """A construction exceeds the configured dimension cap."""


class SpecValidationError(AlgebraError):
    """A ring spec failed validation; the report names every failed condition."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class ParseError(AlgebraError, ValueError):
    """Malformed spec text, annotated with its position."""

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, col {column}"
        super().__init__(f"{where}: {message}")


class NotASubmoduleError(AlgebraError, ValueError):
    """A subspace used as a submodule is not stable under the action."""
