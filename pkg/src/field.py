#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Field Module

FieldSpec names the exact ground field of an algebra: the rationals, or a
prime field F_p. Arithmetic itself is delegated to sympy's polynomial
domains (QQ and GF(p)), whose elements are what every vector in the lab
holds.

Example:
    >>> F = FieldSpec.rationals()
    >>> F.format(F.parse("3/4") + F.one)
    '7/4'
    >>> F101 = FieldSpec.from_descriptor("Fp:101")
    >>> F101.format(F101.convert(-1))
    '100'
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple, Union

import numpy as np
from sympy import Integer, Rational, isprime
from sympy.polys.domains import GF, QQ

from .constants import RANDOM_COEFF_BOUND
from .errors import FieldGuardError

RATIONALS = "rationals"
PRIME = "prime-field"

Scalar = Union[int, str, Rational]


@lru_cache(maxsize=None)
def _domain(kind: str, characteristic: int):
    if kind == RATIONALS:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """
    An exact ground field.

    Attributes:
        kind: "rationals" or "prime-field"
        characteristic: 0 for the rationals, a prime p otherwise
    """

    kind: str = RATIONALS
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == PRIME:
            if not isprime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # =========================================================================
    # CONSTRUCTORS
    # =========================================================================

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS, 0)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(PRIME, int(p))

    @classmethod
    def from_descriptor(cls, text: str) -> "FieldSpec":
        """Parse "Q" or "Fp:<prime>"."""
        text = text.strip()
        if text in ("Q", "QQ"):
            return cls.rationals()
        if text.startswith("Fp:"):
            try:
                return cls.prime_field(int(text[3:]))
            except ValueError as exc:
                raise ValueError(f"bad field descriptor {text!r}: {exc}") from exc
        raise ValueError(f"bad field descriptor {text!r} (expected Q or Fp:<prime>)")

    @property
    def descriptor(self) -> str:
        return "Q" if self.kind == RATIONALS else f"Fp:{self.characteristic}"

    # =========================================================================
    # ARITHMETIC
    # =========================================================================

    @property
    def domain(self):
        """The sympy domain whose elements represent this field."""
        return _domain(self.kind, self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME

    def convert(self, value: Scalar):
        """Map an int, a rational literal or a sympy Rational into the field."""
        if isinstance(value, str):
            value = Rational(value.strip())
        K = self.domain
        if isinstance(value, (int, np.integer)):
            return K.convert(int(value))
        value = Rational(value)
        if self.kind == RATIONALS:
            return K.from_sympy(value)
        num, den = K.convert(int(value.p)), K.convert(int(value.q))
        if not den:
            raise ZeroDivisionError(f"{value} has no image in F_{self.characteristic}")
        return num / den

    def coerce(self, value):
        """convert() for literals; domain elements pass through unchanged."""
        if isinstance(value, (int, str, np.integer, Rational)):
            return self.convert(value)
        return value

    def parse(self, text: str):
        return self.convert(text)

    def to_rational(self, a) -> Rational:
        """Canonical sympy number of an element (residues in 0..p-1 for F_p)."""
        if self.kind == RATIONALS:
            return self.domain.to_sympy(a)
        return Integer(int(a) % self.characteristic)

    def format(self, a) -> str:
        return str(self.to_rational(a))

    def vector(self, values: Sequence[Scalar]) -> Tuple:
        return tuple(self.convert(v) for v in values)

    def zeros(self, n: int) -> Tuple:
        return (self.zero,) * n

    def unit_vector(self, n: int, i: int) -> Tuple:
        return tuple(self.one if k == i else self.zero for k in range(n))

    def random_scalar(self, rng: np.random.Generator, bound: int = RANDOM_COEFF_BOUND):
        """A seeded integer coefficient in [-bound, bound]."""
        return self.convert(int(rng.integers(-bound, bound + 1)))

    def random_vector(self, rng: np.random.Generator, n: int,
                      bound: int = RANDOM_COEFF_BOUND) -> Tuple:
        return tuple(self.convert(int(c)) for c in rng.integers(-bound, bound + 1, size=n))

    # =========================================================================
    # GUARDS
    # =========================================================================

    def guard(self, dim: int) -> None:
        """The trace-form radical needs characteristic 0 or p > dim."""
        if self.is_prime and self.characteristic <= dim:
            raise FieldGuardError(
                f"F_{self.characteristic} is too small for an algebra of dimension {dim}"
            )

    def __str__(self) -> str:
        return "Q" if self.kind == RATIONALS else f"F_{self.characteristic}"


RATIONAL_FIELD = FieldSpec.rationals()
