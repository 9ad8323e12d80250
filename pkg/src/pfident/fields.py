"""Scalar regimes and the near-equality contract shared by every checker.

Two regimes are supported: exact arithmetic on `fractions.Fraction`
(arbitrary precision, always normalized to positive denominator and
gcd 1), and approximate arithmetic on builtin `complex` doubles.
`near_equal` is the single comparison point: exact operands compare
exactly, approximate operands compare under a mixed relative/absolute
metric that stays meaningful both for huge products of many factors and
for tiny near-cancellations.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Scalar",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "is_exact",
    "ensure_finite",
    "near_equal",
    "to_complex",
]

Scalar = Fraction | int | float | complex


@dataclass(frozen=True)
class Tolerance:
    """Near-equality thresholds for approximate scalars.

    Exact scalars ignore it.  The acceptance metric is
    |a - b| <= max(abs_floor, rel * max(1, |a|, |b|)).
    """

    rel: float = 1e-7
    abs_floor: float = 1e-12

    def __post_init__(self) -> None:
        if not self.rel > 0:
            raise ValueError("rel must be positive")
        if self.abs_floor < 0:
            raise ValueError("abs_floor must be nonnegative")


DEFAULT_TOLERANCE = Tolerance()


def is_exact(value: Scalar) -> bool:
    """True for scalars carrying exact arithmetic (int or Fraction)."""
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def to_complex(value: Scalar) -> complex:
    return complex(value)


def ensure_finite(value: Scalar) -> Scalar:
    """Return `value`, raising if any floating component is NaN or infinite."""
    if is_exact(value):
        return value
    if not cmath.isfinite(complex(value)):
        raise ValueError("non-finite operand")
    return value


def near_equal(a: Scalar, b: Scalar, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Field equality: exact scalars compare exactly, approximate within `tol`.

    Operands must come from the same regime; mixing an exact and an
    approximate scalar is a usage error.
    """
    a_exact = is_exact(a)
    if a_exact != is_exact(b):
        raise TypeError("operands from different scalar fields")
    if a_exact:
        return a == b
    za = complex(ensure_finite(a))
    zb = complex(ensure_finite(b))
    bound = max(tol.abs_floor, tol.rel * max(1.0, abs(za), abs(zb)))
    return abs(za - zb) <= bound
