"""Odd kernels satisfying the three-term Riemann relation.

Three kernels are provided: the identity map (rational case), the
hyperbolic sine combination e^x - e^{-x} (trigonometric case), and the
Weierstrass sigma function on the lattice spanned by 1 and tau (elliptic
case), built from the Jacobi theta_1 sine series.  Any kernel may carry a
gauge factor, i.e. the substitution [x] -> exp(a*x^2 + b) * [c*x]; both
defining properties (oddness and the Riemann relation) survive gauging,
so every identity in the toolkit is insensitive to it.

The sigma normalization is pinned by sigma(z) = z + O(z^5) near zero:
sigma(z) = exp(eta z^2) theta1(pi z) / (pi theta1'(0)) with
eta = -(pi^2/6) theta1'''(0)/theta1'(0).  Arguments are reduced into the
fundamental cell before the theta series is summed; the quasi-periodicity
multiplier is accumulated in log space so large arguments either evaluate
cleanly or fail loudly instead of overflowing silently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from functools import lru_cache

from .fields import Scalar

__all__ = [
    "DEFAULT_TAU",
    "DEFAULT_SERIES_TOL",
    "EllipticParams",
    "GaugeParams",
    "BracketFunction",
    "rational_bracket",
    "trigonometric_bracket",
    "elliptic_bracket",
    "theta1",
    "sigma",
    "bracket_eval",
    "riemann_residual",
]

DEFAULT_TAU = complex(0.3, 1.1)
DEFAULT_SERIES_TOL = 1e-12
_MAX_TERMS = 200
_EXP_LIMIT = 700.0  # Re of an exp argument beyond which doubles overflow

BRACKET_KINDS = ("rational", "trigonometric", "elliptic")


@dataclass(frozen=True)
class EllipticParams:
    """Lattice ratio tau (Im tau >= 0.05) and the theta truncation threshold."""

    tau: complex = DEFAULT_TAU
    series_tol: float = DEFAULT_SERIES_TOL

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", complex(self.tau))
        if self.tau.imag < 0.05:
            raise ValueError("Im(tau) must be at least 0.05")
        if not 0 < self.series_tol <= 1e-6:
            raise ValueError("series_tol must lie in (0, 1e-6]")


@dataclass(frozen=True)
class GaugeParams:
    """Parameters of the gauge substitution [x] -> exp(a x^2 + b) [c x]."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        if self.c == 0:
            raise ValueError("gauge scale c must be nonzero")


@dataclass(frozen=True)
class BracketFunction:
    """One of the three kernels, optionally gauge-transformed."""

    kind: str
    elliptic: EllipticParams | None = None
    gauge: GaugeParams | None = None

    def __post_init__(self) -> None:
        if self.kind not in BRACKET_KINDS:
            raise ValueError(f"unknown bracket kind {self.kind!r}")
        if self.kind == "elliptic" and self.elliptic is None:
            object.__setattr__(self, "elliptic", EllipticParams())
        if self.kind != "elliptic" and self.elliptic is not None:
            raise ValueError("elliptic parameters only apply to the elliptic kind")

    @property
    def is_exact(self) -> bool:
        """True when evaluation keeps exact rational inputs exact."""
        return self.kind == "rational" and self.gauge is None

    def gauged(self, a: complex, b: complex, c: complex) -> "BracketFunction":
        return replace(self, gauge=GaugeParams(a, b, c))


def rational_bracket() -> BracketFunction:
    return BracketFunction("rational")


def trigonometric_bracket() -> BracketFunction:
    return BracketFunction("trigonometric")


def elliptic_bracket(
    tau: complex = DEFAULT_TAU, series_tol: float = DEFAULT_SERIES_TOL
) -> BracketFunction:
    return BracketFunction("elliptic", EllipticParams(complex(tau), series_tol))


def _theta1_series(v: complex, tau: complex, tol: float) -> complex:
    """theta_1 sine series at an argument already reduced near the origin.

    Terms are 2 (-1)^n exp(i pi tau (n + 1/2)^2) sin((2n+1) v); summation
    stops once the next term's modulus drops below tol * (|partial| + 1).
    """
    total = 2.0 * cmath.exp(0.25j * math.pi * tau) * cmath.sin(v)
    sign = -1.0
    for n in range(1, _MAX_TERMS):
        term = 2.0 * sign * cmath.exp(1j * math.pi * tau * (n + 0.5) ** 2) * cmath.sin((2 * n + 1) * v)
        if abs(term) < tol * (abs(total) + 1.0):
            return total
        total += term
        sign = -sign
    raise ValueError("theta series did not converge within 200 terms")


def _reduce_theta_argument(v: complex, tau: complex) -> tuple[complex, int, complex]:
    """Split v = v0 + m pi + n pi tau with v0 in the centered cell.

    Returns (v0, sign, log_scale) with theta1(v) = sign * exp(log_scale) * theta1(v0),
    using theta1(v0 + m pi + n pi tau) = (-1)^{m+n} q^{-n^2} e^{-2 i n v0} theta1(v0).
    """
    n = round(v.imag / (math.pi * tau.imag))
    v1 = v - n * math.pi * tau
    m = round(v1.real / math.pi)
    v0 = v1 - m * math.pi
    sign = -1 if (m + n) % 2 else 1
    log_scale = -1j * math.pi * tau * (n * n) - 2j * n * v0
    return v0, sign, log_scale


def theta1(v: complex, params: EllipticParams | None = None) -> complex:
    """Jacobi theta_1 at argument v with nome q = exp(i pi tau)."""
    p = params if params is not None else EllipticParams()
    v0, sign, log_scale = _reduce_theta_argument(complex(v), p.tau)
    if log_scale.real > _EXP_LIMIT:
        raise OverflowError("argument too large")
    return sign * cmath.exp(log_scale) * _theta1_series(v0, p.tau, p.series_tol)


@lru_cache(maxsize=None)
def _sigma_constants(params: EllipticParams) -> tuple[complex, complex]:
    """(theta1'(0), eta) from the term-wise differentiated series."""
    tau, tol = params.tau, params.series_tol
    d1 = 2.0 * cmath.exp(0.25j * math.pi * tau)
    d3 = -d1
    sign = -1.0
    for n in range(1, _MAX_TERMS):
        base = 2.0 * sign * cmath.exp(1j * math.pi * tau * (n + 0.5) ** 2)
        t1 = (2 * n + 1) * base
        t3 = -((2 * n + 1) ** 3) * base
        if abs(t1) < tol * (abs(d1) + 1.0) and abs(t3) < tol * (abs(d3) + 1.0):
            break
        d1 += t1
        d3 += t3
        sign = -sign
    else:
        raise ValueError("theta series did not converge within 200 terms")
    eta = -(math.pi**2 / 6.0) * (d3 / d1)
    return d1, eta


def sigma(z: complex, params: EllipticParams | None = None) -> complex:
    """Weierstrass sigma on the lattice Z + tau Z, with sigma(z) ~ z near 0."""
    p = params if params is not None else EllipticParams()
    zz = complex(z)
    d1, eta = _sigma_constants(p)
    v0, sign, log_scale = _reduce_theta_argument(math.pi * zz, p.tau)
    total_log = eta * zz * zz + log_scale
    if total_log.real > _EXP_LIMIT:
        raise OverflowError("argument too large")
    return sign * cmath.exp(total_log) * _theta1_series(v0, p.tau, p.series_tol) / (math.pi * d1)


def _base_eval(f: BracketFunction, x: Scalar) -> Scalar:
    if f.kind == "rational":
        return x
    if f.kind == "trigonometric":
        z = complex(x)
        if abs(z.real) > _EXP_LIMIT:
            raise OverflowError("argument too large")
        return cmath.exp(z) - cmath.exp(-z)
    return sigma(complex(x), f.elliptic)


def bracket_eval(f: BracketFunction, x: Scalar) -> Scalar:
    """Evaluate the kernel at x.

    The plain rational kernel maps exact inputs to exact outputs; every
    other combination returns a complex double.  With a gauge attached the
    result is exp(a x^2 + b) * [c x].
    """
    g = f.gauge
    if g is None:
        return _base_eval(f, x)
    zx = complex(x)
    value = _base_eval(f, g.c * zx)
    exponent = g.a * zx * zx + g.b
    if exponent.real > _EXP_LIMIT:
        raise OverflowError("argument too large")
    return cmath.exp(exponent) * complex(value)


def riemann_residual(f: BracketFunction, x: Scalar, y: Scalar, u: Scalar, v: Scalar) -> float:
    """Scale-free defect of the three-term relation at (x, y, u, v).

    Returns |T1 - T2 + T3| / (max(|T1|, |T2|, |T3|) + 1) where each T is a
    product of four kernel values; it vanishes identically for a valid
    kernel, so the value doubles as a certification metric for any kernel
    or gauge configuration.
    """

    def pair(p: Scalar, q: Scalar) -> Scalar:
        return bracket_eval(f, p + q) * bracket_eval(f, p - q)

    t1 = pair(x, y) * pair(u, v)
    t2 = pair(x, u) * pair(y, v)
    t3 = pair(x, v) * pair(y, u)
    numerator = abs(t1 - t2 + t3)
    denominator = max(abs(t1), abs(t2), abs(t3)) + 1
    return float(numerator / denominator)
