"""Pole-free sample points for every registered identity.

Exact sampling draws Fractions with numerators in a configurable integer
range and denominators in 1..5, which keeps bignum growth modest even in
8x8 Pfaffians.  Approximate regimes draw uniformly from a disk: radius 1
for the trigonometric kernel, radius 0.4 for the elliptic one so that
sums of up to five coordinates stay inside a single period cell.  Each
candidate point is rejected until every denominator factor of the target
identity is nonzero (exact) or has modulus at least `pole_threshold`
(approximate); the rejection loop is capped so an impossible configuration
fails loudly instead of spinning.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .brackets import (
    DEFAULT_TAU,
    BracketFunction,
    bracket_eval,
    elliptic_bracket,
    rational_bracket,
    trigonometric_bracket,
)
from .fields import Scalar
from .linalg import SkewMatrix, determinant
from .symfunc import schur, staircase, vandermonde_pq

__all__ = [
    "SamplerConfig",
    "SamplerStarvationError",
    "REGIMES",
    "normalize_regime",
    "bracket_for",
    "sample_point",
]

REGIMES = ("rational", "trigonometric", "elliptic")
# canonical names normalize to themselves so normalization is idempotent
_REGIME_ALIASES = {"trig": "trigonometric", **{name: name for name in REGIMES}}

_MAX_ATTEMPTS = 1000
_DENOMINATOR_RANGE = (1, 5)
_COORD_RADIUS = {"trigonometric": 1.0, "elliptic": 0.4}
_RIEMANN_RADIUS = {"trigonometric": 5.0, "elliptic": 1.0}


class SamplerStarvationError(RuntimeError):
    """The rejection loop exhausted its attempt budget; config is too tight."""


def normalize_regime(token: str) -> str:
    try:
        return _REGIME_ALIASES[token]
    except KeyError:
        raise ValueError(f"unknown regime {token!r}; expected one of rational, trig, elliptic")


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    regime: str = "rational"
    pole_threshold: float = 1e-3
    integer_range: tuple[int, int] = (-20, 20)
    elliptic_tau: complex = DEFAULT_TAU

    def __post_init__(self) -> None:
        object.__setattr__(self, "regime", normalize_regime(self.regime))
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if not self.pole_threshold > 0:
            raise ValueError("pole_threshold must be positive")
        lo, hi = self.integer_range
        if lo > hi:
            raise ValueError("integer_range must be nonempty")
        if complex(self.elliptic_tau).imag < 0.05:
            raise ValueError("Im(elliptic_tau) must be at least 0.05")


def bracket_for(cfg: SamplerConfig) -> BracketFunction:
    if cfg.regime == "rational":
        return rational_bracket()
    if cfg.regime == "trigonometric":
        return trigonometric_bracket()
    return elliptic_bracket(cfg.elliptic_tau)


def _draw_exact(cfg: SamplerConfig, rng: random.Random) -> Fraction:
    return Fraction(
        rng.randint(*cfg.integer_range), rng.randint(*_DENOMINATOR_RANGE)
    )


def _draw_disk(rng: random.Random, radius: float) -> complex:
    r = radius * math.sqrt(rng.random())
    angle = 2.0 * math.pi * rng.random()
    return complex(r * math.cos(angle), r * math.sin(angle))


def _draw(cfg: SamplerConfig, rng: random.Random, radius: float | None = None) -> Scalar:
    if cfg.regime == "rational":
        return _draw_exact(cfg, rng)
    return _draw_disk(rng, radius if radius is not None else _COORD_RADIUS[cfg.regime])


def _vector(cfg, rng, count, radius=None) -> tuple[Scalar, ...]:
    return tuple(_draw(cfg, rng, radius) for _ in range(count))


def _distinct(values) -> bool:
    return len(set(values)) == len(values)


def _bracket_clear(cfg, bracket, arguments) -> bool:
    """All bracket values at the given arguments are usable denominators."""
    for u in arguments:
        value = bracket_eval(bracket, u)
        if value == 0:
            return False
        if cfg.regime != "rational" and abs(complex(value)) < cfg.pole_threshold:
            return False
    return True


def _build_riemann(cfg, params, rng, bracket):
    radius = None if cfg.regime == "rational" else _RIEMANN_RADIUS[cfg.regime]
    return {key: _draw(cfg, rng, radius) for key in ("x", "y", "u", "v")}


def _build_cauchy(cfg, params, rng, bracket):
    n = params["n"]
    x, y = _vector(cfg, rng, n), _vector(cfg, rng, n)
    if any(xi + yj == 0 for xi in x for yj in y):
        return None
    return {"x": x, "y": y}


def _build_frobenius(cfg, params, rng, bracket):
    n = params["n"]
    x, y, z = _vector(cfg, rng, n), _vector(cfg, rng, n), _draw(cfg, rng)
    denominators = [z] + [xi + yj for xi in x for yj in y]
    if not _bracket_clear(cfg, bracket, denominators):
        return None
    return {"x": x, "y": y, "z": z}


def _build_schur_pfaffian(cfg, params, rng, bracket):
    x = _vector(cfg, rng, 2 * params["n"])
    if any(x[i] + x[j] == 0 for i in range(len(x)) for j in range(i + 1, len(x))):
        return None
    return {"x": x}


def _build_main(cfg, params, rng, bracket):
    x = _vector(cfg, rng, 2 * params["n"])
    z, w = _draw(cfg, rng), _draw(cfg, rng)
    denominators = [z, w] + [x[i] + x[j] for i in range(len(x)) for j in range(i + 1, len(x))]
    if not _bracket_clear(cfg, bracket, denominators):
        return None
    return {"x": x, "z": z, "w": w}


def _build_key(cfg, params, rng, bracket):
    return {key: _draw(cfg, rng) for key in ("a", "b", "c", "d", "s", "z", "w")}


def _build_desnanot(cfg, params, rng, bracket):
    dim = 2 * params["n"]
    values = [_draw_exact(cfg, rng) for _ in range(dim * (dim - 1) // 2)]
    iterator = iter(values)
    return {"matrix": SkewMatrix.from_upper(dim, lambda i, j: next(iterator))}


def _build_rational_schur_det(cfg, params, rng, bracket):
    k, m, n = params["k"], params["m"], params["n"]
    points = _vector(cfg, rng, 2 * n + m)
    if not _distinct(points):
        return None
    x, y, zv = points[:n], points[n : 2 * n], points[2 * n :]
    if any(xi + yj == 0 for xi in x for yj in y):
        return None
    if schur(staircase(k), zv) == 0:
        return None
    return {"x": x, "y": y, "zv": zv}


def _build_rational_schur_pf(cfg, params, rng, bracket):
    k, l, m, mp, n = (params[key] for key in ("k", "l", "m", "mprime", "n"))
    x = _vector(cfg, rng, 2 * n)
    zv = _vector(cfg, rng, m)
    wv = _vector(cfg, rng, mp)
    if not (_distinct(x + zv) and _distinct(x + wv)):
        return None
    if any(x[i] + x[j] == 0 for i in range(2 * n) for j in range(i + 1, 2 * n)):
        return None
    if schur(staircase(k), zv) == 0 or schur(staircase(l), wv) == 0:
        return None
    return {"x": x, "zv": zv, "wv": wv}


def _build_general_det(cfg, params, rng, bracket):
    p, q, n = params["p"], params["q"], params["n"]
    x, y = _vector(cfg, rng, n), _vector(cfg, rng, n)
    if any(yj == xi for xi in x for yj in y):
        return None
    a, b = _vector(cfg, rng, n), _vector(cfg, rng, n)
    zv, c = _vector(cfg, rng, p + q), _vector(cfg, rng, p + q)
    if determinant(vandermonde_pq(p, q, zv, c)) == 0:
        return None
    return {"x": x, "y": y, "a": a, "b": b, "zv": zv, "c": c}


def _build_general_pf(cfg, params, rng, bracket):
    p, q, r, s, n = (params[key] for key in ("p", "q", "r", "s", "n"))
    x = _vector(cfg, rng, 2 * n)
    if not _distinct(x):
        return None
    a, b = _vector(cfg, rng, 2 * n), _vector(cfg, rng, 2 * n)
    zv, c = _vector(cfg, rng, p + q), _vector(cfg, rng, p + q)
    wv, d = _vector(cfg, rng, r + s), _vector(cfg, rng, r + s)
    if determinant(vandermonde_pq(p, q, zv, c)) == 0:
        return None
    if determinant(vandermonde_pq(r, s, wv, d)) == 0:
        return None
    return {"x": x, "a": a, "b": b, "zv": zv, "c": c, "wv": wv, "d": d}


def _build_specialization(cfg, params, rng, bracket):
    k, m, n = params["k"], params["m"], params["n"]
    points = _vector(cfg, rng, 2 * n + m)
    if not _distinct(points):
        return None
    x, y, zv = points[:n], points[n : 2 * n], points[2 * n :]
    if any(xi + yj == 0 for xi in x for yj in y):
        return None
    if schur(staircase(k), zv) == 0:
        return None
    return {"x": x, "y": y, "zv": zv}


def _build_trig_det(cfg, params, rng, bracket):
    n = params["n"]
    x, y, z = _vector(cfg, rng, n), _vector(cfg, rng, n), _draw(cfg, rng)
    if any(xi * yj == 1 for xi in x for yj in y):
        return None
    return {"x": x, "y": y, "z": z}


def _build_trig_pf(cfg, params, rng, bracket):
    x = _vector(cfg, rng, 2 * params["n"])
    if any(x[i] * x[j] == 1 for i in range(len(x)) for j in range(i + 1, len(x))):
        return None
    return {"x": x, "z": _draw(cfg, rng), "w": _draw(cfg, rng)}


def _build_okada_det(cfg, params, rng, bracket):
    n = params["n"]
    x, y = _vector(cfg, rng, n), _vector(cfg, rng, n)
    if any(xi * yj == 1 for xi in x for yj in y):
        return None
    return {"x": x, "y": y, "a": _vector(cfg, rng, n), "b": _vector(cfg, rng, n)}


def _build_okada_pf(cfg, params, rng, bracket):
    two_n = 2 * params["n"]
    x = _vector(cfg, rng, two_n)
    if not _distinct(x):
        return None
    if any(x[i] * x[j] == 1 for i in range(two_n) for j in range(i + 1, two_n)):
        return None
    return {"x": x, "a": _vector(cfg, rng, two_n), "b": _vector(cfg, rng, two_n)}


def _build_det1(cfg, params, rng, bracket):
    n = params["n"]
    return {"x": _vector(cfg, rng, n), "y": _vector(cfg, rng, n), "t": _draw(cfg, rng)}


def _build_det2(cfg, params, rng, bracket):
    return {"x": _vector(cfg, rng, params["n"]), "t": _draw(cfg, rng)}


def _build_bidet(cfg, params, rng, bracket):
    x = _vector(cfg, rng, params["p"] + params["q"])
    if not _distinct(x):
        return None
    return {"x": x}


def _build_frobenius_limit(cfg, params, rng, bracket):
    n = params["n"]
    x, y = _vector(cfg, rng, n), _vector(cfg, rng, n)
    if any(xi + yj == 0 for xi in x for yj in y):
        return None
    return {"x": x, "y": y}


_BUILDERS = {
    "riemann": _build_riemann,
    "frobenius": _build_frobenius,
    "cauchy": _build_cauchy,
    "schur_pfaffian": _build_schur_pfaffian,
    "main": _build_main,
    "key_identity": _build_key,
    "desnanot_jacobi": _build_desnanot,
    "rational_schur_det": _build_rational_schur_det,
    "rational_schur_pf": _build_rational_schur_pf,
    "general_det": _build_general_det,
    "general_pf": _build_general_pf,
    "specialization_consistency": _build_specialization,
    "bidet_relation": _build_bidet,
    "trig_det": _build_trig_det,
    "trig_pf": _build_trig_pf,
    "okada_det": _build_okada_det,
    "okada_pf": _build_okada_pf,
    "det1": _build_det1,
    "det2": _build_det2,
    "frobenius_limit": _build_frobenius_limit,
}


def sample_point(
    cfg: SamplerConfig,
    name: str,
    params: Mapping[str, int],
    rng: random.Random,
    bracket: BracketFunction | None = None,
) -> dict:
    """Draw one point satisfying every pole precondition of the identity.

    Distinctness of coordinates is enforced wherever a Schur or Vandermonde
    evaluation needs it.  Rejection is capped at 1000 candidate draws.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}; valid names: {', '.join(_BUILDERS)}")
    if bracket is None:
        bracket = bracket_for(cfg)
    for _ in range(_MAX_ATTEMPTS):
        point = builder(cfg, params, rng, bracket)
        if point is not None:
            return point
    raise SamplerStarvationError("sampler starvation")
