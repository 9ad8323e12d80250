import random
from fractions import Fraction

import pytest

from pfident.brackets import bracket_eval
from pfident.sampling import (
    SamplerConfig,
    SamplerStarvationError,
    bracket_for,
    normalize_regime,
    sample_point,
)


def rng_for(seed=0):
    return random.Random(seed)


def test_same_seed_same_point():
    cfg = SamplerConfig(seed=5, regime="rational")
    a = sample_point(cfg, "cauchy", {"n": 2}, rng_for(123))
    b = sample_point(cfg, "cauchy", {"n": 2}, rng_for(123))
    assert a == b


def test_cauchy_points_avoid_poles():
    cfg = SamplerConfig(regime="rational")
    rng = rng_for(7)
    for _ in range(50):
        point = sample_point(cfg, "cauchy", {"n": 2}, rng)
        assert all(xi + yj != 0 for xi in point["x"] for yj in point["y"])
        assert all(isinstance(v, Fraction) for v in point["x"] + point["y"])


def test_exact_draws_respect_ranges():
    cfg = SamplerConfig(regime="rational", integer_range=(-4, 4))
    rng = rng_for(11)
    for _ in range(100):
        point = sample_point(cfg, "key_identity", {}, rng)
        for value in point.values():
            # normalization can only shrink numerator and denominator
            assert -4 <= value.numerator <= 4
            assert 1 <= value.denominator <= 5


def test_elliptic_coordinates_inside_disk():
    cfg = SamplerConfig(regime="elliptic")
    rng = rng_for(13)
    bracket = bracket_for(cfg)
    for _ in range(25):
        point = sample_point(cfg, "main", {"n": 2}, rng)
        assert all(abs(v) <= 0.4 + 1e-12 for v in point["x"])
        assert abs(point["z"]) <= 0.4 + 1e-12
        # every denominator kernel value is clear of the pole threshold
        x = point["x"]
        for i in range(4):
            for j in range(i + 1, 4):
                assert abs(bracket_eval(bracket, x[i] + x[j])) >= cfg.pole_threshold


def test_riemann_uses_wider_disk_for_elliptic():
    cfg = SamplerConfig(regime="elliptic")
    rng = rng_for(17)
    beyond_identity_radius = 0
    for _ in range(100):
        point = sample_point(cfg, "riemann", {}, rng)
        assert all(abs(point[k]) <= 1.0 + 1e-12 for k in "xyuv")
        beyond_identity_radius += sum(1 for k in "xyuv" if abs(point[k]) > 0.4)
    assert beyond_identity_radius > 0


def test_schur_sampler_enforces_distinctness():
    cfg = SamplerConfig(regime="rational")
    rng = rng_for(19)
    for _ in range(25):
        point = sample_point(cfg, "rational_schur_det", {"k": 2, "m": 3, "n": 2}, rng)
        coords = point["x"] + point["y"] + point["zv"]
        assert len(set(coords)) == len(coords)


def test_desnanot_matrix_is_exact_skew():
    cfg = SamplerConfig(regime="rational")
    point = sample_point(cfg, "desnanot_jacobi", {"n": 3}, rng_for(23))
    matrix = point["matrix"]
    assert matrix.n == 6
    assert all(matrix.entry(j, i) == -matrix.entry(i, j) for i in range(6) for j in range(6))


def test_unknown_identity_rejected():
    cfg = SamplerConfig()
    with pytest.raises(ValueError, match="unknown identity"):
        sample_point(cfg, "nope", {}, rng_for(1))


def test_starvation_detected():
    # numerators stuck at zero make every x + y vanish
    cfg = SamplerConfig(regime="rational", integer_range=(0, 0))
    with pytest.raises(SamplerStarvationError, match="sampler starvation"):
        sample_point(cfg, "cauchy", {"n": 1}, rng_for(3))


def test_config_validation():
    with pytest.raises(ValueError):
        SamplerConfig(pole_threshold=0.0)
    with pytest.raises(ValueError):
        SamplerConfig(integer_range=(5, 1))
    with pytest.raises(ValueError):
        SamplerConfig(elliptic_tau=0.3 + 0.01j)
    with pytest.raises(ValueError):
        SamplerConfig(seed=-1)
    with pytest.raises(ValueError):
        SamplerConfig(regime="hyperbolic")


def test_normalize_regime():
    assert normalize_regime("trig") == "trigonometric"
    assert normalize_regime("trigonometric") == "trigonometric"
    assert normalize_regime("rational") == "rational"
    with pytest.raises(ValueError):
        normalize_regime("spherical")


def test_config_accepts_canonical_regime_names():
    # normalization must be idempotent so pre-normalized names round-trip
    assert SamplerConfig(regime="trigonometric").regime == "trigonometric"
    assert SamplerConfig(regime="trig").regime == "trigonometric"


def test_bracket_for_matches_regime():
    assert bracket_for(SamplerConfig(regime="rational")).kind == "rational"
    assert bracket_for(SamplerConfig(regime="trig")).kind == "trigonometric"
    elliptic = bracket_for(SamplerConfig(regime="elliptic", elliptic_tau=0.2 + 1.3j))
    assert elliptic.kind == "elliptic"
    assert elliptic.elliptic.tau == 0.2 + 1.3j
