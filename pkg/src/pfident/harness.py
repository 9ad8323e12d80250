"""Trial execution, aggregation, and report serialization.

Each trial owns an independent RNG stream derived by hashing
(seed, identity, parameters, trial index), so a run is reproducible
regardless of execution order: a parallel run and a serial run see the
same points and produce identical residuals.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .evaluation import IdentityEvaluation
from .fields import DEFAULT_TOLERANCE, Tolerance
from .identities import REGISTRY, validate_params
from .sampling import SamplerConfig, bracket_for, sample_point

__all__ = ["TrialReport", "trial_rng", "run_trial", "run_suite", "emit_report"]


@dataclass
class TrialReport:
    """Aggregate of all trials for one identity under one configuration."""

    identity_name: str
    regime: str
    parameters: dict[str, int]
    trials_run: int
    trials_passed: int
    max_residual: float
    seed: int
    elapsed_seconds: float


def trial_rng(seed: int, name: str, params: Mapping[str, int], index: int) -> random.Random:
    """Independent, order-insensitive RNG stream for one trial."""
    key = f"{seed}|{name}|{sorted(params.items())}|{index}"
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def run_trial(
    cfg: SamplerConfig,
    name: str,
    params: Mapping[str, int] | None = None,
    index: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """Sample one pole-free point for `name` and evaluate the identity there."""
    resolved = validate_params(name, params or {})
    spec = REGISTRY[name]
    rng = trial_rng(cfg.seed, name, resolved, index)
    bracket = bracket_for(cfg) if spec.uses_bracket else None
    point = sample_point(cfg, name, resolved, rng, bracket=bracket)
    return spec.run(point, resolved, bracket, tol)


def run_suite(
    cfg: SamplerConfig,
    selection: Sequence[str],
    trials: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    params: Mapping[str, int] | None = None,
    max_workers: int | None = None,
) -> list[TrialReport]:
    """Run `trials` independent trials for every selected identity.

    Results are deterministic in (seed, selection, params) and independent
    of `max_workers`; parallel execution only reorders the work.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    plan: list[tuple[str, dict[str, int]]] = []
    for name in selection:
        resolved = validate_params(name, params or {})
        spec = REGISTRY[name]
        if cfg.regime not in spec.regimes:
            raise ValueError(
                f"identity {name!r} does not admit regime {cfg.regime!r}; "
                f"admissible: {', '.join(spec.regimes)}"
            )
        plan.append((name, resolved))

    reports: list[TrialReport] = []
    for name, resolved in plan:
        start = time.perf_counter()
        indices = range(trials)
        if max_workers and max_workers > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                evaluations = list(
                    pool.map(lambda i: run_trial(cfg, name, resolved, i, tol), indices)
                )
        else:
            evaluations = [run_trial(cfg, name, resolved, i, tol) for i in indices]
        elapsed = time.perf_counter() - start
        reports.append(
            TrialReport(
                identity_name=name,
                regime=cfg.regime,
                parameters=dict(resolved),
                trials_run=trials,
                trials_passed=sum(1 for e in evaluations if e.passed),
                max_residual=max((e.residual for e in evaluations), default=0.0),
                seed=cfg.seed,
                elapsed_seconds=elapsed,
            )
        )
    return reports


def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _report_dict(report: TrialReport) -> dict:
    return {
        "identity_name": report.identity_name,
        "regime": report.regime,
        "parameters": _jsonable(report.parameters),
        "trials_run": report.trials_run,
        "trials_passed": report.trials_passed,
        "max_residual": report.max_residual,
        "seed": report.seed,
        "elapsed_seconds": report.elapsed_seconds,
    }


def emit_report(
    reports: Iterable[TrialReport],
    format: str = "text",
    config: Mapping | None = None,
) -> bytes:
    """Serialize reports as an aligned text table or a schema-versioned JSON object."""
    reports = list(reports)
    if format == "json":
        payload = {
            "schema_version": "1",
            "config": _jsonable(dict(config) if config else {}),
            "reports": [_report_dict(r) for r in reports],
        }
        return (json.dumps(payload) + "\n").encode("utf-8")
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    header = f"{'identity':<28}{'regime':<15}{'params':<34}{'passed':>7}/{'run':<6}{'max residual':>14}  {'seconds':>8}"
    lines = [header, "-" * len(header)]
    for r in reports:
        params = ",".join(f"{k}={v}" for k, v in r.parameters.items()) or "-"
        lines.append(
            f"{r.identity_name:<28}{r.regime:<15}{params:<34}"
            f"{r.trials_passed:>7}/{r.trials_run:<6}{r.max_residual:>14.3e}  {r.elapsed_seconds:>8.3f}"
        )
    total_run = sum(r.trials_run for r in reports)
    total_passed = sum(r.trials_passed for r in reports)
    lines.append("-" * len(header))
    lines.append(f"total: {total_passed}/{total_run} trials passed")
    return ("\n".join(lines) + "\n").encode("utf-8")
