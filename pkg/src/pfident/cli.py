"""Command-line entry point.

Exit codes: 0 when every trial passed, 1 when any trial failed, 2 on a
configuration or usage error (argparse reports usage errors with the same
code).
"""

from __future__ import annotations

import argparse
import sys

from .fields import Tolerance
from .harness import emit_report, run_suite
from .identities import REGISTRY
from .sampling import SamplerConfig, SamplerStarvationError, normalize_regime

__all__ = ["build_parser", "main"]

_PARAM_FLAGS = ("n", "k", "l", "p", "q", "r", "s", "m", "mprime")


def _seed_type(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _tau_type(text: str) -> complex:
    try:
        re_part, im_part = (float(piece) for piece in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("tau must be given as 're,im'")
    return complex(re_part, im_part)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description=(
            "Verify determinant and Pfaffian identities at random pole-free "
            "sample points, exactly over rationals or numerically over "
            "trigonometric/elliptic kernels."
        ),
    )
    parser.add_argument(
        "--identity",
        default="all",
        help="identity name or 'all' (valid names: %s)" % ", ".join(REGISTRY),
    )
    parser.add_argument("--regime", default="rational", choices=["rational", "trig", "elliptic"])
    for flag in _PARAM_FLAGS:
        parser.add_argument(f"--{flag}", type=int, default=None, help=f"identity parameter {flag}")
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=_seed_type, default=0)
    parser.add_argument("--tolerance", type=float, default=1e-7, help="relative near-equality tolerance")
    parser.add_argument("--tau", type=_tau_type, default=complex(0.3, 1.1), help="lattice ratio 're,im'")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--out", default=None, help="write the report here instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        regime = normalize_regime(args.regime)
        cfg = SamplerConfig(seed=args.seed, regime=regime, elliptic_tau=args.tau)
        # tightening the relative tolerance below the default floor tightens both
        tol = Tolerance(rel=args.tolerance, abs_floor=min(1e-12, args.tolerance))
        overrides = {
            flag: getattr(args, flag) for flag in _PARAM_FLAGS if getattr(args, flag) is not None
        }
        if args.identity == "all":
            selection = [name for name, spec in REGISTRY.items() if regime in spec.regimes]
        else:
            if args.identity not in REGISTRY:
                raise ValueError(
                    f"unknown identity {args.identity!r}; valid names: {', '.join(REGISTRY)}"
                )
            selection = [args.identity]
        if args.trials < 1:
            raise ValueError("trials must be positive")
        reports = run_suite(cfg, selection, args.trials, tol, params=overrides)
    except (ValueError, SamplerStarvationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    config_echo = {
        "seed": cfg.seed,
        "regime": cfg.regime,
        "pole_threshold": cfg.pole_threshold,
        "integer_range": list(cfg.integer_range),
        "elliptic_tau": cfg.elliptic_tau,
        "trials": args.trials,
        "tolerance_rel": tol.rel,
        "tolerance_abs_floor": tol.abs_floor,
        "selection": selection,
        "parameters": overrides,
    }
    payload = emit_report(reports, args.format, config_echo)
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
    return 0 if all(r.trials_passed == r.trials_run for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
