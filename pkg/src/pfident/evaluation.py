"""Evaluation records produced by every identity check."""

from __future__ import annotations

from dataclasses import dataclass

from .fields import DEFAULT_TOLERANCE, Scalar, Tolerance, ensure_finite, is_exact, near_equal

__all__ = ["IdentityEvaluation", "residual_between", "evaluate", "merge_evaluations"]


@dataclass(frozen=True)
class IdentityEvaluation:
    """Both sides of one identity at one sample point, with a verdict.

    Over an exact field `passed` means lhs == rhs and the residual is 0.0
    on success; over an approximate field `passed` is `near_equal` at the
    supplied tolerance and the residual is the scale-free gap
    |lhs - rhs| / (max(|lhs|, |rhs|) + 1).
    """

    identity_name: str
    lhs: Scalar
    rhs: Scalar
    residual: float
    passed: bool


def residual_between(lhs: Scalar, rhs: Scalar) -> float:
    gap = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs)) + 1
    return float(gap / scale)


def evaluate(
    name: str, lhs: Scalar, rhs: Scalar, tol: Tolerance = DEFAULT_TOLERANCE
) -> IdentityEvaluation:
    """Compare the two sides in whichever field they live in."""
    if is_exact(lhs) and is_exact(rhs):
        passed = lhs == rhs
        residual = 0.0 if passed else residual_between(lhs, rhs)
        return IdentityEvaluation(name, lhs, rhs, residual, passed)
    zl = complex(ensure_finite(lhs))
    zr = complex(ensure_finite(rhs))
    return IdentityEvaluation(name, zl, zr, residual_between(zl, zr), near_equal(zl, zr, tol))


def merge_evaluations(name: str, parts: list[IdentityEvaluation]) -> IdentityEvaluation:
    """Fold multi-part checks into one record.

    Keeps the sides of the first failing part (or the worst-residual part
    when all pass) so the exact-field invariant `passed iff lhs == rhs`
    survives the merge.
    """
    if not parts:
        raise ValueError("nothing to merge")
    failed = [p for p in parts if not p.passed]
    pick = failed[0] if failed else max(parts, key=lambda p: p.residual)
    return IdentityEvaluation(
        name,
        pick.lhs,
        pick.rhs,
        max(p.residual for p in parts),
        not failed,
    )
