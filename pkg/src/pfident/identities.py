"""One checker per identity: build both sides, compare, report.

Every checker assembles its left side (a determinant or Pfaffian of
structured entries) and its right side (a closed product form) from the
same primitive evaluators -- bracket_eval, schur, determinant, pfaffian --
so a bug in a primitive cannot silently cancel between the two sides; the
primitives themselves are guarded by independent oracles in their own
modules.  Exact inputs give exact verdicts, approximate inputs are judged
by the field tolerance.

Entry conventions: Pfaffian entries are built for i < j as written, e.g.
(x_j - x_i)/(x_j + x_i); the antisymmetric reflection fills the lower
triangle.  Classical displays of the Schur Pfaffian and its trigonometric
variant sometimes print x_i - x_i in the entry; skew-symmetry forces the
x_j - x_i reading used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .brackets import BracketFunction, bracket_eval
from .evaluation import IdentityEvaluation, evaluate, merge_evaluations, residual_between
from .fields import DEFAULT_TOLERANCE, Scalar, Tolerance
from .linalg import SkewMatrix, check_desnanot_jacobi, determinant, pfaffian
from .symfunc import (
    check_bidet_relation,
    d_poly,
    difference_product,
    epsilon_pq,
    schur,
    staircase,
    vandermonde_pq,
    w_matrix,
)

__all__ = [
    "PoleError",
    "check_frobenius",
    "check_cauchy",
    "check_schur_pfaffian",
    "check_main",
    "check_key_identity",
    "check_rational_schur_det",
    "check_rational_schur_pf",
    "check_general_det",
    "check_general_pf",
    "check_specialization_consistency",
    "check_trig_det",
    "check_trig_pf",
    "check_okada_det",
    "check_okada_pf",
    "check_det1",
    "check_det2",
    "check_frobenius_limit_degeneration",
    "specialization_split",
    "IdentitySpec",
    "REGISTRY",
    "validate_params",
]


class PoleError(ValueError):
    """A denominator of the identity vanished at the sample point."""


def _nonzero(value: Scalar) -> Scalar:
    if value == 0:
        raise PoleError("pole at sample")
    return value


def _product(values) -> Scalar:
    total: Scalar = 1
    for v in values:
        total = total * v
    return total


def check_cauchy(x: Sequence[Scalar], y: Sequence[Scalar], tol: Tolerance = DEFAULT_TOLERANCE) -> IdentityEvaluation:
    """det(1/(x_i + y_j)) against its closed product form."""
    xs, ys = tuple(x), tuple(y)
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    n = len(xs)
    sums = [[_nonzero(xs[i] + ys[j]) for j in range(n)] for i in range(n)]
    lhs = determinant([[1 / sums[i][j] for j in range(n)] for i in range(n)])
    rhs = (
        difference_product(xs)
        * difference_product(ys)
        / _product(sums[i][j] for i in range(n) for j in range(n))
    )
    return evaluate("cauchy", lhs, rhs, tol)


def check_frobenius(
    f: BracketFunction,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    z: Scalar,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """det([z+x_i+y_j]/([z][x_i+y_j])) against its closed product form."""
    xs, ys = tuple(x), tuple(y)
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    n = len(xs)
    ev = lambda u: bracket_eval(f, u)
    bz = _nonzero(ev(z))
    pair = [[_nonzero(ev(xs[i] + ys[j])) for j in range(n)] for i in range(n)]
    lhs = determinant(
        [[ev(z + xs[i] + ys[j]) / (bz * pair[i][j]) for j in range(n)] for i in range(n)]
    )
    diffs = _product(
        ev(xs[j] - xs[i]) * ev(ys[j] - ys[i]) for i in range(n) for j in range(i + 1, n)
    )
    rhs = (
        diffs
        / _product(pair[i][j] for i in range(n) for j in range(n))
        * ev(z + sum(xs) + sum(ys))
        / bz
    )
    return evaluate("frobenius", lhs, rhs, tol)


def check_schur_pfaffian(x: Sequence[Scalar], tol: Tolerance = DEFAULT_TOLERANCE) -> IdentityEvaluation:
    """Pf((x_j - x_i)/(x_j + x_i)) against prod_{i<j} (x_j - x_i)/(x_j + x_i)."""
    xs = tuple(x)
    if len(xs) % 2:
        raise ValueError("need an even number of variables")
    n = len(xs)
    ratio = {
        (i, j): (xs[j] - xs[i]) / _nonzero(xs[j] + xs[i])
        for i in range(n)
        for j in range(i + 1, n)
    }
    lhs = pfaffian(SkewMatrix.from_upper(n, lambda i, j: ratio[(i, j)]), tol)
    rhs = _product(ratio.values())
    return evaluate("schur_pfaffian", lhs, rhs, tol)


def check_main(
    f: BracketFunction,
    x: Sequence[Scalar],
    z: Scalar,
    w: Scalar,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """The two-shift Pfaffian identity, for any kernel (the elliptic headline case)."""
    xs = tuple(x)
    if len(xs) % 2:
        raise ValueError("need an even number of variables")
    n = len(xs)
    ev = lambda u: bracket_eval(f, u)
    bz = _nonzero(ev(z))
    bw = _nonzero(ev(w))
    ratio = {}
    for i in range(n):
        for j in range(i + 1, n):
            ratio[(i, j)] = ev(xs[j] - xs[i]) / _nonzero(ev(xs[j] + xs[i]))
    entry = lambda i, j: (
        ratio[(i, j)] * ev(z + xs[i] + xs[j]) / bz * ev(w + xs[i] + xs[j]) / bw
    )
    lhs = pfaffian(SkewMatrix.from_upper(n, entry), tol)
    total = sum(xs)
    rhs = _product(ratio.values()) * ev(z + total) / bz * ev(w + total) / bw
    return evaluate("main", lhs, rhs, tol)


def check_key_identity(
    f: BracketFunction,
    a: Scalar,
    b: Scalar,
    c: Scalar,
    d: Scalar,
    s: Scalar,
    z: Scalar,
    w: Scalar,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """The four-variable, three-term combination behind the Pfaffian induction.

    With s = 0 this is exactly the 4-point case of the main Pfaffian
    identity; nonzero s absorbs the sum of all remaining variables.
    """
    ev = lambda u: bracket_eval(f, u)
    term1 = (
        ev(b - a) * ev(d - c) * ev(c + a) * ev(d + a) * ev(c + b) * ev(d + b)
        * ev(z + a + b + s) * ev(z + c + d + s) * ev(w + a + b + s) * ev(w + c + d + s)
    )
    term2 = (
        ev(c - a) * ev(d - b) * ev(b + a) * ev(d + a) * ev(c + b) * ev(d + c)
        * ev(z + a + c + s) * ev(z + b + d + s) * ev(w + a + c + s) * ev(w + b + d + s)
    )
    term3 = (
        ev(d - a) * ev(c - b) * ev(b + a) * ev(c + a) * ev(d + b) * ev(d + c)
        * ev(z + a + d + s) * ev(z + b + c + s) * ev(w + a + d + s) * ev(w + b + c + s)
    )
    lhs = term1 - term2 + term3
    rhs = (
        ev(b - a) * ev(c - a) * ev(d - a) * ev(c - b) * ev(d - b) * ev(d - c)
        * ev(z + a + b + c + d + s) * ev(z + s) * ev(w + a + b + c + d + s) * ev(w + s)
    )
    return evaluate("key_identity", lhs, rhs, tol)


def check_rational_schur_det(
    k: int,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    zv: Sequence[Scalar],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """Staircase-Schur deformation of the Cauchy determinant (k = 0 recovers it)."""
    xs, ys, zs = tuple(x), tuple(y), tuple(zv)
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    if not 0 <= k <= len(zs):
        raise ValueError("need 0 <= k <= len(zv)")
    n = len(xs)
    delta = staircase(k)
    s_z = schur(delta, zs)
    if s_z == 0:
        raise PoleError("pole at sample")
    sums = [[_nonzero(xs[i] + ys[j]) for j in range(n)] for i in range(n)]
    lhs = determinant(
        [
            [schur(delta, (xs[i], ys[j]) + zs) / (sums[i][j] * s_z) for j in range(n)]
            for i in range(n)
        ]
    )
    rhs = (
        difference_product(xs)
        * difference_product(ys)
        / _product(sums[i][j] for i in range(n) for j in range(n))
        * schur(delta, xs + ys + zs)
        / s_z
    )
    return evaluate("rational_schur_det", lhs, rhs, tol)


def check_rational_schur_pf(
    k: int,
    l: int,
    x: Sequence[Scalar],
    zv: Sequence[Scalar],
    wv: Sequence[Scalar],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """Staircase-Schur deformation of the Schur Pfaffian (k = l = 0 recovers it)."""
    xs, zs, ws = tuple(x), tuple(zv), tuple(wv)
    if len(xs) % 2:
        raise ValueError("need an even number of variables")
    if not 0 <= k <= len(zs):
        raise ValueError("need 0 <= k <= len(zv)")
    if not 0 <= l <= len(ws):
        raise ValueError("need 0 <= l <= len(wv)")
    n = len(xs)
    dk, dl = staircase(k), staircase(l)
    s_z = schur(dk, zs)
    s_w = schur(dl, ws)
    if s_z == 0 or s_w == 0:
        raise PoleError("pole at sample")
    ratio = {
        (i, j): (xs[j] - xs[i]) / _nonzero(xs[j] + xs[i])
        for i in range(n)
        for j in range(i + 1, n)
    }
    entry = lambda i, j: (
        ratio[(i, j)]
        * schur(dk, (xs[i], xs[j]) + zs) / s_z
        * schur(dl, (xs[i], xs[j]) + ws) / s_w
    )
    lhs = pfaffian(SkewMatrix.from_upper(n, entry), tol)
    rhs = _product(ratio.values()) * schur(dk, xs + zs) / s_z * schur(dl, xs + ws) / s_w
    return evaluate("rational_schur_pf", lhs, rhs, tol)


def check_general_det(
    p: int,
    q: int,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    zv: Sequence[Scalar],
    c: Sequence[Scalar],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """Determinant of generalized-Vandermonde ratios against its product form."""
    xs, ys, as_, bs, zs, cs = tuple(x), tuple(y), tuple(a), tuple(b), tuple(zv), tuple(c)
    n = len(xs)
    if not (len(ys) == len(as_) == len(bs) == n):
        raise ValueError("x, y, a, b must have the same length")
    if len(zs) != p + q or len(cs) != p + q:
        raise ValueError("zv and c must have length p+q")
    entry = lambda i, j: determinant(
        vandermonde_pq(p + 1, q + 1, (xs[i], ys[j]) + zs, (as_[i], bs[j]) + cs)
    ) / _nonzero(ys[j] - xs[i])
    lhs = determinant([[entry(i, j) for j in range(n)] for i in range(n)])
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    core = determinant(vandermonde_pq(p, q, zs, cs))
    big = determinant(vandermonde_pq(n + p, n + q, xs + ys + zs, as_ + bs + cs))
    rhs = (
        sign
        * core ** (n - 1)
        * big
        / _product(_nonzero(ys[j] - xs[i]) for i in range(n) for j in range(n))
    )
    return evaluate("general_det", lhs, rhs, tol)


def check_general_pf(
    p: int,
    q: int,
    r: int,
    s: int,
    x: Sequence[Scalar],
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    zv: Sequence[Scalar],
    c: Sequence[Scalar],
    wv: Sequence[Scalar],
    d: Sequence[Scalar],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """Pfaffian of paired generalized-Vandermonde ratios against its product form."""
    xs, as_, bs = tuple(x), tuple(a), tuple(b)
    zs, cs, ws, ds = tuple(zv), tuple(c), tuple(wv), tuple(d)
    if len(xs) % 2:
        raise ValueError("need an even number of variables")
    if not (len(as_) == len(bs) == len(xs)):
        raise ValueError("x, a, b must have the same length")
    if len(zs) != p + q or len(cs) != p + q:
        raise ValueError("zv and c must have length p+q")
    if len(ws) != r + s or len(ds) != r + s:
        raise ValueError("wv and d must have length r+s")
    two_n = len(xs)
    half = two_n // 2
    entry = lambda i, j: (
        determinant(vandermonde_pq(p + 1, q + 1, (xs[i], xs[j]) + zs, (as_[i], as_[j]) + cs))
        * determinant(vandermonde_pq(r + 1, s + 1, (xs[i], xs[j]) + ws, (bs[i], bs[j]) + ds))
        / _nonzero(xs[j] - xs[i])
    )
    lhs = pfaffian(SkewMatrix.from_upper(two_n, entry), tol)
    core_z = determinant(vandermonde_pq(p, q, zs, cs))
    core_w = determinant(vandermonde_pq(r, s, ws, ds))
    rhs = (
        core_z ** (half - 1)
        * core_w ** (half - 1)
        * determinant(vandermonde_pq(half + p, half + q, xs + zs, as_ + cs))
        * determinant(vandermonde_pq(half + r, half + s, xs + ws, bs + ds))
        / _nonzero(difference_product(xs))
    )
    return evaluate("general_pf", lhs, rhs, tol)


def specialization_split(k: int, m: int) -> tuple[int, int]:
    """(p, q) with p + q = m whose staircase bookkeeping lands on delta(k)."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    if (m - k) % 2 == 0:
        return (m - k) // 2, (m + k) // 2
    return (m + k + 1) // 2, (m - k - 1) // 2


def check_specialization_consistency(
    k: int,
    m: int,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    zv: Sequence[Scalar],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """Squares-substitution bridge between the Vandermonde and Schur determinant forms.

    Runs the generalized-Vandermonde checker on (x_i^2, y_j^2, z_s^2) with
    multipliers (x_i, y_j, z_s) and the staircase-Schur checker on the raw
    points, then verifies that the two right sides agree after the sign and
    Vandermonde-factor bookkeeping.  Passing requires all three parts.
    """
    xs, ys, zs = tuple(x), tuple(y), tuple(zv)
    if len(zs) != m:
        raise ValueError("zv must have length m")
    n = len(xs)
    p, q = specialization_split(k, m)
    ev_rational = check_rational_schur_det(k, xs, ys, zs, tol)
    ev_general = check_general_det(
        p,
        q,
        tuple(v * v for v in xs),
        tuple(v * v for v in ys),
        xs,
        ys,
        tuple(v * v for v in zs),
        zs,
        tol,
    )
    bridge = (
        epsilon_pq(p + 1, q + 1) ** n
        * schur(staircase(k), zs) ** n
        * difference_product(zs) ** n
        * _product(zs[t] - xs[i] for t in range(m) for i in range(n))
        * _product(zs[t] - ys[j] for t in range(m) for j in range(n))
    )
    ev_bridge = evaluate("specialization_consistency", ev_general.rhs, bridge * ev_rational.rhs, tol)
    return merge_evaluations(
        "specialization_consistency", [ev_rational, ev_general, ev_bridge]
    )


def check_trig_det(
    x: Sequence[Scalar], y: Sequence[Scalar], z: Scalar, tol: Tolerance = DEFAULT_TOLERANCE
) -> IdentityEvaluation:
    """det((1 - z x_i y_j)/(1 - x_i y_j)) against its closed product form."""
    xs, ys = tuple(x), tuple(y)
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    n = len(xs)
    dens = [[_nonzero(1 - xs[i] * ys[j]) for j in range(n)] for i in range(n)]
    lhs = determinant(
        [[(1 - z * xs[i] * ys[j]) / dens[i][j] for j in range(n)] for i in range(n)]
    )
    rhs = (
        (1 - z) ** (n - 1)
        * (1 - z * _product(xs) * _product(ys))
        * difference_product(xs)
        * difference_product(ys)
        / _product(dens[i][j] for i in range(n) for j in range(n))
    )
    return evaluate("trig_det", lhs, rhs, tol)


def check_trig_pf(
    x: Sequence[Scalar], z: Scalar, w: Scalar, tol: Tolerance = DEFAULT_TOLERANCE
) -> IdentityEvaluation:
    """Pf((x_j-x_i)(1-z x_i x_j)(1-w x_i x_j)/(1-x_i x_j)) against its product form."""
    xs = tuple(x)
    if len(xs) % 2:
        raise ValueError("need an even number of variables")
    n = len(xs)
    half = n // 2
    dens = {
        (i, j): _nonzero(1 - xs[i] * xs[j]) for i in range(n) for j in range(i + 1, n)
    }
    entry = lambda i, j: (
        (xs[j] - xs[i]) * (1 - z * xs[i] * xs[j]) * (1 - w * xs[i] * xs[j]) / dens[(i, j)]
    )
    lhs = pfaffian(SkewMatrix.from_upper(n, entry), tol)
    total = _product(xs)
    rhs = (
        (1 - z) ** (half - 1)
        * (1 - w) ** (half - 1)
        * (1 - z * total)
        * (1 - w * total)
        * _product(
            (xs[j] - xs[i]) / dens[(i, j)] for i in range(n) for j in range(i + 1, n)
        )
    )
    return evaluate("trig_pf", lhs, rhs, tol)


def check_okada_det(
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """det((1 - a_i b_j)/(1 - x_i y_j)) against a single 2n x 2n determinant."""
    xs, ys, as_, bs = tuple(x), tuple(y), tuple(a), tuple(b)
    n = len(xs)
    if not (len(ys) == len(as_) == len(bs) == n):
        raise ValueError("x, y, a, b must have the same length")
    dens = [[_nonzero(1 - xs[i] * ys[j]) for j in range(n)] for i in range(n)]
    lhs = determinant(
        [[(1 - as_[i] * bs[j]) / dens[i][j] for j in range(n)] for i in range(n)]
    )
    block = [
        [as_[i] * xs[i] ** (n - 1 - col) for col in range(n)]
        + [xs[i] ** (n - 1 - col) for col in range(n)]
        for i in range(n)
    ] + [
        [ys[j] ** col for col in range(n)] + [bs[j] * ys[j] ** col for col in range(n)]
        for j in range(n)
    ]
    sign = -1 if (n * (n + 1) // 2) % 2 else 1
    rhs = sign * determinant(block) / _product(dens[i][j] for i in range(n) for j in range(n))
    return evaluate("okada_det", lhs, rhs, tol)


def check_okada_pf(
    x: Sequence[Scalar],
    a: Sequence[Scalar],
    b: Sequence[Scalar],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> IdentityEvaluation:
    """Pfaffian of paired det W^2 ratios against det W^{2n} products."""
    xs, as_, bs = tuple(x), tuple(a), tuple(b)
    n = len(xs)
    if n % 2:
        raise ValueError("need an even number of variables")
    if not (len(as_) == len(bs) == n):
        raise ValueError("x, a, b must have the same length")
    dens = {
        (i, j): _nonzero((xs[j] - xs[i]) * (1 - xs[i] * xs[j]))
        for i in range(n)
        for j in range(i + 1, n)
    }
    entry = lambda i, j: (
        determinant(w_matrix(2, (xs[i], xs[j]), (as_[i], as_[j])))
        * determinant(w_matrix(2, (xs[i], xs[j]), (bs[i], bs[j])))
        / dens[(i, j)]
    )
    lhs = pfaffian(SkewMatrix.from_upper(n, entry), tol)
    rhs = (
        determinant(w_matrix(n, xs, as_))
        * determinant(w_matrix(n, xs, bs))
        / _product(dens.values())
    )
    return evaluate("okada_pf", lhs, rhs, tol)


def check_det1(
    x: Sequence[Scalar], y: Sequence[Scalar], t: Scalar, tol: Tolerance = DEFAULT_TOLERANCE
) -> IdentityEvaluation:
    """The 2n x 2n two-block determinant evaluation with parameter t."""
    xs, ys = tuple(x), tuple(y)
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    n = len(xs)
    block = [
        [t * xs[i] ** (n - col) for col in range(n)]
        + [xs[i] ** (n - 1 - col) for col in range(n)]
        for i in range(n)
    ] + [
        [ys[j] ** col for col in range(n)] + [t * ys[j] ** (col + 1) for col in range(n)]
        for j in range(n)
    ]
    lhs = determinant(block)
    sign = -1 if (n * (n + 1) // 2) % 2 else 1
    rhs = (
        sign
        * (1 - t * t) ** (n - 1)
        * (1 - t * t * _product(xs) * _product(ys))
        * difference_product(xs)
        * difference_product(ys)
    )
    return evaluate("det1", lhs, rhs, tol)


def check_det2(x: Sequence[Scalar], t: Scalar, tol: Tolerance = DEFAULT_TOLERANCE) -> IdentityEvaluation:
    """Both closed evaluations of det W^n: constant multipliers and t*x_i multipliers."""
    xs = tuple(x)
    n = len(xs)
    if n < 1:
        raise ValueError("need at least one variable")
    vand = difference_product(xs)
    first = evaluate(
        "det2",
        determinant(w_matrix(n, xs, (t,) * n)),
        d_poly(n, t) * vand,
        tol,
    )
    parity = 1 if n % 2 == 0 else -1
    second = evaluate(
        "det2",
        determinant(w_matrix(n, xs, tuple(t * v for v in xs))),
        d_poly(n - 1, t) * (1 - parity * t * _product(xs)) * vand,
        tol,
    )
    return merge_evaluations("det2", [first, second])


def check_frobenius_limit_degeneration(
    x: Sequence[Scalar], y: Sequence[Scalar], z_magnitudes: Sequence[Scalar]
) -> list[float]:
    """Residuals between the shifted determinant at z = Z and the Cauchy limit.

    Exact rational arithmetic throughout; the residuals scale as O(1/Z),
    which gives a numerical stand-in for the z -> infinity degeneration.
    """
    xs, ys = tuple(x), tuple(y)
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    n = len(xs)
    sums = [[_nonzero(xs[i] + ys[j]) for j in range(n)] for i in range(n)]
    base = determinant([[1 / sums[i][j] for j in range(n)] for i in range(n)])
    residuals = []
    for big_z in z_magnitudes:
        shifted = determinant(
            [
                [(big_z + xs[i] + ys[j]) / (big_z * sums[i][j]) for j in range(n)]
                for i in range(n)
            ]
        )
        residuals.append(residual_between(shifted, base))
    return residuals


# --- registry ---------------------------------------------------------------

_LIMIT_MAGNITUDES = (10**3, 10**4, 10**5, 10**6)
_LIMIT_DRIFT = 0.01

RunnerType = Callable[[Mapping, Mapping, BracketFunction | None, Tolerance], IdentityEvaluation]


@dataclass(frozen=True)
class IdentitySpec:
    """Descriptor the harness uses to sample for and run one checker."""

    name: str
    regimes: tuple[str, ...]
    parameters: tuple[str, ...]
    defaults: Mapping[str, int]
    uses_bracket: bool
    run: RunnerType


_RATIONAL_ONLY = ("rational",)
_ALL_REGIMES = ("rational", "trigonometric", "elliptic")


def _run_riemann(point, params, bracket, tol):
    t1, t2, t3 = _riemann_terms(bracket, point["x"], point["y"], point["u"], point["v"])
    return evaluate("riemann", t1 + t3, t2, tol)


def _riemann_terms(f, x, y, u, v):
    pair = lambda pp, qq: bracket_eval(f, pp + qq) * bracket_eval(f, pp - qq)
    return pair(x, y) * pair(u, v), pair(x, u) * pair(y, v), pair(x, v) * pair(y, u)


def _run_frobenius_limit(point, params, bracket, tol):
    residuals = check_frobenius_limit_degeneration(point["x"], point["y"], _LIMIT_MAGNITUDES)
    products = [res * mag for res, mag in zip(residuals, _LIMIT_MAGNITUDES)]
    decreasing = all(b < a for a, b in zip(residuals, residuals[1:]))
    if products[0] == 0.0:
        drift = 0.0 if all(p == 0.0 for p in products) else float("inf")
    else:
        drift = max(abs(p / products[0] - 1.0) for p in products)
    passed = decreasing and drift <= _LIMIT_DRIFT
    return IdentityEvaluation("frobenius_limit", products[0], products[-1], drift, passed)


def _registry_specs() -> list[IdentitySpec]:
    return [
        IdentitySpec(
            "riemann", _ALL_REGIMES, (), {}, True, _run_riemann
        ),
        IdentitySpec(
            "frobenius", _ALL_REGIMES, ("n",), {"n": 2}, True,
            lambda pt, pr, f, tol: check_frobenius(f, pt["x"], pt["y"], pt["z"], tol),
        ),
        IdentitySpec(
            "cauchy", _RATIONAL_ONLY, ("n",), {"n": 2}, False,
            lambda pt, pr, f, tol: check_cauchy(pt["x"], pt["y"], tol),
        ),
        IdentitySpec(
            "schur_pfaffian", _RATIONAL_ONLY, ("n",), {"n": 2}, False,
            lambda pt, pr, f, tol: check_schur_pfaffian(pt["x"], tol),
        ),
        IdentitySpec(
            "main", _ALL_REGIMES, ("n",), {"n": 2}, True,
            lambda pt, pr, f, tol: check_main(f, pt["x"], pt["z"], pt["w"], tol),
        ),
        IdentitySpec(
            "key_identity", _ALL_REGIMES, (), {}, True,
            lambda pt, pr, f, tol: check_key_identity(
                f, pt["a"], pt["b"], pt["c"], pt["d"], pt["s"], pt["z"], pt["w"], tol
            ),
        ),
        IdentitySpec(
            "desnanot_jacobi", _RATIONAL_ONLY, ("n",), {"n": 3}, False,
            lambda pt, pr, f, tol: check_desnanot_jacobi(pt["matrix"], tol),
        ),
        IdentitySpec(
            "rational_schur_det", _RATIONAL_ONLY, ("k", "m", "n"), {"k": 1, "m": 2, "n": 2}, False,
            lambda pt, pr, f, tol: check_rational_schur_det(pr["k"], pt["x"], pt["y"], pt["zv"], tol),
        ),
        IdentitySpec(
            "rational_schur_pf",
            _RATIONAL_ONLY,
            ("k", "l", "m", "mprime", "n"),
            {"k": 1, "l": 1, "m": 2, "mprime": 2, "n": 1},
            False,
            lambda pt, pr, f, tol: check_rational_schur_pf(
                pr["k"], pr["l"], pt["x"], pt["zv"], pt["wv"], tol
            ),
        ),
        IdentitySpec(
            "general_det", _RATIONAL_ONLY, ("p", "q", "n"), {"p": 1, "q": 1, "n": 2}, False,
            lambda pt, pr, f, tol: check_general_det(
                pr["p"], pr["q"], pt["x"], pt["y"], pt["a"], pt["b"], pt["zv"], pt["c"], tol
            ),
        ),
        IdentitySpec(
            "general_pf",
            _RATIONAL_ONLY,
            ("p", "q", "r", "s", "n"),
            {"p": 1, "q": 0, "r": 0, "s": 1, "n": 1},
            False,
            lambda pt, pr, f, tol: check_general_pf(
                pr["p"], pr["q"], pr["r"], pr["s"],
                pt["x"], pt["a"], pt["b"], pt["zv"], pt["c"], pt["wv"], pt["d"], tol,
            ),
        ),
        IdentitySpec(
            "specialization_consistency",
            _RATIONAL_ONLY,
            ("k", "m", "n"),
            {"k": 1, "m": 2, "n": 1},
            False,
            lambda pt, pr, f, tol: check_specialization_consistency(
                pr["k"], pr["m"], pt["x"], pt["y"], pt["zv"], tol
            ),
        ),
        IdentitySpec(
            "bidet_relation", _RATIONAL_ONLY, ("p", "q"), {"p": 2, "q": 1}, False,
            lambda pt, pr, f, tol: check_bidet_relation(pr["p"], pr["q"], pt["x"], tol),
        ),
        IdentitySpec(
            "trig_det", _RATIONAL_ONLY, ("n",), {"n": 2}, False,
            lambda pt, pr, f, tol: check_trig_det(pt["x"], pt["y"], pt["z"], tol),
        ),
        IdentitySpec(
            "trig_pf", _RATIONAL_ONLY, ("n",), {"n": 2}, False,
            lambda pt, pr, f, tol: check_trig_pf(pt["x"], pt["z"], pt["w"], tol),
        ),
        IdentitySpec(
            "okada_det", _RATIONAL_ONLY, ("n",), {"n": 2}, False,
            lambda pt, pr, f, tol: check_okada_det(pt["x"], pt["y"], pt["a"], pt["b"], tol),
        ),
        IdentitySpec(
            "okada_pf", _RATIONAL_ONLY, ("n",), {"n": 2}, False,
            lambda pt, pr, f, tol: check_okada_pf(pt["x"], pt["a"], pt["b"], tol),
        ),
        IdentitySpec(
            "det1", _RATIONAL_ONLY, ("n",), {"n": 2}, False,
            lambda pt, pr, f, tol: check_det1(pt["x"], pt["y"], pt["t"], tol),
        ),
        IdentitySpec(
            "det2", _RATIONAL_ONLY, ("n",), {"n": 3}, False,
            lambda pt, pr, f, tol: check_det2(pt["x"], pt["t"], tol),
        ),
        IdentitySpec(
            "frobenius_limit", _RATIONAL_ONLY, ("n",), {"n": 2}, False, _run_frobenius_limit
        ),
    ]


REGISTRY: dict[str, IdentitySpec] = {spec.name: spec for spec in _registry_specs()}


def validate_params(name: str, params: Mapping[str, int]) -> dict[str, int]:
    """Merge defaults with overrides and enforce per-identity constraints."""
    if name not in REGISTRY:
        raise ValueError(
            f"unknown identity {name!r}; valid names: {', '.join(REGISTRY)}"
        )
    spec = REGISTRY[name]
    merged = dict(spec.defaults)
    for key, value in params.items():
        if key in spec.parameters:
            merged[key] = int(value)
    for key, value in merged.items():
        if value < 0:
            raise ValueError(f"parameter {key} must be nonnegative")
    if "n" in merged and merged["n"] < 1:
        raise ValueError("parameter n must be positive")
    if name == "desnanot_jacobi" and merged["n"] < 2:
        raise ValueError("desnanot_jacobi needs dimension >= 4 (n >= 2)")
    if name in ("rational_schur_det", "specialization_consistency") and merged["k"] > merged["m"]:
        raise ValueError("need k <= m")
    if name == "rational_schur_pf":
        if merged["k"] > merged["m"]:
            raise ValueError("need k <= m")
        if merged["l"] > merged["mprime"]:
            raise ValueError("need l <= mprime")
    return merged
