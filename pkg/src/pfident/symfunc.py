"""Partitions, Schur functions, and the structured matrices they index.

The default Schur evaluator is the bialternant ratio of determinants,
which requires pairwise distinct points; the Jacobi-Trudi determinant in
complete homogeneous functions covers coincident points and doubles as an
independent oracle, alongside a brute-force semistandard tableau sum for
small shapes.  The module also builds the two structured matrix families
used by the determinant checkers (generalized Vandermonde V^{p,q} and the
palindromic W^n), the staircase bookkeeping delta_{p,q} / epsilon_{p,q},
and the even/odd polynomial d_n(t).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .evaluation import IdentityEvaluation, evaluate
from .fields import DEFAULT_TOLERANCE, Scalar, Tolerance, is_exact, near_equal
from .linalg import Matrix, determinant

__all__ = [
    "Partition",
    "CoincidentPointsError",
    "staircase",
    "delta_pq",
    "epsilon_pq",
    "complete_homogeneous",
    "schur",
    "schur_jacobi_trudi",
    "schur_tableau",
    "schur_oracle",
    "vandermonde_pq",
    "w_matrix",
    "d_poly",
    "difference_product",
    "check_bidet_relation",
]

_TABLEAU_CAP = 8


class CoincidentPointsError(ValueError):
    """Raised when the bialternant path is handed repeated points."""


class Partition:
    """Weakly decreasing positive parts; trailing zeros are stripped on input."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        packed = tuple(int(p) for p in parts)
        while packed and packed[-1] == 0:
            packed = packed[:-1]
        if any(p <= 0 for p in packed):
            raise ValueError("parts must be positive")
        if any(packed[i] < packed[i + 1] for i in range(len(packed) - 1)):
            raise ValueError("parts must be weakly decreasing")
        self.parts = packed

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"


def _as_partition(shape) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(shape)


def staircase(r: int) -> Partition:
    """The staircase (r, r-1, ..., 2, 1); r = 0 gives the empty partition."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return Partition(range(r, 0, -1))


def delta_pq(p: int, q: int) -> Partition:
    """Staircase attached to the (p, q) split: delta(p-q-1) if p > q else delta(q-p)."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return staircase(p - q - 1) if p > q else staircase(q - p)


def epsilon_pq(p: int, q: int) -> int:
    """Sign attached to the (p, q) split; +1 or -1."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if p > q:
        exponent = q * (2 * p - q - 1) // 2
    else:
        exponent = p * (p - 1) // 2
    return -1 if exponent % 2 else 1


def complete_homogeneous(max_degree: int, xs: Sequence[Scalar]) -> list[Scalar]:
    """[h_0, ..., h_max_degree] evaluated at xs by the one-variable recurrence."""
    h: list[Scalar] = [1] + [0] * max_degree
    for x in xs:
        for d in range(1, max_degree + 1):
            h[d] = h[d] + x * h[d - 1]
    return h


def schur(shape, xs: Sequence[Scalar]) -> Scalar:
    """Schur polynomial via the bialternant det(x_i^{l_j+n-j}) / det(x_i^{n-j}).

    Points must be pairwise distinct; callers that need coincident points
    use the Jacobi-Trudi path instead.
    """
    shape = _as_partition(shape)
    points = tuple(xs)
    n = len(points)
    if len(shape) > n:
        raise ValueError("partition has more parts than variables")
    if n == 0:
        return 1
    if len(set(points)) != n:
        raise CoincidentPointsError("coincident points")
    padded = list(shape.parts) + [0] * (n - len(shape))
    numerator = determinant([[x ** (padded[j] + n - 1 - j) for j in range(n)] for x in points])
    denominator = determinant([[x ** (n - 1 - j) for j in range(n)] for x in points])
    return numerator / denominator


def schur_jacobi_trudi(shape, xs: Sequence[Scalar]) -> Scalar:
    """Schur polynomial via det(h_{l_i - i + j}); works at coincident points."""
    shape = _as_partition(shape)
    points = tuple(xs)
    length = len(shape)
    if length == 0:
        return 1
    h = complete_homogeneous(shape[0] + length - 1, points)

    def h_at(degree: int) -> Scalar:
        return 0 if degree < 0 else h[degree]

    return determinant(
        [[h_at(shape[i] - (i + 1) + (j + 1)) for j in range(length)] for i in range(length)]
    )


def schur_tableau(shape, xs: Sequence[Scalar]) -> Scalar:
    """Schur polynomial as a sum over semistandard tableaux (|shape| <= 8)."""
    shape = _as_partition(shape)
    points = tuple(xs)
    if shape.size > _TABLEAU_CAP:
        raise ValueError("oracle size cap")
    n = len(points)
    if len(shape) == 0:
        return 1
    if len(shape) > n:
        return 0
    rows = shape.parts
    grid = [[0] * r for r in rows]
    total: Scalar = 0

    def place(r: int, c: int, acc: Scalar) -> None:
        nonlocal total
        if r == len(rows):
            total = total + acc
            return
        low = grid[r][c - 1] if c > 0 else 1
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        nr, nc = (r, c + 1) if c + 1 < rows[r] else (r + 1, 0)
        for value in range(low, n + 1):
            grid[r][c] = value
            place(nr, nc, acc * points[value - 1])
        grid[r][c] = 0

    place(0, 0, 1)
    return total


def schur_oracle(shape, xs: Sequence[Scalar]) -> Scalar:
    """Independent Schur value: Jacobi-Trudi, cross-checked by tableaux when small."""
    shape = _as_partition(shape)
    jt = schur_jacobi_trudi(shape, xs)
    if shape.size <= _TABLEAU_CAP:
        tab = schur_tableau(shape, xs)
        if is_exact(jt) and is_exact(tab):
            agree = jt == tab
        else:
            agree = near_equal(complex(jt), complex(tab))
        if not agree:
            raise ArithmeticError("Jacobi-Trudi and tableau evaluations disagree")
    return jt


def vandermonde_pq(p: int, q: int, xs: Sequence[Scalar], multipliers: Sequence[Scalar]) -> Matrix:
    """(p+q) x (p+q) matrix with rows (1, x, ..., x^{p-1}, a, a x, ..., a x^{q-1})."""
    points = tuple(xs)
    mults = tuple(multipliers)
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if len(points) != p + q or len(mults) != p + q:
        raise ValueError("need exactly p+q variables and multipliers")
    return Matrix(
        [
            [x**e for e in range(p)] + [a * x**e for e in range(q)]
            for x, a in zip(points, mults)
        ]
    )


def w_matrix(n: int, xs: Sequence[Scalar], multipliers: Sequence[Scalar]) -> Matrix:
    """n x n matrix with entries x_i^{j-1} + a_i x_i^{n-j}."""
    points = tuple(xs)
    mults = tuple(multipliers)
    if len(points) != n or len(mults) != n:
        raise ValueError("need exactly n variables and multipliers")
    return Matrix(
        [[x**j + a * x ** (n - 1 - j) for j in range(n)] for x, a in zip(points, mults)]
    )


def d_poly(n: int, t: Scalar) -> Scalar:
    """(1-t)^m (1+t)^m for n = 2m, times an extra (1+t) when n is odd."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    half, odd = divmod(n, 2)
    value = ((1 - t) * (1 + t)) ** half
    return value * (1 + t) if odd else value


def difference_product(xs: Sequence[Scalar]) -> Scalar:
    """prod_{i<j} (x_j - x_i); the empty product is 1."""
    points = tuple(xs)
    total: Scalar = 1
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            total = total * (points[j] - points[i])
    return total


def check_bidet_relation(
    p: int, q: int, xs: Sequence[Scalar], tol: Tolerance = DEFAULT_TOLERANCE
) -> IdentityEvaluation:
    """det V^{p,q}(x_1^2, ..., x_n^2; x_1, ..., x_n) against its Schur form.

    The right side is epsilon_{p,q} * s_{delta_{p,q}}(x) * prod_{i<j}(x_j - x_i);
    running this over a grid of (p, q) pins both bookkeeping conventions.
    """
    points = tuple(xs)
    if len(points) != p + q:
        raise ValueError("need exactly p+q points")
    if len(set(points)) != len(points):
        raise CoincidentPointsError("coincident points")
    lhs = determinant(vandermonde_pq(p, q, [x * x for x in points], points))
    rhs = epsilon_pq(p, q) * schur(delta_pq(p, q), points) * difference_product(points)
    return evaluate("bidet_relation", lhs, rhs, tol)
