"""Dense determinants and Pfaffians over exact rationals or complex doubles.

Exact matrices (int/Fraction entries) are reduced with integer Bareiss
elimination after clearing denominators, so results carry no rounding.
Approximate matrices use partial-pivot Gaussian elimination.  The Pfaffian
uses skew-symmetric block elimination in O(n^3); a recursive first-row
expansion serves as an independent oracle for cross-checks, and the
Pfaffian form of the Desnanot-Jacobi relation is exposed as a checker.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterable

from .evaluation import IdentityEvaluation, evaluate
from .fields import DEFAULT_TOLERANCE, Scalar, Tolerance, is_exact, near_equal

__all__ = [
    "Matrix",
    "SkewMatrix",
    "determinant",
    "pfaffian",
    "pfaffian_oracle",
    "pfaffian_minor",
    "check_desnanot_jacobi",
]

_ORACLE_CAP = 12


class Matrix:
    """Immutable dense matrix stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        packed = tuple(tuple(row) for row in rows)
        if packed:
            width = len(packed[0])
            if any(len(row) != width for row in packed):
                raise ValueError("rows must all have the same length")
        self.rows = packed

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({[list(row) for row in self.rows]!r})"


def _as_row_lists(matrix) -> list[list[Scalar]]:
    if isinstance(matrix, (Matrix, SkewMatrix)):
        return [list(row) for row in matrix.rows]
    return [list(row) for row in matrix]


def determinant(matrix) -> Scalar:
    """Determinant of a square matrix; the empty matrix has determinant 1."""
    rows = _as_row_lists(matrix)
    n = len(rows)
    if n == 0:
        return 1
    if any(len(row) != n for row in rows):
        raise ValueError("determinant requires a square matrix")
    if all(is_exact(x) for row in rows for x in row):
        return _determinant_exact(rows)
    return _determinant_complex(rows)


def _determinant_exact(rows: list[list[Scalar]]) -> Fraction:
    # Clear denominators row by row, then run fraction-free Bareiss on ints.
    n = len(rows)
    scale = 1
    m: list[list[int]] = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        common = lcm(*(f.denominator for f in fracs)) if fracs else 1
        scale *= common
        m.append([int(f * common) for f in fracs])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        mk = m[k]
        for i in range(k + 1, n):
            mi = m[i]
            head = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * mk[k] - head * mk[j]) // prev
            mi[k] = 0
        prev = mk[k]
    return Fraction(sign * m[n - 1][n - 1], scale)


def _determinant_complex(rows: list[list[Scalar]]) -> complex:
    n = len(rows)
    m = [[complex(x) for x in row] for row in rows]
    det = 1 + 0j
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda i: abs(m[i][k]))
        if m[pivot_row][k] == 0:
            return 0j
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det *= pivot
        mk = m[k]
        for i in range(k + 1, n):
            mi = m[i]
            factor = mi[k] / pivot
            for j in range(k + 1, n):
                mi[j] -= factor * mk[j]
    return det


class SkewMatrix:
    """Skew-symmetric square matrix; the upper triangle is authoritative.

    Exact entries must satisfy A[j][i] == -A[i][j] strictly; approximate
    entries are accepted within the field tolerance and the lower triangle
    is rebuilt from the upper one.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]], tol: Tolerance = DEFAULT_TOLERANCE):
        raw = [list(row) for row in rows]
        n = len(raw)
        if any(len(row) != n for row in raw):
            raise ValueError("skew matrix must be square")
        for i in range(n):
            d = raw[i][i]
            if is_exact(d):
                if d != 0:
                    raise ValueError("asymmetry beyond tolerance: nonzero diagonal")
            elif not near_equal(complex(d), 0j, tol):
                raise ValueError("asymmetry beyond tolerance: nonzero diagonal")
        for i in range(n):
            for j in range(i + 1, n):
                upper, lower = raw[i][j], raw[j][i]
                if is_exact(upper) and is_exact(lower):
                    if lower != -upper:
                        raise ValueError("asymmetry beyond tolerance")
                elif not near_equal(complex(lower), -complex(upper), tol):
                    raise ValueError("asymmetry beyond tolerance")
                raw[j][i] = -upper
        self.rows = tuple(tuple(row) for row in raw)

    @classmethod
    def from_upper(cls, n: int, entry_fn: Callable[[int, int], Scalar]) -> "SkewMatrix":
        """Build from entries given for i < j only; always exactly skew."""
        rows: list[list[Scalar]] = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                value = entry_fn(i, j)
                rows[i][j] = value
                rows[j][i] = -value
        out = object.__new__(cls)
        out.rows = tuple(tuple(row) for row in rows)
        return out

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def without(self, removed: Iterable[int]) -> "SkewMatrix":
        """Submatrix with the listed 0-based rows and columns removed."""
        gone = list(removed)
        if len(set(gone)) != len(gone):
            raise ValueError("duplicate index")
        if any(i < 0 or i >= self.n for i in gone):
            raise ValueError("index out of range")
        keep = [i for i in range(self.n) if i not in set(gone)]
        out = object.__new__(SkewMatrix)
        out.rows = tuple(tuple(self.rows[i][j] for j in keep) for i in keep)
        return out

    def __repr__(self) -> str:
        return f"SkewMatrix({[list(row) for row in self.rows]!r})"


def _as_skew(matrix, tol: Tolerance) -> SkewMatrix:
    return matrix if isinstance(matrix, SkewMatrix) else SkewMatrix(matrix, tol)


def pfaffian(matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Scalar:
    """Pfaffian via skew-symmetric block elimination.

    Conventions: Pf([[0, a], [-a, 0]]) = a, the empty matrix has Pfaffian 1,
    and Pf(A)^2 = det(A).  Odd dimension is an error, not 0.
    """
    a = _as_skew(matrix, tol)
    n = a.n
    if n % 2:
        raise ValueError("Pfaffian requires even dimension")
    if n == 0:
        return 1
    exact = all(is_exact(x) for row in a.rows for x in row)
    if exact:
        rows = [[Fraction(x) for x in row] for row in a.rows]
        result: Scalar = Fraction(1)
    else:
        rows = [[complex(x) for x in row] for row in a.rows]
        result = 1 + 0j
    sign = 1
    for k in range(0, n - 1, 2):
        if exact:
            pivot = next((j for j in range(k + 1, n) if rows[k][j] != 0), None)
        else:
            pivot = max(range(k + 1, n), key=lambda j: abs(rows[k][j]))
            if rows[k][pivot] == 0:
                pivot = None
        if pivot is None:
            # whole leading row vanished: the Pfaffian is exactly zero
            return Fraction(0) if exact else 0j
        if pivot != k + 1:
            rows[pivot], rows[k + 1] = rows[k + 1], rows[pivot]
            for row in rows:
                row[pivot], row[k + 1] = row[k + 1], row[pivot]
            sign = -sign
        head = rows[k][k + 1]
        result *= head
        row_k = rows[k]
        row_k1 = rows[k + 1]
        for i in range(k + 2, n):
            ki = row_k[i]
            k1i = row_k1[i]
            if ki == 0 and k1i == 0:
                continue
            row_i = rows[i]
            for j in range(i + 1, n):
                value = row_i[j] - (ki * row_k1[j] - row_k[j] * k1i) / head
                row_i[j] = value
                rows[j][i] = -value
    return sign * result


def pfaffian_oracle(matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> Scalar:
    """Pfaffian by recursive expansion along the first row (dimension <= 12)."""
    a = _as_skew(matrix, tol)
    n = a.n
    if n % 2:
        raise ValueError("Pfaffian requires even dimension")
    if n > _ORACLE_CAP:
        raise ValueError("oracle size cap")
    rows = a.rows

    def expand(active: tuple[int, ...]) -> Scalar:
        if not active:
            return 1
        first = active[0]
        rest = active[1:]
        total: Scalar = 0
        for position, j in enumerate(rest):
            term = rows[first][j] * expand(rest[:position] + rest[position + 1 :])
            total = total + term if position % 2 == 0 else total - term
        return total

    return expand(tuple(range(n)))


def pfaffian_minor(matrix, removed: Iterable[int], tol: Tolerance = DEFAULT_TOLERANCE) -> Scalar:
    """Pfaffian of the submatrix with the listed 0-based rows/columns removed."""
    a = _as_skew(matrix, tol)
    sub = a.without(removed)
    if sub.n % 2:
        raise ValueError("minor must have even dimension")
    return pfaffian(sub, tol)


def check_desnanot_jacobi(matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> IdentityEvaluation:
    """Pf A^{12} Pf A^{34} - Pf A^{13} Pf A^{24} + Pf A^{14} Pf A^{23} = Pf A Pf A^{1234}.

    Indices above are 1-based positions of the removed rows/columns; the
    relation drives the induction behind the main Pfaffian identity.
    """
    a = _as_skew(matrix, tol)
    if a.n < 4 or a.n % 2:
        raise ValueError("need even dimension >= 4")
    minor = lambda gone: pfaffian_minor(a, gone, tol)
    lhs = minor((0, 1)) * minor((2, 3)) - minor((0, 2)) * minor((1, 3)) + minor((0, 3)) * minor((1, 2))
    rhs = pfaffian(a, tol) * minor((0, 1, 2, 3))
    return evaluate("desnanot_jacobi", lhs, rhs, tol)
