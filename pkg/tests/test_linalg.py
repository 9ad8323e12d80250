import itertools
import random
from fractions import Fraction

import pytest

from pfident.linalg import (
    Matrix,
    SkewMatrix,
    check_desnanot_jacobi,
    determinant,
    pfaffian,
    pfaffian_minor,
    pfaffian_oracle,
)


def rand_fraction(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 5))


def rand_skew(rng, n):
    return SkewMatrix.from_upper(n, lambda i, j: rand_fraction(rng))


def det_permutation_oracle(rows):
    # brute-force Leibniz expansion, usable up to ~6x6
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def test_determinant_textbook_values():
    assert determinant([[2]]) == 2
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([]) == 1


def test_determinant_rejects_non_square():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_determinant_matches_permutation_oracle():
    rng = random.Random(101)
    for n in (3, 4):
        for _ in range(10):
            rows = [[rand_fraction(rng) for _ in range(n)] for _ in range(n)]
            assert determinant(rows) == det_permutation_oracle(rows)


def test_determinant_complex_matches_oracle():
    rng = random.Random(11)
    rows = [
        [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(4)] for _ in range(4)
    ]
    assert abs(determinant(rows) - det_permutation_oracle(rows)) < 1e-12


def test_matrix_shape_and_entry():
    m = Matrix([[1, 2], [3, 4]])
    assert m.n_rows == m.n_cols == 2
    assert m.is_square
    assert m.entry(1, 0) == 3
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_pfaffian_two_by_two_convention():
    assert pfaffian([[0, 5], [-5, 0]]) == 5


def test_pfaffian_four_by_four_all_ones():
    # 1*1 - 1*1 + 1*1 from the three-term expansion
    a = SkewMatrix.from_upper(4, lambda i, j: 1)
    assert pfaffian(a) == 1


def test_pfaffian_empty():
    assert pfaffian([]) == 1


def test_pfaffian_rejects_odd_dimension():
    with pytest.raises(ValueError):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])


def test_skew_matrix_rejects_asymmetry():
    with pytest.raises(ValueError, match="asymmetry"):
        SkewMatrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError, match="asymmetry"):
        SkewMatrix([[1, 2], [-2, 0]])
    with pytest.raises(ValueError, match="asymmetry"):
        SkewMatrix([[0.0, 1.0], [-1.5, 0.0]])


def test_pfaffian_equals_oracle_exact():
    rng = random.Random(7)
    for n in (2, 4, 6, 8):
        for _ in range(25):
            a = rand_skew(rng, n)
            assert pfaffian(a) == pfaffian_oracle(a)


def test_pfaffian_square_is_determinant():
    rng = random.Random(13)
    for n in (2, 4, 6, 8):
        for _ in range(25):
            a = rand_skew(rng, n)
            assert pfaffian(a) ** 2 == determinant(a)


def test_pfaffian_zero_row_gives_zero():
    a = SkewMatrix.from_upper(4, lambda i, j: 0 if i == 0 else Fraction(1))
    assert pfaffian(a) == 0
    assert pfaffian_oracle(a) == 0


def test_row_column_swap_negates_pfaffian():
    rng = random.Random(19)
    a = rand_skew(rng, 6)
    i, j = 1, 4
    perm = list(range(6))
    perm[i], perm[j] = perm[j], perm[i]
    swapped = SkewMatrix([[a.rows[perm[r]][perm[c]] for c in range(6)] for r in range(6)])
    assert pfaffian(swapped) == -pfaffian(a)


def test_pfaffian_complex_matches_oracle():
    rng = random.Random(23)
    for _ in range(10):
        a = SkewMatrix.from_upper(
            6, lambda i, j: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        )
        assert abs(pfaffian(a) - pfaffian_oracle(a)) < 1e-12


def test_pfaffian_oracle_size_cap():
    a = SkewMatrix.from_upper(14, lambda i, j: 1)
    with pytest.raises(ValueError, match="oracle size cap"):
        pfaffian_oracle(a)


def test_pfaffian_minor_two_by_two_remnant():
    a = SkewMatrix.from_upper(4, lambda i, j: Fraction(10 * i + j))
    # removing rows/columns 0 and 1 leaves the (2,3) entry
    assert pfaffian_minor(a, (0, 1)) == a.entry(2, 3)
    assert pfaffian_minor(a, ()) == pfaffian(a)


def test_pfaffian_minor_matches_rebuilt_submatrix():
    rng = random.Random(29)
    a = rand_skew(rng, 6)
    keep = [i for i in range(6) if i not in (0, 3)]
    rebuilt = SkewMatrix([[a.rows[i][j] for j in keep] for i in keep])
    assert pfaffian_minor(a, (0, 3)) == pfaffian(rebuilt)


def test_pfaffian_minor_rejects_bad_indices():
    a = rand_skew(random.Random(1), 4)
    with pytest.raises(ValueError):
        pfaffian_minor(a, (0, 0))
    with pytest.raises(ValueError):
        pfaffian_minor(a, (17,))
    with pytest.raises(ValueError):
        pfaffian_minor(a, (0,))


def test_desnanot_jacobi_four_by_four():
    # Pf of the full minor complement is 1, so the relation reduces to the
    # three-term Pfaffian expansion itself
    rng = random.Random(31)
    for _ in range(20):
        ev = check_desnanot_jacobi(rand_skew(rng, 4))
        assert ev.passed and ev.lhs == ev.rhs


@pytest.mark.parametrize("n", [6, 8])
def test_desnanot_jacobi_random_exact(n):
    rng = random.Random(37 + n)
    for _ in range(20):
        ev = check_desnanot_jacobi(rand_skew(rng, n))
        assert ev.passed and ev.lhs == ev.rhs


def test_desnanot_jacobi_rejects_small():
    with pytest.raises(ValueError):
        check_desnanot_jacobi(SkewMatrix.from_upper(2, lambda i, j: 1))
