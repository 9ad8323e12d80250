import random
from fractions import Fraction

import pytest

from pfident.symfunc import (
    CoincidentPointsError,
    Partition,
    check_bidet_relation,
    complete_homogeneous,
    d_poly,
    delta_pq,
    difference_product,
    epsilon_pq,
    schur,
    schur_jacobi_trudi,
    schur_oracle,
    schur_tableau,
    staircase,
    vandermonde_pq,
    w_matrix,
)


def rand_distinct(rng, count):
    seen = []
    while len(seen) < count:
        v = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
        if v not in seen:
            seen.append(v)
    return tuple(seen)


def partitions_up_to(size):
    out = [()]

    def extend(remaining, cap, prefix):
        for part in range(min(remaining, cap), 0, -1):
            out.append(prefix + (part,))
            extend(remaining - part, part, prefix + (part,))

    for total in range(1, size + 1):
        extend(total, total, ())
    return out


class TestPartition:
    def test_strips_trailing_zeros(self):
        assert Partition((3, 2, 0, 0)).parts == (3, 2)

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition((3, -1))

    def test_size_and_len(self):
        p = Partition((4, 2, 1))
        assert p.size == 7
        assert len(p) == 3
        assert list(p) == [4, 2, 1]


def test_staircase():
    assert staircase(0) == Partition()
    assert staircase(1) == Partition((1,))
    assert staircase(3) == Partition((3, 2, 1))
    with pytest.raises(ValueError):
        staircase(-1)


def test_delta_pq_cases():
    assert delta_pq(3, 1) == staircase(1)
    assert delta_pq(1, 2) == staircase(1)
    assert delta_pq(2, 2) == Partition()


def test_epsilon_pq_values():
    assert epsilon_pq(1, 2) == 1
    assert epsilon_pq(3, 1) == 1
    assert epsilon_pq(3, 2) == -1
    assert epsilon_pq(2, 0) == 1


def test_schur_base_cases():
    assert schur((), (Fraction(5), Fraction(7))) == 1
    x = (Fraction(2), Fraction(9))
    assert schur((1,), x) == x[0] + x[1]


def test_schur_staircase_product_form():
    # s_(2,1)(x1,x2,x3) = (x1+x2)(x2+x3)(x3+x1)
    assert schur((2, 1), (Fraction(1), Fraction(2), Fraction(3))) == 60


def test_schur_rejects_coincident_points():
    with pytest.raises(CoincidentPointsError, match="coincident points"):
        schur((1,), (Fraction(1), Fraction(1)))


def test_schur_rejects_long_partition():
    with pytest.raises(ValueError):
        schur((1, 1, 1), (Fraction(1), Fraction(2)))


def test_tableau_count_at_ones():
    # eight semistandard tableaux of shape (2,1) with entries <= 3
    assert schur_tableau((2, 1), (Fraction(1), Fraction(1), Fraction(1))) == 8
    assert schur_jacobi_trudi((2, 1), (Fraction(1), Fraction(1), Fraction(1))) == 8


def test_tableau_size_cap():
    with pytest.raises(ValueError, match="oracle size cap"):
        schur_tableau((5, 4), (Fraction(1), Fraction(2)))


def test_schur_oracle_simple():
    assert schur_oracle((1,), (Fraction(1), Fraction(2), Fraction(3))) == 6


def test_three_way_schur_agreement():
    rng = random.Random(41)
    for shape in partitions_up_to(6):
        for n in range(max(1, len(shape)), 5):
            xs = rand_distinct(rng, n)
            values = {
                schur(shape, xs),
                schur_jacobi_trudi(shape, xs),
                schur_tableau(shape, xs),
            }
            assert len(values) == 1, (shape, n)


def test_schur_is_symmetric():
    rng = random.Random(43)
    xs = rand_distinct(rng, 4)
    shuffled = list(xs)
    rng.shuffle(shuffled)
    assert schur((3, 1), xs) == schur((3, 1), tuple(shuffled))


def test_complete_homogeneous_values():
    # h_2(x, y) = x^2 + xy + y^2
    x, y = Fraction(2), Fraction(3)
    assert complete_homogeneous(2, (x, y))[2] == x * x + x * y + y * y


def test_vandermonde_rows():
    x = (Fraction(2), Fraction(3))
    a = (Fraction(5), Fraction(7))
    m = vandermonde_pq(1, 1, x, a)
    assert m.rows == ((1, 5), (1, 7))
    m = vandermonde_pq(2, 1, (Fraction(2), Fraction(3), Fraction(4)), (5, 7, 11))
    assert m.rows[0] == (1, 2, 5)
    assert vandermonde_pq(0, 0, (), ()).n_rows == 0
    with pytest.raises(ValueError):
        vandermonde_pq(1, 1, (1,), (1,))


def test_w_matrix_rows():
    assert w_matrix(1, (Fraction(4),), (Fraction(2),)).rows == ((3,),)  # 1 + a
    m = w_matrix(2, (Fraction(2), Fraction(3)), (Fraction(5), Fraction(7)))
    assert m.rows[0] == (1 + 5 * 2, 2 + 5)
    m = w_matrix(3, (Fraction(2),) * 1 + (Fraction(3), Fraction(5)), (1, 1, 1))
    x = Fraction(2)
    assert m.rows[0] == (1 + x * x, x + x, x * x + 1)
    with pytest.raises(ValueError):
        w_matrix(2, (1,), (1, 2))


def test_d_poly_values():
    t = Fraction(3)
    assert d_poly(0, t) == 1
    assert d_poly(2, t) == (1 - t) * (1 + t)
    assert d_poly(3, t) == (1 - t) * (1 + t) ** 2
    # n = 1 carries no (1 - t) factor: d_1(t) = 1 + t
    assert d_poly(1, Fraction(1)) == 2
    for n in range(2, 8):
        assert d_poly(n, Fraction(1)) == 0
    for n in range(1, 8):
        assert d_poly(n, Fraction(0)) == 1


def test_difference_product():
    assert difference_product(()) == 1
    assert difference_product((Fraction(1), Fraction(4))) == 3


class TestBidetRelation:
    def test_trivial_pair(self):
        x = (Fraction(1), Fraction(7))
        ev = check_bidet_relation(1, 1, x)
        assert ev.passed and ev.lhs == ev.rhs == x[1] - x[0]

    def test_frozen_two_zero(self):
        ev = check_bidet_relation(2, 0, (Fraction(1), Fraction(2)))
        assert ev.passed and ev.lhs == ev.rhs == 3

    def test_frozen_one_two(self):
        ev = check_bidet_relation(1, 2, (Fraction(1), Fraction(2), Fraction(3)))
        assert ev.passed and ev.lhs == ev.rhs == 12

    def test_grid(self):
        rng = random.Random(47)
        for p in range(6):
            for q in range(6 - p):
                ev = check_bidet_relation(p, q, rand_distinct(rng, p + q))
                assert ev.passed and ev.lhs == ev.rhs, (p, q)

    def test_rejects_coincident(self):
        with pytest.raises(CoincidentPointsError):
            check_bidet_relation(1, 1, (Fraction(2), Fraction(2)))

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            check_bidet_relation(2, 1, (Fraction(1), Fraction(2)))
