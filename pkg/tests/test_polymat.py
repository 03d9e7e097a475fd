"""Polynomials, matrices, composed operations, and resultants."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recseq import (
    QQ,
    ZZ,
    DegreeZero,
    Matrix,
    NotMonic,
    Poly,
    RingMismatch,
    ZeroPolynomial,
    Zmod,
    charpoly,
    companion,
    composed_newton,
    composed_product,
    composed_sum,
    kron,
    kron_newton,
    kron_sum,
    resultant,
    resultant_shift,
)
from recseq.polymat import NEG_INFINITY, _charpoly_generic
from recseq.verify import charpoly_cofactor

from conftest import RINGS, RING_IDS, monic_polys, rings, element_strategy

T = Poly.from_ints(ZZ, [0, 1])
T_MINUS_1 = Poly.from_ints(ZZ, [-1, 1])
FIB_P = Poly.from_ints(ZZ, [-1, -1, 1])


def ints(p: Poly) -> list[int]:
    return [c.value for c in p.coeffs]


class TestPolyBasics:
    def test_canonical_form_strips_trailing_zeros(self):
        p = Poly.from_ints(ZZ, [1, 2, 0, 0])
        assert ints(p) == [1, 2]

    def test_zero_polynomial_degree_sentinel(self):
        z = Poly.from_ints(ZZ, [0, 0])
        assert z.is_zero()
        assert z.degree == NEG_INFINITY

    def test_product_of_linear_factors(self):
        p = Poly.from_ints(ZZ, [-2, 1]) * Poly.from_ints(ZZ, [-3, 1])
        assert ints(p) == [6, -5, 1]  # t^2 - 5t + 6

    def test_multiply_by_one(self):
        one = Poly.from_ints(ZZ, [1])
        assert FIB_P * one == FIB_P

    def test_fib_times_linear(self):
        # (t^2 - t - 1)(t - 2) expanded by hand
        assert ints(FIB_P * Poly.from_ints(ZZ, [-2, 1])) == [2, 1, -3, 1]

    def test_addition_cancels_leading_terms(self):
        p = Poly.from_ints(ZZ, [0, 0, 1])
        q = Poly.from_ints(ZZ, [1, 0, -1])
        assert ints(p + q) == [1]

    def test_scale(self):
        assert ints(FIB_P.scale(ZZ.from_int(2))) == [-2, -2, 2]

    def test_cross_ring_rejected(self):
        with pytest.raises(RingMismatch):
            FIB_P + Poly.from_ints(QQ, [1])

    def test_coeff_beyond_degree_is_zero(self):
        assert FIB_P.coeff(7) == ZZ.zero

    def test_str_round_trip_shape(self):
        assert str(FIB_P) == "[-1,-1,1]"


class TestReciprocal:
    def test_fibonacci_reversal(self):
        assert ints(FIB_P.reciprocal()) == [1, -1, -1]

    def test_linear(self):
        assert ints(Poly.from_ints(ZZ, [-1, 1]).reciprocal()) == [1, -1]

    def test_zero_poly_rejected(self):
        with pytest.raises(ZeroPolynomial):
            Poly.from_ints(ZZ, []).reciprocal()

    @given(monic_polys(max_degree=4))
    def test_involution_when_constant_term_nonzero(self, p):
        if p.coeffs[0].value != 0:
            assert p.reciprocal().reciprocal() == p

    def test_drops_degree_when_constant_term_vanishes(self):
        p = Poly.from_ints(ZZ, [0, -1, 1])  # t^2 - t
        assert ints(p.reciprocal()) == [1, -1]


class TestCompanion:
    def test_degree_one(self):
        m = companion(Poly.from_ints(ZZ, [-7, 1]))
        assert m.n == 1 and m.entries[0][0].value == 7

    def test_fibonacci_convention(self):
        m = companion(FIB_P)
        assert [[e.value for e in row] for row in m.entries] == [[0, 1], [1, 1]]

    def test_rejects_non_monic(self):
        with pytest.raises(NotMonic):
            companion(Poly.from_ints(ZZ, [-1, -1, 2]))

    def test_rejects_constants(self):
        with pytest.raises(DegreeZero):
            companion(Poly.from_ints(ZZ, [1]))

    @given(monic_polys(max_degree=5))
    @settings(max_examples=60, deadline=None)
    def test_charpoly_round_trip(self, p):
        assert charpoly(companion(p)) == p


class TestKronecker:
    def test_one_by_one(self):
        a = Matrix(ZZ, [[ZZ.from_int(3)]])
        b = Matrix(ZZ, [[ZZ.from_int(5)]])
        assert kron(a, b).entries[0][0].value == 15
        assert kron_sum(a, b).entries[0][0].value == 8
        assert kron_newton(a, b).entries[0][0].value == 23

    def test_identity_factor(self):
        a = companion(FIB_P)
        assert kron(a, Matrix.identity(ZZ, 1)) == a

    def test_scalar_block_scaling(self):
        a = companion(FIB_P)
        two = Matrix(ZZ, [[ZZ.from_int(2)]])
        got = [[e.value for e in row] for row in kron(a, two).entries]
        assert got == [[0, 2], [2, 2]]

    def test_kron_sum_zero_summand(self):
        a = companion(FIB_P)
        zero = Matrix(ZZ, [[ZZ.zero]])
        assert kron_sum(a, zero) == a
        assert kron_newton(a, zero) == a

    def test_dimension_law(self):
        a = companion(FIB_P)
        b = companion(Poly.from_ints(ZZ, [1, 2, 3, 1]))
        assert kron_sum(a, b).n == a.n * b.n

    def test_kron_newton_ones(self):
        one = Matrix(ZZ, [[ZZ.one]])
        assert kron_newton(one, one).entries[0][0].value == 3

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatch):
            kron(Matrix.identity(ZZ, 1), Matrix.identity(QQ, 1))


class TestCharpoly:
    def test_fibonacci_matrix(self):
        m = Matrix(ZZ, [[ZZ.zero, ZZ.one], [ZZ.one, ZZ.one]])
        assert charpoly(m) == FIB_P
        assert charpoly_cofactor(m) == FIB_P

    def test_identity_matrix(self):
        p = charpoly(Matrix.identity(ZZ, 3))
        cube = T_MINUS_1 * T_MINUS_1 * T_MINUS_1
        assert p == cube

    def test_diagonal(self):
        m = Matrix(ZZ, [[ZZ.from_int(2), ZZ.zero], [ZZ.zero, ZZ.from_int(3)]])
        assert ints(charpoly(m)) == [6, -5, 1]

    def test_nonsymmetric(self):
        m = Matrix(ZZ, [[ZZ.from_int(1), ZZ.from_int(2)], [ZZ.from_int(3), ZZ.from_int(4)]])
        assert ints(charpoly(m)) == [-2, -5, 1]

    @given(rings.flatmap(lambda r: st.lists(element_strategy(r), min_size=9, max_size=9)))
    @settings(max_examples=60, deadline=None)
    def test_berkowitz_matches_cofactor_3x3(self, elems):
        ring = elems[0].ring
        m = Matrix(ring, [elems[0:3], elems[3:6], elems[6:9]])
        assert _charpoly_generic(m) == charpoly_cofactor(m)
        assert charpoly(m) == charpoly_cofactor(m)


class TestComposedOperations:
    def test_product_of_linear_roots(self):
        p = composed_product(Poly.from_ints(ZZ, [-2, 1]), Poly.from_ints(ZZ, [-3, 1]))
        assert ints(p) == [-6, 1]

    def test_sum_of_linear_roots(self):
        p = composed_sum(Poly.from_ints(ZZ, [-1, 1]), Poly.from_ints(ZZ, [-2, 1]))
        assert ints(p) == [-3, 1]

    def test_newton_of_linear_roots(self):
        assert ints(composed_newton(Poly.from_ints(ZZ, [-1, 1]), Poly.from_ints(ZZ, [-1, 1]))) == [-3, 1]
        assert ints(composed_newton(Poly.from_ints(ZZ, [-2, 1]), Poly.from_ints(ZZ, [-3, 1]))) == [-11, 1]

    def test_identities(self):
        assert composed_product(FIB_P, T_MINUS_1) == FIB_P
        assert composed_sum(FIB_P, T) == FIB_P
        assert composed_newton(FIB_P, T) == FIB_P

    def test_fibonacci_square_product(self):
        # roots a^2, ab, ba, b^2 with a+b=1, ab=-1: (t+1)^2 (t^2-3t+1)
        got = composed_product(FIB_P, FIB_P)
        assert ints(got) == [1, -1, -4, -1, 1]
        assert got == charpoly_cofactor(kron(companion(FIB_P), companion(FIB_P)))

    def test_fibonacci_square_sum(self):
        # roots 2a, a+b, b+a, 2b: (t-1)^2 (t^2-2t-4)
        got = composed_sum(FIB_P, FIB_P)
        expected = T_MINUS_1 * T_MINUS_1 * Poly.from_ints(ZZ, [-4, -2, 1])
        assert got == expected
        assert ints(got) == [-4, 6, 1, -4, 1]
        assert got == charpoly_cofactor(kron_sum(companion(FIB_P), companion(FIB_P)))

    def test_degree_law(self):
        q = Poly.from_ints(ZZ, [1, 2, 3, 1])
        for op in (composed_product, composed_sum, composed_newton):
            assert op(FIB_P, q).degree == FIB_P.degree * q.degree

    def test_rejects_non_monic(self):
        with pytest.raises(NotMonic):
            composed_sum(FIB_P, Poly.from_ints(ZZ, [1, 2]))

    @given(rings.flatmap(lambda r: st.tuples(monic_polys(ring=r, max_degree=2), monic_polys(ring=r, max_degree=2))))
    @settings(max_examples=40, deadline=None)
    def test_kron_swap_commutativity(self, pq):
        p, q = pq
        a, b = companion(p), companion(q)
        assert charpoly(kron(a, b)) == charpoly(kron(b, a))
        assert charpoly(kron_sum(a, b)) == charpoly(kron_sum(b, a))
        assert charpoly(kron_newton(a, b)) == charpoly(kron_newton(b, a))

    def test_associativity_and_distributivity_samples(self):
        rng = random.Random(7)

        def rand_poly(degree):
            return Poly.from_ints(ZZ, [rng.randint(-4, 4) for _ in range(degree)] + [1])

        for op in (composed_product, composed_sum, composed_newton):
            for _ in range(4):
                p, q, r = (rand_poly(rng.choice([1, 2])) for _ in range(3))
                assert op(op(p, q), r) == op(p, op(q, r))
                assert op(p * q, r) == op(p, r) * op(q, r)


class TestResultant:
    def test_linear_pair(self):
        for a, b in [(5, 3), (-2, 7), (0, 0)]:
            f = Poly.from_ints(ZZ, [-a, 1])
            g = Poly.from_ints(ZZ, [-b, 1])
            assert resultant(f, g).value == a - b

    def test_shared_roots_vanish(self):
        assert resultant(FIB_P, FIB_P).value == 0

    def test_quadratic_against_root_formula(self):
        # res(t^2 - 1, t - 2) = (1 - 2)(-1 - 2) = 3
        f = Poly.from_ints(ZZ, [-1, 0, 1])
        g = Poly.from_ints(ZZ, [-2, 1])
        assert resultant(f, g).value == 3

    def test_swap_sign_law(self):
        f = FIB_P
        g = Poly.from_ints(ZZ, [1, 4, 1])
        sign = (-1) ** (f.degree * g.degree)
        lhs = resultant(f, g).value
        rhs = resultant(g, f).value
        assert lhs == sign * rhs

    def test_rejects_non_monic(self):
        with pytest.raises(NotMonic):
            resultant(Poly.from_ints(ZZ, [1, 2]), FIB_P)


class TestResultantShift:
    def test_linear_case(self):
        got = resultant_shift(Poly.from_ints(ZZ, [-1, 1]), Poly.from_ints(ZZ, [-2, 1]))
        assert ints(got) == [-3, 1]

    def test_fibonacci_shift_by_one(self):
        # roots a+1, b+1 of the Fibonacci polynomial: t^2 - 3t + 1
        got = resultant_shift(FIB_P, T_MINUS_1)
        assert ints(got) == [1, -3, 1]
        assert got == composed_sum(FIB_P, T_MINUS_1)

    def test_matches_composed_sum_on_random_pairs(self):
        rng = random.Random(11)
        for _ in range(25):
            p = Poly.from_ints(ZZ, [rng.randint(-5, 5) for _ in range(rng.choice([1, 2, 3]))] + [1])
            q = Poly.from_ints(ZZ, [rng.randint(-5, 5) for _ in range(rng.choice([1, 2, 3]))] + [1])
            assert resultant_shift(p, q) == composed_sum(p, q)

    def test_works_over_modular_rings(self):
        r = Zmod(12)
        p = Poly.from_ints(r, [5, 3, 1])
        q = Poly.from_ints(r, [7, 1])
        assert resultant_shift(p, q) == composed_sum(p, q)

    @given(rings.flatmap(lambda r: st.tuples(monic_polys(ring=r, max_degree=3), monic_polys(ring=r, max_degree=3))))
    @settings(max_examples=30, deadline=None)
    def test_matches_composed_sum_over_every_ring(self, pq):
        p, q = pq
        assert resultant_shift(p, q) == composed_sum(p, q)


@pytest.mark.parametrize("ring", RINGS, ids=RING_IDS)
def test_matrix_validation(ring):
    with pytest.raises(ValueError):
        Matrix(ring, [])
    with pytest.raises(ValueError):
        Matrix(ring, [[ring.one], [ring.one]])
    with pytest.raises(RingMismatch):
        Matrix(ring, [[ZZ.one if ring != ZZ else QQ.one]])
