import random
from fractions import Fraction

import pytest

from grosslat import AlgebraParams, commutator, gross_map, inner
from grosslat.errors import AlgebraMismatch

from conftest import random_quat

F = Fraction


class TestMultiplicationTable:
    def test_ij_is_k(self, alg11):
        assert alg11.i * alg11.j == alg11.k

    def test_i_squared(self, alg11):
        assert alg11.i * alg11.i == alg11.scalar(-3)

    def test_ji_anticommutes(self, alg11):
        assert alg11.j * alg11.i == -alg11.k

    def test_associativity_randomized(self, alg11, alg19):
        rng = random.Random(101)
        for algebra in (alg11, alg19):
            for _ in range(50):
                x, y, z = (random_quat(rng, algebra) for _ in range(3))
                assert (x * y) * z == x * (y * z)

    def test_mismatched_algebras(self, alg11, alg19):
        with pytest.raises(AlgebraMismatch):
            alg11.i * alg19.i
        with pytest.raises(AlgebraMismatch):
            inner(alg11.i, alg19.i)
        with pytest.raises(AlgebraMismatch):
            commutator(alg11.i, alg19.j)


class TestConjugation:
    def test_basic(self, alg11):
        assert (1 + alg11.i).conjugate() == 1 - alg11.i

    def test_scalars_fixed(self, alg11):
        assert alg11.scalar(5).conjugate() == alg11.scalar(5)

    def test_anti_automorphism(self, alg11):
        rng = random.Random(102)
        for _ in range(30):
            x, y = random_quat(rng, alg11), random_quat(rng, alg11)
            assert (x * y).conjugate() == y.conjugate() * x.conjugate()

    def test_involution(self, alg19):
        rng = random.Random(103)
        for _ in range(20):
            x = random_quat(rng, alg19)
            assert x.conjugate().conjugate() == x


class TestTraceAndNorm:
    def test_counterexample_elements(self, alg11, alg19):
        a11 = alg11.quat(F(11, 2), F(11, 2))
        assert a11.reduced_trace() == 11
        assert a11.reduced_norm() == 121

        a31 = AlgebraParams(1, 31).quat(F(31, 2), F(-31, 3), F(-7, 6), F(-2, 3))
        assert a31.reduced_trace() == 31
        assert a31.reduced_norm() == 403

        a19 = alg19.quat(F(19, 2), F(-19, 2), F(-1, 2), F(-1, 2))
        assert a19.reduced_trace() == 19
        assert a19.reduced_norm() == 190

    def test_norm_is_multiplicative(self, alg11):
        rng = random.Random(104)
        for _ in range(40):
            x, y = random_quat(rng, alg11), random_quat(rng, alg11)
            assert (x * y).reduced_norm() == x.reduced_norm() * y.reduced_norm()

    def test_trace_is_symmetric(self, alg19):
        rng = random.Random(105)
        for _ in range(40):
            x, y = random_quat(rng, alg19), random_quat(rng, alg19)
            assert (x * y).reduced_trace() == (y * x).reduced_trace()

    def test_cayley_hamilton(self, alg11):
        rng = random.Random(106)
        zero = alg11.quat()
        for _ in range(40):
            x = random_quat(rng, alg11)
            assert x * x - x.reduced_trace() * x + x.reduced_norm() == zero


class TestInnerProduct:
    def test_values(self, alg11):
        assert inner(alg11.i, alg11.i) == 3
        assert inner(alg11.one, alg11.i) == 0
        b1 = alg11.i
        b2 = alg11.quat(0, F(1, 3), 1, F(-1, 3))
        assert inner(b1, b2) == 1

    def test_matches_half_trace(self, alg11):
        rng = random.Random(107)
        for _ in range(30):
            x, y = random_quat(rng, alg11), random_quat(rng, alg11)
            assert inner(x, y) == (x * y.conjugate()).reduced_trace() / 2
            assert inner(x, x) == x.reduced_norm()


class TestGrossMap:
    def test_kills_scalars(self, alg11):
        assert gross_map(alg11.scalar(F(7, 3))) == alg11.quat()

    def test_linearity_example(self, alg11):
        assert gross_map(alg11.quat(3, 2)) == alg11.quat(0, 4)

    def test_halved_lift(self, alg19):
        rng = random.Random(108)
        for _ in range(20):
            q = random_quat(rng, alg19)
            beta = gross_map(q)  # trace zero by construction
            assert gross_map((1 + beta) / 2) == beta

    def test_trace_and_norm_relations(self, alg11):
        rng = random.Random(109)
        for _ in range(40):
            x = random_quat(rng, alg11)
            t = gross_map(x)
            assert t.reduced_trace() == 0
            assert t.reduced_norm() == 4 * x.reduced_norm() - x.reduced_trace() ** 2


class TestCommutator:
    def test_self_bracket_vanishes(self, alg11):
        rng = random.Random(110)
        x = random_quat(rng, alg11)
        assert commutator(x, x) == alg11.quat()

    def test_ij_bracket(self, alg11):
        assert commutator(alg11.i, alg11.j) == 2 * alg11.k

    def test_antisymmetric_and_traceless(self, alg19):
        rng = random.Random(111)
        for _ in range(30):
            x, y = random_quat(rng, alg19), random_quat(rng, alg19)
            b = commutator(x, y)
            assert b == -commutator(y, x)
            assert b.reduced_trace() == 0

    def test_gross_image_brackets_quadruple(self, alg11):
        # [tau(x), tau(y)] = 4 [x, y], the bracket identity behind the
        # trace-zero basis of the commutator ideal
        rng = random.Random(112)
        for _ in range(30):
            x, y = random_quat(rng, alg11), random_quat(rng, alg11)
            assert commutator(gross_map(x), gross_map(y)) == 4 * commutator(x, y)


class TestConstruction:
    def test_algebra_validation(self):
        with pytest.raises(ValueError):
            AlgebraParams(0, 11)
        with pytest.raises(ValueError):
            AlgebraParams(1, 15)

    def test_coord_strings_round_trip(self, alg11):
        q = alg11.quat(F(11, 2), F(11, 2))
        assert q.to_coord_strings() == ["11/2", "11/2", "0", "0"]
        assert alg11.from_coord_strings(["11/2", "11/2", "0", "0"]) == q

    def test_scalar_operators(self, alg11):
        q = alg11.quat(1, 2, 3, 4)
        assert 2 * q == q + q
        assert q / 2 + q / 2 == q
        assert 1 + q - 1 == q
