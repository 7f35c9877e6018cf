import random
from fractions import Fraction

import pytest

from grosslat import (
    TernaryForm,
    canonical_reduced_form,
    diagonalize_form,
    exterior_square_form,
    pair_determinant,
    representation_counts,
    represents,
)
from grosslat.errors import DefinitenessError, IntegralityError
from grosslat.lattice import GramMatrix

F = Fraction

Q11 = TernaryForm(1, 1, 4, -1, -1, 1)
Q31 = TernaryForm(1, 2, 5, -1, -1, 2)
Q19 = TernaryForm(1, 2, 3, -1, -1, 1)


def gram_from_ints(rows):
    return GramMatrix(tuple(tuple(F(v) for v in row) for row in rows))


def random_definite_form(rng, coeff_bound=10):
    while True:
        a, b, c = (rng.randint(1, coeff_bound) for _ in range(3))
        d, e, f = (rng.randint(-coeff_bound, coeff_bound) for _ in range(3))
        form = TernaryForm(a, b, c, d, e, f)
        if form.is_positive_definite():
            return form


def box_represented_set(form, n_max):
    """Independent oracle: every value <= n_max hit inside an exact box."""
    m = form.gram()
    from grosslat.linalg import det_fractions
    det = det_fractions(m)
    bounds = []
    for i in range(3):
        minor = [[m[r][c] for c in range(3) if c != i] for r in range(3) if r != i]
        bound = n_max * det_fractions(minor) / det
        from math import isqrt
        bounds.append(isqrt(bound.numerator // bound.denominator) + 1)
    hit = set()
    for x in range(-bounds[0], bounds[0] + 1):
        for y in range(-bounds[1], bounds[1] + 1):
            for z in range(-bounds[2], bounds[2] + 1):
                v = form(x, y, z)
                if v <= n_max:
                    hit.add(v)
    return hit


class TestExteriorSquareForm:
    def test_p11_exact(self):
        gram = gram_from_ints([[3, 1, 1], [1, 15, -7], [1, -7, 15]])
        content, q = exterior_square_form(gram)
        assert content == 44
        assert q == Q11

    def test_fixture_forms_up_to_equivalence(self, order_p31, order_p19):
        for order, reference in ((order_p31, Q31), (order_p19, Q19)):
            reduced = order.gross_lattice().minkowski_reduced()
            content, q = exterior_square_form(reduced.gram())
            assert content == 4 * order.algebra.p
            assert representation_counts(q, 100) == representation_counts(reference, 100)

    def test_half_integral_determinant(self, order_p11, order_p31, order_p19):
        # content = 4p and det of the primitive form's Gram is p/4
        from grosslat.linalg import det_fractions
        for order in (order_p11, order_p31, order_p19):
            p = order.algebra.p
            reduced = order.gross_lattice().minkowski_reduced()
            content, q = exterior_square_form(reduced.gram())
            assert content == 4 * p
            assert det_fractions(q.gram()) == F(p, 4)

    def test_pair_determinant_factors_through_minors(self, order_p11, order_p31):
        rng = random.Random(601)
        for order in (order_p11, order_p31):
            reduced = order.gross_lattice().minkowski_reduced()
            content, q = exterior_square_form(reduced.gram())
            basis = reduced.basis
            for _ in range(20):
                c = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(2)]
                g1 = c[0][0] * basis[0] + c[0][1] * basis[1] + c[0][2] * basis[2]
                g2 = c[1][0] * basis[0] + c[1][1] * basis[1] + c[1][2] * basis[2]
                x = c[0][0] * c[1][1] - c[0][1] * c[1][0]
                y = c[0][0] * c[1][2] - c[0][2] * c[1][0]
                z = c[0][1] * c[1][2] - c[0][2] * c[1][1]
                assert pair_determinant(g1, g2) == content * q(x, y, z)

    def test_rejects_non_integral(self):
        gram = GramMatrix(tuple(tuple(F(v, 2) for v in row)
                                for row in [[3, 1, 1], [1, 15, -7], [1, -7, 15]]))
        with pytest.raises(IntegralityError):
            exterior_square_form(gram)

    def test_rejects_indefinite(self):
        gram = gram_from_ints([[1, 0, 0], [0, -1, 0], [0, 0, 1]])
        with pytest.raises(DefinitenessError):
            exterior_square_form(gram)


class TestDiagonalize:
    def test_p11_form(self):
        data = diagonalize_form(Q11)
        assert data.diagonal == (1, F(3, 4), F(11, 3))
        assert (data.r12, data.r13, data.r23) == (F(-1, 2), F(-1, 2), F(1, 3))
        assert data.reconstruct() == Q11

    def test_identity_form(self):
        data = diagonalize_form(TernaryForm(1, 1, 1, 0, 0, 0))
        assert data.diagonal == (1, 1, 1)
        assert (data.r12, data.r13, data.r23) == (0, 0, 0)

    def test_p19_form(self):
        data = diagonalize_form(Q19)
        assert data.diagonal == (1, F(7, 4), F(19, 7))
        assert data.r23 == F(1, 7)

    def test_p31_form(self):
        data = diagonalize_form(Q31)
        assert data.diagonal == (1, F(7, 4), F(31, 7))
        assert data.r23 == F(3, 7)

    def test_round_trip_randomized(self):
        rng = random.Random(602)
        for _ in range(25):
            form = random_definite_form(rng)
            assert diagonalize_form(form).reconstruct() == form

    def test_rejects_indefinite(self):
        with pytest.raises(DefinitenessError):
            diagonalize_form(TernaryForm(1, -1, 1, 0, 0, 0))


class TestRepresents:
    def test_counterexample_values(self):
        assert represents(Q11, 11) is None
        assert represents(Q31, 13) is None
        assert represents(Q19, 10) is None

    def test_unit_witness(self):
        assert represents(Q11, 1) == (1, 0, 0)

    def test_witness_evaluates(self):
        for n in (1, 3, 4, 12, 15):
            w = represents(Q11, n)
            if w is not None:
                assert Q11(*w) == n

    def test_zero(self):
        assert represents(Q11, 0) == (0, 0, 0)

    def test_agrees_with_box_oracle_small(self):
        rng = random.Random(603)
        for _ in range(8):
            form = random_definite_form(rng, coeff_bound=6)
            hit = box_represented_set(form, 60)
            for n in range(61):
                assert (represents(form, n) is not None) == (n in hit)

    def test_scaled_identity(self):
        # 12*Q11 = 3(2x - y - z)^2 + (3y + z)^2 + 44 z^2 on a small box
        for x in range(-3, 4):
            for y in range(-3, 4):
                for z in range(-3, 4):
                    assert 12 * Q11(x, y, z) == \
                        3 * (2 * x - y - z) ** 2 + (3 * y + z) ** 2 + 44 * z * z


class TestCanonicalReducedForm:
    def test_equivalence_invariance(self):
        rng = random.Random(604)
        canonical = canonical_reduced_form(Q11)
        for _ in range(10):
            rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            for _ in range(8):
                i, j = rng.randrange(3), rng.randrange(3)
                if i == j:
                    continue
                c = rng.randint(-2, 2)
                rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
            transformed = Q11.transformed(rows)
            assert canonical_reduced_form(transformed) == canonical

    def test_counts_preserved(self):
        canonical = canonical_reduced_form(Q11)
        assert representation_counts(canonical, 100) == representation_counts(Q11, 100)

    def test_scaling_pattern(self):
        doubled = TernaryForm(*(2 * c for c in Q11.coefficients()))
        canonical = canonical_reduced_form(doubled)
        counts2 = representation_counts(canonical, 60)
        counts1 = representation_counts(Q11, 30)
        assert all(counts2[2 * n] == counts1[n] for n in range(31))
        assert all(counts2[m] == 0 for m in range(61) if m % 2 == 1)

    def test_reference_forms_stable(self):
        for q in (Q11, Q31, Q19):
            c = canonical_reduced_form(q)
            assert c.is_positive_definite()
            assert representation_counts(c, 50) == representation_counts(q, 50)


class TestSerialization:
    def test_wire_format(self):
        data = Q11.to_dict()
        assert data == {"A": 1, "B": 1, "C": 4, "D": -1, "E": -1, "F": 1}
        assert TernaryForm.from_dict(data) == Q11
