"""Pencil degeneration counts, with the lattice pairings as cross-check."""

from fractions import Fraction

import pytest

from completequadrics import picard
from completequadrics.exact import Poly1
from completequadrics.pencils import (
    DIRECT_CHECK_PAIRS,
    BinaryForm,
    DegeneratePencilError,
    Pencil,
    bk_number,
    count_degenerations,
    count_tangencies,
    direct_table_counts,
    dual_pencil_checks,
    pencil_det_form,
    random_pencil,
)
from completequadrics.quadrics import SymmetricForm


def diag(*entries):
    size = len(entries)
    return SymmetricForm(
        [[Fraction(entries[i]) if i == j else Fraction(0) for j in range(size)] for i in range(size)]
    )


I4 = diag(1, 1, 1, 1)


class TestDetForm:
    def test_diagonal_pencil_matches_product_of_linear_factors(self):
        # det(s I + t diag(1,2,3,4)) = (s+t)(s+2t)(s+3t)(s+4t); expanding the
        # product of linear polynomials is the independent route
        form = pencil_det_form(Pencil(I4, diag(1, 2, 3, 4)))
        prod = Poly1([1])
        for k in (1, 2, 3, 4):
            prod = prod * Poly1([1, k])
        assert form.coeffs == tuple(prod.coefficient(d) for d in range(5))
        assert form.coeffs == (1, 10, 35, 50, 24)
        assert form.degree == 4

    def test_identically_singular_pencil_rejected(self):
        q0 = diag(1, 0, 0)
        q1 = diag(0, 1, 0)
        with pytest.raises(DegeneratePencilError):
            pencil_det_form(Pencil(q0, q1))

    def test_binary_form_json(self):
        form = pencil_det_form(Pencil(diag(1, 1), SymmetricForm([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])))
        assert form.to_json() == ["1", "0", "-1"]


class TestPencilValidation:
    def test_proportional_members_rejected(self):
        with pytest.raises(DegeneratePencilError):
            Pencil(diag(1, 2), diag(2, 4))

    def test_zero_member_rejected(self):
        with pytest.raises(DegeneratePencilError):
            Pencil(diag(0, 0), diag(1, 2))

    def test_mismatched_ambient_rejected(self):
        with pytest.raises(ValueError):
            Pencil(diag(1, 2), diag(1, 2, 3))


class TestCounts:
    def test_simple_pencil_all_distinct(self):
        c = count_degenerations(Pencil(I4, diag(1, 2, 3, 4)))
        assert (c.total, c.distinct) == (4, 4)

    def test_root_at_infinity_counted(self):
        # det = s (s+t)(s+2t)(s+3t): top t-coefficient vanishes, so the
        # member Q1 itself is singular and counts as the fourth root
        c = count_degenerations(Pencil(I4, diag(1, 2, 3, 0)))
        assert (c.total, c.distinct) == (4, 4)

    def test_multiple_root_detected(self):
        c = count_degenerations(Pencil(I4, diag(1, 1, 2, 3)))
        assert (c.total, c.distinct) == (4, 3)

    def test_random_pencil_total_is_ambient_plus_one(self):
        for m in (1, 2, 3, 4):
            for seed in (0, 1, 7):
                c = count_degenerations(random_pencil(m, seed))
                assert c.total == m + 1
                assert 1 <= c.distinct <= c.total


class TestTangencies:
    PENCIL = Pencil(I4, diag(1, 2, 3, 4))

    @staticmethod
    def coordinate_subspace(size, k):
        return [[Fraction(1) if j == i else Fraction(0) for j in range(k)] for i in range(size)]

    def test_point_counts_one_member(self):
        c = count_tangencies(self.PENCIL, self.coordinate_subspace(4, 1))
        assert (c.total, c.distinct) == (1, 1)

    def test_line_counts_two(self):
        c = count_tangencies(self.PENCIL, self.coordinate_subspace(4, 2))
        assert (c.total, c.distinct) == (2, 2)

    def test_plane_counts_three(self):
        c = count_tangencies(self.PENCIL, self.coordinate_subspace(4, 3))
        assert (c.total, c.distinct) == (3, 3)

    def test_zero_restriction_flagged(self):
        q0 = SymmetricForm(
            [[Fraction(0), Fraction(1), Fraction(0)],
             [Fraction(1), Fraction(0), Fraction(0)],
             [Fraction(0), Fraction(0), Fraction(1)]]
        )
        p = Pencil(q0, diag(1, 1, 1))
        with pytest.raises(DegeneratePencilError):
            count_tangencies(p, self.coordinate_subspace(3, 1))

    def test_constant_restriction_flagged(self):
        p = Pencil(diag(1, 1, 2), diag(2, 2, 3))
        with pytest.raises(DegeneratePencilError):
            count_tangencies(p, self.coordinate_subspace(3, 2))

    def test_rank_deficient_basis_rejected(self):
        bad = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)],
               [Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]
        with pytest.raises(ValueError):
            count_tangencies(self.PENCIL, bad)


class TestBoundaryPencilNumbers:
    def test_matches_closed_form(self):
        for n, k in ((3, 1), (3, 2), (4, 1), (4, 3), (5, 2), (6, 1), (6, 5)):
            for seed in range(5):
                assert bk_number(n, k, seed) == n - k + 1

    def test_k_range_enforced(self):
        with pytest.raises(ValueError):
            bk_number(3, 0, 0)
        with pytest.raises(ValueError):
            bk_number(3, 3, 0)


EXPECTED_DIRECT = {
    "G.H1": 1,
    "G.H2": 2,
    "G.H3": 3,
    "G.E3": 4,
    "C1.H2": 1,
    "C1.H3": 2,
    "C1.E3": 3,
    "C1star.E2": 3,
    "C1star.H3": 1,
    "C3.E2": 3,
    "C2.H1": 1,
    "L2.H3": 1,
    "Gstar.E1": 4,
}


class TestDirectTableCounts:
    def test_counts_match_frozen_values(self):
        for seed in (0, 1, 2, 17):
            assert direct_table_counts(seed) == EXPECTED_DIRECT

    def test_counts_match_lattice_pairings(self):
        # the same numbers must come out of the intersection pairing; the
        # two computations share no code path
        curves = picard.curves_x3()
        divisors = {
            "H1": picard.H1_3, "H2": picard.H2_3, "H3": picard.H3_3,
            "E1": picard.E1_3, "E2": picard.E2_3, "E3": picard.E3_3,
        }
        counts = direct_table_counts(5)
        assert set(counts) == set(DIRECT_CHECK_PAIRS)
        for label, (curve, divisor) in DIRECT_CHECK_PAIRS.items():
            assert counts[label] == picard.pair(curves[curve], divisors[divisor]), label

    def test_dual_checks_subset(self):
        assert dual_pencil_checks(3) == {
            "Gstar.E1": 4,
            "C1star.E2": 3,
            "C1star.H3": 1,
        }
