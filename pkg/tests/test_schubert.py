import math
import random

import pytest

from completequadrics.schubert import (
    SchubertClass,
    duality_pair,
    grass_dim,
    p_dot_r2,
    pieri1,
    rectangle_tableaux,
    sigma,
    sigma1_power,
    sigma1_power_degree,
)


def syt_rectangle_oracle(rows, cols):
    # hook length formula, written out independently of the library helper
    prod = 1
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            prod *= (rows - i) + (cols - j) + 1
    return math.factorial(rows * cols) // prod


class TestClassBasics:
    def test_partition_normalization(self):
        assert sigma(1, 3, 2, 0) == sigma(1, 3, 2)
        assert sigma(1, 3).codim() == 0

    def test_box_validation(self):
        with pytest.raises(ValueError):
            sigma(1, 3, 3)  # wider than n-k = 2
        with pytest.raises(ValueError):
            sigma(1, 3, 1, 1, 1)  # more than k+1 = 2 rows
        with pytest.raises(ValueError):
            sigma(1, 3, 1, 2)  # not weakly decreasing

    def test_addition_and_scalar(self):
        a = sigma(1, 3, 2) + sigma(1, 3, 2)
        assert a == 2 * sigma(1, 3, 2)
        assert (a + (-2) * sigma(1, 3, 2)).is_zero()

    def test_mixed_codim_reported(self):
        mixed = sigma(1, 3, 2) + sigma(1, 3, 1)
        assert mixed.codim() is None

    def test_json_roundtrip(self):
        cls = 3 * sigma(2, 5, 2, 1) + sigma(2, 5, 1, 1, 1)
        assert SchubertClass.from_json(cls.to_json()) == cls

    def test_different_grassmannians_do_not_mix(self):
        with pytest.raises(ValueError):
            sigma(1, 3, 1) + sigma(1, 4, 1)


class TestPieri:
    def test_square_of_sigma1_on_lines_in_p3(self):
        assert sigma1_power(1, 3, 2) == sigma(1, 3, 2) + sigma(1, 3, 1, 1)

    def test_step_by_step_products(self):
        assert pieri1(sigma(1, 3, 2)) == sigma(1, 3, 2, 1)
        assert pieri1(sigma(1, 3, 1, 1)) == sigma(1, 3, 2, 1)
        assert pieri1(sigma(1, 3, 2, 1)) == sigma(1, 3, 2, 2)
        assert pieri1(sigma(1, 3, 2, 2)).is_zero()

    def test_linearity(self):
        rng = random.Random(11)
        for _ in range(20):
            a = SchubertClass(2, 5, {(2, 1): rng.randint(-4, 4), (1, 1): rng.randint(-4, 4)})
            b = SchubertClass(2, 5, {(3,): rng.randint(-4, 4), (2, 1): rng.randint(-4, 4)})
            assert pieri1(a + b) == pieri1(a) + pieri1(b)


class TestDuality:
    def test_self_dual_classes_on_lines_in_p3(self):
        assert duality_pair(sigma(1, 3, 2), sigma(1, 3, 2)) == 1
        assert duality_pair(sigma(1, 3, 1, 1), sigma(1, 3, 1, 1)) == 1
        assert duality_pair(sigma(1, 3, 2), sigma(1, 3, 1, 1)) == 0

    def test_lines_meeting_four_general_lines(self):
        # the classical count: sigma_1^4 = 2 lines meet four general lines
        assert duality_pair(sigma1_power(1, 3, 2), sigma1_power(1, 3, 2)) == 2

    def test_codim_mismatch_rejected(self):
        with pytest.raises(ValueError):
            duality_pair(sigma(1, 3, 1), sigma(1, 3, 2))

    def test_sigma1_is_self_adjoint(self):
        rng = random.Random(5)
        k, n = 2, 5
        dim = grass_dim(k, n)
        partitions_by_codim = {}
        for p in [(), (1,), (1, 1), (2,), (2, 1), (1, 1, 1), (3,), (2, 2),
                  (2, 1, 1), (3, 1), (2, 2, 1), (3, 2), (3, 1, 1), (2, 2, 2),
                  (3, 3), (3, 2, 1), (2, 2, 2), (3, 3, 1), (3, 2, 2),
                  (3, 3, 2), (3, 3, 3)]:
            partitions_by_codim.setdefault(sum(p), []).append(p)
        for _ in range(30):
            c = rng.randint(1, dim - 1)
            if c - 1 not in partitions_by_codim or dim - c not in partitions_by_codim:
                continue
            nonzero = [-3, -2, -1, 1, 2, 3]
            a = SchubertClass(k, n, {rng.choice(partitions_by_codim[c - 1]): rng.choice(nonzero)})
            b = SchubertClass(k, n, {rng.choice(partitions_by_codim[dim - c]): rng.choice(nonzero)})
            assert duality_pair(pieri1(a), b) == duality_pair(a, pieri1(b))


class TestDegrees:
    def test_lines_in_p3(self):
        assert sigma1_power_degree(1, 3, 4) == 2
        assert syt_rectangle_oracle(2, 2) == 2

    def test_lines_in_p4(self):
        assert sigma1_power_degree(1, 4, 6) == 5
        assert syt_rectangle_oracle(2, 3) == 5

    def test_planes_in_p5(self):
        assert sigma1_power_degree(2, 5, 9) == 42
        assert syt_rectangle_oracle(3, 3) == 42

    def test_projective_space_itself(self):
        for n in (1, 2, 3, 5):
            assert sigma1_power_degree(0, n, n) == 1

    def test_degree_matches_tableaux_oracle_generally(self):
        for k, n in ((0, 2), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (3, 4), (2, 5)):
            assert sigma1_power_degree(k, n, grass_dim(k, n)) == syt_rectangle_oracle(k + 1, n - k)
            assert rectangle_tableaux(k + 1, n - k) == syt_rectangle_oracle(k + 1, n - k)

    def test_wrong_power_rejected(self):
        with pytest.raises(ValueError):
            sigma1_power_degree(1, 3, 3)


def test_p_pairs_with_rank_two_curve_to_four():
    assert p_dot_r2() == 4
