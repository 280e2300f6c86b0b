"""Chow form tests.

The central identity -- evaluating the k-th compound on a Pluecker vector
equals the determinant of the restricted form -- is checked on seeded random
(form, subspace) pairs; degeneration limits are checked against expected
wedge-coordinate supports computed from the defining minors.
"""

import random
from fractions import Fraction

import pytest

from completequadrics.exact import MPoly, ff_det, mat_rank
from completequadrics.chowform import (
    PluckerVector,
    ProjectivePoint,
    chow_eval,
    chow_limit,
    flag_wedge,
    is_tangent,
    limit_support_coefficients,
    minors_proportional,
    plucker,
    wedge2_example_matrix,
)
from completequadrics.quadrics import SymmetricForm, random_form, restrict


def random_basis(rng, n, k):
    while True:
        b = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(n + 1)]
        if mat_rank(b) == k:
            return b


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chow_eval_equals_restricted_determinant(n):
    rng = random.Random(97 * n)
    for trial in range(6):
        q = random_form(n, rng.randint(1, n + 1), seed=5000 + 10 * n + trial)
        for k in range(1, n + 1):
            b = random_basis(rng, n, k)
            assert chow_eval(q, k, b) == ff_det(restrict(q, b).rows)


def test_plucker_coordinates_lex():
    b = [[1, 0], [0, 1], [0, 0], [0, 0]]
    p = plucker(b)
    assert isinstance(p, PluckerVector)
    assert p.coords == (1, 0, 0, 0, 0, 0)
    assert p.n == 3 and p.k == 2
    with pytest.raises(ValueError):
        plucker([[1, 2], [2, 4], [0, 0]])


def test_is_tangent_contained_plane():
    # a plane inside the quadric is tangent: the restriction vanishes
    q = SymmetricForm.diagonal([1, -1, 0, 0])
    b = [[0, 0], [0, 0], [1, 0], [0, 1]]
    assert chow_eval(q, 2, b) == 0
    assert is_tangent(q, 2, b)


def test_is_tangent_conic_line():
    q = SymmetricForm.diagonal([1, 1, -1])
    tangent_at_p = [[1, 0], [0, 1], [0, 1]]
    secant = [[1, 0], [0, 1], [0, 0]]
    assert is_tangent(q, 2, tangent_at_p)
    assert not is_tangent(q, 2, secant)
    with pytest.raises(ValueError):
        chow_eval(q, 1, tangent_at_p)


def test_minors_proportional_scaling():
    a = random_form(3, 4, seed=31)
    b3 = SymmetricForm([[3 * x for x in row] for row in a.rows])
    w = minors_proportional(b3, a, 2)
    assert w is not None and w.mu == 9 and w.lam == 3
    w3 = minors_proportional(b3, a, 3)
    assert w3 is not None and w3.mu == 27 and w3.lam == 3
    neg = SymmetricForm([[-x for x in row] for row in a.rows])
    wneg = minors_proportional(neg, a, 2)
    assert wneg is not None and wneg.mu == 1 and wneg.lam == -1


def test_minors_proportional_none():
    eye = SymmetricForm.diagonal([1, 1, 1, 1])
    other = SymmetricForm.diagonal([1, 1, 1, 2])
    assert minors_proportional(eye, other, 3) is None
    # rank below k: both compounds vanish, any scale works
    r1 = SymmetricForm.diagonal([1, 0, 0, 0])
    r1b = SymmetricForm.diagonal([0, 0, 0, 5])
    w = minors_proportional(r1, r1b, 2)
    assert w is not None and w.mu == 1 and w.lam is None


def test_projective_point_normalization():
    p = ProjectivePoint([Fraction(2, 3), Fraction(-4, 3)])
    assert p.coords == (1, -2)
    assert ProjectivePoint([-2, 4]) == p
    assert p.support() == (0, 1)
    with pytest.raises(ValueError):
        ProjectivePoint([0, 0])


def rank2_family(a, b, c):
    q0 = SymmetricForm.from_rational(
        [[0, "1/2", 0, 0], ["1/2", 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    )
    q1 = SymmetricForm(
        [
            [Fraction(0)] * 4,
            [Fraction(0)] * 4,
            [Fraction(0), Fraction(0), Fraction(a), Fraction(b, 2)],
            [Fraction(0), Fraction(0), Fraction(b, 2), Fraction(c)],
        ]
    )
    return q0, q1


def rank1_family(a, b, c, d, e, f):
    q0 = SymmetricForm.diagonal([1, 0, 0, 0])
    half = Fraction(1, 2)
    q1 = SymmetricForm(
        [
            [Fraction(0)] * 4,
            [Fraction(0), Fraction(a), b * half, c * half],
            [Fraction(0), b * half, Fraction(d), e * half],
            [Fraction(0), c * half, e * half, Fraction(f)],
        ]
    )
    return q0, q1


def proportional_support(got: dict, expected: dict) -> bool:
    if set(got) != set(expected):
        return False
    items = sorted(expected)
    k0 = items[0]
    return all(got[k] * expected[k0] == got[k0] * expected[k] for k in items)


@pytest.mark.parametrize("abc", [(1, 0, 0), (2, 3, 5), (-1, 7, 2), (0, 1, 0)])
def test_chow_limit_rank2_family(abc):
    # a plane pair degenerating from smooth quadrics: the limit Chow form in
    # line coordinates is the double of the singular line, supported on p0^2
    q0, q1 = rank2_family(*abc)
    pt = chow_limit(q0, q1, 2)
    assert limit_support_coefficients(pt) == {(0, 0): 1}


@pytest.mark.parametrize(
    "coeffs",
    [(1, 2, 3, 4, 5, 6), (1, 0, 0, 1, 0, 1), (2, -1, 0, 3, 0, -5), (0, 1, 1, 0, 1, 0)],
)
def test_chow_limit_rank1_family(coeffs):
    # double plane with marking conic a y^2 + b yz + c yw + d z^2 + e zw + f w^2:
    # the limit is that conic rewritten in the line coordinates p0, p1, p2
    a, b, c, d, e, f = coeffs
    q0, q1 = rank1_family(*coeffs)
    pt = chow_limit(q0, q1, 2)
    expected = {
        k: v
        for k, v in {
            (0, 0): Fraction(a),
            (0, 1): Fraction(b),
            (0, 2): Fraction(c),
            (1, 1): Fraction(d),
            (1, 2): Fraction(e),
            (2, 2): Fraction(f),
        }.items()
        if v
    }
    assert proportional_support(limit_support_coefficients(pt), expected)


def test_chow_limit_identically_singular():
    q0 = SymmetricForm.diagonal([1, 0, 0, 0])
    with pytest.raises(ValueError):
        chow_limit(q0, q0, 2)


def wedge_vars():
    return tuple("t%d" % j for j in (1, 2, 3)) + tuple("q%d" % r for r in (1, 2, 3))


def test_wedge2_example_matrix_outer_product():
    m = wedge2_example_matrix()
    vars = wedge_vars()
    one = MPoly.constant(1, vars)
    t1 = MPoly.variable("t1", vars)
    t2 = MPoly.variable("t2", vars)
    zero = MPoly(vars)
    v = [one, t2, zero, t1 * t2, zero, zero]
    for i in range(6):
        for j in range(6):
            assert m.rows[i][j] == v[i] * v[j]
    # spot entries, 1-indexed positions (1,2), (1,4), (2,4)
    assert m.rows[0][1] == t2
    assert m.rows[0][3] == t1 * t2
    assert m.rows[1][3] == t1 * t2 ** 2
    # rank-one consistency forces (2,2) = t2^2 (the square of (1,2) over (1,1))
    assert m.rows[1][1] == t2 ** 2
    assert m.rows[1][1] != one


@pytest.mark.parametrize("n", [2, 3])
def test_flag_wedge_constant_iff_j_differs(n):
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            _, constant = flag_wedge(n, k, j)
            assert constant == (j != k), (n, k, j)


def test_flag_wedge_surviving_parameter():
    limit, constant = flag_wedge(3, 2, 2)
    assert not constant
    vars = wedge_vars()
    t2 = MPoly.variable("t2", vars)
    assert limit.rows[0][1] == t2
    assert limit.rows[1][1] == t2 ** 2
    limit_c, constant_c = flag_wedge(3, 2, 1)
    assert constant_c
    assert limit_c.rows[0][0] == MPoly.constant(1, vars)
    with pytest.raises(ValueError):
        flag_wedge(3, 2, 5)
