"""Chow forms of quadrics in wedge coordinates.

The k-th compound of a quadric Q is a quadric form on the Pluecker
coordinates of (k-1)-planes: evaluating it on plucker(B) gives exactly
det(B^T Q B), so its zero locus is the variety of tangent (k-1)-planes.
This module evaluates that identity, follows Chow forms along degenerating
one-parameter families, and detects which wedge powers stay constant along
coordinate flag degenerations (the mechanism behind the boundary
contractions of the space of complete quadrics).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import MPoly, Poly1, ff_det, k_subsets, mat_mul, mat_rank, mat_transpose
from .quadrics import SymmetricForm, compound


class ProjectivePoint:
    """Point of a projective space with a canonical rational normalization.

    Coordinates are scaled to coprime integers whose first nonzero entry is
    positive, so equal points compare equal as tuples.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [Fraction(c) for c in coords]
        if not any(coords):
            raise ValueError("projective point needs a nonzero coordinate")
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coords]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        first = next(v for v in ints if v)
        if first < 0:
            ints = [-v for v in ints]
        object.__setattr__(self, "coords", tuple(Fraction(v) for v in ints))

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    def support(self):
        return tuple(i for i, c in enumerate(self.coords) if c)

    def __eq__(self, other):
        if isinstance(other, ProjectivePoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "ProjectivePoint(%s)" % (", ".join(str(c) for c in self.coords))


@dataclass(frozen=True)
class PluckerVector:
    """Maximal minors of a basis matrix, in lexicographic subset order."""

    n: int
    k: int
    coords: tuple

    def point(self) -> ProjectivePoint:
        return ProjectivePoint(self.coords)


def plucker(basis) -> PluckerVector:
    """Pluecker vector of the span of the columns of an (n+1) x k matrix."""
    b = [list(r) for r in basis]
    k = len(b[0]) if b else 0
    if k == 0 or mat_rank(b) != k:
        raise ValueError("basis must have full column rank")
    coords = tuple(ff_det([b[i] for i in s]) for s in k_subsets(len(b), k))
    return PluckerVector(n=len(b) - 1, k=k, coords=coords)


def chow_eval(q: SymmetricForm, k: int, basis) -> Fraction:
    """Evaluate the k-th Chow form of q on the span of basis.

    Equals det of the restricted form: p^T compound(q, k) p = det(B^T Q B)
    with p = plucker(B).  Zero exactly when the (k-1)-plane is tangent.
    """
    p = plucker(basis)
    if p.k != k:
        raise ValueError("basis spans a plane of the wrong dimension")
    c = compound(q, k).rows
    m = len(p.coords)
    return sum(p.coords[i] * c[i][j] * p.coords[j] for i in range(m) for j in range(m))


def is_tangent(q: SymmetricForm, k: int, basis) -> bool:
    """True when the (k-1)-plane spanned by basis is tangent to the quadric."""
    return chow_eval(q, k, basis) == 0


@dataclass(frozen=True)
class ProportionalityWitness:
    """Scale factor between two compound matrices; mu = lam**k for full rank."""

    mu: Fraction
    lam: Fraction | None


def minors_proportional(a: SymmetricForm, b: SymmetricForm, k: int):
    """Witness that compound(a, k) = mu * compound(b, k), or None.

    A nonsingular quadric is determined by its k-th minors up to scale: when
    both forms are invertible and a witness exists, the underlying scale
    a = lam * b is recovered and verified, with mu = lam**k.
    """
    if a.n != b.n:
        raise ValueError("forms must share an ambient space")
    ca = compound(a, k).rows
    cb = compound(b, k).rows
    m = len(ca)
    flat_a = [ca[i][j] for i in range(m) for j in range(m)]
    flat_b = [cb[i][j] for i in range(m) for j in range(m)]
    if not any(flat_b):
        return ProportionalityWitness(mu=Fraction(1), lam=None) if not any(flat_a) else None
    idx = next(i for i, v in enumerate(flat_b) if v)
    mu = flat_a[idx] / flat_b[idx]
    if any(x != mu * y for x, y in zip(flat_a, flat_b)):
        return None
    lam = None
    if ff_det(a.rows) and ff_det(b.rows):
        flat_qa = [x for r in a.rows for x in r]
        flat_qb = [x for r in b.rows for x in r]
        j = next(i for i, v in enumerate(flat_qb) if v)
        cand = flat_qa[j] / flat_qb[j]
        if all(x == cand * y for x, y in zip(flat_qa, flat_qb)) and cand ** k == mu:
            lam = cand
    return ProportionalityWitness(mu=mu, lam=lam)


def chow_limit(q0: SymmetricForm, q1: SymmetricForm, k: int) -> ProjectivePoint:
    """Limit of the k-th Chow forms of q0 + t*q1 as t -> 0.

    The compound matrix of the pencil has polynomial entries; dividing out
    the largest common power of t and then setting t = 0 gives the limit
    point in the projectivized space of wedge-coordinate quadrics.  The
    coordinates are the limit matrix entries in row-major order (no radical
    is taken, so a nonreduced limit keeps its multiplicity structure).
    """
    if q0.n != q1.n:
        raise ValueError("forms must share an ambient space")
    size = q0.n + 1
    pencil = SymmetricForm(
        [[Poly1([q0.rows[i][j], q1.rows[i][j]]) for j in range(size)] for i in range(size)]
    )
    c = compound(pencil, k).rows
    vals = [e.valuation() for row in c for e in row if not e.is_zero()]
    if not vals:
        raise ValueError("family has identically vanishing k-th minors")
    shift = min(vals)
    coords = [e.shift_down(shift).coefficient(0) for row in c for e in row]
    return ProjectivePoint(coords)


def limit_support_coefficients(point: ProjectivePoint) -> dict:
    """Read a limit point as a quadric polynomial in Pluecker coordinates.

    Maps index pairs (i, j) with i <= j to the coefficient of p_i p_j in the
    quadratic form whose symmetric matrix has the point's coordinates; only
    nonzero monomials are reported.
    """
    m2 = len(point.coords)
    m = int(m2 ** 0.5)
    if m * m != m2:
        raise ValueError("coordinate vector is not a flattened square matrix")
    out = {}
    for i in range(m):
        for j in range(i, m):
            c = point.coords[i * m + j] if i == j else 2 * point.coords[i * m + j]
            if c:
                out[(i, j)] = c
    return out


# -- flag degenerations ------------------------------------------------------


def _wedge_vars(n: int):
    return tuple("t%d" % j for j in range(1, n + 1)) + tuple("q%d" % r for r in range(1, n + 1))


def _wedge_q_limit(n: int, k: int, live: tuple):
    """Compound of M^T q M with the common q-monomial content removed, at q = 0.

    M is unipotent upper-triangular with the live t_j in slot (j, j+1) and
    q = diag(1, q1, q1 q2, ...) scans across all coordinate hyperplane
    flags at once.
    """
    vars = _wedge_vars(n)
    one = MPoly.constant(1, vars)
    zero = MPoly(vars)
    size = n + 1
    m = [[one if i == j else zero for j in range(size)] for i in range(size)]
    for j in live:
        m[j - 1][j] = MPoly.variable("t%d" % j, vars)
    d = [one]
    for r in range(1, size):
        d.append(d[-1] * MPoly.variable("q%d" % r, vars))
    qmat = [[d[i] if i == j else zero for j in range(size)] for i in range(size)]
    big = mat_mul(mat_transpose(m), mat_mul(qmat, m))
    comp = compound(SymmetricForm(big), k).rows
    comp = [list(row) for row in comp]
    qnames = ["q%d" % r for r in range(1, size)]
    nonzero = [e for row in comp for e in row if not e.is_zero()]
    shift = [0] * len(vars)
    for name in qnames:
        i = vars.index(name)
        shift[i] = min(e.min_exponent(name) for e in nonzero)
    dim = len(comp)
    for i in range(dim):
        for j in range(dim):
            if not comp[i][j].is_zero():
                comp[i][j] = comp[i][j].divide_monomial(shift)
            comp[i][j] = comp[i][j].substitute_zero(qnames)
    return SymmetricForm(comp)


def flag_wedge(n: int, k: int, j: int):
    """Limit k-th Chow form along the flag degeneration moved by t_j.

    Returns (matrix, constant): the limit wedge-coordinate quadric as a
    matrix over MPoly in t_j, and whether it is projectively independent of
    t_j.  The limit is constant exactly when j != k, which is what makes
    the k-th wedge map contract the j-th flag curve.
    """
    if not (1 <= k <= n and 1 <= j <= n):
        raise ValueError("k and j must lie in 1..n")
    limit = _wedge_q_limit(n, k, (j,))
    name = "t%d" % j
    entries = [e for row in limit.rows for e in row if not e.is_zero()]
    tmin = min(e.min_exponent(name) for e in entries)
    if tmin:
        shift = [0] * len(entries[0].vars)
        shift[entries[0].vars.index(name)] = tmin
        cleared = [
            [e if e.is_zero() else e.divide_monomial(shift) for e in row] for row in limit.rows
        ]
        limit = SymmetricForm(cleared)
    constant = all(e.degree_in(name) <= 0 for row in limit.rows for e in row)
    return limit, constant


def wedge2_example_matrix() -> SymmetricForm:
    """The limit second wedge of a fully degenerating flag family on P^3.

    All three flag parameters are live; the result is the rank-one outer
    product v v^T with v = (1, t2, 0, t1*t2, 0, 0).  Rank-one consistency
    forces the (2,2) entry (1-indexed) to be t2^2: it is the square of the
    (1,2) entry divided by the (1,1) entry, not a unit.
    """
    return _wedge_q_limit(3, 2, (1, 2, 3))
