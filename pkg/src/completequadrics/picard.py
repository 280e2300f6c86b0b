"""Divisor and curve lattices of the space of complete quadrics on P^n.

The Picard group has the nef basis H_1..H_n (pullbacks of the hyperplane
classes under the n wedge maps) and the boundary classes E_1..E_n related by

    E_i = 2 H_i - H_{i-1} - H_{i+1},   with H_0 = H_{n+1} = 0,

so the boundary-to-nef change of basis is the Cartan matrix of type A_n (its
determinant is n+1).  Curves are written in the basis Fl_1..Fl_n dual to the
H_i; all intersection pairings reduce to this duality, which is what lets
the whole X_3 intersection table be regenerated from its H columns alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import format_rat, parse_rat, solve_exact
from .quadrics import quadric_space_dim, stratum_codim

BASES = ("H", "mixed", "E")


@dataclass(frozen=True)
class DivisorClass:
    """Divisor class on the space of complete quadrics of P^n.

    basis "H" is H_1..H_n, basis "E" is E_1..E_n, and basis "mixed" is the
    blowup presentation H_1, E_1, .., E_{n-1}.
    """

    n: int
    basis: str
    coeffs: tuple

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError("unknown basis %r" % (self.basis,))
        if self.n < 2:
            raise ValueError("need n >= 2")
        coeffs = tuple(parse_rat(c) for c in self.coeffs)
        if len(coeffs) != self.n:
            raise ValueError("expected %d coefficients" % self.n)
        object.__setattr__(self, "coeffs", coeffs)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "coeffs": [format_rat(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict):
        return cls(int(data["n"]), data["basis"], tuple(data["coeffs"]))


@dataclass(frozen=True)
class CurveClass:
    """Curve class in the basis Fl_1..Fl_n dual to the nef basis."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(parse_rat(c) for c in self.coeffs)
        if len(coeffs) != self.n:
            raise ValueError("expected %d coefficients" % self.n)
        object.__setattr__(self, "coeffs", coeffs)

    def to_json(self) -> dict:
        return {"n": self.n, "basis": "Fl", "coeffs": [format_rat(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict):
        if data.get("basis", "Fl") != "Fl":
            raise ValueError("curve classes use the Fl basis")
        return cls(int(data["n"]), tuple(data["coeffs"]))


def fl_curve(n: int, j: int) -> CurveClass:
    """The j-th flag curve class Fl_j (dual to H_j)."""
    if not 1 <= j <= n:
        raise ValueError("index out of range")
    return CurveClass(n, tuple(Fraction(int(i == j - 1)) for i in range(n)))


class LatticeRelations:
    """Change-of-basis data between the H, E and mixed presentations."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n

    def e_in_h(self, i: int):
        """H coefficients of E_i (a row of the A_n Cartan matrix)."""
        if not 1 <= i <= self.n:
            raise ValueError("index out of range")
        row = [Fraction(0)] * self.n
        row[i - 1] = Fraction(2)
        if i - 2 >= 0:
            row[i - 2] = Fraction(-1)
        if i < self.n:
            row[i] = Fraction(-1)
        return row

    def basis_matrix(self, basis: str):
        """Columns are the basis vectors written in H coordinates."""
        n = self.n
        if basis == "H":
            return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        if basis == "E":
            cols = [self.e_in_h(i) for i in range(1, n + 1)]
        elif basis == "mixed":
            cols = [[Fraction(int(i == 0)) for i in range(n)]]
            cols += [self.e_in_h(i) for i in range(1, n)]
        else:
            raise ValueError("unknown basis %r" % (basis,))
        return [[cols[j][i] for j in range(n)] for i in range(n)]


def convert(d: DivisorClass, basis: str) -> DivisorClass:
    """Rewrite a divisor class in another named basis (exactly)."""
    if basis not in BASES:
        raise ValueError("unknown basis %r" % (basis,))
    if basis == d.basis:
        return d
    rel = LatticeRelations(d.n)
    m_from = rel.basis_matrix(d.basis)
    h = [sum(m_from[i][j] * d.coeffs[j] for j in range(d.n)) for i in range(d.n)]
    if basis == "H":
        return DivisorClass(d.n, "H", tuple(h))
    return DivisorClass(d.n, basis, tuple(solve_exact(rel.basis_matrix(basis), h)))


def pair(c: CurveClass, d: DivisorClass) -> Fraction:
    """Intersection number curve . divisor via Fl_j . H_i = delta_ij."""
    if c.n != d.n:
        raise ValueError("mismatched ambient dimensions")
    h = convert(d, "H").coeffs
    return sum(ci * hi for ci, hi in zip(c.coeffs, h))


@dataclass(frozen=True)
class ConeMembership:
    contains: bool
    interior: bool


def cone_membership(d: DivisorClass, cone: str) -> ConeMembership:
    """Membership in the nef, effective or (n=3) movable cone.

    nef: nonnegative H coefficients; eff: nonnegative E coefficients; mov
    (n=3 only): the cone generated by H_1, H_2, H_3 and P, tested as the
    union of the simplicial cones (H_1,H_2,H_3) and (H_1,H_3,P).  The
    interior flag asks for strictly positive coefficients in an accepting
    generator triple, so points of the shared internal wall (H_1,H_3) are
    not flagged interior.
    """
    if cone == "nef":
        h = convert(d, "H").coeffs
        return ConeMembership(all(c >= 0 for c in h), all(c > 0 for c in h))
    if cone == "eff":
        e = convert(d, "E").coeffs
        return ConeMembership(all(c >= 0 for c in e), all(c > 0 for c in e))
    if cone == "mov":
        if d.n != 3:
            raise ValueError("movable cone data is only available for n = 3")
        h = convert(d, "H").coeffs
        contains = interior = False
        for triple in ((H1_3, H2_3, H3_3), (H1_3, H3_3, class_P())):
            cols = [list(convert(g, "H").coeffs) for g in triple]
            try:
                x = solve_exact([[cols[j][i] for j in range(3)] for i in range(3)], h)
            except Exception:
                continue
            if all(c >= 0 for c in x):
                contains = True
                if all(c > 0 for c in x):
                    interior = True
        return ConeMembership(contains, interior)
    raise ValueError("unknown cone %r" % (cone,))


def canonical(n: int, method: str = "nefbasis") -> DivisorClass:
    """Canonical class, in H coordinates.

    method "nefbasis" uses the closed form -2H_1 - H_2 - .. - H_{n-1} - 2H_n;
    method "blowup" assembles -(N+1) H_1 + sum_i (codim_i - 1) E_i from the
    iterated-blowup discrepancies and converts.  The two agree for every n.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if method == "nefbasis":
        coeffs = [Fraction(-1)] * n
        coeffs[0] = Fraction(-2)
        coeffs[-1] = Fraction(-2)
        return DivisorClass(n, "H", tuple(coeffs))
    if method == "blowup":
        big_n = quadric_space_dim(n)
        mixed = [Fraction(-(big_n + 1))]
        mixed += [Fraction(stratum_codim(n, i) - 1) for i in range(1, n)]
        return convert(DivisorClass(n, "mixed", tuple(mixed)), "H")
    raise ValueError("unknown method %r" % (method,))


def is_fano(n: int) -> bool:
    """True when the anticanonical class has strictly positive nef coordinates."""
    k = canonical(n, "nefbasis")
    return all(-c > 0 for c in k.coeffs)


def derive_class_from_pairings(rows, n: int, basis: str = "H") -> DivisorClass:
    """Solve for the divisor class with prescribed curve pairings.

    rows is a list of (CurveClass, value) conditions; the class is expressed
    in the requested basis.  Curve sets that do not span raise
    UnderdeterminedSystem, contradictory conditions raise InconsistentSystem.
    """
    rel = LatticeRelations(n)
    basis_cols = rel.basis_matrix(basis)
    mat = []
    rhs = []
    for curve, value in rows:
        if curve.n != n:
            raise ValueError("curve lives on the wrong space")
        mat.append(
            [
                sum(curve.coeffs[i] * basis_cols[i][j] for i in range(n))
                for j in range(n)
            ]
        )
        rhs.append(parse_rat(value))
    return DivisorClass(n, basis, tuple(solve_exact(mat, rhs)))


def xi(d: DivisorClass) -> DivisorClass:
    """The duality involution on n = 3 classes: swaps H_1 and H_3."""
    if d.n != 3:
        raise ValueError("the duality involution is implemented for n = 3")
    h = convert(d, "H").coeffs
    return convert(DivisorClass(3, "H", (h[2], h[1], h[0])), d.basis)


# -- named n = 3 classes -----------------------------------------------------

H1_3 = DivisorClass(3, "H", (1, 0, 0))
H2_3 = DivisorClass(3, "H", (0, 1, 0))
H3_3 = DivisorClass(3, "H", (0, 0, 1))
E1_3 = DivisorClass(3, "E", (1, 0, 0))
E2_3 = DivisorClass(3, "E", (0, 1, 0))
E3_3 = DivisorClass(3, "E", (0, 0, 1))


def class_P() -> DivisorClass:
    """The extra movable generator 2(2H_1 - H_2 + 2H_3) on the n = 3 space."""
    return DivisorClass(3, "H", (4, -2, 4))


# order, Fl coordinates and covered locus of the n = 3 test curves; the
# curve names follow the geometry: G/G* pencils of quadrics and of dual
# quadrics, C_i families inside the boundary divisors, L2 a marked-line
# pencil, C12 the family sweeping the rank-1-with-degenerate-marking locus
CURVE_TABLE_X3 = (
    ("G", (1, 2, 3), "X3"),
    ("Gstar", (3, 2, 1), "X3"),
    ("C1", (0, 1, 2), "E1"),
    ("C1star", (0, 2, 1), "E1"),
    ("C2", (1, 0, 0), "E2"),
    ("C3", (1, 2, 0), "E3"),
    ("C12", (0, 1, 0), "E13"),
    ("L2", (0, 0, 1), "E2"),
)

CURVE_DISPLAY = {
    "G": "G",
    "Gstar": "G*",
    "C1": "C1",
    "C1star": "C1*",
    "C2": "C2",
    "C3": "C3",
    "C12": "C1,2",
    "L2": "L2",
}


def curves_x3() -> dict:
    """Named n = 3 curve classes, including the auxiliary rank-2 pencil R2."""
    out = {name: CurveClass(3, coeffs) for name, coeffs, _ in CURVE_TABLE_X3}
    out["R2"] = CurveClass(3, (1, 2, 1))
    return out


@dataclass(frozen=True)
class TableRow:
    curve: str
    entries: tuple  # pairings with H1, H2, H3, E1, E2, E3
    cover: str


def table_x3():
    """The full 8 x 6 intersection table of the n = 3 space.

    Only the H columns are stored (they are the Fl coordinates of the
    curves); the E columns are recomputed through the lattice relations, so
    the table is a derived object, not a transcription.
    """
    divisors = [H1_3, H2_3, H3_3, E1_3, E2_3, E3_3]
    rows = []
    for name, coeffs, cover in CURVE_TABLE_X3:
        c = CurveClass(3, coeffs)
        rows.append(TableRow(name, tuple(pair(c, d) for d in divisors), cover))
    return rows


# the intermediate space X(1) (one blowup of the P^9 of quadric surfaces):
# rank-2 Picard data used by cone walk sanity checks
INTERMEDIATE_X1 = {
    "nef_generators": ("H1", "H2"),
    "canonical_mixed": (Fraction(-10), Fraction(5)),  # -10 H1 + 5 E1
    "canonical_nef": (Fraction(0), Fraction(-5)),  # equals -5 H2
}


def eff_to_h_determinant(n: int) -> Fraction:
    """Determinant of the boundary-to-nef change of basis (equals n + 1)."""
    from .exact import ff_det

    return ff_det(LatticeRelations(n).basis_matrix("E"))
