"""Exact rational and polynomial arithmetic with fraction-free linear algebra.

Scalars are fractions.Fraction throughout.  Univariate polynomials (Poly1)
are dense coefficient lists, multivariate polynomials (MPoly) are sparse
exponent-tuple maps, and matrices are rectangular arrays whose entries all
live in a single ring (Fraction, Poly1 or MPoly).  Determinants use Bareiss
fraction-free elimination, so every intermediate value stays in the entry
ring; the only divisions performed are exact.
"""

from __future__ import annotations

from fractions import Fraction
import itertools

Rat = Fraction


class ExactLinalgError(Exception):
    pass


class InconsistentSystem(ExactLinalgError):
    """Linear system has no solution."""


class UnderdeterminedSystem(ExactLinalgError):
    """Linear system has a positive-dimensional solution set."""


def parse_rat(s) -> Fraction:
    """Parse "p/q" or "p" (also accepts ints) into a Fraction in lowest terms."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s).strip())


def format_rat(x: Fraction) -> str:
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


def _coerce_scalar(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


class Poly1:
    """Dense univariate polynomial over Fraction.

    Coefficients are stored lowest degree first with trailing zeros trimmed,
    so equal polynomials compare equal.  The zero polynomial has degree -1.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=(), var="t"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly1 is immutable")

    @classmethod
    def constant(cls, c, var="t"):
        return cls([c], var=var)

    @classmethod
    def variable(cls, var="t"):
        return cls([0, 1], var=var)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _check(self, other):
        if self.coeffs and other.coeffs and self.var != other.var:
            raise ValueError("mixed polynomial variables %r, %r" % (self.var, other.var))

    def _wrap(self, other):
        c = _coerce_scalar(other)
        if c is not None:
            return Poly1([c], var=self.var)
        if isinstance(other, Poly1):
            return other
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)],
            var=self.var if self.coeffs else other.var,
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly1([-c for c in self.coeffs], var=self.var)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly1([], var=self.var if self.coeffs else other.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly1(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative power")
        out = Poly1([1], var=self.var)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs and (not self.coeffs or not other.coeffs or self.var == other.var)

    def __hash__(self):
        return hash((self.var if self.coeffs else "", self.coeffs))

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly1([i * c for i, c in enumerate(self.coeffs)][1:], var=self.var)

    def valuation(self) -> int:
        """Largest m with var**m dividing self; 0 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def shift_down(self, m: int):
        """Divide by var**m; requires valuation >= m."""
        if any(self.coeffs[i] for i in range(min(m, len(self.coeffs)))):
            raise ValueError("not divisible by %s**%d" % (self.var, m))
        return Poly1(self.coeffs[m:], var=self.var)

    def __divmod__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            q = rem[-1] / lead
            k = len(rem) - 1 - d
            quo[k] = q
            for i in range(d + 1):
                rem[k + i] -= q * other.coeffs[i]
        return Poly1(quo, var=self.var), Poly1(rem, var=self.var)

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly1([c / lead for c in self.coeffs], var=self.var)

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                bits.append(format_rat(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else format_rat(c) + "*")
                bits.append("%s%s" % (head, self.var if i == 1 else "%s^%d" % (self.var, i)))
        return " + ".join(bits).replace("+ -", "- ")


def poly_gcd(a: Poly1, b: Poly1) -> Poly1:
    """Monic gcd over the rationals by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic()


def distinct_root_count(p: Poly1) -> tuple[int, int]:
    """Return (degree, number of distinct complex roots) of a nonzero polynomial.

    The distinct-root count is the degree of the squarefree part
    p / gcd(p, p'), so no root finding or factoring is involved.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined root count")
    if p.degree() == 0:
        return (0, 0)
    g = poly_gcd(p, p.derivative())
    return (p.degree(), p.exact_div(g).degree())


class MPoly:
    """Sparse multivariate polynomial over Fraction.

    terms maps exponent tuples (one slot per variable in vars) to nonzero
    coefficients.  All operands of a binary operation must share vars.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        object.__setattr__(self, "vars", tuple(vars))
        clean = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                e = tuple(int(x) for x in exps)
                if len(e) != len(self.vars):
                    raise ValueError("exponent tuple length mismatch")
                if any(x < 0 for x in e):
                    raise ValueError("negative exponent")
                clean[e] = clean.get(e, Fraction(0)) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def constant(cls, c, vars):
        vars = tuple(vars)
        return cls(vars, {tuple([0] * len(vars)): Fraction(c)})

    @classmethod
    def variable(cls, name, vars):
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _wrap(self, other):
        c = _coerce_scalar(other)
        if c is not None:
            return MPoly.constant(c, self.vars)
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError("mixed variable rings")
            return other
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative power")
        out = MPoly.constant(1, self.vars)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def degree_in(self, name: str) -> int:
        """Highest exponent of one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def min_exponent(self, name: str) -> int:
        """Smallest exponent of one variable over the nonzero terms."""
        if not self.terms:
            raise ValueError("zero polynomial")
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    def divide_monomial(self, exps):
        """Exactly divide by vars**exps (a monomial)."""
        exps = tuple(int(x) for x in exps)
        terms = {}
        for e, c in self.terms.items():
            ne = tuple(a - b for a, b in zip(e, exps))
            if any(x < 0 for x in ne):
                raise ValueError("not divisible by the monomial")
            terms[ne] = c
        return MPoly(self.vars, terms)

    def substitute_zero(self, names):
        """Set each named variable to 0, dropping every term that uses one."""
        idx = [self.vars.index(n) for n in names]
        terms = {e: c for e, c in self.terms.items() if all(e[i] == 0 for i in idx)}
        return MPoly(self.vars, terms)

    def substitute(self, values: dict):
        """Replace named variables by Fractions; the rest stay symbolic."""
        out = MPoly(self.vars)
        for e, c in self.terms.items():
            coeff = c
            ne = list(e)
            for name, val in values.items():
                i = self.vars.index(name)
                coeff *= Fraction(val) ** e[i]
                ne[i] = 0
            out = out + MPoly(self.vars, {tuple(ne): coeff})
        return out

    def _leading(self):
        # lex leading term
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other):
        """Exact division (long division in lex order; raises if inexact)."""
        other = self._wrap(other)
        if other is None or other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quo = MPoly(self.vars)
        de, dc = other._leading()
        while not rem.is_zero():
            re, rc = rem._leading()
            qe = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in qe):
                raise ValueError("inexact multivariate division")
            t = MPoly(self.vars, {qe: rc / dc})
            quo = quo + t
            rem = rem - t * other
        return quo

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else "%s^%d" % (v, k) for v, k in zip(self.vars, e) if k
            )
            if not mono:
                bits.append(format_rat(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(format_rat(c) + "*" + mono)
        return " + ".join(bits).replace("+ -", "- ")


# -- matrices ---------------------------------------------------------------


class RingMatrix:
    """Rectangular matrix over a single ring (Fraction, Poly1 or MPoly)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RingMatrix is immutable")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, RingMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def det(self):
        return ff_det(self.rows)

    def rank(self):
        return mat_rank(self.rows)

    def __repr__(self):
        return "RingMatrix(%r)" % (self.rows,)


def _rows(m):
    if isinstance(m, RingMatrix):
        return [list(r) for r in m.rows]
    return [list(r) for r in m]


def _one_like(x):
    return x ** 0


def _zero_like(x):
    return x * 0


def _exact_div(a, b):
    if isinstance(a, (int, Fraction)):
        return Fraction(a) / b
    return a.exact_div(b)


def mat_transpose(m):
    m = _rows(m)
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    a, b = _rows(a), _rows(b)
    if not a or not b:
        return []
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch in matrix product")
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([sum((x * y for x, y in zip(row, col)), _zero_like(row[0])) for col in bt])
    return out


def ff_det(m):
    """Determinant by Bareiss fraction-free elimination with row pivoting.

    Works verbatim over Fraction, Poly1 and MPoly entries: every division
    performed is exact in the entry ring.
    """
    a = _rows(m)
    n = len(a)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return a[0][0]
    one = _one_like(a[0][0])
    zero = _zero_like(a[0][0])
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = zero
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def mat_rank(m) -> int:
    """Rank of a matrix with Fraction entries (exact Gaussian elimination)."""
    a = _rows(m)
    if not a:
        return 0
    for row in a:
        for x in row:
            if not isinstance(x, (int, Fraction)):
                raise TypeError("mat_rank expects rational entries")
    rows, cols = len(a), len(a[0])
    rank = 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def adjugate(m):
    """Adjugate (transposed cofactor matrix); satisfies M adj(M) = det(M) I."""
    a = _rows(m)
    n = len(a)
    if n == 0 or any(len(r) != n for r in a):
        raise ValueError("adjugate of a non-square matrix")
    if n == 1:
        return [[_one_like(a[0][0])]]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[a[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            d = ff_det(minor)
            out[j][i] = d if (i + j) % 2 == 0 else -d
    return out


def solve_exact(a, b):
    """Solve A x = b exactly over the rationals.

    Returns the unique solution vector.  Raises InconsistentSystem when no
    solution exists and UnderdeterminedSystem when the solution set has
    free variables; this function never guesses.
    """
    a = _rows(a)
    b = [Fraction(x) for x in b]
    if len(a) != len(b):
        raise ValueError("rhs length mismatch")
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [[Fraction(x) for x in a[i]] + [b[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols]:
            raise InconsistentSystem("no solution")
    if len(pivots) < cols:
        raise UnderdeterminedSystem("solution set has %d free variables" % (cols - len(pivots)))
    x = [Fraction(0)] * cols
    for row, c in enumerate(pivots):
        x[c] = aug[row][cols]
    return x


def k_subsets(n: int, k: int):
    """Lexicographically ordered k-element subsets of range(n)."""
    return list(itertools.combinations(range(n), k))
