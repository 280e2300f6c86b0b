"""Command line interface for exact complete-quadric computations.

Every subcommand prints deterministic output: JSON with sorted keys (and a
schema tag) or, where noted, a fixed-width text rendering.  Exit status 0
means success, 1 means a verification ran and failed, 2 means the arguments
or input data were unusable.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import chambers, chowform, pencils, picard, quadrics, schubert, verify
from .exact import ExactLinalgError
from .picard import CurveClass, DivisorClass
from .quadrics import SymmetricForm

SCHEMA = "cq/1"


def _fr(x) -> str:
    return str(Fraction(x))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _parse_divisor(text: str) -> DivisorClass:
    data = json.loads(text)
    if not isinstance(data, dict) or "coeffs" not in data or "basis" not in data:
        raise ValueError('divisor JSON needs "basis" and "coeffs"')
    data.setdefault("n", len(data["coeffs"]))
    return DivisorClass.from_json(data)


def _parse_form(text: str) -> SymmetricForm:
    data = json.loads(text)
    if isinstance(data, dict) and "matrix" in data:
        return SymmetricForm.from_json(data)
    if isinstance(data, list):
        return SymmetricForm.from_rational(data)
    raise ValueError("form JSON must be a matrix or {n, matrix}")


_DIVISORS_3 = {
    "H1": picard.H1_3, "H2": picard.H2_3, "H3": picard.H3_3,
    "E1": picard.E1_3, "E2": picard.E2_3, "E3": picard.E3_3,
}


# -- chow ----------------------------------------------------------------------


def cmd_chow(args) -> int:
    q = _parse_form(args.form)
    if args.limit_toward is not None:
        q1 = _parse_form(args.limit_toward)
        pt = chowform.chow_limit(q, q1, args.k)
        support = chowform.limit_support_coefficients(pt)
        _emit({
            "schema": SCHEMA,
            "command": "chow-limit",
            "k": args.k,
            "point": [_fr(c) for c in pt.coords],
            "support": {"%d,%d" % ij: _fr(v) for ij, v in sorted(support.items())},
        })
        return 0
    m = quadrics.compound(q, args.k)
    _emit({
        "schema": SCHEMA,
        "command": "chow-compound",
        "k": args.k,
        "indexing": "rows and columns are the size-k subsets of {0..n} in lexicographic order",
        "matrix": [[_fr(e) for e in row] for row in m.rows],
    })
    return 0


# -- pencil --------------------------------------------------------------------


def cmd_pencil(args) -> int:
    if args.verify_table:
        counts = pencils.direct_table_counts(args.seed)
        curves = picard.curves_x3()
        entries = []
        all_ok = True
        for label in sorted(counts):
            curve, divisor = pencils.DIRECT_CHECK_PAIRS[label]
            expected = int(picard.pair(curves[curve], _DIVISORS_3[divisor]))
            ok = counts[label] == expected
            all_ok = all_ok and ok
            entries.append({
                "entry": label,
                "count": counts[label],
                "pairing": expected,
                "ok": ok,
            })
        _emit({
            "schema": SCHEMA,
            "command": "pencil-verify-table",
            "seed": args.seed,
            "entries": entries,
            "all_ok": all_ok,
        })
        return 0 if all_ok else 1
    if args.n is None or args.k is None:
        raise ValueError("pencil needs --n and --k (or --verify-table)")
    count = pencils.bk_number(args.n, args.k, args.seed)
    _emit({
        "schema": SCHEMA,
        "command": "pencil-count",
        "n": args.n,
        "k": args.k,
        "seed": args.seed,
        "degenerations": count,
    })
    return 0


# -- lattice commands ----------------------------------------------------------


def cmd_cone(args) -> int:
    d = _parse_divisor(args.divisor)
    res = picard.cone_membership(d, args.cone)
    _emit({
        "schema": SCHEMA,
        "command": "cone",
        "cone": args.cone,
        "divisor": d.to_json(),
        "contains": res.contains,
        "interior": res.interior,
    })
    return 0


def cmd_canonical(args) -> int:
    k = picard.convert(picard.canonical(args.n, args.method), args.basis)
    _emit({
        "schema": SCHEMA,
        "command": "canonical",
        "method": args.method,
        "divisor": k.to_json(),
    })
    return 0


def cmd_pair(args) -> int:
    curves = picard.curves_x3()
    display_to_key = {v: k for k, v in picard.CURVE_DISPLAY.items()}
    name = args.curve
    if name in curves:
        c = curves[name]
    elif name in display_to_key:
        c = curves[display_to_key[name]]
    else:
        c = CurveClass.from_json(json.loads(name))
    d = _parse_divisor(args.divisor)
    _emit({
        "schema": SCHEMA,
        "command": "pair",
        "curve": c.to_json(),
        "divisor": d.to_json(),
        "value": _fr(picard.pair(c, d)),
    })
    return 0


def cmd_table(args) -> int:
    rows = picard.table_x3()
    if args.text:
        names = [picard.CURVE_DISPLAY[r.curve] for r in rows]
        width = max(len(s) for s in names) + 2
        cols = ["H1", "H2", "H3", "E1", "E2", "E3"]
        out = ["".ljust(width) + "".join(c.rjust(5) for c in cols) + "   covers"]
        for r, name in zip(rows, names):
            line = name.ljust(width)
            line += "".join(str(int(e)).rjust(5) for e in r.entries)
            line += "   " + r.cover
            out.append(line)
        sys.stdout.write("\n".join(out) + "\n")
        return 0
    _emit({
        "schema": SCHEMA,
        "command": "table",
        "columns": ["H1", "H2", "H3", "E1", "E2", "E3"],
        "rows": [
            {
                "curve": picard.CURVE_DISPLAY[r.curve],
                "entries": [int(e) for e in r.entries],
                "covers": r.cover,
            }
            for r in rows
        ],
    })
    return 0


# -- chamber -------------------------------------------------------------------


def cmd_chamber(args) -> int:
    if args.census is not None:
        res = chambers.chamber_census(args.census, args.seed)
        _emit({"schema": SCHEMA, "command": "chamber-census", "seed": args.seed, **res})
        return 0
    if args.segment is not None:
        t = Fraction(args.segment)
        report = chambers.classify_segment(t)
        _emit({
            "schema": SCHEMA,
            "command": "chamber-segment",
            "t": _fr(t),
            **report.to_json(),
        })
        return 0
    if args.divisor is None:
        raise ValueError("chamber needs one of --divisor, --census, --segment")
    report = chambers.classify(_parse_divisor(args.divisor))
    _emit({"schema": SCHEMA, "command": "chamber", **report.to_json()})
    return 0


# -- schubert ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(sigma\d+(?:,\d+)*|\d+|[-+*^()])\s*")


def _tokenize(expr: str):
    pos, out = 0, []
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if m is None:
            raise ValueError("unreadable expression near %r" % expr[pos:])
        out.append(m.group(1))
        pos = m.end()
    return out


class _ExprParser:
    """Recursive-descent evaluator over integers and Schubert classes.

    Products are restricted to what the calculus here supports: scalar
    multiples, multiplication by sigma1 (Pieri), and the pairing of classes
    in complementary codimension.
    """

    def __init__(self, tokens, k, n):
        self.tokens = tokens
        self.pos = 0
        self.k = k
        self.n = n

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ValueError("expression ended early")
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ValueError("unexpected token %r" % self.peek())
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            if op == "-":
                rhs = self.mul(-1, rhs)
            value = self.add(value, rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = self.mul(value, self.factor())
        return value

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise ValueError("exponent must be a literal integer")
            return self.power(base, int(exp))
        return base

    def atom(self):
        tok = self.take()
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ValueError("missing closing parenthesis")
            return value
        if tok == "-":
            return self.mul(-1, self.atom())
        if tok.isdigit():
            return int(tok)
        if tok.startswith("sigma"):
            parts = tuple(int(p) for p in tok[5:].split(","))
            return schubert.sigma(self.k, self.n, *parts)
        raise ValueError("unexpected token %r" % tok)

    def add(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            return a + b
        if isinstance(a, int) or isinstance(b, int):
            raise ValueError("cannot add an integer to a class")
        return a + b

    def mul(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            return a * b
        if isinstance(a, int):
            return a * b
        if isinstance(b, int):
            return b * a
        s1 = schubert.sigma(self.k, self.n, 1)
        if a == s1:
            return schubert.pieri1(b)
        if b == s1:
            return schubert.pieri1(a)
        ca, cb = a.codim(), b.codim()
        if ca is None or cb is None:
            raise ValueError("products need homogeneous classes")
        if ca + cb == schubert.grass_dim(self.k, self.n):
            return schubert.duality_pair(a, b)
        raise ValueError(
            "only sigma1 products and complementary-codimension pairings are supported"
        )

    def power(self, base, exp):
        if isinstance(base, int):
            return base ** exp
        if exp < 1:
            raise ValueError("class powers need a positive exponent")
        value = base
        for _ in range(exp - 1):
            value = self.mul(value, base)
        return value


def evaluate_expression(expr: str, k: int, n: int):
    """Evaluate a Schubert-calculus expression in G(k, n)."""
    return _ExprParser(_tokenize(expr), k, n).parse()


def cmd_schubert(args) -> int:
    try:
        k, n = (int(p) for p in args.grassmannian.split(","))
    except ValueError:
        raise ValueError('--grassmannian expects "k,n"')
    value = evaluate_expression(args.expr, k, n)
    out = {
        "schema": SCHEMA,
        "command": "schubert",
        "grassmannian": "G(%d,%d)" % (k, n),
        "expr": args.expr,
    }
    if isinstance(value, schubert.SchubertClass):
        dim = schubert.grass_dim(k, n)
        if value.codim() == dim:
            # top codimension: report the multiple of the point class
            out["value"] = value.coefficient(tuple([n - k] * (k + 1)))
            out["interpreted_as"] = "multiple of the point class"
        else:
            out["class"] = value.to_json()
    else:
        out["value"] = value
    _emit(out)
    return 0


# -- verify-all ----------------------------------------------------------------


def cmd_verify_all(args) -> int:
    results = verify.run_all(seed=args.seed, quick=args.quick)
    failed = [r for r in results if not r.passed]
    if args.json:
        _emit({
            "schema": SCHEMA,
            "command": "verify-all",
            "seed": args.seed,
            "quick": args.quick,
            "checks": [r.to_json() for r in results],
            "all_passed": not failed,
        })
    else:
        for r in results:
            sys.stdout.write("%s %s: %s\n" % ("PASS" if r.passed else "FAIL", r.name, r.statement))
            if r.details:
                sys.stdout.write("     %s\n" % r.details)
        sys.stdout.write(
            "%d checks: %d passed, %d failed\n" % (len(results), len(results) - len(failed), len(failed))
        )
    return 1 if failed else 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cq",
        description="Exact computations on spaces of complete quadrics.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("chow", help="compound matrices and limit Chow forms")
    p.add_argument("--form", required=True, help="symmetric form as JSON")
    p.add_argument("--k", type=int, required=True, help="minor size")
    p.add_argument("--limit-toward", help="second form: compute the pencil limit")
    p.set_defaults(func=cmd_chow)

    p = sub.add_parser("pencil", help="degeneration counts in pencils")
    p.add_argument("--n", type=int, help="ambient projective dimension")
    p.add_argument("--k", type=int, help="boundary index")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify-table", action="store_true",
                   help="recount the curve-divisor table entries by pencils")
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("cone", help="cone membership for a divisor class")
    p.add_argument("--divisor", required=True, help="divisor class as JSON")
    p.add_argument("--cone", choices=("nef", "eff", "mov"), required=True)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("canonical", help="canonical class of the n-th space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=("H", "mixed", "E"), default="H")
    p.add_argument("--method", choices=("nefbasis", "blowup"), default="nefbasis")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("pair", help="intersection number of a curve and a divisor")
    p.add_argument("--curve", required=True, help="curve name (n=3) or JSON")
    p.add_argument("--divisor", required=True, help="divisor class as JSON")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("table", help="the 8 x 6 intersection table on the n=3 space")
    p.add_argument("--text", action="store_true", help="aligned text instead of JSON")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("chamber", help="effective-cone chamber of a divisor class")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--divisor", help="divisor class as JSON")
    g.add_argument("--census", type=int, help="random-sample partition check")
    g.add_argument("--segment", help="parameter t on the segment t*H1 + (1-t)*H3")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_chamber)

    p = sub.add_parser("schubert", help="evaluate a Schubert calculus expression")
    p.add_argument("--grassmannian", required=True, help='"k,n" for G(k,n)')
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("verify-all", help="run every bundled verification check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="smaller sample sizes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, ExactLinalgError, KeyError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
