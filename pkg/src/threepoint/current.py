"""The centrally extended current algebra over R.

g^ = (sl2 (x) R) (+) C.w0 (+) C.w1 with the bracket

    [x(x)f, y(x)g] = [x,y](x)fg + (x,y) * class(f dg),    [w_i, -] = 0,

where (.,.) is the trace form of the defining sl2 representation,
(e,f) = (f,e) = 1, (h,h) = 2, all other basis pairs 0.  (This is the
normalization forced by the generator relation table below; the Killing
form would scale the central terms by 4.)

Generators are written e_m = e(x)t^m, e1_m = e(x)u t^m, and so on; the
central coordinates of a bracket come from kahler.pairing, so the table
comparison exercised by the verifier is a genuine cross-module check.

relation_rhs() transcribes the tabulated defining relations verbatim.  The
w1 central terms of the mixed families ([h_m, h1_n], [e_m, f1_n], [e1_m,
f_n]) carry a bare -2m delta_{m,-n} there; the cocycle computed by the
pairing is -2m r(m+n-1) with r the reduction multiplier of kahler (equal
to the delta pattern only for m+n = 0 or m+n <= -2).  bracket() computes
the cocycle; the verifier reports where the table differs.
"""

from __future__ import annotations

import re

from .rational import ONE, Rational, ZERO, parse_rational, rat_str
from . import kahler
from .ring import RingElem

E, F, H = "e", "f", "h"

# [a, b] = coeff * basis for sl2 basis elements
_SL2_BRACKET = {
    (H, E): (2, E), (E, H): (-2, E),
    (H, F): (-2, F), (F, H): (2, F),
    (E, F): (1, H), (F, E): (-1, H),
}

# trace form of the defining representation
_FORM = {(E, F): ONE, (F, E): ONE, (H, H): Rational(2)}

GENERATOR_SYMBOLS = ("e", "f", "h", "e1", "f1", "h1")
CENTRAL_SYMBOLS = ("w0", "w1")

_SYM_TO_TAG = {"e": (E, 0), "e1": (E, 1), "f": (F, 0), "f1": (F, 1),
               "h": (H, 0), "h1": (H, 1)}
_TAG_TO_SYM = {v: k for k, v in _SYM_TO_TAG.items()}


class CurrentElem:
    """Sparse element of g^: sl2(x)R terms plus two central coordinates."""

    __slots__ = ("terms", "c0", "c1")

    def __init__(self, terms=None, c0=ZERO, c1=ZERO):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = Rational(c)
                if c != 0:
                    clean[key] = clean.get(key, ZERO) + c
        self.terms = {k: c for k, c in clean.items() if c != 0}
        self.c0 = Rational(c0)
        self.c1 = Rational(c1)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "CurrentElem":
        return cls()

    @classmethod
    def generator(cls, symbol: str, m: int, coeff=ONE) -> "CurrentElem":
        """e/f/h/e1/f1/h1 at t-exponent m, or w0/w1 (m ignored for centrals)."""
        if symbol in CENTRAL_SYMBOLS:
            return cls(c0=coeff if symbol == "w0" else ZERO,
                       c1=coeff if symbol == "w1" else ZERO)
        tag, eps = _SYM_TO_TAG[symbol]
        return cls({(tag, (m, eps)): coeff})

    @classmethod
    def embed(cls, tag: str, f: RingElem) -> "CurrentElem":
        """tag (x) f for tag in {e, f, h}."""
        return cls({(tag, key): c for key, c in f.terms.items()})

    @classmethod
    def omega0(cls, coeff=ONE) -> "CurrentElem":
        return cls(c0=coeff)

    @classmethod
    def omega1(cls, coeff=ONE) -> "CurrentElem":
        return cls(c1=coeff)

    # -- linear structure ----------------------------------------------

    def __add__(self, other: "CurrentElem") -> "CurrentElem":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ZERO) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return CurrentElem(out, self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CurrentElem({k: -c for k, c in self.terms.items()}, -self.c0, -self.c1)

    def scale(self, c) -> "CurrentElem":
        c = Rational(c)
        return CurrentElem({k: c * v for k, v in self.terms.items()},
                           c * self.c0, c * self.c1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, CurrentElem) and self.terms == other.terms
                and self.c0 == other.c0 and self.c1 == other.c1)

    def is_zero(self) -> bool:
        return not self.terms and self.c0 == 0 and self.c1 == 0

    def sorted_terms(self):
        order = {E: 0, F: 1, H: 2}
        return sorted(self.terms.items(),
                      key=lambda kv: (order[kv[0][0]], kv[0][1][1], -kv[0][1][0]))

    def __str__(self) -> str:
        return format_current(self)

    __repr__ = __str__


def bracket(x: CurrentElem, y: CurrentElem) -> CurrentElem:
    """The Lie bracket of g^; centrals computed through kahler.pairing."""
    terms = {}
    c0 = ZERO
    c1 = ZERO
    for (a, (k1, e1)), ca in x.terms.items():
        f = RingElem.monomial(k1, e1)
        for (b, (k2, e2)), cb in y.terms.items():
            c = ca * cb
            br = _SL2_BRACKET.get((a, b))
            if br is not None:
                coeff, basis = br
                prod = f * RingElem.monomial(k2, e2)
                for key, pc in prod.terms.items():
                    tk = (basis, key)
                    s = terms.get(tk, ZERO) + c * coeff * pc
                    if s == 0:
                        terms.pop(tk, None)
                    else:
                        terms[tk] = s
            form = _FORM.get((a, b))
            if form is not None:
                pair = _pairing_monomials(k1, e1, k2, e2)
                c0 += c * form * pair.c0
                c1 += c * form * pair.c1
    return CurrentElem(terms, c0, c1)


_pair_cache: dict = {}


def _pairing_monomials(k1: int, e1: int, k2: int, e2: int) -> kahler.CentralPair:
    key = (k1, e1, k2, e2)
    out = _pair_cache.get(key)
    if out is None:
        out = kahler.pairing(RingElem.monomial(k1, e1), RingElem.monomial(k2, e2))
        _pair_cache[key] = out
    return out


def _delta(i: int, j: int) -> int:
    return 1 if i == j else 0


def _rhs_defined(x: str, m: int, y: str, n: int):
    """The explicitly tabulated relations, in their displayed orientation."""
    g = CurrentElem.generator
    if x in CENTRAL_SYMBOLS or y in CENTRAL_SYMBOLS:
        return CurrentElem.zero()
    if x in ("e", "e1") and y in ("e", "e1"):
        return CurrentElem.zero()
    if x in ("f", "f1") and y in ("f", "f1"):
        return CurrentElem.zero()
    if (x, y) == ("h", "h"):
        return CurrentElem.omega0(Rational(-2 * m) * _delta(m, -n))
    if (x, y) == ("h1", "h1"):
        c = 2 * ((n + 1) * _delta(m + n, -2) + (4 * n + 2) * _delta(m + n, -1))
        return CurrentElem.omega0(Rational(c))
    if (x, y) == ("h", "h1"):
        return CurrentElem.omega1(Rational(-2 * m) * _delta(m, -n))
    if (x, y) == ("e", "f"):
        return g("h", m + n) + CurrentElem.omega0(Rational(-m) * _delta(m, -n))
    if (x, y) in (("e", "f1"), ("e1", "f")):
        return g("h1", m + n) + CurrentElem.omega1(Rational(-m) * _delta(m, -n))
    if (x, y) == ("e1", "f1"):
        c = (n + 1) * _delta(m + n, -2) + (4 * n + 2) * _delta(m + n, -1)
        return (g("h", m + n + 2) + g("h", m + n + 1, 4)
                + CurrentElem.omega0(Rational(c)))
    if (x, y) == ("h", "e"):
        return g("e", m + n, 2)
    if (x, y) in (("h", "e1"), ("h1", "e")):
        return g("e1", m + n, 2)
    if (x, y) == ("h1", "e1"):
        return g("e", m + n + 2, 2) + g("e", m + n + 1, 8)
    if (x, y) == ("h", "f"):
        return g("f", m + n, -2)
    if (x, y) in (("h", "f1"), ("h1", "f")):
        return g("f1", m + n, -2)
    if (x, y) == ("h1", "f1"):
        return g("f", m + n + 2, -2) + g("f", m + n + 1, -8)
    return None


def relation_rhs(x: str, m: int, y: str, n: int) -> CurrentElem:
    """Right-hand side of the defining relation table for [x_m, y_n].

    Pairs not displayed in the table are completed antisymmetrically.
    Total over the eight symbols (six generators and the two centrals).
    """
    for s in (x, y):
        if s not in GENERATOR_SYMBOLS and s not in CENTRAL_SYMBOLS:
            raise ValueError(f"unknown generator symbol {s!r}")
    rhs = _rhs_defined(x, m, y, n)
    if rhs is not None:
        return rhs
    rhs = _rhs_defined(y, n, x, m)
    if rhs is not None:
        return -rhs
    raise AssertionError(f"relation table incomplete for ({x}, {y})")


def quasi_degree(x: CurrentElem) -> Rational:
    """Degree of a single basis term: k for t^k, k + 1/2 for t^k u.

    Rejects anything that is not a single sl2(x)R monomial.
    """
    if x.c0 != 0 or x.c1 != 0 or len(x.terms) != 1:
        raise ValueError("quasi_degree is defined on single basis terms only")
    (_, (k, eps)), = x.terms.keys()
    return Rational(k) + Rational(eps, 2)


PARITY_EVEN = 0
PARITY_ODD = 1
PARITY_MIXED = "mixed"


def parity(x: RingElem):
    """Z/2 component of x in R = R^0 (+) R^1: 0, 1, or 'mixed'.

    R^0 = C[t, t^-1] and R^1 = C[t, t^-1] u are the eigenspaces of the
    involution fixing t and negating u.  Zero is reported as even.
    """
    parities = {eps for (_, eps) in x.terms}
    if len(parities) > 1:
        return PARITY_MIXED
    return parities.pop() if parities else PARITY_EVEN


# ----------------------------------------------------------------------
# text syntax: "2*e[t^2] + 8*e1[t^-1] - 1/2*w0"; the bracket content is any
# ring element (an integer m abbreviates t^m), and e[t^k*u] normalizes to
# the e1 family.

_CUR_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?:(?P<sym>e1|f1|h1|e|f|h)\[(?P<arg>[^\]]*)\]|(?P<cent>w0|w1)|(?P<zero>0))\s*")


def parse_current(text: str) -> CurrentElem:
    from .ring import parse_ring

    out = CurrentElem.zero()
    pos = 0
    first = True
    while pos < len(text):
        m = _CUR_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad element syntax at {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing +/- before {text[pos:]!r}")
        pos = m.end()
        first = False
        coeff = parse_rational(m.group("coeff")) if m.group("coeff") else ONE
        if m.group("sign") == "-":
            coeff = -coeff
        if m.group("zero"):
            continue
        if m.group("cent"):
            out = out + CurrentElem.generator(m.group("cent"), 0, coeff)
            continue
        sym = m.group("sym")
        arg = m.group("arg").strip()
        if re.fullmatch(r"[+-]?\d+", arg):
            f = RingElem.t(int(arg)) if arg else RingElem.one()
        else:
            f = parse_ring(arg)
        tag, eps = _SYM_TO_TAG[sym]
        if eps:
            f = f * RingElem.u()
        out = out + CurrentElem.embed(tag, f).scale(coeff)
    if first:
        raise ValueError("empty element")
    return out


def format_current(x: CurrentElem) -> str:
    parts = []

    def push(coeff, body):
        neg = coeff < 0
        mag = -coeff if neg else coeff
        text = body if (mag == 1 and body) else (
            f"{rat_str(mag)}*{body}" if body else rat_str(mag))
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)

    for (tag, (k, eps)), c in x.sorted_terms():
        push(c, f"{_TAG_TO_SYM[(tag, eps)]}[t^{k}]")
    if x.c0 != 0:
        push(x.c0, "w0")
    if x.c1 != 0:
        push(x.c1, "w1")
    return " ".join(parts) if parts else "0"
