"""The ring R = C[t, t^-1, u | u^2 = t^2 + 4t], over exact rationals.

Elements are stored sparsely on the basis {t^k, t^k*u : k in Z}; every
product is reduced by u^2 -> t^2 + 4t before storage, so the representation
is canonical and equality is term-by-term.

R is isomorphic to S = C[s, s^-1, (s-1)^-1] via

    t |-> s^-1 (s-1)^2 = s - 2 + s^-1,      u |-> s - s^-1,

with inverse s |-> (t+2+u)/2, s^-1 |-> (t+2-u)/2, (s-1)^-1 |-> (t^-1 u - 1)/2,
and to A = C[z, (z-a)^-1, (z+a)^-1] (a != 0) by substituting z = 2as - a,
i.e. z |-> a(t+u) + a, (z+a)^-1 |-> (t+2-u)/(4a), (z-a)^-1 |-> (t^-1 u -1)/(4a).
(The affine constant in the z-image is forced: it is the unique choice under
which the two displayed fraction images are the actual inverses of z -+ a.)

S- and A-elements share one representation: a polynomial numerator over a
denominator (x - p0)^a (x - p1)^b with two fixed poles, kept fully cancelled.
"""

from __future__ import annotations

import re

from .rational import ONE, Rational, ZERO, parse_rational, rat_str

Monomial = tuple  # (k, eps) with k in Z, eps in {0, 1}


class RingElem:
    """Element of R as a sparse map (t-exponent, u-exponent) -> coefficient.

    Instances are immutable by convention: no method mutates ``terms`` after
    construction, so values can be shared and used concurrently.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = Rational(c)
                if c != 0:
                    k, eps = key
                    if eps not in (0, 1):
                        raise ValueError(f"u-exponent must be 0 or 1, got {eps}")
                    clean[(int(k), eps)] = clean.get((int(k), eps), ZERO) + c
        self.terms = {k: c for k, c in clean.items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RingElem":
        return cls()

    @classmethod
    def one(cls) -> "RingElem":
        return cls({(0, 0): ONE})

    @classmethod
    def monomial(cls, k: int, eps: int, coeff=ONE) -> "RingElem":
        return cls({(k, eps): coeff})

    @classmethod
    def t(cls, k: int = 1) -> "RingElem":
        return cls({(k, 0): ONE})

    @classmethod
    def u(cls) -> "RingElem":
        return cls({(0, 1): ONE})

    # -- ring structure -----------------------------------------------

    def __add__(self, other: "RingElem") -> "RingElem":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ZERO) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return RingElem(out)

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __neg__(self) -> "RingElem":
        return RingElem({key: -c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, RingElem):
            out = {}
            for (k1, e1), c1 in self.terms.items():
                for (k2, e2), c2 in other.terms.items():
                    c = c1 * c2
                    k = k1 + k2
                    if e1 and e2:  # u^2 = t^2 + 4t
                        for key, cc in (((k + 2, 0), c), ((k + 1, 0), 4 * c)):
                            out[key] = out.get(key, ZERO) + cc
                    else:
                        key = (k, e1 | e2)
                        out[key] = out.get(key, ZERO) + c
            return RingElem(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "RingElem":
        c = Rational(c)
        return RingElem({key: c * v for key, v in self.terms.items()})

    def __pow__(self, n: int) -> "RingElem":
        if n < 0:
            raise ValueError("negative powers are not defined on general elements")
        out = RingElem.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, RingElem) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __str__(self) -> str:
        return format_ring(self)

    __repr__ = __str__


# ----------------------------------------------------------------------
# text syntax: signed rational coefficients, monomials t^k and t^k*u,
# e.g. "3/2*t^-1*u - 2*t^3".  format_ring and parse_ring roundtrip exactly.

_TOKEN = re.compile(r"\s*(?:(?P<rat>\d+(?:/\d+)?)|(?P<t>t(?:\^(?P<texp>[+-]?\d+))?)"
                    r"|(?P<u>u)|(?P<op>[*+-]))")


def parse_ring(text: str) -> RingElem:
    """Parse the element text syntax; inverse of format_ring."""
    pos, n = 0, len(text)
    result = RingElem.zero()
    sign = 1
    current = None  # product accumulator for the term in progress

    def flush():
        nonlocal current, sign
        if current is not None:
            nonlocal result
            result = result + current.scale(sign)
        current, sign = None, 1

    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad ring element syntax at {text[pos:]!r}")
        pos = m.end()
        if m.group("op"):
            op = m.group("op")
            if op == "*":
                if current is None:
                    raise ValueError("misplaced '*'")
            else:
                if current is not None:
                    flush()
                if op == "-":
                    sign = -sign
            continue
        if m.group("rat"):
            factor = RingElem.one().scale(parse_rational(m.group("rat")))
        elif m.group("u"):
            factor = RingElem.u()
        else:
            k = int(m.group("texp")) if m.group("texp") else 1
            factor = RingElem.t(k)
        current = factor if current is None else current * factor
    flush()
    return result


def _mono_str(k: int, eps: int) -> str:
    if k == 0:
        return "u" if eps else ""
    base = f"t^{k}"
    return base + ("*u" if eps else "")


def format_ring(x: RingElem) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for (k, eps), c in x.sorted_terms():
        mono = _mono_str(k, eps)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = rat_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{rat_str(mag)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# ----------------------------------------------------------------------
# polynomial helpers (dense-ish dicts exp -> coeff, exps >= 0)


def _poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, ZERO) + c
        if s == 0:
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            s = out.get(e, ZERO) + c1 * c2
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _poly_scale(p, c):
    c = Rational(c)
    return {} if c == 0 else {e: c * v for e, v in p.items()}


def _poly_eval(p, x):
    """Evaluate at x, which may live in any commutative ring (Rational or RingElem)."""
    if not p:
        return None
    top = max(p)
    acc = None
    for e in range(top, -1, -1):
        c = p.get(e, ZERO)
        if acc is None:
            acc = _as_coeff(c, x)
        else:
            acc = acc * x + _as_coeff(c, x)
    return acc


def _as_coeff(c, sample):
    if isinstance(sample, RingElem):
        return RingElem.one().scale(c)
    return Rational(c)


def _poly_divide_root(p, root):
    """Divide p by (x - root); returns quotient or None if not divisible."""
    if not p:
        return {}
    top = max(p)
    quot = {}
    carry = ZERO
    for e in range(top, 0, -1):
        carry = p.get(e, ZERO) + carry * root
        quot[e - 1] = carry
    rem = p.get(0, ZERO) + carry * root
    if rem != 0:
        return None
    return {e: c for e, c in quot.items() if c != 0}


class PoleFraction:
    """num(x) / ((x - p0)^a (x - p1)^b) with fixed distinct rational poles.

    Canonical form: the numerator is not divisible by (x - p0) when a > 0
    nor by (x - p1) when b > 0, and a, b >= 0.  With poles (0, 1) this is
    the fraction model of S = C[s, s^-1, (s-1)^-1]; with poles (a, -a) the
    model of A = C[z, (z-a)^-1, (z+a)^-1].
    """

    __slots__ = ("num", "a", "b", "poles")

    def __init__(self, num, a=0, b=0, poles=(ZERO, ONE)):
        if a < 0 or b < 0:
            raise ValueError("denominator exponents must be >= 0")
        poles = (Rational(poles[0]), Rational(poles[1]))
        if poles[0] == poles[1]:
            raise ValueError("poles must be distinct")
        num = {int(e): Rational(c) for e, c in num.items() if Rational(c) != 0}
        # cancel
        while a > 0 and num:
            q = _poly_divide_root(num, poles[0])
            if q is None:
                break
            num, a = q, a - 1
        while b > 0 and num:
            q = _poly_divide_root(num, poles[1])
            if q is None:
                break
            num, b = q, b - 1
        if not num:
            a = b = 0
        self.num, self.a, self.b, self.poles = num, a, b, poles

    @classmethod
    def const(cls, c, poles=(ZERO, ONE)) -> "PoleFraction":
        return cls({0: Rational(c)}, poles=poles)

    @classmethod
    def x(cls, poles=(ZERO, ONE)) -> "PoleFraction":
        return cls({1: ONE}, poles=poles)

    def _check_compatible(self, other):
        if self.poles != other.poles:
            raise ValueError("fractions over different pole pairs")

    def __add__(self, other: "PoleFraction") -> "PoleFraction":
        self._check_compatible(other)
        a, b = max(self.a, other.a), max(self.b, other.b)
        p0, p1 = self.poles

        def lift(f):
            num = f.num
            for _ in range(a - f.a):
                num = _poly_mul(num, {1: ONE, 0: -p0})
            for _ in range(b - f.b):
                num = _poly_mul(num, {1: ONE, 0: -p1})
            return num

        return PoleFraction(_poly_add(lift(self), lift(other)), a, b, self.poles)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PoleFraction(_poly_scale(self.num, -1), self.a, self.b, self.poles)

    def __mul__(self, other):
        if isinstance(other, PoleFraction):
            self._check_compatible(other)
            return PoleFraction(_poly_mul(self.num, other.num),
                                self.a + other.a, self.b + other.b, self.poles)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "PoleFraction":
        return PoleFraction(_poly_scale(self.num, c), self.a, self.b, self.poles)

    def __pow__(self, n: int) -> "PoleFraction":
        if n < 0:
            raise ValueError("negative powers not supported; invert explicitly")
        out = PoleFraction.const(ONE, self.poles)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, PoleFraction) and self.poles == other.poles
                and self.a == other.a and self.b == other.b and self.num == other.num)

    def is_zero(self) -> bool:
        return not self.num

    def __str__(self) -> str:
        if not self.num:
            return "0"
        terms = []
        for e in sorted(self.num):
            terms.append(f"{rat_str(self.num[e])}*x^{e}")
        num = " + ".join(terms)
        den = []
        if self.a:
            den.append(f"(x - {rat_str(self.poles[0])})^{self.a}")
        if self.b:
            den.append(f"(x - {rat_str(self.poles[1])})^{self.b}")
        return f"({num})" + (" / (" + " ".join(den) + ")" if den else "")

    __repr__ = __str__


SFraction = PoleFraction  # poles (0, 1): numerator over s^a (s-1)^b


# ----------------------------------------------------------------------
# the isomorphisms


def to_s(x: RingElem) -> PoleFraction:
    """Ring isomorphism R -> S = C[s, s^-1, (s-1)^-1] (poles 0 and 1)."""
    out = PoleFraction.const(ZERO)
    s_minus_1_sq = {2: ONE, 1: Rational(-2), 0: ONE}
    u_num = {2: ONE, 0: Rational(-1)}  # (s-1)(s+1)
    for (k, eps), c in x.terms.items():
        num = {0: c}
        a = b = 0
        if k >= 0:
            for _ in range(k):
                num = _poly_mul(num, s_minus_1_sq)
            a += k
        else:
            num = _poly_mul(num, {-k: ONE})
            b += -2 * k
        if eps:
            num = _poly_mul(num, u_num)
            a += 1
        out = out + PoleFraction(num, a, b)
    return out


_PHI_S = parse_ring("1/2*t^0*u") + parse_ring("1/2*t^1 + 1")  # (t+2+u)/2
_PHI_S_INV = parse_ring("1/2*t^1 + 1") - parse_ring("1/2*u")  # (t+2-u)/2
_PHI_S1_INV = parse_ring("1/2*t^-1*u - 1/2")  # (t^-1 u - 1)/2


def from_s(f: PoleFraction) -> RingElem:
    """Inverse of to_s.  Total on canonical S-fractions."""
    if f.poles != (ZERO, ONE):
        raise ValueError("from_s expects a fraction with poles (0, 1)")
    val = _poly_eval(f.num, _PHI_S)
    if val is None:
        return RingElem.zero()
    return val * _PHI_S_INV ** f.a * _PHI_S1_INV ** f.b


def to_a(x: RingElem, a) -> PoleFraction:
    """Ring isomorphism R -> A = C[z, (z-a)^-1, (z+a)^-1], poles (a, -a).

    Realized by composing to_s with the substitution s = (z + a)/(2a); in
    particular t + u + 1 |-> z/a and the generator inverses are
    (z-a)^-1 <-> (t^-1 u - 1)/(4a),  (z+a)^-1 <-> (t+2-u)/(4a).
    """
    a = Rational(a)
    if a == 0:
        raise ValueError("parameter a must be nonzero")
    f = to_s(x)
    two_a = 2 * a
    z_plus_a = {1: ONE, 0: a}
    num = {}
    scale = two_a ** (f.a + f.b)
    for e, c in f.num.items():
        term = {0: c * scale / two_a ** e}
        for _ in range(e):
            term = _poly_mul(term, z_plus_a)
        num = _poly_add(num, term)
    # s^a (s-1)^b = (z+a)^a (z-a)^b / (2a)^(a+b)
    return PoleFraction(num, f.b, f.a, poles=(a, -a))


def from_a(f: PoleFraction, a) -> RingElem:
    """Inverse of to_a for the same parameter a."""
    a = Rational(a)
    if a == 0:
        raise ValueError("parameter a must be nonzero")
    if f.poles != (a, -a):
        raise ValueError("fraction poles do not match the parameter")
    psi_z = (RingElem.t() + RingElem.u() + RingElem.one()).scale(a)  # a(t+u)+a
    inv_z_minus_a = parse_ring("t^-1*u - 1").scale(Rational(1, 4) / a)
    inv_z_plus_a = (parse_ring("t^1 + 2") - RingElem.u()).scale(Rational(1, 4) / a)
    val = _poly_eval(f.num, psi_z)
    if val is None:
        return RingElem.zero()
    return val * inv_z_minus_a ** f.a * inv_z_plus_a ** f.b
