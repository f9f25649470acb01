"""Independent test oracles.

The residue oracle computes the class of a one-form f dg without any of the
rewriting used by the kahler module: it maps everything through the fraction
ring C[s, s^-1, (s-1)^-1], differentiates there, and reads off the residues
at the two finite punctures.  A form with poles only at {0, 1, oo} is exact
precisely when both finite residues vanish (the residue at infinity is minus
their sum), so the residue vector determines the class; the basis change to
(c0, c1) coordinates is solved from the residue vectors of the two basis
classes themselves.
"""

from fractions import Fraction

from threepoint.ring import PoleFraction, RingElem, to_s
from threepoint.rational import Rational


def sfrac_derivative(f: PoleFraction) -> PoleFraction:
    """d/ds of num/(s^a (s-1)^b), as a PoleFraction over the same poles."""
    num = dict(f.num)
    dnum = {e - 1: e * c for e, c in num.items() if e > 0}
    # num' * s(s-1) - num * (a(s-1) + b s)
    part1 = _poly_mul(dnum, {2: Rational(1), 1: Rational(-1)})
    shift = {1: Rational(f.a + f.b), 0: Rational(-f.a)}
    part2 = _poly_mul(num, shift)
    total = _poly_sub(part1, part2)
    return PoleFraction(total, f.a + 1, f.b + 1, poles=f.poles)


def _poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, Rational(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _poly_sub(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, Rational(0)) - c
    return {e: c for e, c in out.items() if c != 0}


def _binom(top: int, k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    out = Fraction(1)
    for t in range(k):
        out *= Fraction(top - t, t + 1)
    return out


def residues(f: PoleFraction):
    """(residue at 0, residue at 1) of f ds for poles (0, 1)."""
    assert f.poles == (Rational(0), Rational(1))
    a, b = f.a, f.b
    res0 = Fraction(0)
    for j, c in f.num.items():
        k = a - 1 - j
        if k < 0:
            continue
        # coefficient of s^k in (s-1)^(-b) about 0
        if b == 0:
            coeff = Fraction(1) if k == 0 else Fraction(0)
        else:
            coeff = (-1) ** b * _binom(b - 1 + k, k)
        res0 += Fraction(str(c)) * coeff
    res1 = Fraction(0)
    for j, c in f.num.items():
        res1 += Fraction(str(c)) * _binom(j - a, b - 1)
    return res0, res1


def residue_class(f: RingElem, g: RingElem):
    """(c0, c1) coordinates of the class of f dg, via residues only."""
    form = to_s(f) * sfrac_derivative(to_s(g))
    r0, r1 = residues(form)
    # basis residue vectors, computed by the same machinery
    t = RingElem.t()
    u_over_t = RingElem.monomial(-1, 1)
    w0 = to_s(RingElem.t(-1)) * sfrac_derivative(to_s(t))
    w1 = to_s(u_over_t) * sfrac_derivative(to_s(t))
    a0, a1 = residues(w0)
    b0, b1 = residues(w1)
    # solve (c0, c1): c0*(a0,a1) + c1*(b0,b1) = (r0,r1)
    det = a0 * b1 - a1 * b0
    assert det != 0
    c0 = (r0 * b1 - r1 * b0) / det
    c1 = (a0 * r1 - a1 * r0) / det
    return c0, c1


def omega1_multiplier(j: int) -> Fraction:
    """Class of t^j u dt = (t^j u) d(t) as a multiple of the second basis
    class, via residues."""
    c0, c1 = residue_class(RingElem.monomial(j, 1), RingElem.t())
    assert c0 == 0
    return c1


def predicted_literal_failures(window):
    """Mode pairs where the literal b1 operator family violates its bracket
    (kappa0 != 0, c = 0).  Derived by commuting the literal formulas in
    closed form: the defect is supported on m+n in {0, -1, -2, -4}, except
    the two all-negative diagonal pairs (-1,-1) and (-2,-2) where the
    correction terms cancel."""
    lo, hi = window
    out = set()
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            s = m + n
            if s == 0 and m != 0:
                out.add((m, n))
            elif s == -1:
                out.add((m, n))
            elif s == -2 and (m, n) != (-1, -1):
                out.add((m, n))
            elif s == -4 and (m, n) != (-2, -2):
                out.add((m, n))
    return out
