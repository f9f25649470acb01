"""One-forms over R and their classes modulo exact forms.

The space of Kahler differentials modulo exact forms is two dimensional,
with basis {w0 = class(t^-1 dt), w1 = class(t^-1 u dt)}.  reduce() computes
the coordinates of any one-form f dt + g du in that basis by a confluent
rewriting pipeline:

  (i)   u du = (t+2) dt                          (from d(u^2) = d(t^2+4t))
  (ii)  t^k du == -k t^(k-1) u dt   mod exact    (from d(t^k u) == 0)
  (iii) t^m dt == 0 for m != -1                  (t^m dt = d(t^(m+1))/(m+1))
  (iv)  (k+3) t^(k+1) u dt + (4k+6) t^k u dt == 0 mod exact,

step (iv) moving every t^j u dt to a rational multiple of t^-1 u dt (the
multiplier is a signed Catalan number for j >= 0, 1/2 at j = -2, and 0 for
j <= -3; 4k+6 never vanishes on integers so the chain is total).

pairing(f, g) = reduce(f dg) is the central 2-cocycle of the extended
current algebra.  closed_form_pairing transcribes the three tabulated
closed formulas for basis pairs; note the mixed (t^k, t^l u) formula is a
valid closed form only for k = 0, k+l = 0 or k+l <= -2 -- elsewhere it
disagrees with the rewriting pipeline (see the tests, which pin the exact
discrepancy and also check reduce() against an independent residue oracle).
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import ONE, Rational, ZERO, rat_str
from .ring import RingElem


@dataclass(frozen=True)
class CentralPair:
    """Coordinates (c0, c1) of a one-form class in the basis {w0, w1}."""

    c0: Rational
    c1: Rational

    def __add__(self, other: "CentralPair") -> "CentralPair":
        return CentralPair(self.c0 + other.c0, self.c1 + other.c1)

    def __neg__(self) -> "CentralPair":
        return CentralPair(-self.c0, -self.c1)

    def __sub__(self, other: "CentralPair") -> "CentralPair":
        return self + (-other)

    def scale(self, c) -> "CentralPair":
        c = Rational(c)
        return CentralPair(c * self.c0, c * self.c1)

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def __str__(self) -> str:
        return f"c0 = {rat_str(self.c0)}, c1 = {rat_str(self.c1)}"


ZERO_PAIR = CentralPair(ZERO, ZERO)


@dataclass(frozen=True)
class OneForm:
    """dt_part * dt + du_part * du with canonical RingElem components."""

    dt_part: RingElem
    du_part: RingElem

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.dt_part + other.dt_part, self.du_part + other.du_part)

    def __neg__(self) -> "OneForm":
        return OneForm(-self.dt_part, -self.du_part)

    def left_mul(self, f: RingElem) -> "OneForm":
        return OneForm(f * self.dt_part, f * self.du_part)

    def __str__(self) -> str:
        return f"({self.dt_part}) dt + ({self.du_part}) du"


def differential(g: RingElem) -> OneForm:
    """The canonical d: R -> Omega^1, extended Leibniz-linearly over the basis."""
    dt = {}
    du = {}
    for (k, eps), c in g.terms.items():
        if eps:
            # d(t^k u) = t^k du + k t^(k-1) u dt
            du[(k, 0)] = du.get((k, 0), ZERO) + c
            if k:
                dt[(k - 1, 1)] = dt.get((k - 1, 1), ZERO) + k * c
        else:
            if k:
                dt[(k - 1, 0)] = dt.get((k - 1, 0), ZERO) + k * c
    return OneForm(RingElem(dt), RingElem(du))


_omega1_cache = {-1: ONE, -2: Rational(1, 2)}


def omega1_coefficient(j: int) -> Rational:
    """r(j) with t^j u dt == r(j) * t^-1 u dt modulo exact forms."""
    if j <= -3:
        return ZERO
    r = _omega1_cache.get(j)
    if r is None:
        # r(j) = -(4j+2)/(j+2) r(j-1), upward from r(-1) = 1
        r = Rational(-(4 * j + 2), j + 2) * omega1_coefficient(j - 1)
        _omega1_cache[j] = r
    return r


def reduce(w: OneForm) -> CentralPair:
    """Coordinates of the class of w in the basis {w0, w1}.  Total."""
    dt = dict(w.dt_part.terms)

    def add_dt(key, c):
        dt[key] = dt.get(key, ZERO) + c

    for (k, eps), c in w.du_part.terms.items():
        if eps:
            # (i): t^k u du = (t^(k+1) + 2 t^k) dt
            add_dt((k + 1, 0), c)
            add_dt((k, 0), 2 * c)
        elif k:
            # (ii): t^k du == -k t^(k-1) u dt
            add_dt((k - 1, 1), -k * c)
        # k = 0, eps = 0: du itself is exact

    c0 = ZERO
    c1 = ZERO
    for (k, eps), c in dt.items():
        if eps:
            c1 += c * omega1_coefficient(k)  # (iv)
        elif k == -1:
            c0 += c  # (iii)
    return CentralPair(c0, c1)


def pairing(f: RingElem, g: RingElem) -> CentralPair:
    """Class of f dg: the central cocycle entering the current bracket."""
    return reduce(differential(g).left_mul(f))


KIND_TT = "tt"    # (t^k, t^l)
KIND_UU = "uu"    # (t^k u, t^l u)
KIND_TU = "tu"    # (t^k, t^l u)


def closed_form_pairing(kind: str, k: int, l: int) -> CentralPair:
    """The tabulated closed forms for basis pairings, evaluated verbatim.

    Used as an oracle against pairing(); see the module docstring for the
    validity domain of the mixed kind.
    """
    if kind == KIND_TT:
        c0 = Rational(-k) if l == -k else ZERO
        return CentralPair(c0, ZERO)
    if kind == KIND_UU:
        c0 = ZERO
        if k + l == -2:
            c0 += Rational(l + 1)
        if k + l == -1:
            c0 += Rational(4 * l + 2)
        return CentralPair(c0, ZERO)
    if kind == KIND_TU:
        c1 = Rational(-k) if k == -l else ZERO
        return CentralPair(ZERO, c1)
    raise ValueError(f"unknown pairing kind {kind!r}")
