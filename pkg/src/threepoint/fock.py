"""Polynomial Fock states and the oscillator / Heisenberg mode actions.

States span C[x] (x) C[y] (x) V where C[x] is a polynomial ring in the
doubled oscillator variables {x_n, x1_n : n in Z}, C[y] in the Heisenberg
variables {y_{-n}, y1_{-m} : m, n >= 1}, and V = C v0 (+) C v1.  A basis
state is a monomial (variables with multiplicity) together with the V
index; a FockVector is a finite rational combination of basis states.

The doubled oscillator algebra

    [a_n, a*_m] = delta_{m+n,0} = [a1_n, a1*_m],   all other pairs commute,

acts in two ways selected by r in {0, 1}:

    r = 0:  a_m -> d/dx_m (m >= 0) else x_m;   a*_m -> x_{-m} (m <= 0)
            else -d/dx_{-m}
    r = 1:  a_m -> x_m always;                 a*_m -> -d/dx_{-m} always.

The Heisenberg generators b_n, b1_n act on the y-side and on V; the two
central charges act by the scalars kappa0 and chi1.  For b1 two operator
variants are provided: 'paper' keeps the literal correction terms of the
source construction (whose bracket defects the report-only checks record),
'derived' uses the unique derivation coefficients that satisfy the bracket

    [b1_m, b1_n] = (n-m)(delta_{m+n,-2} + 4 delta_{m+n,-1}) kappa0

exactly; the residual oracle heis_bracket_check adjudicates both.
"""

from __future__ import annotations

import re
from bisect import insort
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .rational import ONE, Rational, ZERO, exact, parse_rational, rat_str

# variable kinds
XA, XB, YA, YB = 0, 1, 2, 3
_KIND_NAMES = {XA: "x", XB: "x1", YA: "y", YB: "y1"}
_NAME_KINDS = {v: k for k, v in _KIND_NAMES.items()}

_IDX_OFFSET = 4096
KIND_SPAN = 2 * _IDX_OFFSET  # encoded-variable block size per kind


def var(kind: int, idx: int) -> int:
    """Encode a variable as a single int (kind and shifted index)."""
    return kind * KIND_SPAN + (idx + _IDX_OFFSET)


def var_kind(v: int) -> int:
    return v // (2 * _IDX_OFFSET)


def var_idx(v: int) -> int:
    return v % (2 * _IDX_OFFSET) - _IDX_OFFSET


Mono = tuple  # sorted tuple of encoded variables, repetition = exponent
State = tuple  # (Mono, vidx)

VACUUM_MONO: Mono = ()


def vacuum(vidx: int = 0) -> "FockVector":
    return FockVector({(VACUUM_MONO, vidx): ONE})


def make_state(variables, vidx: int = 0) -> State:
    """Canonical basis state from an iterable of encoded variables."""
    return (tuple(sorted(variables)), vidx)


def mono_mul(mono: Mono, v: int) -> Mono:
    lst = list(mono)
    insort(lst, v)
    return tuple(lst)


def mono_diff(mono: Mono, v: int):
    """(multiplicity, mono / v) or None if v does not occur."""
    count = mono.count(v)
    if not count:
        return None
    i = mono.index(v)
    return count, mono[:i] + mono[i + 1:]


def mono_degree(mono: Mono) -> int:
    return len(mono)


class FockVector(dict):
    """Finite rational combination {(mono, vidx): coeff}; zero coeffs dropped."""

    @classmethod
    def from_terms(cls, items) -> "FockVector":
        out = cls()
        for state, c in items:
            s = out.get(state, ZERO) + c
            if s == 0:
                out.pop(state, None)
            else:
                out[state] = s
        return out

    def __add__(self, other: "FockVector") -> "FockVector":
        out = FockVector(self)
        out.accumulate(other)
        return out

    def __sub__(self, other: "FockVector") -> "FockVector":
        out = FockVector(self)
        out.accumulate(other, -1)
        return out

    def __neg__(self) -> "FockVector":
        return self.scale(-1)

    def accumulate(self, other, factor=1):
        """In-place self += factor * other (used by the hot loops)."""
        if factor == 0:
            return
        if factor == 1:
            for state, c in other.items():
                s = self.get(state, 0) + c
                if s == 0:
                    self.pop(state, None)
                else:
                    self[state] = s
            return
        for state, c in other.items():
            s = self.get(state, 0) + factor * c
            if s == 0:
                self.pop(state, None)
            else:
                self[state] = s

    def scale(self, c) -> "FockVector":
        c = Rational(c)
        if c == 0:
            return FockVector()
        return FockVector({s: c * v for s, v in self.items()})

    def is_zero(self) -> bool:
        return not self

    def __str__(self) -> str:
        return format_fock(self)

    __repr__ = __str__


# ----------------------------------------------------------------------
# elementary operator atoms.  An operator is a list of atoms; its action is
# the sum of the atoms' actions.  Atoms:
#   ("mul", v)           multiplication by the variable v
#   ("diff", v, c)       c * d/dv
#   ("scal", c)          scalar
#   ("vmat", M)          V-action, v_j -> sum_i M[i][j] v_i  (2x2 rationals)


def apply_atoms(atoms, vec: FockVector) -> FockVector:
    out = FockVector()
    for kind_, *payload in atoms:
        if kind_ == "mul":
            v = payload[0]
            for (mono, vidx), c in vec.items():
                state = (mono_mul(mono, v), vidx)
                s = out.get(state, ZERO) + c
                if s == 0:
                    out.pop(state, None)
                else:
                    out[state] = s
        elif kind_ == "diff":
            v, scale = payload
            if scale == 0:
                continue
            for (mono, vidx), c in vec.items():
                hit = mono_diff(mono, v)
                if hit is None:
                    continue
                count, rest = hit
                state = (rest, vidx)
                s = out.get(state, ZERO) + c * count * scale
                if s == 0:
                    out.pop(state, None)
                else:
                    out[state] = s
        elif kind_ == "scal":
            scale = payload[0]
            if scale == 0:
                continue
            for state, c in vec.items():
                s = out.get(state, ZERO) + c * scale
                if s == 0:
                    out.pop(state, None)
                else:
                    out[state] = s
        elif kind_ == "vmat":
            m = payload[0]
            for (mono, vidx), c in vec.items():
                for i in (0, 1):
                    entry = m[i][vidx]
                    if entry == 0:
                        continue
                    state = (mono, i)
                    s = out.get(state, ZERO) + c * entry
                    if s == 0:
                        out.pop(state, None)
                    else:
                        out[state] = s
        else:  # pragma: no cover
            raise ValueError(f"unknown atom {kind_!r}")
    return out


# ----------------------------------------------------------------------
# oscillator representation


@dataclass(frozen=True)
class OscConfig:
    """Choice of representation / normal ordering, r in {0, 1}."""

    r: int = 0

    def __post_init__(self):
        if self.r not in (0, 1):
            raise ValueError("r must be 0 or 1")


OSC_KINDS = ("a", "a*", "a1", "a1*")
_OSC_FAMILY = {"a": XA, "a*": XA, "a1": XB, "a1*": XB}


def osc_atoms(which: str, m: int, cfg: OscConfig):
    """The single atom realizing a_m / a*_m (and the doubled pair) at r."""
    fam = _OSC_FAMILY[which]
    if which in ("a", "a1"):
        if cfg.r == 0 and m >= 0:
            return [("diff", var(fam, m), 1)]
        return [("mul", var(fam, m))]
    if cfg.r == 0 and m <= 0:
        return [("mul", var(fam, -m))]
    return [("diff", var(fam, -m), -1)]


def apply_osc(which: str, m: int, vec: FockVector, cfg: OscConfig) -> FockVector:
    if which not in OSC_KINDS:
        raise ValueError(f"unknown oscillator generator {which!r}")
    return apply_atoms(osc_atoms(which, m, cfg), vec)


def osc_rhs(w1: str, n: int, w2: str, m: int) -> Rational:
    """Scalar value of [w1_n, w2_m]: the defining commutator table."""
    if (w1, w2) in (("a", "a*"), ("a1", "a1*")):
        return ONE if m + n == 0 else ZERO
    if (w1, w2) in (("a*", "a"), ("a1*", "a1")):
        return -ONE if m + n == 0 else ZERO
    return ZERO


def osc_commutator_residual(w1: str, n: int, w2: str, m: int,
                            vec: FockVector, cfg: OscConfig) -> FockVector:
    """[w1_n, w2_m] vec - rhs * vec; zero iff the relation holds on vec."""
    ab = apply_osc(w1, n, apply_osc(w2, m, vec, cfg), cfg)
    ba = apply_osc(w2, m, apply_osc(w1, n, vec, cfg), cfg)
    res = ab - ba
    res.accumulate(vec, -osc_rhs(w1, n, w2, m))
    return res


# ----------------------------------------------------------------------
# Heisenberg representation on C[y] (x) V


VARIANT_PAPER = "paper"
VARIANT_DERIVED = "derived"

HEIS_KINDS = ("b", "b1")


@dataclass(frozen=True)
class HeisenbergParams:
    """Module parameters: V-action scalars, central charges, variant.

    b0 acts by lam; b1_0 acts on V by the matrix [[mu, vk], [nu, mu]]
    (v0 -> mu v0 + nu v1, v1 -> vk v0 + mu v1); the centrals act by kappa0
    and chi1.  c is the undetermined scalar of the literal 'paper' operator
    family and is ignored by 'derived'.
    """

    lam: Rational = ONE
    mu: Rational = ZERO
    nu: Rational = ONE
    vk: Rational = ONE
    kappa0: Rational = ONE
    chi1: Rational = ZERO
    c: Rational = ZERO
    variant: str = VARIANT_DERIVED

    def __post_init__(self):
        if self.variant not in (VARIANT_PAPER, VARIANT_DERIVED):
            raise ValueError(f"unknown variant {self.variant!r}")
        for name in ("lam", "mu", "nu", "vk", "kappa0", "chi1", "c"):
            object.__setattr__(self, name, exact(getattr(self, name)))

    @property
    def b_matrix(self):
        return ((self.mu, self.vk), (self.nu, self.mu))


def heis_atoms(which: str, n: int, p: HeisenbergParams):
    k0 = p.kappa0
    if which == "b":
        if n < 0:
            return [("mul", var(YA, n))]
        if n == 0:
            return [("scal", p.lam)]
        return [("diff", var(YA, -n), -2 * n * k0),
                ("diff", var(YB, -n), -2 * n * p.chi1)]
    if which != "b1":
        raise ValueError(f"unknown Heisenberg generator {which!r}")
    if p.variant == VARIANT_DERIVED:
        if n < 0:
            return [("mul", var(YB, n))]
        if n == 0:
            return [("vmat", p.b_matrix),
                    ("diff", var(YB, -2), -2 * k0),
                    ("diff", var(YB, -1), -4 * k0)]
        return [("diff", var(YA, -n), -2 * n * p.chi1),
                ("diff", var(YB, -n - 2), -2 * (n + 1) * k0),
                ("diff", var(YB, -n - 1), -4 * (2 * n + 1) * k0)]
    # literal variant
    if n < 0:
        atoms = [("mul", var(YB, n))]
        if n == -1:
            atoms.append(("diff", var(YB, -3), k0))
        if n == -3:
            atoms.append(("diff", var(YB, -1), -k0))
        return atoms
    if n == 0:
        return [("vmat", p.b_matrix),
                ("diff", var(YB, -4), 4 * k0),
                ("diff", var(YB, -2), -2 * p.c * k0)]
    return [("diff", var(YA, -n), -2 * n * p.chi1),
            ("diff", var(YB, -n - 4), 2 * (n + 2) * k0),
            ("diff", var(YB, -n - 2), -4 * p.c * (n + 1) * k0),
            ("diff", var(YB, -n), 2 * n * k0)]


def apply_heis(which: str, n: int, vec: FockVector, p: HeisenbergParams) -> FockVector:
    return apply_atoms(heis_atoms(which, n, p), vec)


def heis_rhs(w1: str, m: int, w2: str, n: int, p: HeisenbergParams) -> Rational:
    """Central scalar of [w1_m, w2_n] in the defining relations."""
    if (w1, w2) == ("b", "b"):
        return Rational(-2 * m) * p.kappa0 if m + n == 0 else ZERO
    if (w1, w2) == ("b1", "b1"):
        c = ZERO
        if m + n == -2:
            c += Rational(n - m)
        if m + n == -1:
            c += Rational(4 * (n - m))
        return c * p.kappa0
    if (w1, w2) == ("b1", "b"):
        return Rational(-2 * m) * p.chi1 if m + n == 0 else ZERO
    if (w1, w2) == ("b", "b1"):
        return Rational(2 * n) * p.chi1 if m + n == 0 else ZERO
    raise ValueError(f"unknown Heisenberg pair {(w1, w2)!r}")


def heis_bracket_check(w1: str, m: int, w2: str, n: int,
                       vec: FockVector, p: HeisenbergParams) -> FockVector:
    """Residual [w1_m, w2_n] vec - rhs * vec (zero = relation holds on vec)."""
    ab = apply_heis(w1, m, apply_heis(w2, n, vec, p), p)
    ba = apply_heis(w2, n, apply_heis(w1, m, vec, p), p)
    res = ab - ba
    res.accumulate(vec, -heis_rhs(w1, m, w2, n, p))
    return res


# ----------------------------------------------------------------------
# state bases and text syntax


def monomial_states(variables, max_degree: int, vidxs=(0, 1)):
    """All monomials of total degree <= max_degree, tensored with each v index.

    Deterministic order: by degree, then lexicographically in the encoded
    variables, then by v index.
    """
    variables = sorted(variables)
    states = []
    for deg in range(max_degree + 1):
        for combo in combinations_with_replacement(variables, deg):
            for vidx in vidxs:
                states.append((combo, vidx))
    return states


_FOCK_FACTOR = re.compile(
    r"\s*(?:(?P<coeff>\d+(?:/\d+)?)|(?P<name>x1|x|y1|y)\[(?P<idx>-?\d+)\]"
    r"(?:\^(?P<exp>\d+))?|(?P<v>v[01]))\s*")


def parse_fock(text: str) -> FockVector:
    """Parse e.g. '3/2*x[-1]*x[0]^2*y1[-3]*v0 - v1'."""
    out = FockVector()
    for sign, term in _split_signed_terms(text):
        coeff = ONE if sign == "+" else -ONE
        mono = []
        vidx = None
        pos = 0
        factors = term.split("*")
        for factor in factors:
            m = _FOCK_FACTOR.fullmatch(factor)
            if not m:
                raise ValueError(f"bad state factor {factor!r}")
            if m.group("coeff"):
                coeff *= parse_rational(m.group("coeff"))
            elif m.group("v"):
                if vidx is not None:
                    raise ValueError("repeated v factor")
                vidx = int(m.group("v")[1])
            else:
                v = var(_NAME_KINDS[m.group("name")], int(m.group("idx")))
                exp = int(m.group("exp")) if m.group("exp") else 1
                mono.extend([v] * exp)
        if vidx is None:
            vidx = 0
        state = (tuple(sorted(mono)), vidx)
        cur = out.get(state, ZERO) + coeff
        if cur == 0:
            out.pop(state, None)
        else:
            out[state] = cur
    return out


def _split_signed_terms(text):
    text = text.strip()
    if not text or text == "0":
        return []
    terms = []
    sign = "+"
    depth_guard = re.split(r"\s*([+-])\s*(?![^\[]*\])", text)
    # re.split keeps delimiters; rebuild (leading sign allowed)
    pieces = [p for p in depth_guard if p != ""]
    i = 0
    while i < len(pieces):
        if pieces[i] in "+-":
            sign = pieces[i]
            i += 1
            continue
        terms.append((sign, pieces[i]))
        sign = "+"
        i += 1
    return terms


def format_state(state: State) -> str:
    mono, vidx = state
    parts = []
    i = 0
    while i < len(mono):
        v = mono[i]
        exp = mono.count(v)
        name = _KIND_NAMES[var_kind(v)]
        token = f"{name}[{var_idx(v)}]"
        if exp > 1:
            token += f"^{exp}"
        parts.append(token)
        i += exp
    parts.append(f"v{vidx}")
    return "*".join(parts)


def format_fock(vec: FockVector) -> str:
    if not vec:
        return "0"
    parts = []
    for state in sorted(vec, key=lambda s: (len(s[0]), s[0], s[1])):
        c = vec[state]
        neg = c < 0
        mag = -c if neg else c
        body = format_state(state)
        if mag != 1:
            body = f"{rat_str(mag)}*{body}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
