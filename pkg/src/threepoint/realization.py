"""Free-field realization of the extended current algebra on Fock states.

Each of the six currents maps to a composite field: a sum of terms, each an
explicit z-polynomial multiplier times a normal-ordered product of at most
three atomic fields drawn from the doubled oscillator pair, its z-derivative
partners, and the two Heisenberg fields.  With currents expanded as
x(z) = sum_m x_m z^(-m-1), weight-1 atomic fields as sum X_n z^(-n-1) and
weight-0 fields (the starred pair) as sum X_n z^(-n), the m-th mode of a
term with z-power p and factors of weights w_i collects exactly the index
tuples with

    sum_i (n_i + w_i) = m + 1 + p.

Normal ordering collapses to "annihilation-labelled modes act first": the
only contracting pairs are like-family starred/unstarred oscillators, and
like-labelled modes commute, so the nested ordering of composite fields is
order-independent (the tests check this).  Applied to a fixed state only
finitely many tuples act: annihilation-labelled modes must hit a variable
of the state, and creation-labelled modes have their index sum constrained
with each index bounded on one side by its creation condition.  There is no
cutoff parameter anywhere.

The central elements map to scalars: w0 -> chi0 = kappa0 + 4*[r = 0],
w1 -> 0 (which also forces chi1 = 0 here; the fock module keeps chi1
generic for standalone Heisenberg checks).

Every realized operator is affine in the central charge: it splits as
const_part + kappa0 * slope_part, because the Heisenberg annihilation
coefficients and chi0 are affine in kappa0 and each term carries at most
one Heisenberg factor.  The two parts are exposed separately (PART_CONST /
PART_SLOPE); the verification harness exploits this to check a whole
kappa0 family at once, and apply_mode recombines them with the configured
value.  The oscillator-side fold of a term is memoized per (factors, index
sum, x-part of the monomial), which the brute-force sweeps share heavily;
the creation-side index compositions are state-independent and cached
globally.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product as _product

from .rational import ONE, Rational, ZERO, exact
from .current import CurrentElem, _TAG_TO_SYM
from .fock import (KIND_SPAN, FockVector, HeisenbergParams, OscConfig,
                   XA, XB, YA, YB, heis_atoms, mono_diff, mono_mul,
                   osc_atoms, var_idx)

_XB_BASE = XB * KIND_SPAN
_Y_BASE = YA * KIND_SPAN
_YB_BASE = YB * KIND_SPAN

FIELD_KINDS = ("a", "a1", "a*", "a1*", "da*", "da1*", "b", "b1")
OSC_FIELD_KINDS = ("a", "a1", "a*", "a1*", "da*", "da1*")
WEIGHTS = {"a": 1, "a1": 1, "a*": 0, "a1*": 0, "da*": 1, "da1*": 1,
           "b": 1, "b1": 1}

PART_FULL = "full"
PART_CONST = "const"
PART_SLOPE = "slope"

_INF = float("inf")
_NEG_INF = float("-inf")


@dataclass(frozen=True)
class FieldTerm:
    """coeff * (sum_p zpoly[p] z^p) * :factors:"""

    coeff: Rational
    zpoly: tuple  # ((power, coeff), ...)
    factors: tuple  # field kind names, length <= 3

    def __post_init__(self):
        object.__setattr__(self, "coeff", exact(self.coeff))
        object.__setattr__(self, "zpoly",
                           tuple((int(p), exact(c)) for p, c in self.zpoly))
        for f in self.factors:
            if f not in FIELD_KINDS:
                raise ValueError(f"unknown field kind {f!r}")


_Z1 = ((0, 1),)
_P = ((2, 1), (1, 4))          # z^2 + 4z
_ZP2 = ((1, 1), (0, 2))        # z + 2


def field_terms(symbol: str, chi0) -> tuple:
    """The composite field realizing a current generator family.

    chi0 is the scalar image of the central element w0 and enters the
    derivative-correction terms of the raising currents.
    """
    t = FieldTerm
    if symbol == "f":
        return (t(-1, _Z1, ("a",)),)
    if symbol == "f1":
        return (t(-1, _Z1, ("a1",)),)
    if symbol == "h":
        return (t(2, _Z1, ("a", "a*")), t(2, _Z1, ("a1", "a1*")),
                t(1, _Z1, ("b",)))
    if symbol == "h1":
        return (t(2, _Z1, ("a1", "a*")), t(2, _P, ("a", "a1*")),
                t(1, _Z1, ("b1",)))
    if symbol == "e":
        return (t(1, _Z1, ("a", "a*", "a*")),
                t(1, _P, ("a", "a1*", "a1*")),
                t(2, _Z1, ("a1", "a*", "a1*")),
                t(1, _Z1, ("b", "a*")),
                t(1, _Z1, ("b1", "a1*")),
                t(chi0, _Z1, ("da*",)))
    if symbol == "e1":
        return (t(1, _Z1, ("a1", "a*", "a*")),
                t(1, _P, ("a1", "a1*", "a1*")),
                t(2, _P, ("a", "a*", "a1*")),
                t(1, _Z1, ("b1", "a*")),
                t(1, _P, ("b", "a1*")),
                t(chi0, _P, ("da1*",)),
                t(chi0, _ZP2, ("a1*",)))
    raise ValueError(f"unknown current symbol {symbol!r}")


def _slope_terms(symbol: str) -> tuple:
    """d/d(kappa0) of the realized field, as terms to be resolved in slope
    mode: the Heisenberg-bearing terms plus the chi0 terms at coefficient 1."""
    t = FieldTerm
    if symbol in ("f", "f1"):
        return ()
    if symbol == "h":
        return (t(1, _Z1, ("b",)),)
    if symbol == "h1":
        return (t(1, _Z1, ("b1",)),)
    if symbol == "e":
        return (t(1, _Z1, ("b", "a*")), t(1, _Z1, ("b1", "a1*")),
                t(1, _Z1, ("da*",)))
    if symbol == "e1":
        return (t(1, _Z1, ("b1", "a*")), t(1, _P, ("b", "a1*")),
                t(1, _P, ("da1*",)), t(1, _ZP2, ("a1*",)))
    raise ValueError(f"unknown current symbol {symbol!r}")


@dataclass(frozen=True)
class RealizationConfig:
    """Normal-ordering choice r plus Heisenberg module parameters.

    chi1 = 0 is enforced (the realization sends w1 to zero, so a nonzero
    chi1 would break the mixed current relations on the state space).
    """

    r: int = 0
    heis: HeisenbergParams = HeisenbergParams()

    def __post_init__(self):
        if self.r not in (0, 1):
            raise ValueError("r must be 0 or 1")
        if self.heis.chi1 != 0:
            raise ValueError("the realization requires chi1 = 0")

    @property
    def chi0(self) -> Rational:
        return self.heis.kappa0 + (4 if self.r == 0 else 0)


class Realization:
    """Exact mode actions of the realized currents, with per-mode memoing.

    Pure with respect to the visible state space; the instance caches
    (terms, mode, part) |-> state |-> image tables plus enumerated index
    tuples keyed by variable-support signature.
    """

    def __init__(self, cfg: RealizationConfig):
        self.cfg = cfg
        self.osc = OscConfig(cfg.r)
        self.chi0 = cfg.chi0
        self.chi0_const = 4 if cfg.r == 0 else 0
        self._heis_zero = replace(cfg.heis, kappa0=ZERO)
        self._heis_one = replace(cfg.heis, kappa0=ONE)
        self._const_terms = {s: field_terms(s, self.chi0_const)
                             for s in ("e", "f", "h", "e1", "f1", "h1")}
        self._slope_terms = {s: _slope_terms(s)
                             for s in ("e", "f", "h", "e1", "f1", "h1")}
        self._ops = {}     # (kind, n, part) -> atom tuple
        self._memo = {}    # (terms, m, part) -> {state: ((state', c'), ...)}
        self._plans = {}   # terms -> ((xfacs, bkind, ((p, coeff), ...)), ...)
        self._xmemo = {}   # (xfacs, target, xpart) -> ((xpart', c'), ...)
        self._xann = {}    # (xfacs, xpart) -> annihilation folds
        self._ymemo = {}   # (bkind, n, part, ypart, vidx) -> ((yp', vi', c), ...)
        self._comps = {}   # (cre kinds, remainder) -> c-tuples with c_i <= bound_i

    # -- atomic mode operators ------------------------------------------

    def _op(self, kind: str, n: int, part: str):
        key = (kind, n, part)
        op = self._ops.get(key)
        if op is None:
            op = self._build_op(kind, n, part)
            self._ops[key] = op
        return op

    def _build_op(self, kind: str, n: int, part: str):
        if kind in ("a", "a1", "a*", "a1*"):
            return tuple(osc_atoms(kind, n, self.osc))
        if kind in ("da*", "da1*"):
            base = osc_atoms(kind[1:], n, self.osc)
            return tuple(_scale_atom(a, Rational(-n)) for a in base)
        if part == PART_FULL:
            return tuple(heis_atoms(kind, n, self.cfg.heis))
        zero = heis_atoms(kind, n, self._heis_zero)
        if part == PART_CONST:
            return tuple(a for a in zero if not _atom_is_null(a))
        one = heis_atoms(kind, n, self._heis_one)
        slope = []
        for a0, a1 in zip(zero, one):
            d = _atom_difference(a0, a1)
            if d is not None:
                slope.append(d)
        return tuple(slope)

    def _is_ann(self, kind: str, n: int) -> bool:
        r = self.cfg.r
        if kind in ("a", "a1"):
            return r == 0 and n >= 0
        if kind in ("a*", "a1*", "da*", "da1*"):
            return r == 1 or n > 0
        return n > 0  # b, b1: positive modes differentiate

    def _cre_bound_c(self, kind: str):
        """Largest c = n + weight over the non-annihilating mode region."""
        r = self.cfg.r
        if kind in ("a", "a1"):
            return _INF if r == 1 else 0
        if kind in ("a*", "a1*"):
            return _NEG_INF if r == 1 else 0
        if kind in ("da*", "da1*"):
            return _NEG_INF if r == 1 else 1
        return 1  # b, b1: modes n <= 0 never annihilate

    def _ann_candidates(self, kind: str, kindsig) -> list:
        """Annihilation-region modes whose target variable occurs in the state."""
        r = self.cfg.r
        if kind == "a":
            return [] if r == 1 else [i for i in kindsig[XA] if i >= 0]
        if kind == "a1":
            return [] if r == 1 else [i for i in kindsig[XB] if i >= 0]
        if kind in ("a*", "da*"):
            src = kindsig[XA]
        elif kind in ("a1*", "da1*"):
            src = kindsig[XB]
        elif kind == "b":
            return sorted({-i for i in kindsig[YA]} | {-i for i in kindsig[YB]})
        else:  # b1
            out = {-i for i in kindsig[YA]}
            offs = (2, 1) if self.cfg.heis.variant == "derived" else (4, 2, 0)
            for i in kindsig[YB]:
                for off in offs:
                    if -i - off > 0:
                        out.add(-i - off)
            return sorted(out)
        if r == 1:
            return sorted(-i for i in src)
        return sorted(-i for i in src if i < 0)

    # -- tuple enumeration ------------------------------------------------

    def _compositions(self, kinds, rem: int):
        """All (c_1..c_k) with c_i <= cre_bound(kind_i) and sum = rem: the
        modes of creation-labelled factors.  State-independent, cached."""
        key = (kinds, rem)
        out = self._comps.get(key)
        if out is not None:
            return out
        bounds = [self._cre_bound_c(kind) for kind in kinds]
        k = len(kinds)
        if k == 0:
            out = ((),) if rem == 0 else ()
        elif k == 1:
            b = bounds[0]
            out = ((rem,),) if (b == _INF or rem <= b) else ()
        else:
            if any(b == _INF for b in bounds):
                raise AssertionError(
                    "an unbounded creation factor cannot share a term")
            acc = []
            if k == 2:
                b0, b1 = bounds
                for c0 in range(rem - int(b1), int(b0) + 1):
                    acc.append((c0, rem - c0))
            else:
                b0, b1, b2 = bounds
                for c0 in range(rem - int(b1) - int(b2), int(b0) + 1):
                    for c1 in range(rem - c0 - int(b2), int(b1) + 1):
                        acc.append((c0, c1, rem - c0 - c1))
            out = tuple(acc)
        self._comps[key] = out
        return out

    def _ann_folds(self, xfacs, xpart):
        """Annihilation-role folds of the oscillator factors over xpart.

        Target-independent: each entry is (creation kinds, annihilation
        index sum, folded monomial, folded coefficient) for one choice of
        annihilation roles and modes; xside completes each with the cached
        creation compositions of the leftover sum.
        """
        key = (xfacs, xpart)
        out = self._xann.get(key)
        if out is not None:
            return out
        k = len(xfacs)
        sig0 = []
        sig1 = []
        for v in xpart:
            lst = sig1 if v >= _XB_BASE else sig0
            i = var_idx(v)
            if i not in lst:
                lst.append(i)
        ann_cs = []
        bounds = []
        for kind in xfacs:
            sig = sig1 if kind in ("a1", "a1*", "da1*") else sig0
            w = WEIGHTS[kind]
            if kind in ("a", "a1"):
                cands = [] if self.cfg.r == 1 else [i + w for i in sig if i >= 0]
            elif self.cfg.r == 1:
                cands = [-i + w for i in sig]
            else:
                cands = [-i + w for i in sig if i < 0]
            ann_cs.append(cands)
            bounds.append(self._cre_bound_c(kind))
        entries = []
        for pattern in range(1 << k):
            idx_ann = [i for i in range(k) if pattern >> i & 1]
            idx_cre = [i for i in range(k) if not pattern >> i & 1]
            if any(not ann_cs[i] for i in idx_ann):
                continue
            if any(bounds[i] == _NEG_INF for i in idx_cre):
                continue
            cre_kinds = tuple(xfacs[i] for i in idx_cre)
            for combo in _product(*(ann_cs[i] for i in idx_ann)):
                mono = xpart
                coeff = 1
                for j, i in enumerate(idx_ann):
                    kind = xfacs[i]
                    atom = self._op(kind, combo[j] - WEIGHTS[kind], PART_FULL)[0]
                    scale = atom[2]
                    if scale == 0:
                        coeff = 0
                        break
                    hit = mono_diff(mono, atom[1])
                    if hit is None:
                        coeff = 0
                        break
                    cnt, mono = hit
                    coeff = coeff * cnt * scale
                if coeff == 0:
                    continue
                entries.append((cre_kinds, sum(combo), mono, coeff))
        out = tuple(entries)
        self._xann[key] = out
        return out

    # -- term application ---------------------------------------------------
    #
    # The monomial of a state is the concatenation of its oscillator part
    # (variable kinds 0, 1) and its Heisenberg part (kinds 2, 3), which are
    # contiguous in the sorted encoding.  Oscillator factors act on the
    # x-part only and Heisenberg factors on the y-part/V only, and the two
    # sides commute exactly, so a term's action factorizes: the x-side fold
    # is memoized per (factors, index-sum, x-part) -- shared across modes,
    # symbols and the whole sweep -- and the single Heisenberg factor, if
    # present, contributes an outer loop over its own (finitely many) modes.

    def _plan(self, terms):
        plan = self._plans.get(terms)
        if plan is None:
            compiled = []
            for term in terms:
                xfacs = tuple(f for f in term.factors if f in OSC_FIELD_KINDS)
                heis = [f for f in term.factors if f in ("b", "b1")]
                if len(heis) > 1:
                    raise ValueError("at most one Heisenberg factor per term")
                zp = tuple((p, term.coeff * pc) for p, pc in term.zpoly
                           if term.coeff * pc != 0)
                if zp:
                    compiled.append((xfacs, heis[0] if heis else None, zp))
            plan = self._plans[terms] = tuple(compiled)
        return plan

    def _xside(self, xfacs, target: int, xpart):
        """Fold of the oscillator factors over the x-part of a monomial."""
        key = (xfacs, target, xpart)
        out = self._xmemo.get(key)
        if out is not None:
            return out
        acc = {}
        op = self._op
        for cre_kinds, ann_sum, mono, coeff in self._ann_folds(xfacs, xpart):
            for comp in self._compositions(cre_kinds, target - ann_sum):
                mo = mono
                c = coeff
                for j, kind in enumerate(cre_kinds):
                    atom = op(kind, comp[j] - WEIGHTS[kind], PART_FULL)[0]
                    if atom[0] == "mul":
                        mo = mono_mul(mo, atom[1])
                    else:  # smul
                        scale = atom[2]
                        if scale == 0:
                            c = 0
                            break
                        mo = mono_mul(mo, atom[1])
                        c = c * scale
                if c == 0:
                    continue
                s = acc.get(mo, 0) + c
                if s == 0:
                    acc.pop(mo, None)
                else:
                    acc[mo] = s
        out = tuple(acc.items())
        self._xmemo[key] = out
        return out

    def _yside(self, bkind: str, n: int, part: str, ypart, vidx: int):
        """Action of one Heisenberg mode on the y-part and V index."""
        key = (bkind, n, part, ypart, vidx)
        out = self._ymemo.get(key)
        if out is not None:
            return out
        acc = []
        for atom in self._op(bkind, n, part):
            tag = atom[0]
            if tag == "mul":
                acc.append((mono_mul(ypart, atom[1]), vidx, ONE))
            elif tag == "diff":
                if atom[2] != 0:
                    hit = mono_diff(ypart, atom[1])
                    if hit is not None:
                        cnt, rest = hit
                        acc.append((rest, vidx, atom[2] * cnt))
            elif tag == "scal":
                if atom[1] != 0:
                    acc.append((ypart, vidx, atom[1]))
            else:  # vmat
                mat = atom[1]
                for i in (0, 1):
                    if mat[i][vidx] != 0:
                        acc.append((ypart, i, mat[i][vidx]))
        out = tuple(acc)
        self._ymemo[key] = out
        return out

    def _xside_max_c(self, xfacs, xpart) -> float:
        """Largest attainable index sum (c units) of the oscillator factors."""
        total = 0
        for kind in xfacs:
            top = self._cre_bound_c(kind)
            if top == _INF:
                return _INF
            w = WEIGHTS[kind]
            fam = _XB_BASE if kind in ("a1", "a1*", "da1*") else 0
            best = top
            for v in xpart:
                if (v >= _XB_BASE) == (fam != 0):
                    i = var_idx(v)
                    # annihilation candidates in c units
                    if kind in ("a", "a1"):
                        if self.cfg.r == 0 and i >= 0 and i + w > best:
                            best = i + w
                    else:
                        cand = -i + w
                        if (self.cfg.r == 1 or i < 0) and cand > best:
                            best = cand
            if best == _NEG_INF:
                return _NEG_INF
            total += best
        return total

    def _apply_terms_to_state(self, terms, m: int, part: str, state):
        mono, vidx = state
        cut = len(mono)
        for pos, v in enumerate(mono):
            if v >= _Y_BASE:
                cut = pos
                break
        xpart, ypart = mono[:cut], mono[cut:]
        ysig = None
        acc = {}
        xside = self._xside
        for xfacs, bkind, zp in self._plan(terms):
            for p, base in zp:
                target = m + 1 + p
                if bkind is None:
                    for xm, xc in xside(xfacs, target, xpart):
                        skey = (xm + ypart, vidx)
                        s = acc.get(skey, 0) + base * xc
                        if s == 0:
                            acc.pop(skey, None)
                        else:
                            acc[skey] = s
                    continue
                if ysig is None:
                    ya = []
                    yb = []
                    for v in ypart:
                        lst = yb if v >= _YB_BASE else ya
                        i = var_idx(v)
                        if i not in lst:
                            lst.append(i)
                    ysig = ((), (), tuple(ya), tuple(yb))
                ann_cs = [n + 1 for n in self._ann_candidates(bkind, ysig)]
                if xfacs:
                    xmax = self._xside_max_c(xfacs, xpart)
                    if xmax == _NEG_INF:
                        continue
                    if xmax == _INF:
                        raise AssertionError(
                            "Heisenberg factor paired with an unbounded field")
                    cands = set(ann_cs)
                    lo = target - int(xmax)
                    if lo <= 1:
                        cands.update(range(lo, 2))
                    cands = {c for c in cands if c >= lo}
                else:
                    c = target
                    cands = {c} if (c <= 1 or c in ann_cs) else set()
                for cb in sorted(cands):
                    if cb > 1 and cb not in ann_cs:
                        continue
                    ylist = self._yside(bkind, cb - 1, part, ypart, vidx)
                    if not ylist:
                        continue
                    if xfacs:
                        xres = xside(xfacs, target - cb, xpart)
                    else:
                        xres = ((xpart, 1),)
                    for xm, xc in xres:
                        cx = base * xc
                        for yp, vi, yc in ylist:
                            skey = (xm + yp, vi)
                            s = acc.get(skey, 0) + cx * yc
                            if s == 0:
                                acc.pop(skey, None)
                            else:
                                acc[skey] = s
        return tuple(acc.items())

    # -- public application -------------------------------------------------

    def image_table(self, terms: tuple, m: int, part: str = PART_FULL) -> dict:
        """The memo table state -> image for one mode operator."""
        key = (terms, m, part)
        memo = self._memo.get(key)
        if memo is None:
            memo = self._memo[key] = {}
        return memo

    def apply_state(self, terms: tuple, m: int, state, part: str = PART_FULL):
        """Cached image of a single basis state, as a tuple of terms."""
        memo = self.image_table(terms, m, part)
        image = memo.get(state)
        if image is None:
            image = memo[state] = self._apply_terms_to_state(terms, m, part, state)
        return image

    def apply_terms(self, terms: tuple, m: int, vec: FockVector,
                    part: str = PART_FULL) -> FockVector:
        """Apply the m-th mode of an explicit composite field to vec."""
        out = FockVector()
        memo = self.image_table(terms, m, part)
        build = self._apply_terms_to_state
        for state, c in vec.items():
            image = memo.get(state)
            if image is None:
                image = memo[state] = build(terms, m, part, state)
            for s2, c2 in image:
                s = out.get(s2, 0) + c * c2
                if s == 0:
                    out.pop(s2, None)
                else:
                    out[s2] = s
        return out

    def const_terms(self, symbol: str) -> tuple:
        return self._const_terms[symbol]

    def slope_terms(self, symbol: str) -> tuple:
        return self._slope_terms[symbol]

    def apply_mode(self, symbol: str, m: int, vec: FockVector) -> FockVector:
        """Action of the m-th mode of the realized current e/f/h/e1/f1/h1.

        Assembled as const_part + kappa0 * slope_part, which equals the
        directly resolved operator (the tests pin this identity).
        """
        out = self.apply_terms(self._const_terms[symbol], m, vec, PART_CONST)
        k0 = self.cfg.heis.kappa0
        if k0 != 0:
            slope = self._slope_terms[symbol]
            if slope:
                out.accumulate(self.apply_terms(slope, m, vec, PART_SLOPE), k0)
        return out

    def apply_current(self, x: CurrentElem, vec: FockVector) -> FockVector:
        """Linear extension over a current-algebra element; w0 -> chi0, w1 -> 0."""
        out = FockVector()
        for (tag, (k, eps)), c in x.sorted_terms():
            out.accumulate(self.apply_mode(_TAG_TO_SYM[(tag, eps)], k, vec), c)
        if x.c0 != 0:
            out.accumulate(vec, x.c0 * self.chi0)
        return out

    def trim_memo(self, keep_states=None):
        """Drop cached state images (outside keep_states, if given)."""
        if keep_states is None:
            self._memo.clear()
            return
        for key, table in self._memo.items():
            self._memo[key] = {s: v for s, v in table.items() if s in keep_states}


def _scale_atom(atom, c: Rational):
    tag = atom[0]
    if tag == "mul":
        return ("smul", atom[1], c) if c != 1 else atom
    if tag == "diff":
        return ("diff", atom[1], atom[2] * c)
    if tag == "scal":
        return ("scal", atom[1] * c)
    raise ValueError(f"cannot scale atom {atom!r}")


def _atom_is_null(atom):
    tag = atom[0]
    if tag == "diff":
        return atom[2] == 0
    if tag == "scal":
        return atom[1] == 0
    if tag == "vmat":
        return all(c == 0 for row in atom[1] for c in row)
    return False


def _atom_difference(a0, a1):
    """a1 - a0 for structurally parallel atoms; None when they cancel."""
    tag = a0[0]
    if tag != a1[0] or (tag != "vmat" and a0[1] != a1[1]):
        raise AssertionError("atom lists are not parallel")
    if tag == "mul":
        return None
    if tag == "diff":
        d = a1[2] - a0[2]
        return ("diff", a0[1], d) if d != 0 else None
    if tag == "scal":
        d = a1[1] - a0[1]
        return ("scal", d) if d != 0 else None
    if tag == "vmat":
        diff = tuple(tuple(a1[1][i][j] - a0[1][i][j] for j in (0, 1))
                     for i in (0, 1))
        if all(c == 0 for row in diff for c in row):
            return None
        return ("vmat", diff)
    raise AssertionError(f"unknown atom {tag!r}")


def apply_mode(symbol: str, m: int, vec: FockVector,
               cfg: RealizationConfig) -> FockVector:
    """One-shot convenience wrapper around Realization.apply_mode."""
    return Realization(cfg).apply_mode(symbol, m, vec)


def apply_current(x: CurrentElem, vec: FockVector,
                  cfg: RealizationConfig) -> FockVector:
    """One-shot convenience wrapper around Realization.apply_current."""
    return Realization(cfg).apply_current(x, vec)
