from fractions import Fraction

import pytest

from threepoint.current import (CurrentElem, GENERATOR_SYMBOLS, bracket,
                                parity, parse_current, quasi_degree,
                                relation_rhs)
from threepoint.rational import Rational
from threepoint.ring import RingElem, parse_ring

from oracles import omega1_multiplier

g = CurrentElem.generator


def test_bracket_examples():
    assert bracket(g("e", 1), g("f", -1)) == g("h", 0) + CurrentElem.omega0(-1)
    assert bracket(g("h1", 0), g("e1", 0)) == g("e", 2, 2) + g("e", 1, 8)
    for x in (g("e", 3), g("h1", -2), CurrentElem.omega1()):
        assert bracket(CurrentElem.omega0(), x).is_zero()
        assert bracket(x, CurrentElem.omega1()).is_zero()
    assert bracket(g("h", 2), g("h", -2)) == CurrentElem.omega0(-4)


def test_relation_rhs_examples():
    assert relation_rhs("e1", 0, "f1", -2) == \
        g("h", 0) + g("h", -1, 4) + CurrentElem.omega0(-1)
    assert relation_rhs("h", 2, "h1", -2) == CurrentElem.omega1(-4)
    assert relation_rhs("e", 1, "e", -1).is_zero()
    assert relation_rhs("e", 0, "e1", 5).is_zero()
    assert relation_rhs("f", 2, "f1", 3).is_zero()
    assert relation_rhs("w0", 0, "h1", 2).is_zero()


def test_relation_rhs_antisymmetric():
    for x in GENERATOR_SYMBOLS:
        for y in GENERATOR_SYMBOLS:
            for m in range(-3, 4):
                for n in range(-3, 4):
                    assert relation_rhs(y, n, x, m) == -relation_rhs(x, m, y, n)


def test_bracket_matches_table_on_delta_domain():
    """Away from the six mixed-central families the table is exact; inside
    them it is exact when m + n = 0 or m + n <= -2 (first-argument mode m
    of the displayed orientation)."""
    clean = 0
    for x in GENERATOR_SYMBOLS:
        for y in GENERATOR_SYMBOLS:
            mixed = {x, y} in ({"h", "h1"}, {"e", "f1"}, {"e1", "f"})
            for m in range(-5, 6):
                for n in range(-5, 6):
                    got = bracket(g(x, m), g(y, n))
                    want = relation_rhs(x, m, y, n)
                    if not mixed or m + n == 0 or m + n <= -2:
                        assert got == want, (x, m, y, n)
                        clean += 1
    assert clean > 3000


def test_bracket_table_mismatch_is_catalan_correction():
    """Inside the mixed families, bracket - table is exactly a w1 term built
    from the reduction multipliers r certified by the residue oracle.  For
    [h_m, h1_n] and [e_m, f1_n] the cocycle is (x,y)(-m) r(m+n-1) against
    the tabulated -(x,y) m delta; for [e1_m, f_n] the one-form sits on the
    other side and the cocycle is n r(m+n-1) against -m delta.  All agree
    exactly when m + n = 0 or m + n <= -2."""
    def corr_hh1(m, n, r_, delta):
        return 2 * (Fraction(-m) * r_ - Fraction(-m) * delta)

    def corr_ef1(m, n, r_, delta):
        return Fraction(-m) * r_ - Fraction(-m) * delta

    def corr_e1f(m, n, r_, delta):
        return Fraction(n) * r_ - Fraction(-m) * delta

    displayed = {("h", "h1"): corr_hh1, ("e", "f1"): corr_ef1,
                 ("e1", "f"): corr_e1f}
    mismatches = 0
    for (x, y), corr_of in displayed.items():
        for m in range(-5, 6):
            for n in range(-5, 6):
                got = bracket(g(x, m), g(y, n))
                want = relation_rhs(x, m, y, n)
                delta = 1 if m + n == 0 else 0
                corr = corr_of(m, n, omega1_multiplier(m + n - 1), delta)
                diff = got - want
                assert diff.terms == {} and diff.c0 == 0
                assert Fraction(str(diff.c1)) == corr, (x, m, y, n)
                if corr != 0:
                    mismatches += 1
                # swapped orientation is the exact negative
                got_s = bracket(g(y, n), g(x, m))
                want_s = relation_rhs(y, n, x, m)
                assert got_s - want_s == -(diff)
    assert mismatches == 3 * 59


@pytest.mark.xfail(strict=True, reason="the tabulated w1 central terms hold "
                   "only for m+n = 0 or m+n <= -2; the Kassel cocycle "
                   "computed through the reducer carries the signed-Catalan "
                   "multipliers elsewhere")
def test_bracket_matches_table_everywhere_as_tabulated():
    for x, y in (("h", "h1"), ("e", "f1"), ("e1", "f")):
        for m in range(-5, 6):
            for n in range(-5, 6):
                assert bracket(g(x, m), g(y, n)) == relation_rhs(x, m, y, n)


def test_jacobi_on_sample_triples():
    triples = [
        (("e", 1), ("f", -1), ("h", 0)),
        (("e1", 0), ("f1", 0), ("h1", -2)),   # the table itself fails here
        (("e1", 0), ("f1", 0), ("h1", -1)),
        (("e", 2), ("f1", -1), ("h1", -1)),
        (("h", 1), ("h1", -2), ("e1", 1)),
    ]
    for (x, m), (y, n), (z, p) in triples:
        a, b, c = g(x, m), g(y, n), g(z, p)
        jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) \
            + bracket(bracket(c, a), b)
        assert jac.is_zero(), (x, m, y, n, z, p)


def test_table_jacobi_violation_is_real():
    """The tabulated structure constants do not satisfy the Jacobi identity
    (unlike the computed bracket): the standard witness triple."""
    def tbl(x, m, y, n):
        return relation_rhs(x, m, y, n)

    def tbl_of(elem, z, p):
        out = CurrentElem.zero()
        for (tag, (k, eps)), c in elem.sorted_terms():
            sym = {("e", 0): "e", ("e", 1): "e1", ("f", 0): "f",
                   ("f", 1): "f1", ("h", 0): "h", ("h", 1): "h1"}[(tag, eps)]
            out = out + tbl(sym, k, z, p).scale(c)
        return out

    j = tbl_of(tbl("e1", 0, "f1", 0), "h1", -2) \
        + tbl_of(tbl("f1", 0, "h1", -2), "e1", 0) \
        + tbl_of(tbl("h1", -2, "e1", 0), "f1", 0)
    assert j == CurrentElem.omega1(-4)


def test_quasi_degree():
    assert quasi_degree(g("e", 3)) == 3
    assert quasi_degree(g("h1", -1)) == Rational(-1, 2)
    assert quasi_degree(g("f", 0)) == 0
    with pytest.raises(ValueError):
        quasi_degree(g("e", 1) + g("f", 0))
    with pytest.raises(ValueError):
        quasi_degree(CurrentElem.omega0())


def test_quasi_grading_defect():
    for x in GENERATOR_SYMBOLS:
        for y in GENERATOR_SYMBOLS:
            for m in (-2, 0, 3):
                for n in (-4, 1):
                    dsum = quasi_degree(g(x, m)) + quasi_degree(g(y, n))
                    for (_, (k, eps)) in bracket(g(x, m), g(y, n)).terms:
                        d = Rational(k) + Rational(eps, 2)
                        assert abs(d - dsum) <= 1


def test_parity():
    assert parity(parse_ring("t^5")) == 0
    assert parity(parse_ring("t^-2*u")) == 1
    assert parity(parse_ring("1 + u")) == "mixed"
    assert parity(RingElem.zero()) == 0


def test_element_text_roundtrip():
    for text in ("2*e[t^2] + 8*e[t^1]", "h1[0]", "e[t^-1*u]",
                 "-1/2*w0 + e1[-3]", "0", "w1"):
        x = parse_current(text)
        assert parse_current(str(x)) == x
    assert str(bracket(g("h1", 0), g("e1", 0))) == "2*e[t^2] + 8*e[t^1]"
    assert parse_current("e[t^0*u]") == g("e1", 0)
