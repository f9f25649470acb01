"""Exact rational scalars.

Everything in this package is computed over Q: every structure constant,
normal-ordering coefficient and reduction coefficient is rational, so all
checks are exact equalities with no tolerances.  gmpy2's mpq is used when
available (it is an order of magnitude faster than fractions.Fraction in
the verification inner loops); the stdlib Fraction is a drop-in fallback.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

ZERO = Rational(0)
ONE = Rational(1)


def rat(p, q=1) -> Rational:
    """Rational p/q."""
    return Rational(p, q)


def parse_rational(text: str) -> Rational:
    """Parse 'p' or 'p/q' (arbitrary precision)."""
    text = text.strip()
    if "/" in text:
        p, q = text.split("/", 1)
        return Rational(int(p), int(q))
    return Rational(int(text))


def rat_str(x) -> str:
    """Canonical text form: 'p' for integers, 'p/q' otherwise."""
    return str(Rational(x))


def exact(x):
    """x as a plain int when integral, else as Rational.

    Native ints are noticeably faster in the verification inner loops and
    mix freely with Rational in arithmetic and comparisons.
    """
    q = Rational(x)
    return int(q) if q.denominator == 1 else q
