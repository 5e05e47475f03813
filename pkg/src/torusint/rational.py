"""Exact rational scalars.

gmpy2's mpq is used when available (noticeably faster on the large exact
sums produced by the push-forward evaluators); fractions.Fraction is the
drop-in fallback. Both keep gcd-reduced numerator/denominator with a
positive denominator, which is all the rest of the package relies on.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    _mpq = Fraction
    HAVE_GMPY2 = False

#: Constructor for exact rationals: Q(3), Q(2, 7), Q("5/9"), Q(Fraction(1, 2)).
Q = _mpq

ZERO = Q(0)
ONE = Q(1)

_SCALARS = (int, Fraction, type(Q(1)))


def is_rational(x):
    return isinstance(x, _SCALARS)


def as_rational(x):
    """Coerce ints / Fractions / mpq to the active rational type."""
    if isinstance(x, _SCALARS):
        return Q(x)
    raise TypeError(f"not a rational scalar: {x!r}")


def qstr(x):
    """Canonical text form, '7' or '-3/4', always in lowest terms."""
    x = Q(x)
    n, d = x.numerator, x.denominator
    return str(n) if d == 1 else f"{n}/{d}"
