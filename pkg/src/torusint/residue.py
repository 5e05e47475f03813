"""Residue at infinity and its iterated form.

For a rational function of one variable the residue at infinity is MINUS the
coefficient of z^-1 in the expansion in decreasing powers of z, so that it
equals minus the sum of the residues at the finite poles.  With this sign,

    Res_{x=inf} f(x) / ((t0 - x)(t1 - x)) = (f(t0) - f(t1)) / (t1 - t0),

which is the normalization every push-forward formula in this package uses.

The iterated operator applies the single-variable residue once per listed
variable, innermost variable (the last one listed) first.  It is only defined
termwise when every denominator factor involves at most one residue variable
(the canonical-integrand condition); all integrands built by
:mod:`torusint.pushforward` satisfy it after cancellation.
"""

from __future__ import annotations

from .algebra import FactoredRatFunc, Polynomial, _inverse_u_series, _split_denominator, zero_ratfunc
from .errors import NonCanonicalIntegrand


def check_canonical_integrand(f):
    """Every denominator factor may involve at most one z-class variable."""
    for form in f.denom:
        zs = form.z_class_vars()
        if len(zs) > 1:
            raise NonCanonicalIntegrand(
                f"denominator factor {form} involves several residue variables"
            )


def residue_at_infinity(f, var):
    """Residue at infinity of a FactoredRatFunc in one z-class variable.

    Returns minus the coefficient of var^-1 of the expansion at infinity,
    again as a FactoredRatFunc; its denominator keeps exactly the input
    factors that did not involve ``var``.  Denominator factors of any
    multiplicity are handled by the same series extraction.
    """
    table = f.table
    v = var if isinstance(var, int) else table.index(var)
    if not table.is_z(v):
        raise NonCanonicalIntegrand(f"{table.names[v]} is not a residue variable")
    check_canonical_integrand(f)
    if f.numer.is_zero():
        return zero_ratfunc(table)
    if not f.involves(v):
        raise NonCanonicalIntegrand(
            f"variable {table.names[v]} does not appear in the integrand"
        )
    involving, rest = _split_denominator(f, v)
    M = sum(mult for _, _, mult in involving)
    K = f.numer.degree_in(v)
    # coefficient of var^-1 is sum_k N_k c_{k-M+1}
    top = K - M + 1
    if top < 0:
        return zero_ratfunc(table)
    scale = -f.scalar
    for a, _, mult in involving:
        scale = scale / a**mult
    c = _inverse_u_series(table, [(rho, mult) for _, rho, mult in involving], top + 1)
    total = Polynomial.zero(table)
    for k, nk in f.numer.coeffs_in(v).items():
        j = k - M + 1
        if 0 <= j <= top:
            total = total + nk * c[j]
    return FactoredRatFunc(table, scale, total, rest)


def iterated_residue(f, order):
    """Apply residue_at_infinity over ``order``, last-listed variable first."""
    table = f.table
    seen = set()
    indices = []
    for var in order:
        v = var if isinstance(var, int) else table.index(var)
        if v in seen:
            raise NonCanonicalIntegrand(f"repeated residue variable {table.names[v]}")
        seen.add(v)
        indices.append(v)
    for v in reversed(indices):
        f = residue_at_infinity(f, v)
    return f
