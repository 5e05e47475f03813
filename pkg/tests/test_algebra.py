"""Exact polynomial kernel: ring laws, substitution, series at infinity."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusint import (
    FactoredRatFunc,
    LinearForm,
    MismatchedTables,
    Polynomial,
    Q,
    VarTable,
    exact_divide,
    expand_at_infinity,
)
from torusint.errors import InexactDivision

from conftest import random_polynomial, random_rational

T = VarTable.standard(2, 2)  # t1 t2 z1 z2


def P(expr_terms):
    """Helper: {(e_t1,e_t2,e_z1,e_z2): coeff} -> Polynomial."""
    return Polynomial(T, {T.pack(k): Q(*v) if isinstance(v, tuple) else Q(v) for k, v in expr_terms.items()})


def var(name):
    return Polynomial.variable(T, name)


# -- hypothesis strategies ----------------------------------------------------

coeffs = st.fractions(max_denominator=7).map(lambda f: Q(f.numerator, f.denominator))
exponents = st.tuples(*(st.integers(0, 3) for _ in range(4)))
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda d: Polynomial(T, {T.pack(k): c for k, c in d.items()})
)


@settings(max_examples=120, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + Polynomial.zero(T) == a
    assert a * Polynomial.const(T, 1) == a
    assert a - a == Polynomial.zero(T)


@settings(max_examples=60, deadline=None)
@given(polys, st.integers(0, 4))
def test_powers_match_repeated_multiplication(a, e):
    expected = Polynomial.const(T, 1)
    for _ in range(e):
        expected = expected * a
    assert a**e == expected


def test_difference_of_squares():
    z1, z2 = var("z1"), var("z2")
    assert (z1 + z2) * (z1 - z2) == z1**2 - z2**2


def test_add_zero_identity():
    p = P({(1, 0, 2, 0): 3, (0, 0, 0, 0): (1, 2)})
    assert p + Polynomial.zero(T) == p


def test_t_z_product():
    t1, z1 = var("t1"), var("z1")
    assert (t1 - z1) * (t1 + z1) == t1**2 - z1**2


def test_mismatched_tables_rejected():
    other = VarTable.standard(1, 1)
    with pytest.raises(MismatchedTables):
        Polynomial.variable(T, "z1") + Polynomial.variable(other, "z1")


# -- substitution -------------------------------------------------------------


def test_substitute_rename():
    z1, z2 = var("z1"), var("z2")
    t1 = LinearForm.variable(T, "t1")
    got = (z1 + z2).substitute({"z1": t1, "z2": LinearForm.variable(T, "t2")})
    assert got == var("t1") + var("t2")


def test_substitute_sign_flip():
    got = var("z1").substitute({"z1": LinearForm.variable(T, "t1", Q(-1))})
    assert got == -var("t1")


def test_substitute_collision():
    t2 = LinearForm.variable(T, "t2")
    got = (var("z1") * var("z2")).substitute({"z1": t2, "z2": t2})
    assert got == var("t2") ** 2


def test_substitute_constant_and_partial():
    p = var("z1") * var("t1") + var("z2")
    got = p.substitute({"z1": Q(3)})
    assert got == 3 * var("t1") + var("z2")


def test_substitute_general_form_expands(rng):
    form = LinearForm.from_names(T, {"t1": Q(2), "t2": Q(-1, 3)}, Q(1, 2))
    p = var("z1") ** 3
    expected = form.as_polynomial() ** 3
    assert p.substitute({"z1": form}) == expected


# -- exact division -----------------------------------------------------------


def test_exact_division_roundtrip(rng):
    for _ in range(40):
        p = random_polynomial(T, rng)
        form = LinearForm.from_names(
            T, {"t1": random_rational(rng), "t2": random_rational(rng, 1, 5)}
        )
        prod = p * form.as_polynomial()
        assert exact_divide(prod, form) == p


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        exact_divide(var("t1") + 1, LinearForm.variable(T, "t2"))


def test_division_by_power():
    form = LinearForm.from_names(T, {"t1": Q(1), "t2": Q(1)})
    p = form.as_polynomial() ** 3 * var("z1")
    assert exact_divide(p, form, power=3) == var("z1")


# -- factored rational functions ----------------------------------------------


def test_factored_cancellation_by_evaluation(rng):
    """(L*p) / (L * rest) evaluates like p / rest away from poles."""
    L = LinearForm.from_names(T, {"t1": Q(1), "z1": Q(-1)})
    rest = LinearForm.from_names(T, {"t2": Q(1), "z1": Q(-1)})
    for _ in range(20):
        p = random_polynomial(T, rng, max_terms=4)
        cancelled = FactoredRatFunc.from_factors(T, 1, [L, p], [L, rest])
        plain = FactoredRatFunc.from_factors(T, 1, [p], [rest])
        assert cancelled == plain
        while True:
            values = {name: random_rational(rng) for name in T.names}
            try:
                assert cancelled.evaluate(values) == plain.evaluate(values)
                break
            except ZeroDivisionError:
                continue


def test_factored_normalization_absorbs_scalars():
    two_z = LinearForm.from_names(T, {"z1": Q(2)})
    f = FactoredRatFunc.from_factors(T, 1, [two_z], [two_z])
    assert f == FactoredRatFunc.from_polynomial(Polynomial.const(T, 1))


def test_factored_addition():
    one = Polynomial.const(T, 1)
    a = FactoredRatFunc(T, 1, one, {LinearForm.variable(T, "t1"): 1})
    b = FactoredRatFunc(T, 1, one, {LinearForm.variable(T, "t2"): 1})
    s = a + b
    vals = {"t1": Q(2), "t2": Q(3), "z1": Q(0), "z2": Q(0)}
    assert s.evaluate(vals) == Q(1, 2) + Q(1, 3)


# -- expansion at infinity ----------------------------------------------------


def test_geometric_series():
    # 1/(t1 - z1) = -z^-1 (1 + t1/z + t1^2/z^2 + ...)
    f = FactoredRatFunc(
        T, 1, Polynomial.const(T, 1),
        {LinearForm.from_names(T, {"t1": Q(1), "z1": Q(-1)}): 1},
    )
    series = expand_at_infinity(f, "z1", 3)
    assert series.start_order == -1
    t1 = var("t1")
    expected = [-Polynomial.const(T, 1), -t1, -(t1**2)]
    for order, want in zip(series.orders(), expected):
        assert series.coefficient(order).as_polynomial() == want
    assert series.coefficient(0).is_zero()
    assert series.coefficient(5).is_zero()


def test_two_pole_expansion():
    # z/((t1-z)(t2-z)) = z^-1 + (t1+t2) z^-2 + ...
    f = FactoredRatFunc(
        T, 1, var("z1"),
        {
            LinearForm.from_names(T, {"t1": Q(1), "z1": Q(-1)}): 1,
            LinearForm.from_names(T, {"t2": Q(1), "z1": Q(-1)}): 1,
        },
    )
    series = expand_at_infinity(f, "z1", 2)
    assert series.start_order == -1
    assert series.coefficient(-1).as_polynomial() == Polynomial.const(T, 1)
    assert series.coefficient(-2).as_polynomial() == var("t1") + var("t2")


def test_polynomial_expands_to_itself():
    p = var("z1") ** 2 * var("t1") + 3 * var("z1")
    f = FactoredRatFunc.from_polynomial(p)
    series = expand_at_infinity(f, "z1", 3)
    assert series.start_order == 2
    assert series.coefficient(2).as_polynomial() == var("t1")
    assert series.coefficient(1).as_polynomial() == Polynomial.const(T, 3)
    assert series.coefficient(0).is_zero()


def test_truncation_consistency(rng):
    """A deeper expansion restricted to fewer coefficients is the shallow one."""
    for _ in range(20):
        numer = random_polynomial(T, rng, max_terms=4, vars_=[0, 1, 2])
        if numer.is_zero():
            continue
        f = FactoredRatFunc(
            T, 1, numer,
            {
                LinearForm.from_names(T, {"t1": Q(1), "z1": Q(-1)}): 1,
                LinearForm.from_names(T, {"t2": Q(2), "z1": Q(1)}): 2,
            },
        )
        deep = expand_at_infinity(f, "z1", 6)
        shallow = expand_at_infinity(f, "z1", 3)
        for order in shallow.orders():
            assert deep.coefficient(order) == shallow.coefficient(order)


def test_low_degree_orders_vanish():
    # numerator degree < denominator degree - k: orders above -k-1 vanish
    f = FactoredRatFunc(
        T, 1, Polynomial.const(T, 1),
        {
            LinearForm.from_names(T, {"t1": Q(1), "z1": Q(-1)}): 1,
            LinearForm.from_names(T, {"t2": Q(1), "z1": Q(-1)}): 1,
            LinearForm.from_names(T, {"t1": Q(1), "t2": Q(1), "z1": Q(-1)}): 1,
        },
    )
    series = expand_at_infinity(f, "z1", 2)
    assert series.start_order == -3
    for order in (-1, -2):
        assert series.coefficient(order).is_zero()


def test_series_keeps_unrelated_denominators():
    f = FactoredRatFunc(
        T, 1, Polynomial.const(T, 1),
        {
            LinearForm.from_names(T, {"t1": Q(1), "z1": Q(-1)}): 1,
            LinearForm.from_names(T, {"t2": Q(1), "z2": Q(-1)}): 1,
        },
    )
    series = expand_at_infinity(f, "z1", 1)
    coeff = series.coefficient(-1)
    assert list(coeff.denom) == [
        LinearForm.from_names(T, {"t2": Q(1), "z2": Q(-1)}).normalized()[1]
    ]


def test_zero_linear_form_rejected():
    with pytest.raises(ValueError):
        LinearForm(T, {}, Q(0))
