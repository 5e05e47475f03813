"""Root data: coset counts, complement roots, orbit sets, Weyl identities."""

import pytest

from torusint import (
    Polynomial,
    Q,
    RootSystemSpec,
    complement_roots,
    coset_reps,
    orbit_set,
    root_table,
    weyl_generators,
    wp_order,
)
from torusint.rootdata import dimension, weyl_image


def test_coset_counts_projective_line():
    reps = coset_reps(RootSystemSpec("A", 2, 1))
    assert len(reps) == 2
    assert sorted(r.perm for r in reps) == [(0, 1), (1, 0)]


def test_coset_counts_c1():
    reps = coset_reps(RootSystemSpec("C", 1))
    assert len(reps) == 2
    assert sorted(r.signs for r in reps) == [(-1,), (1,)]


def test_coset_counts_d2():
    reps = coset_reps(RootSystemSpec("D", 2))
    assert len(reps) == 2
    assert sorted(r.signs for r in reps) == [(-1, -1), (1, 1)]


@pytest.mark.parametrize(
    "spec",
    [
        RootSystemSpec("A", 4, 2),
        RootSystemSpec("A", 5, 1),
        RootSystemSpec("B", 3),
        RootSystemSpec("C", 4),
        RootSystemSpec("D", 3),
        RootSystemSpec("D", 1),
    ],
)
def test_coset_count_times_parabolic_order_is_weyl_order(spec):
    assert len(coset_reps(spec)) * wp_order(spec) == spec.weyl_order


def test_wp_orders():
    assert wp_order(RootSystemSpec("A", 4, 2)) == 4
    assert wp_order(RootSystemSpec("C", 3)) == 6
    assert wp_order(RootSystemSpec("A", 5, 1)) == 24


def test_complement_roots_c2():
    spec = RootSystemSpec("C", 2)
    table = root_table(spec)
    roots = complement_roots(spec, table)
    texts = sorted(str(r) for r in roots)
    assert texts == ["2*z1", "2*z2", "z1 + z2"]
    assert len(roots) == dimension(spec) == 3


def test_complement_roots_b1_d1():
    b1 = RootSystemSpec("B", 1)
    assert [str(r) for r in complement_roots(b1)] == ["z1"]
    assert dimension(b1) == 1
    d1 = RootSystemSpec("D", 1)
    assert complement_roots(d1) == []
    assert dimension(d1) == 0


def test_complement_root_count_is_dimension():
    for spec in [
        RootSystemSpec("A", 6, 3),
        RootSystemSpec("B", 4),
        RootSystemSpec("C", 4),
        RootSystemSpec("D", 4),
    ]:
        assert len(complement_roots(spec)) == dimension(spec)


def test_weyl_composition_closed():
    spec = RootSystemSpec("D", 3)
    gens = weyl_generators(spec)
    assert all(g.is_even_signed() for g in gens)
    for a in gens:
        for b in gens:
            c = a * b
            assert sorted(c.perm) == [0, 1, 2]
            assert c.is_even_signed()


def test_orbit_set_sizes():
    assert len(orbit_set(RootSystemSpec("A", 5, 2))) == 2
    assert len(orbit_set(RootSystemSpec("C", 3))) == 6
    assert len(orbit_set(RootSystemSpec("B", 2))) == 4
    # full hyperoctahedral orbit also at rank 1 (both components downstream)
    assert len(orbit_set(RootSystemSpec("D", 1))) == 2


def test_orbit_set_closed_under_generators():
    # for type A the orbit lives inside the residue variables, so the acting
    # group is the symmetric group on those m letters
    cases = [
        (RootSystemSpec("C", 3), weyl_generators(RootSystemSpec("C", 3))),
        (RootSystemSpec("D", 3), weyl_generators(RootSystemSpec("D", 3))),
        (RootSystemSpec("A", 4, 2), weyl_generators(RootSystemSpec("A", 2, 1))),
    ]
    for spec, gens in cases:
        table = root_table(spec)
        X = set(orbit_set(spec, table))
        z0 = table.t_count
        for g in gens:
            for x in X:
                ((i, c),) = list(x.coeffs.items())
                j, s = g.apply(i - z0)
                from torusint import LinearForm

                image = LinearForm(table, {z0 + j: c * Q(s)})
                assert image in X


@pytest.mark.parametrize(
    "family,n", [("C", 2), ("C", 3), ("C", 4), ("B", 2), ("B", 3), ("B", 4),
                 ("D", 1), ("D", 2), ("D", 3), ("D", 4)]
)
def test_orbit_products_reproduce_symmetrized_numerators(family, n):
    """prod_i prod_{x in X \\ z_i}(z_i - x) equals the symmetrized-form
    numerator times the product of complement roots; polynomial identity."""
    spec = RootSystemSpec(family, n)
    table = root_table(spec)
    z0 = table.t_count
    X = orbit_set(spec, table)
    from torusint import LinearForm

    lhs = Polynomial.const(table, 1)
    for i in range(n):
        zi = LinearForm(table, {z0 + i: Q(1)})
        for x in X:
            if x == zi:
                continue
            lhs = lhs * (zi - x).as_polynomial()
    rhs = Polynomial.const(table, 1)
    for i in range(n):
        for j in range(n):
            if i != j:
                zi = LinearForm(table, {z0 + j: Q(1), z0 + i: Q(-1)})
                rhs = rhs * zi.as_polynomial()
    for i in range(n):
        for j in range(i + 1, n):
            rhs = rhs * LinearForm(table, {z0 + i: Q(1), z0 + j: Q(1)}).as_polynomial()
    # the 2^n (and, for D, z1..zn) of the displayed numerators
    extra = Polynomial.const(table, 1)
    if family in ("B", "D"):
        extra = extra * Q(2) ** n
        if family == "D":
            for i in range(n):
                extra = extra * Polynomial.variable(table, table.z_names[i])
    roots = Polynomial.const(table, 1)
    for r in complement_roots(spec, table):
        roots = roots * r.as_polynomial()
    assert lhs == rhs * extra * roots


def test_every_euler_factor_nonzero_at_reps():
    for spec in [RootSystemSpec("A", 4, 2), RootSystemSpec("C", 3), RootSystemSpec("B", 2)]:
        table = root_table(spec)
        roots = complement_roots(spec, table)
        for w in coset_reps(spec):
            for r in roots:
                image = weyl_image(r, w, table)  # raises if zero
                assert image.coeffs
                assert all(i < table.t_count for i in image.coeffs)


def test_type_a_validation():
    with pytest.raises(ValueError):
        RootSystemSpec("A", 3)  # missing m
    with pytest.raises(ValueError):
        RootSystemSpec("A", 3, 7)
    with pytest.raises(ValueError):
        RootSystemSpec("C", 2, 1)
    with pytest.raises(ValueError):
        RootSystemSpec("E", 6)
