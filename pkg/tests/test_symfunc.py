"""Schur/elementary/homogeneous/power-sum constructors and the class parser."""

import pytest

from torusint import (
    ParseError,
    Polynomial,
    Q,
    VarTable,
    check_symmetric,
    complete_homogeneous,
    elementary,
    parse_class,
    power_sum,
    schur,
    symmetrize,
)

T = VarTable.standard(2, 2)
T3 = VarTable.standard(3, 3)


def var(name, table=T):
    return Polynomial.variable(table, name)


def test_schur_single_row_and_column():
    assert schur((1,), T, 2) == var("z1") + var("z2")
    assert schur((1, 1), T, 2) == var("z1") * var("z2")


def test_schur_2_1():
    expected = var("z1") ** 2 * var("z2") + var("z1") * var("z2") ** 2
    assert schur((2, 1), T, 2) == expected


def test_pieri_rule():
    for table, m in ((T, 2), (T3, 3)):
        s1 = schur((1,), table, m)
        assert s1 * s1 == schur((2,), table, m) + schur((1, 1), table, m)


def test_schur_outputs_symmetric_with_correct_degree():
    for lam in [(3,), (2, 2), (3, 1), (2, 2, 1), (4, 2, 1)]:
        if len(lam) > 3:
            continue
        s = schur(lam, T3, 3)
        assert check_symmetric(s, 3)
        assert s.homogeneous_degree() == sum(lam)


def test_schur_rejects_long_partition():
    with pytest.raises(ValueError):
        schur((1, 1, 1), T, 2)


def test_h_e_p_basics():
    assert elementary(2, T, 2) == var("z1") * var("z2")
    assert complete_homogeneous(2, T, 2) == (
        var("z1") ** 2 + var("z1") * var("z2") + var("z2") ** 2
    )
    assert power_sum(2, T, 2) == var("z1") ** 2 + var("z2") ** 2
    assert elementary(3, T, 2).is_zero()


def test_parse_schur():
    assert parse_class("s[2,1]", T, 2) == schur((2, 1), T, 2)


def test_parse_power_of_e1():
    assert parse_class("e[1]^4", T, 2) == (var("z1") + var("z2")) ** 4


def test_parse_t_coefficient():
    expected = var("t1") * (var("z1") + var("z2"))
    assert parse_class("t1*p[1]", T, 2) == expected


def test_parse_rationals_and_parens():
    got = parse_class("1/2*(z1 + z2)^2 - 3", T, 2)
    assert got == (var("z1") + var("z2")) ** 2 * Q(1, 2) - 3


def test_parse_unary_minus():
    assert parse_class("-z1^2", T, 2) == -(var("z1") ** 2)
    assert parse_class("--z1", T, 2) == var("z1")


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_class("e[1] + @", T, 2)
    assert err.value.position == 7


def test_parse_unknown_identifier():
    with pytest.raises(ParseError):
        parse_class("q1 + 1", T, 2)
    with pytest.raises(ParseError):
        parse_class("z2", T, 1)  # beyond the active residue variables


def test_parse_rejects_trailing_garbage():
    with pytest.raises(ParseError):
        parse_class("z1 z2", T, 2)


def test_check_symmetric_examples():
    assert check_symmetric(var("z1") + var("z2"), 2)
    assert not check_symmetric(var("z1"), 2)
    assert check_symmetric(var("t1") * var("z1") * var("z2"), 2)


def test_symmetrize_averages():
    sym = symmetrize(var("z1"), 2)
    assert sym == (var("z1") + var("z2")) * Q(1, 2)
    assert check_symmetric(sym, 2)
