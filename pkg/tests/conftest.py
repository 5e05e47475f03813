import random

import pytest

from torusint import Polynomial, Q, VarTable


@pytest.fixture
def table22():
    """Two torus characters, two residue variables."""
    return VarTable.standard(2, 2)


@pytest.fixture
def rng():
    return random.Random(20260809)


def random_polynomial(table, rng, max_terms=5, max_exp=3, vars_=None):
    if vars_ is None:
        vars_ = list(range(table.nvars))
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * table.nvars
        for _ in range(rng.randint(0, 3)):
            exps[rng.choice(vars_)] += rng.randint(0, max_exp)
        coeff = Q(rng.randint(-9, 9), rng.randint(1, 5))
        key = table.pack(exps)
        terms[key] = terms.get(key, Q(0)) + coeff
    return Polynomial(table, terms)


def random_rational(rng, lo=-9, hi=9):
    n = rng.randint(lo, hi)
    return Q(n, rng.randint(1, 7))
