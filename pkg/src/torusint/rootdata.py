"""Root systems of types A/B/C/D with the Grassmannian parabolic.

Weyl groups act by signed permutations: plain permutations in type A, all
sign changes in types B and C, and (for the Weyl group proper) evenly many
sign changes in type D.  The data exported here drives both evaluators:

* ``coset_reps`` enumerates W/W_P, one representative per fixed point of the
  connected homogeneous space;
* ``complement_roots`` lists the positive roots outside the parabolic, i.e.
  the tangent weights, as linear forms in the z variables;
* ``orbit_set`` is the set X = {sigma(z_i)} entering the uniform residue
  formula.  For type D the full hyperoctahedral orbit {+-z_j} is used for
  every rank: at rank >= 2 it coincides with the D-Weyl orbit, and at rank 1
  it is what makes the uniform integrand match the even orthogonal
  Grassmannian with both of its components (see pushforward).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from .algebra import LinearForm, VarTable
from .rational import ONE, Q

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class RootSystemSpec:
    """family A/B/C/D, rank n, and for type A the subspace size m (1 <= m <= n)."""

    family: str
    rank: int
    subspace: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.family == "A":
            if self.subspace is None or not 0 <= self.subspace <= self.rank:
                raise ValueError("type A needs a subspace size m with 0 <= m <= n")
        elif self.subspace is not None:
            raise ValueError("only type A takes a subspace size")

    @property
    def weyl_order(self):
        n = self.rank
        if self.family == "A":
            return math.factorial(n)
        if self.family == "D":
            return (1 << (n - 1)) * math.factorial(n)
        return (1 << n) * math.factorial(n)

    def label(self):
        if self.family == "A":
            return f"A({self.subspace},{self.rank})"
        return f"{self.family}({self.rank})"


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: i -> signs[i] * perm[i] (0-based, signs in {1,-1})."""

    perm: tuple
    signs: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def from_signs(cls, signs):
        return cls(tuple(range(len(signs))), tuple(signs))

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("not a signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    def __mul__(self, other):
        """Composition: apply other first, then self."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(
            self.signs[other.perm[i]] * other.signs[i] for i in range(len(self.perm))
        )
        return WeylElement(perm, signs)

    def apply(self, i):
        """Image of the basis letter i as (index, sign)."""
        return self.perm[i], self.signs[i]

    def is_even_signed(self):
        return self.signs.count(-1) % 2 == 0


def weyl_generators(spec):
    """Standard generators, for orbit/closure checks."""
    n = spec.rank
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(WeylElement(tuple(perm), (1,) * n))
    if spec.family in ("B", "C"):
        signs = [1] * n
        signs[n - 1] = -1
        gens.append(WeylElement(tuple(range(n)), tuple(signs)))
    elif spec.family == "D":
        if n >= 2:
            signs = [1] * n
            signs[n - 2] = signs[n - 1] = -1
            gens.append(WeylElement(tuple(range(n)), tuple(signs)))
    return gens


def wp_order(spec):
    """Order of the Weyl group of the parabolic (the Levi's Weyl group)."""
    n = spec.rank
    if spec.family == "A":
        m = spec.subspace
        return math.factorial(m) * math.factorial(n - m)
    return math.factorial(n)


def coset_reps(spec):
    """One representative per coset of W/W_P.

    Type A(m,n): the C(n,m) order-preserving maps of {1..m} onto an m-subset
    (complement mapped order-preservingly as well).  Types B/C: the 2^n sign
    vectors.  Type D: the 2^(n-1) even sign vectors.
    """
    n = spec.rank
    if spec.family == "A":
        m = spec.subspace
        reps = []
        for subset in combinations(range(n), m):
            rest = [i for i in range(n) if i not in subset]
            reps.append(WeylElement(tuple(subset) + tuple(rest), (1,) * n))
        return reps
    if spec.family in ("B", "C"):
        return [WeylElement.from_signs(s) for s in product((1, -1), repeat=n)]
    return [
        WeylElement.from_signs(s)
        for s in product((1, -1), repeat=n)
        if s.count(-1) % 2 == 0
    ]


def root_table(spec):
    """t1..tn and z1..zn; the common table for all spaces built on this root data."""
    return VarTable.standard(spec.rank, spec.rank)


def complement_roots(spec, table=None):
    """Positive roots outside the parabolic, as linear forms in z variables.

    Their number is the complex dimension of the homogeneous space.
    """
    if table is None:
        table = root_table(spec)
    n = spec.rank
    z0 = table.t_count  # z variables sit after the t variables
    roots = []
    if spec.family == "A":
        m = spec.subspace
        for i in range(m):
            for j in range(m, n):
                roots.append(LinearForm(table, {z0 + j: ONE, z0 + i: Q(-1)}))
        return roots
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(LinearForm(table, {z0 + i: ONE, z0 + j: ONE}))
    if spec.family == "C":
        for i in range(n):
            roots.append(LinearForm(table, {z0 + i: Q(2)}))
    elif spec.family == "B":
        for i in range(n):
            roots.append(LinearForm(table, {z0 + i: ONE}))
    return roots


def dimension(spec):
    n = spec.rank
    if spec.family == "A":
        return spec.subspace * (n - spec.subspace)
    if spec.family == "C" or spec.family == "B":
        return n * (n + 1) // 2
    return n * (n - 1) // 2


def orbit_set(spec, table=None):
    """The orbit X = {sigma(z_i) : sigma in W} as signed z variables.

    The same set serves every i: for type A it is {z_1..z_m}; for B/C/D it is
    {+-z_1..+-z_n} (full hyperoctahedral orbit, also at rank 1 for type D).
    """
    if table is None:
        table = root_table(spec)
    z0 = table.t_count
    if spec.family == "A":
        return [LinearForm(table, {z0 + j: ONE}) for j in range(spec.subspace)]
    out = []
    for j in range(spec.rank):
        out.append(LinearForm(table, {z0 + j: ONE}))
        out.append(LinearForm(table, {z0 + j: Q(-1)}))
    return out


def weyl_image(form, w, table):
    """Push a z-linear form through a signed permutation, landing in t variables.

    z_i maps to signs[i] * t_{perm[i]}; t coefficients and constants must be
    absent (roots are pure z forms).
    """
    z0 = table.t_count
    coeffs = {}
    for i, c in form.coeffs.items():
        if i < z0:
            raise ValueError("root form involves t variables")
        j, s = w.apply(i - z0)
        coeffs[j] = coeffs.get(j, Q(0)) + c * s
    if form.const:
        raise ValueError("root form has a constant term")
    return LinearForm(table, coeffs)
