"""Dendrites on orthant moment images, and the reduction route to the
Grassmannian residue formula.

The Grassmannian Grass_k(C^n) arises as the symplectic reduction of the
vector space Hom(C^k, C^n) by U(k); the moment image of the diagonal torus
is a translated orthant whose single vertex is the image of the origin, the
only torus fixed point.  The dendrite walk selects that vertex by repeatedly
shooting rays at codimension-one walls (taking -l whenever the ray l would
escape to infinity), and the resulting one-branch dendrite assembles the
push-forward as

    (1/k!) * Res  prod_{i != j} (z_i - z_j) * V(z) / prod_{i,j} (t_j - z_i),

the product of all U(k) roots over the torus-equivariant Euler class at the
origin.  The Euler factors are oriented as t_j - z_i so that the assembled
value coincides with the classical Grassmannian residue formula for every k
and n (the opposite orientation flips the sign whenever k*n is odd).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FactoredRatFunc, LinearForm, Polynomial, exact_divide
from .errors import TorusIntError
from .pushforward import SpaceDescriptor, _vandermonde_factors
from .rational import ONE, Q
from .residue import iterated_residue, residue_at_infinity


@dataclass(frozen=True)
class RayStep:
    """One step of a dendrite branch inside a face of the orthant."""

    start: tuple  # rational coordinates
    direction: tuple
    flipped: bool  # True when -l replaced an escaping ray l
    crossing: tuple  # where the ray meets the chosen codimension-one wall
    wall: int  # index of the coordinate hyperplane that was hit


@dataclass(frozen=True)
class Branch:
    steps: tuple

    @property
    def terminal(self):
        return self.steps[-1].crossing if self.steps else ()


@dataclass(frozen=True)
class Dendrite:
    """Branches of rays in (R>=0)^k; for the orthant there is exactly one,
    ending at the vertex."""

    k: int
    branches: tuple

    @property
    def terminal_points(self):
        return tuple(b.terminal for b in self.branches)


@dataclass(frozen=True)
class MomentOrthant:
    """Moment data for the torus acting on Hom(C^k, C^n): the orthant image
    and the k*n equivariant Euler factors at the origin."""

    k: int
    n: int
    euler_factors: tuple

    def __post_init__(self):
        if len(self.euler_factors) != self.k * self.n:
            raise TorusIntError("Euler factor count must be k*n")


@dataclass(frozen=True)
class WeylFactor:
    """Product of all roots of the acting group, and the Weyl group order."""

    poly: Polynomial
    group_order: int


def moment_orthant(k, n, table=None):
    if table is None:
        table = SpaceDescriptor.grass(k, n).table
    t = table.t_names
    z = table.z_names
    factors = tuple(
        LinearForm.from_names(table, {t[j]: ONE, z[i]: Q(-1)})
        for i in range(k)
        for j in range(n)
    )
    return MomentOrthant(k, n, factors)


def weyl_factor_gl(k, table):
    """prod_{i != j} (z_i - z_j) and k!, for U(k)."""
    poly = Polynomial.const(table, 1)
    for form in _vandermonde_factors(table, k, both_orders=True):
        poly = poly * form.as_polynomial()
    return WeylFactor(poly, math.factorial(k))


def _random_direction(rng, free):
    return {
        i: Fraction(rng.choice([c for c in range(-9, 10) if c]), rng.randint(1, 9))
        for i in free
    }


def dendrite_orthant(k, seed=0):
    """Walk the orthant (R>=0)^k from an interior point to its vertex.

    Each step picks a ray with random rational slopes inside the current
    face; if the ray escapes to infinity the opposite ray is used instead.
    Rays that meet two walls simultaneously (codimension >= 2) are rejected
    and resampled, so every step crosses exactly one codimension-one wall.
    The walk always ends at the origin after k steps, whatever the seed.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = random.Random(seed)
    point = [Fraction(1)] * k
    free = set(range(k))
    steps = []
    while free:
        while True:
            direction = _random_direction(rng, free)
            flipped = False
            if all(d > 0 for d in direction.values()):
                direction = {i: -d for i, d in direction.items()}
                flipped = True
            hits = {i: point[i] / -d for i, d in direction.items() if d < 0}
            smallest = min(hits.values())
            walls = [i for i, s in hits.items() if s == smallest]
            if len(walls) != 1:
                continue  # ray meets a codimension >= 2 face; resample
            wall = walls[0]
            crossing = list(point)
            for i, d in direction.items():
                crossing[i] = point[i] + smallest * d
            crossing[wall] = Fraction(0)
            steps.append(
                RayStep(
                    start=tuple(point),
                    direction=tuple(direction.get(i, Fraction(0)) for i in range(k)),
                    flipped=flipped,
                    crossing=tuple(crossing),
                    wall=wall,
                )
            )
            point = crossing
            free.remove(wall)
            break
    return Dendrite(k, (Branch(tuple(steps)),))


def assemble_grassmannian_formula(k, n, V, seed=0):
    """Push-forward over Grass_k(C^n) assembled from reduction data.

    Runs the dendrite walk (single terminal fixed point), multiplies the
    class by the Weyl factor of U(k), divides by the Euler class at the
    origin, and takes iterated residues with the 1/k! Weyl prefactor.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    dendrite = dendrite_orthant(k, seed=seed)
    if len(dendrite.terminal_points) != 1 or any(dendrite.terminal_points[0]):
        raise TorusIntError("dendrite did not end at the orthant vertex")
    space = SpaceDescriptor.grass(k, n)
    table = space.table
    wf = weyl_factor_gl(k, table)
    orthant = moment_orthant(k, n, table)
    integrand = FactoredRatFunc.from_factors(
        table, ONE, [wf.poly, V], orthant.euler_factors
    )
    result = iterated_residue(integrand, space.residue_order)
    return result.as_polynomial() * Q(1, wf.group_order)


def divided_difference_table():
    """t0, t1 and the single residue variable x."""
    from .algebra import VarTable

    return VarTable(("t0", "t1"), ("x",))


def divided_difference_residue(f):
    """Residue at infinity of f(x) / ((t0 - x)(t1 - x)).

    The value equals the first divided difference (f(t0) - f(t1))/(t1 - t0);
    this identity is asserted on every call, so a convention drift anywhere
    in the residue kernel fails loudly here.
    """
    table = f.table
    x, t0, t1 = "x", "t0", "t1"
    denom = [
        LinearForm.from_names(table, {t0: ONE, x: Q(-1)}),
        LinearForm.from_names(table, {t1: ONE, x: Q(-1)}),
    ]
    integrand = FactoredRatFunc.from_factors(table, ONE, [f], denom)
    result = residue_at_infinity(integrand, x)
    value = result.as_polynomial()
    diff = f.substitute({x: LinearForm.variable(table, t0)}) - f.substitute(
        {x: LinearForm.variable(table, t1)}
    )
    expected = exact_divide(
        diff, LinearForm.from_names(table, {t1: ONE, t0: Q(-1)})
    )
    if value != expected:
        raise TorusIntError(
            "residue convention broke the divided-difference identity"
        )
    return result
