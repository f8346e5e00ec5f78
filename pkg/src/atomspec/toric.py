"""Cox-style data: degrees plus a downward-closed cone family, and fans.

The abstract input is a graded ring together with a nonempty family of
subsets of the variable indices that is closed under taking subsets.  Fan
input (primitive rays plus maximal cones) is a convenience layer that
produces the same data with the grading group computed as the cokernel of
the ray pairing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .intlinalg import FgAbelianGroup, IntMatrix, smith_decomposition
from .rings import GradedRing, Monomial, MonomialIdeal


class TorusFactorError(InputError):
    """Rays do not span the ambient lattice."""


@dataclass(frozen=True)
class SigmaComplex:
    """Nonempty family of subsets of {0..n} closed under taking subsets."""

    ground: int
    subsets: frozenset[frozenset[int]]

    @classmethod
    def closure(cls, ground: int, family: Iterable[Iterable[int]]) -> "SigmaComplex":
        members = set()
        for raw in family:
            subset = frozenset(int(i) for i in raw)
            if not all(0 <= i < ground for i in subset):
                raise InputError("cone index out of range")
            members.add(subset)
        if not members:
            raise InputError("the cone family must be nonempty")
        closed = set()
        stack = list(members)
        while stack:
            subset = stack.pop()
            if subset in closed:
                continue
            closed.add(subset)
            for i in subset:
                stack.append(subset - {i})
        return cls(ground, frozenset(closed))

    def __post_init__(self):
        if not self.subsets:
            raise InputError("the cone family must be nonempty")
        for subset in self.subsets:
            for i in subset:
                if not 0 <= i < self.ground:
                    raise InputError("cone index out of range")
            for i in subset:
                if subset - {i} not in self.subsets:
                    raise InputError("the cone family is not downward closed")

    def maximal(self) -> tuple[frozenset[int], ...]:
        return tuple(
            sorted(
                (s for s in self.subsets if not any(s < t for t in self.subsets)),
                key=lambda s: sorted(s),
            )
        )

    def sorted_members(self) -> tuple[frozenset[int], ...]:
        return tuple(sorted(self.subsets, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class CoxData:
    """A graded ring together with its cone family."""

    ring: GradedRing
    sigma: SigmaComplex

    def __post_init__(self):
        if self.sigma.ground != self.ring.nvars:
            raise InputError("cone family ground set does not match the variable count")


@dataclass(frozen=True)
class FanInput:
    """Primitive ray columns in Z^d plus maximal cones as ray index sets."""

    rays: IntMatrix
    max_cones: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, rays: Sequence[Sequence[int]], max_cones: Iterable[Iterable[int]]) -> "FanInput":
        matrix = IntMatrix.from_columns(rays)
        cones = tuple(frozenset(int(i) for i in cone) for cone in max_cones)
        return cls(matrix, cones)

    def __post_init__(self):
        seen = set()
        for j in range(self.rays.cols):
            ray = self.rays.column(j)
            if all(x == 0 for x in ray):
                raise InputError(f"ray {j} is zero")
            if math.gcd(*ray) != 1:
                raise InputError(f"ray {j} is not primitive")
            if ray in seen:
                raise InputError(f"ray {j} repeats an earlier ray")
            seen.add(ray)
        for cone in self.max_cones:
            if not all(0 <= i < self.rays.cols for i in cone):
                raise InputError("maximal cone indexes a missing ray")


def cox_from_fan(fan: FanInput) -> CoxData:
    """Degrees-plus-cones data of a fan.

    The grading group is the cokernel of the pairing map sending a dual
    lattice vector m to (<m, ray_i>)_i; it is presented in invariant-factor
    normal form via the Smith decomposition, and the degree of variable i is
    the image of the i-th standard basis vector.  Free quotient coordinates
    are sign-normalized so that the first nonzero degree entry in each
    coordinate is positive.
    """
    d = fan.rays.rows
    n_plus_1 = fan.rays.cols
    pairing = fan.rays.transpose()  # (n+1) x d
    snf = smith_decomposition(pairing)
    diag = snf.diagonal_entries
    rank = sum(1 for x in diag if x != 0)
    if rank < d:
        raise TorusFactorError("rays do not span the ambient space; remove the torus factor")
    moduli = tuple(diag[i] if i < len(diag) else 0 for i in range(n_plus_1))
    free_positions = [i for i, m in enumerate(moduli) if m == 0]
    torsion_positions = [(i, m) for i, m in enumerate(moduli) if m > 1]
    # Raw quotient coordinates of the variable degrees: columns of U.
    raw = [
        [snf.left.at(pos, j) for j in range(n_plus_1)]
        for pos in free_positions
    ]
    for row in raw:
        lead = next((x for x in row if x != 0), 0)
        if lead < 0:
            row[:] = [-x for x in row]
    torsion_rows = [
        [snf.left.at(pos, j) % m for j in range(n_plus_1)]
        for pos, m in torsion_positions
    ]
    group = FgAbelianGroup.with_invariants(len(free_positions), [m for _, m in torsion_positions])
    degrees = []
    for j in range(n_plus_1):
        coords = [row[j] for row in raw] + [row[j] for row in torsion_rows]
        degrees.append(group.element(coords))
    ring = GradedRing(
        group=group,
        variables=tuple(f"x{j}" for j in range(n_plus_1)),
        degrees=tuple(degrees),
    )
    sigma = SigmaComplex.closure(n_plus_1, fan.max_cones)
    return CoxData(ring, sigma)


def complement_monomial(ring: GradedRing, cone: frozenset[int]) -> Monomial:
    """The squarefree monomial on the variables outside the cone."""
    exponents = tuple(0 if i in cone else 1 for i in range(ring.nvars))
    return Monomial(exponents)


def irrelevant_ideal(cox: CoxData) -> MonomialIdeal:
    """Ideal generated by the complement monomials of the cones.

    Generating over the maximal cones only gives the same ideal because the
    complement monomial of a smaller cone is a multiple of the larger one's.
    """
    gens = [complement_monomial(cox.ring, cone) for cone in cox.sigma.maximal()]
    return MonomialIdeal.generated_by(cox.ring, gens)
