"""Seed-controlled random instances for the verification harness and tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .intlinalg import GroupElement, IntMatrix, subgroup_membership
from .atoms import degree_subgroup
from .rings import GradedRing, Monomial, MonomialIdeal, MonomialPrime, PresentedModule, Term


def random_matrix(rng: random.Random, max_dim: int = 4, max_entry: int = 9) -> IntMatrix:
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return IntMatrix(
        rows, cols, tuple(rng.randint(-max_entry, max_entry) for _ in range(rows * cols))
    )


def random_monomial(
    rng: random.Random, nvars: int, max_exponent: int = 3, allow_unit: bool = False
) -> Monomial:
    while True:
        m = Monomial(tuple(rng.randint(0, max_exponent) for _ in range(nvars)))
        if allow_unit or not m.is_unit():
            return m


def random_monomial_ideal(
    rng: random.Random,
    ring: GradedRing,
    max_generators: int = 5,
    max_exponent: int = 3,
) -> MonomialIdeal:
    count = rng.randint(1, max_generators)
    gens = [random_monomial(rng, ring.nvars, max_exponent) for _ in range(count)]
    return MonomialIdeal.generated_by(ring, gens)


def random_group_element(rng: random.Random, ring: GradedRing, spread: int = 2) -> GroupElement:
    """A small random degree: an integer combination of the variable degrees."""
    coords = [0] * ring.group.ambient_rank
    for d in ring.degrees:
        c = rng.randint(-spread, spread)
        for i, x in enumerate(d.coords):
            coords[i] += c * x
    return ring.group.element(coords)


_COEFFS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-3), Fraction(3, 2), Fraction(-1, 2)]


def random_module(
    rng: random.Random,
    ring: GradedRing,
    max_generators: int = 3,
    max_relations: int = 4,
    max_exponent: int = 2,
    degree_spread: int = 2,
) -> PresentedModule:
    """A random presented module with componentwise single-term relations."""
    gen_count = rng.randint(1, max_generators)
    degrees = [random_group_element(rng, ring, degree_spread) for _ in range(gen_count)]
    columns = []
    for _ in range(rng.randint(0, max_relations)):
        row = rng.randrange(gen_count)
        monomial = random_monomial(rng, ring.nvars, max_exponent, allow_unit=True)
        coeff = rng.choice(_COEFFS)
        columns.append((None, [(row, Term(coeff, monomial))]))
    return PresentedModule.build(ring, degrees, columns)


def random_nonstandard_cyclic_subquotient(
    rng: random.Random,
    ring: GradedRing,
    max_extra_generators: int = 3,
    max_exponent: int = 2,
    shift_window: int = 3,
    max_attempts: int = 200,
) -> Optional[PresentedModule]:
    """A cyclic subquotient of a non-standard twisted cyclic module.

    Picks a prime p with a nontrivial fiber, a shift g outside its degree
    subgroup, an ideal J containing p, and a monomial m outside J; the
    submodule of (ring/J)(g) generated by the class of m is the cyclic module
    ring/(J : m) twisted by g - deg(m).  Returns None when the ring has no
    non-standard shifts in reach.
    """
    for _ in range(max_attempts):
        indices = frozenset(
            i for i in range(ring.nvars) if rng.random() < 0.5
        )
        prime = MonomialPrime(ring, indices)
        subgroup = degree_subgroup(ring, prime)
        shift = random_group_element(rng, ring, spread=shift_window)
        member, _ = subgroup_membership(subgroup, shift)
        if member:
            # Nudge by one ambient unit vector; keeps the search cheap.
            k = rng.randrange(ring.group.ambient_rank) if ring.group.ambient_rank else None
            if k is None:
                continue
            coords = list(shift.coords)
            coords[k] += 1
            shift = ring.group.element(coords)
            member, _ = subgroup_membership(subgroup, shift)
            if member:
                continue
        ideal = prime.ideal().plus_monomials(
            random_monomial(rng, ring.nvars, max_exponent)
            for _ in range(rng.randint(0, max_extra_generators))
        )
        if ideal.is_unit():
            continue
        for _ in range(20):
            m = random_monomial(rng, ring.nvars, max_exponent, allow_unit=True)
            if not ideal.contains(m):
                twist = shift - ring.degree_of(m)
                return PresentedModule.cyclic(ring, ideal.colon(m), twist)
    return None
