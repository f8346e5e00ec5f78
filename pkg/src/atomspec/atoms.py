"""Points of the atom spectrum of a graded polynomial ring.

A point is a monomial prime together with a coset of the grading group
modulo the subgroup generated by the degrees of the variables outside the
prime.  Representatives are stored canonically reduced, so structural
equality and hashing decide point equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, ResourceLimitError
from .filtration import prime_filtration
from .intlinalg import (
    GroupElement,
    Subgroup,
    coset_representative,
    quotient_invariants,
    subgroup_membership,
)
from .rings import GradedRing, MonomialPrime, PresentedModule


def degree_subgroup(ring: GradedRing, prime: MonomialPrime) -> Subgroup:
    """Subgroup generated by the degrees of the variables outside the prime.

    Every nonzero homogeneous element of ring/prime is a combination of
    monomials in those variables, so this subgroup is exactly the set of
    degree differences realized inside the cyclic quotient.
    """
    if prime.ring != ring:
        raise InputError("prime belongs to a different ring")
    generators = tuple(ring.degrees[i] for i in prime.outside_indices())
    return Subgroup(ring.group, generators)


@dataclass(frozen=True)
class AtomPoint:
    """A spectrum point: monomial prime plus canonical coset representative."""

    prime: MonomialPrime
    rep: GroupElement

    @classmethod
    def of(cls, prime: MonomialPrime, shift: GroupElement) -> "AtomPoint":
        ring = prime.ring
        if shift.group != ring.group:
            raise InputError("shift lies outside the grading group")
        subgroup = degree_subgroup(ring, prime)
        return cls(prime, coset_representative(subgroup, shift))

    def __post_init__(self):
        if self.rep.group != self.prime.ring.group:
            raise InputError("representative lies outside the grading group")

    def is_standard(self) -> bool:
        # The canonical representative of the standard coset is zero itself.
        return all(c == 0 for c in self.rep.coords)

    def sort_key(self) -> tuple:
        return (self.prime.sort_key(), self.rep.coords)


def atom_equal(a: AtomPoint, b: AtomPoint) -> bool:
    """Point equality: same prime and congruent shifts."""
    if a.prime.ring != b.prime.ring:
        raise InputError("atoms belong to different rings")
    return a.prime.indices == b.prime.indices and a.rep.coords == b.rep.coords


def fiber_invariants(ring: GradedRing, prime: MonomialPrime) -> tuple[int, tuple[int, ...]]:
    """Invariant factors of the fiber of the projection onto primes."""
    return quotient_invariants(ring.group, degree_subgroup(ring, prime))


def fiber_classes(ring: GradedRing, cap: int = 20) -> frozenset[tuple[int, tuple[int, ...]]]:
    """All fiber isomorphism classes over the 2^(n+1) monomial primes.

    The fiber depends only on the set of degrees outside the prime, so the
    enumeration deduplicates through that set.  ``cap`` bounds the number of
    variables since the subsets are enumerated exhaustively.
    """
    if ring.nvars > cap:
        raise ResourceLimitError(
            f"fiber class enumeration over {ring.nvars} variables exceeds the cap {cap}"
        )
    classes = set()
    seen_degree_sets = {}
    for mask in range(1 << ring.nvars):
        outside = tuple(
            ring.degrees[i].canonical_coords()
            for i in range(ring.nvars)
            if not mask & (1 << i)
        )
        key = frozenset(outside)
        if key not in seen_degree_sets:
            indices = frozenset(i for i in range(ring.nvars) if mask & (1 << i))
            seen_degree_sets[key] = fiber_invariants(ring, MonomialPrime(ring, indices))
        classes.add(seen_degree_sets[key])
    return frozenset(classes)


def atom_support_generators(module: PresentedModule) -> list[AtomPoint]:
    """Atoms of the filtration factors, deduplicated, in first-seen order.

    The atom support of the module is the union of the supports of these
    cyclic factors.  Membership of the module in a Serre subcategory is
    decided factor by factor (extension closure), never by naive pointwise
    containment of only the listed points.
    """
    points: list[AtomPoint] = []
    seen = set()
    for prime, twist in prime_filtration(module).factors:
        point = AtomPoint.of(prime, twist)
        key = (point.prime.indices, point.rep.coords)
        if key not in seen:
            seen.add(key)
            points.append(point)
    return points


def support_minimal_primes(module: PresentedModule) -> frozenset[MonomialPrime]:
    """Minimal primes of the support, read off the filtration factors.

    For a cyclic module this agrees with the transversal-based
    ``MonomialIdeal.minimal_primes`` oracle.
    """
    primes = {prime.indices for prime, _twist in prime_filtration(module).factors}
    minimal = {
        indices
        for indices in primes
        if not any(other < indices for other in primes)
    }
    return frozenset(MonomialPrime(module.ring, indices) for indices in minimal)


def is_standard_shift(ring: GradedRing, prime: MonomialPrime, shift: GroupElement) -> bool:
    """Does the shift lie in the degree subgroup of the prime?"""
    member, _ = subgroup_membership(degree_subgroup(ring, prime), shift)
    return member
