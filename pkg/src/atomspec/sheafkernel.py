"""Deciding whether a presented module sheafifies to zero, two ways.

Route one classifies every filtration factor directly: a factor passes when
its prime contains the irrelevant ideal or its twist is a non-standard
shift.  Route two runs the degree-zero localization kernel test at every
cone of the family.  The two routes are independent implementations of the
same predicate and the command surface insists that they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .atoms import AtomPoint, atom_support_generators, degree_subgroup
from .errors import InputError, ResourceLimitError, UnsupportedInputError
from .filtration import prime_filtration
from .intlinalg import (
    GroupElement,
    coset_reduction,
    monoid_coset_membership,
    subgroup_membership,
)
from .rings import (
    GradedRing,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    PresentedModule,
    iterate_monomials,
)
from .toric import CoxData, complement_monomial, irrelevant_ideal

REASON_IRRELEVANT = "contains-irrelevant"
REASON_NONSTANDARD = "non-standard"
REASON_FAILS = "fails"


def point_in_loc_kernel(ring: GradedRing, f: Monomial, atom: AtomPoint) -> bool:
    """Does the cyclic module of the atom die under localization at f in degree zero?

    True when f meets the prime (the whole localization vanishes) or when the
    representative is unreachable from the degree monoid of the residue ring
    extended by integer multiples of deg(f).
    """
    if atom.prime.ring != ring:
        raise InputError("atom belongs to a different ring")
    if atom.prime.contains_monomial(f):
        return True
    outside_degrees = [ring.degrees[i] for i in atom.prime.outside_indices()]
    return not monoid_coset_membership(
        ring.group, outside_degrees, ring.degree_of(f), atom.rep
    )


def point_in_degree_kernel(ring: GradedRing, step: GroupElement, atom: AtomPoint) -> bool:
    """The degree-only part of the localization kernel test.

    True when the representative avoids the degree monoid of the residue
    ring extended by integer multiples of ``step``; this part depends on the
    localizing element only through its degree.
    """
    if atom.prime.ring != ring:
        raise InputError("atom belongs to a different ring")
    outside_degrees = [ring.degrees[i] for i in atom.prime.outside_indices()]
    return not monoid_coset_membership(ring.group, outside_degrees, step, atom.rep)


def module_in_loc_kernel(ring: GradedRing, f: Monomial, module: PresentedModule) -> bool:
    """Does the whole module die under localization at f in degree zero?

    Evaluated factorwise on the atoms of a prime filtration; kernels of exact
    functors are closed under extensions, so the conjunction over factors
    decides membership of the module itself.
    """
    return all(point_in_loc_kernel(ring, f, atom) for atom in atom_support_generators(module))


@dataclass(frozen=True)
class FactorReport:
    prime: MonomialPrime
    twist: GroupElement
    reason: str


@dataclass(frozen=True)
class ZeroDecision:
    """Verdict plus a per-factor reason trail."""

    verdict: bool
    factors: tuple[FactorReport, ...]

    def __post_init__(self):
        expected = all(f.reason != REASON_FAILS for f in self.factors)
        if self.verdict != expected:
            raise InputError("verdict must match the factor reasons")


def _irrelevant_contained_in_prime(irrelevant: MonomialIdeal, prime: MonomialPrime) -> bool:
    # Monomial radical containment: every minimal generator meets the prime.
    return all(prime.contains_monomial(g) for g in irrelevant.generators)


def sheafifies_to_zero(cox: CoxData, module: PresentedModule) -> ZeroDecision:
    """Factor-classification route.

    Every filtration factor must either have its prime contain the
    irrelevant ideal or carry a non-standard twist.
    """
    ring = cox.ring
    if module.ring != ring:
        raise InputError("module is defined over a different ring")
    irrelevant = irrelevant_ideal(cox)
    reports = []
    for prime, twist in prime_filtration(module).factors:
        if _irrelevant_contained_in_prime(irrelevant, prime):
            reason = REASON_IRRELEVANT
        else:
            member, _ = subgroup_membership(degree_subgroup(ring, prime), twist)
            reason = REASON_FAILS if member else REASON_NONSTANDARD
        reports.append(FactorReport(prime, twist, reason))
    verdict = all(r.reason != REASON_FAILS for r in reports)
    return ZeroDecision(verdict, tuple(reports))


def sheafifies_to_zero_loc(cox: CoxData, module: PresentedModule, max_threads: int = 1) -> bool:
    """Localization route: the kernel test at every cone of the family.

    All cones are checked, not only the maximal ones; the intersection
    identity that justifies the factor route needs the small cones.
    """
    ring = cox.ring
    if module.ring != ring:
        raise InputError("module is defined over a different ring")
    atoms = atom_support_generators(module)
    cones = cox.sigma.sorted_members()

    def cone_passes(cone: frozenset[int]) -> bool:
        f = complement_monomial(ring, cone)
        return all(point_in_loc_kernel(ring, f, atom) for atom in atoms)

    if max_threads > 1 and len(cones) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=max_threads) as pool:
            results = list(pool.map(cone_passes, cones))
        return all(results)
    return all(cone_passes(cone) for cone in cones)


def kernel_decomposition_check(
    ring: GradedRing, f: Monomial, atoms: Sequence[AtomPoint]
) -> bool:
    """Check the two-part shape of the localization kernel on given atoms.

    The kernel test must coincide with: the prime meets f, or the
    degree-only test at deg(f) holds.
    """
    d = ring.degree_of(f)
    for atom in atoms:
        lhs = point_in_loc_kernel(ring, f, atom)
        rhs = atom.prime.contains_monomial(f) or point_in_degree_kernel(ring, d, atom)
        if lhs != rhs:
            return False
    return True


def kernel_intersection_identity_check(
    cox: CoxData, coset_window: int = 3, cap: int = 20
) -> bool:
    """Exhaustive identity check behind the route agreement.

    Over every monomial prime and every canonical fiber representative with
    free coordinates in the window, membership in all localization kernels
    must coincide with: the prime contains the irrelevant ideal, or the
    representative is non-standard.
    """
    ring = cox.ring
    if ring.nvars > cap:
        raise ResourceLimitError(
            f"identity check over {ring.nvars} variables exceeds the cap {cap}"
        )
    irrelevant = irrelevant_ideal(cox)
    cones = cox.sigma.sorted_members()
    cone_monomials = [complement_monomial(ring, cone) for cone in cones]
    for mask in range(1 << ring.nvars):
        indices = frozenset(i for i in range(ring.nvars) if mask & (1 << i))
        prime = MonomialPrime(ring, indices)
        subgroup = degree_subgroup(ring, prime)
        red = coset_reduction(
            ring.group.ambient_rank,
            subgroup.generator_columns() + ring.group.relation_columns(),
        )
        contained = _irrelevant_contained_in_prime(irrelevant, prime)
        for rep_coords in red.representatives(coset_window):
            atom = AtomPoint(prime, ring.group.element(rep_coords))
            lhs = all(point_in_loc_kernel(ring, f, atom) for f in cone_monomials)
            rhs = contained or not atom.is_standard()
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class LocalizationWitness:
    """A monomial certifying a nonzero degree piece of a localization."""

    monomial: Monomial
    denominator_power: int


def find_localization_witness(
    ring: GradedRing,
    f: Monomial,
    module: PresentedModule,
    piece: GroupElement,
    k_max: int = 6,
    monomial_degree_cap: int = 12,
) -> Optional[LocalizationWitness]:
    """Bounded search for a nonzero element of a localized degree piece.

    The module must be cyclic.  A witness is a monomial m surviving the
    saturation of the annihilator at f, with deg(m) = piece + twist + k*deg(f)
    for some 0 <= k <= k_max; m / f^k then represents a nonzero element of
    the piece.  Absence of a witness is conclusive only within the stated
    bounds; this is a one-sided test oracle, never part of the decision path.
    """
    if len(module.generator_degrees) != 1 or not module.is_componentwise():
        raise UnsupportedInputError("the witness search handles cyclic modules only")
    twist = -module.generator_degrees[0]
    annihilator = MonomialIdeal.generated_by(
        ring, [col.entries[0][1].monomial for col in module.relations if col.entries]
    )
    saturated, _ = annihilator.saturation(f)
    if saturated.is_unit():
        return None
    step = ring.degree_of(f)
    candidates = [m for m in iterate_monomials(ring.nvars, monomial_degree_cap) if not saturated.contains(m)]
    for k in range(k_max + 1):
        target = piece + twist + k * step
        for m in candidates:
            if ring.degree_of(m) == target:
                return LocalizationWitness(m, k)
    return None
