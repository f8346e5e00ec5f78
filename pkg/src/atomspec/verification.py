"""Verification harness combining the identity checks and the test oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .atoms import AtomPoint
from .errors import InternalInvariantError
from .filtration import prime_filtration
from .randgen import random_module
from .rings import MonomialPrime, PresentedModule
from .sheafkernel import (
    REASON_FAILS,
    find_localization_witness,
    kernel_decomposition_check,
    kernel_intersection_identity_check,
    sheafifies_to_zero,
    sheafifies_to_zero_loc,
)
from .toric import CoxData, complement_monomial


@dataclass(frozen=True)
class VerificationReport:
    identity_check: bool
    decomposition_check: bool
    route_agreement: tuple[int, int]  # (checked, disagreements)
    oracle_consistency: Optional[tuple[int, int]]  # (checked, inconsistencies)

    @property
    def ok(self) -> bool:
        return (
            self.identity_check
            and self.decomposition_check
            and self.route_agreement[1] == 0
            and (self.oracle_consistency is None or self.oracle_consistency[1] == 0)
        )


def enumerate_window_atoms(cox: CoxData, coset_window: int) -> list[AtomPoint]:
    """All atoms (prime, shift) with canonical shifts drawn from the window."""
    from .intlinalg import coset_reduction
    from .atoms import degree_subgroup

    ring = cox.ring
    atoms = []
    for mask in range(1 << ring.nvars):
        indices = frozenset(i for i in range(ring.nvars) if mask & (1 << i))
        prime = MonomialPrime(ring, indices)
        subgroup = degree_subgroup(ring, prime)
        red = coset_reduction(
            ring.group.ambient_rank,
            subgroup.generator_columns() + ring.group.relation_columns(),
        )
        for rep in red.representatives(coset_window):
            atoms.append(AtomPoint(prime, ring.group.element(rep)))
    return atoms


def window_cyclic_modules(cox: CoxData, coset_window: int) -> list[PresentedModule]:
    """Twisted cyclic modules over every prime, one per window coset.

    These are exactly the cyclic modules of the window atoms; their twists
    are canonical representatives, so the bounded witness search is
    conclusive for them at the default depth.
    """
    ring = cox.ring
    return [
        PresentedModule.cyclic(ring, atom.prime.ideal(), atom.rep)
        for atom in enumerate_window_atoms(cox, coset_window)
    ]


def check_route_agreement(
    cox: CoxData, sample_count: int, seed: int, max_threads: int = 1
) -> tuple[int, int]:
    """Run both decision routes on seeded random modules; count disagreements."""
    rng = random.Random(seed)
    disagreements = 0
    for _ in range(sample_count):
        module = random_module(rng, cox.ring)
        by_factors = sheafifies_to_zero(cox, module).verdict
        by_localization = sheafifies_to_zero_loc(cox, module, max_threads=max_threads)
        if by_factors != by_localization:
            disagreements += 1
    return sample_count, disagreements


def check_oracle_consistency(
    cox: CoxData, modules: Sequence[PresentedModule], k_max: int = 6
) -> tuple[int, int]:
    """Compare the decision against the bounded localization witness search.

    A failing decision must be witnessed by some factor and cone; a passing
    decision must admit no witness anywhere within the bound.
    """
    ring = cox.ring
    cones = cox.sigma.sorted_members()
    inconsistencies = 0
    for module in modules:
        decision = sheafifies_to_zero(cox, module)
        witness_found = False
        for report in decision.factors:
            factor_module = PresentedModule.cyclic(ring, report.prime.ideal(), report.twist)
            for cone in cones:
                f = complement_monomial(ring, cone)
                witness = find_localization_witness(
                    ring, f, factor_module, ring.group.zero(), k_max
                )
                if witness is not None:
                    witness_found = True
                    break
            if witness_found:
                break
        if decision.verdict == witness_found:
            inconsistencies += 1
    return len(modules), inconsistencies


def run_verification(
    cox: CoxData,
    seed: int = 0,
    coset_window: int = 3,
    k_max: int = 6,
    samples: int = 50,
    oracle_modules: Optional[Sequence[PresentedModule]] = None,
    max_threads: int = 1,
) -> VerificationReport:
    ring = cox.ring
    identity = kernel_intersection_identity_check(cox, coset_window)
    atoms = enumerate_window_atoms(cox, coset_window)
    decomposition = all(
        kernel_decomposition_check(ring, complement_monomial(ring, cone), atoms)
        for cone in cox.sigma.sorted_members()
    )
    agreement = check_route_agreement(cox, samples, seed, max_threads=max_threads)
    oracle = None
    if oracle_modules is not None:
        oracle = check_oracle_consistency(cox, oracle_modules, k_max)
    return VerificationReport(identity, decomposition, agreement, oracle)
