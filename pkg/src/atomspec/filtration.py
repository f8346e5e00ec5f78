"""Prime filtrations of monomial-presented graded modules with twist tracking.

A filtration factor is a pair (monomial prime, twist): the corresponding
subquotient is the cyclic module ring/prime shifted by the twist.  Factor
lists are certified against graded dimension counts by ``verify_filtration``;
the certificate is computed by machinery independent of the recursion that
produced the factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import UnsupportedInputError
from .intlinalg import GroupElement
from .rings import (
    INFINITE,
    NEEDS_BOUND,
    MonomialIdeal,
    MonomialPrime,
    PresentedModule,
    degree_piece_dimension,
)

FiltrationFactor = tuple[MonomialPrime, GroupElement]


@dataclass(frozen=True)
class PrimeFiltration:
    """Bottom-up factor list; the first factor is the smallest submodule."""

    factors: tuple[FiltrationFactor, ...]

    def __len__(self):
        return len(self.factors)

    def shift(self, g: GroupElement) -> "PrimeFiltration":
        return PrimeFiltration(tuple((p, twist + g) for p, twist in self.factors))


def prime_filtration_cyclic(
    ideal: MonomialIdeal, twist: Optional[GroupElement] = None
) -> list[FiltrationFactor]:
    """Filtration factors of (ring/ideal) shifted by ``twist``.

    If the ideal is generated by variables it already is a monomial prime and
    becomes the single factor.  Otherwise the lowest-indexed variable x_i that
    divides a minimal generator without lying in the ideal splits the module:
    multiplication by x_i embeds ring/(ideal : x_i) shifted down by deg(x_i),
    with ring/(ideal + x_i) as the quotient.  Both branch ideals strictly
    contain the input, so the recursion terminates.
    """
    ring = ideal.ring
    if twist is None:
        twist = ring.group.zero()
    if ideal.is_unit():
        return []
    variable_indices = set()
    splitting_index = None
    for g in ideal.generators:
        if g.total_degree() == 1:
            variable_indices.add(min(g.support()))
    if all(g.total_degree() == 1 for g in ideal.generators):
        return [(MonomialPrime(ring, frozenset(variable_indices)), twist)]
    for i in range(ring.nvars):
        if i in variable_indices:
            continue
        if any(g.exponents[i] > 0 for g in ideal.generators):
            splitting_index = i
            break
    # A non-prime monomial ideal always has such a variable.
    assert splitting_index is not None
    x = ring.variable_monomial(splitting_index)
    sub = prime_filtration_cyclic(ideal.colon(x), twist - ring.degrees[splitting_index])
    quotient = prime_filtration_cyclic(ideal.plus_monomials([x]), twist)
    return sub + quotient


def prime_filtration(module: PresentedModule, allow_uncertified: bool = False) -> PrimeFiltration:
    """Prime filtration of a presented module via the generator-prefix chain.

    The chain runs through the submodules generated by generator prefixes in
    file order.  The k-th quotient is cyclic on generator k; its annihilator
    ideal collects, from every relation column whose highest row is k, the
    row-k monomial (entries in earlier rows vanish modulo the earlier
    generators).  Each cyclic quotient is then refined by
    ``prime_filtration_cyclic``.

    When every relation column touches a single generator this is exact.
    Columns that mix generators can make the collected annihilators too
    small, which over-counts dimensions; such presentations are refused
    unless ``allow_uncertified`` is set, in which case the caller must
    certify the result with ``verify_filtration``.
    """
    if not module.is_componentwise() and not allow_uncertified:
        raise UnsupportedInputError(
            "relation columns mixing several generators need an uncertified filtration; "
            "pass allow_uncertified=True and certify with verify_filtration"
        )
    ring = module.ring
    factors: list[FiltrationFactor] = []
    for k, b in enumerate(module.generator_degrees):
        gens = [
            term.monomial
            for col in module.relations
            if col.max_row() == k
            for row, term in col.entries
            if row == k
        ]
        annihilator = MonomialIdeal.generated_by(ring, gens)
        factors.extend(prime_filtration_cyclic(annihilator, -b))
    return PrimeFiltration(tuple(factors))


def verify_filtration(
    module: PresentedModule,
    filtration: PrimeFiltration,
    sample_degrees: Sequence[GroupElement],
    max_total_degree: Optional[int] = None,
) -> bool:
    """Check that factor dimensions add up to module dimensions degreewise."""
    ring = module.ring
    factor_modules = [
        PresentedModule.cyclic(ring, prime.ideal(), twist)
        for prime, twist in filtration.factors
    ]
    for piece in sample_degrees:
        lhs = degree_piece_dimension(module, piece, max_total_degree)
        if lhs in (NEEDS_BOUND, INFINITE):
            raise UnsupportedInputError(
                "filtration verification needs an explicit truncation bound for this grading"
            )
        rhs = 0
        for factor in factor_modules:
            d = degree_piece_dimension(factor, piece, max_total_degree)
            if d in (NEEDS_BOUND, INFINITE):
                raise UnsupportedInputError(
                    "filtration verification needs an explicit truncation bound for this grading"
                )
            rhs += d
        if lhs != rhs:
            return False
    return True
