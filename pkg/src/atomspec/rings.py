"""Graded polynomial rings over Q, monomial ideals, and presented modules.

The coefficient field is fixed to the rationals.  All the decision
procedures in this package depend only on degrees and monomial
combinatorics, so exact Fraction arithmetic is all that is ever needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import InputError, UnsupportedInputError
from .intlinalg import (
    FgAbelianGroup,
    GroupElement,
    IntMatrix,
    coset_reduction,
    enumerate_nonneg_solutions,
    monoid_coset_membership,
    nonneg_kernel_witness,
)

#: Sentinel results of degree-piece dimension counting.
INFINITE = "infinite"
NEEDS_BOUND = "needs-bound"


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector; all zeros is the unit."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise InputError("monomial exponents must be nonnegative")

    @classmethod
    def unit(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Monomial":
        if not 0 <= index < nvars:
            raise InputError(f"variable index {index} out of range")
        return cls(tuple(1 if i == index else 0 for i in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def total_degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e > 0)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def divided_by(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise InputError("inexact monomial division")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def power(self, k: int) -> "Monomial":
        if k < 0:
            raise InputError("negative monomial power")
        return Monomial(tuple(k * e for e in self.exponents))


def degrevlex_key(m: Monomial) -> tuple:
    # Plain tuple comparison of this key realizes the degrevlex order.
    return (m.total_degree(), tuple(-e for e in reversed(m.exponents)))


@dataclass(frozen=True)
class Term:
    """A nonzero rational coefficient times a monomial."""

    coeff: Fraction
    monomial: Monomial

    def __post_init__(self):
        if self.coeff == 0:
            raise InputError("terms must have nonzero coefficients")


@dataclass(frozen=True)
class GradedRing:
    """Q[x_0..x_n] graded by an abelian group through per-variable degrees."""

    group: FgAbelianGroup
    variables: tuple[str, ...]
    degrees: tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.degrees) != len(self.variables):
            raise InputError("one degree per variable is required")
        if len(set(self.variables)) != len(self.variables):
            raise InputError("variable names must be distinct")
        for d in self.degrees:
            if d.group != self.group:
                raise InputError("variable degree lies outside the grading group")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __hash__(self):
        return hash((self.group, self.variables, tuple(d.canonical_coords() for d in self.degrees)))

    def variable_monomial(self, index: int) -> Monomial:
        return Monomial.variable(index, self.nvars)

    def unit_monomial(self) -> Monomial:
        return Monomial.unit(self.nvars)

    def degree_of(self, monomial: Monomial) -> GroupElement:
        if monomial.nvars != self.nvars:
            raise InputError("monomial has the wrong number of variables")
        coords = [0] * self.group.ambient_rank
        for e, d in zip(monomial.exponents, self.degrees):
            if e:
                for i, c in enumerate(d.coords):
                    coords[i] += e * c
        return self.group.element(coords)

    def format_monomial(self, monomial: Monomial) -> str:
        if monomial.is_unit():
            return "1"
        parts = []
        for name, e in zip(self.variables, monomial.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def is_pointed(self) -> bool:
        """Does only the unit monomial have degree zero?

        A nonzero exponent vector of full degree zero exists iff one of full
        degree zero on the free quotient coordinates exists (scale by the
        torsion exponent), so pointedness reduces to the free part.
        """
        return _ring_is_pointed(self)


@lru_cache(maxsize=None)
def _ring_is_pointed(ring: GradedRing) -> bool:
    red = coset_reduction(ring.group.ambient_rank, ring.group.relation_columns())
    columns = [red.project(d.coords)[0] for d in ring.degrees]
    return nonneg_kernel_witness(columns) is None


@lru_cache(maxsize=None)
def _monomials_of_degree_cached(ring: GradedRing, target_coords: tuple[int, ...]) -> tuple[Monomial, ...]:
    """All monomials of the given degree; requires a pointed grading."""
    target = ring.group.element(target_coords)
    red = coset_reduction(ring.group.ambient_rank, ring.group.relation_columns())
    columns = [red.project(d.coords)[0] for d in ring.degrees]
    free_target, _ = red.project(target.coords)
    matrix = IntMatrix.from_columns(columns, rows=len(free_target))
    report = enumerate_nonneg_solutions(matrix, free_target)
    if not report.pointed:
        raise UnsupportedInputError("monomial enumeration requires a pointed grading")
    found = []
    for exponents in report.solutions:
        m = Monomial(exponents)
        if ring.degree_of(m) == target:
            found.append(m)
    return tuple(sorted(found, key=degrevlex_key))


def monomials_of_degree(
    ring: GradedRing, target: GroupElement, max_total_degree: Optional[int] = None
) -> tuple[Monomial, ...]:
    """Monomials of an exact degree; pointed gradings need no bound.

    For non-pointed gradings the result is truncated at the given total
    degree, which must then be supplied.
    """
    if ring.is_pointed():
        return _monomials_of_degree_cached(ring, target.canonical_coords())
    if max_total_degree is None:
        raise UnsupportedInputError(
            "non-pointed grading: monomial enumeration needs an explicit total-degree bound"
        )
    found = [
        m
        for m in iterate_monomials(ring.nvars, max_total_degree)
        if ring.degree_of(m) == target
    ]
    return tuple(sorted(found, key=degrevlex_key))


def iterate_monomials(nvars: int, max_total_degree: int) -> Iterable[Monomial]:
    """All monomials with total degree at most the bound."""
    if nvars == 0:
        yield Monomial(())
        return
    for total in range(max_total_degree + 1):
        for cuts in itertools.combinations(range(total + nvars - 1), nvars - 1):
            exponents = []
            prev = -1
            for c in cuts:
                exponents.append(c - prev - 1)
                prev = c
            exponents.append(total + nvars - 2 - prev)
            yield Monomial(tuple(exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal held by its minimal generators in degrevlex order."""

    ring: GradedRing
    generators: tuple[Monomial, ...]

    @classmethod
    def generated_by(cls, ring: GradedRing, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        return cls(ring, _minimalize(ring.nvars, monomials))

    @classmethod
    def zero(cls, ring: GradedRing) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: GradedRing) -> "MonomialIdeal":
        return cls(ring, (Monomial.unit(ring.nvars),))

    def __post_init__(self):
        for m in self.generators:
            if m.nvars != self.ring.nvars:
                raise InputError("generator has the wrong number of variables")
        if self.generators != _minimalize(self.ring.nvars, self.generators):
            raise InputError("generators are not in minimal canonical form")

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(m.is_unit() for m in self.generators)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, monomial: Monomial) -> bool:
        return any(g.divides(monomial) for g in self.generators)

    def plus_monomials(self, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal.generated_by(self.ring, self.generators + tuple(monomials))

    def colon(self, monomial: Monomial) -> "MonomialIdeal":
        """The ideal quotient I : m."""
        quotients = [g.divided_by(g.gcd(monomial)) for g in self.generators]
        return MonomialIdeal.generated_by(self.ring, quotients)

    def saturation(self, monomial: Monomial) -> tuple["MonomialIdeal", int]:
        """I : m^infinity together with the least stabilization exponent."""
        current = self
        exponent = 0
        while True:
            following = current.colon(monomial)
            if following == current:
                return current, exponent
            current = following
            exponent += 1

    def minimal_primes(self) -> frozenset["MonomialPrime"]:
        """Minimal primes, via minimal transversals of the generator supports.

        This is independent of the filtration machinery on purpose: it serves
        as the oracle side of the support computation.
        """
        if self.is_unit():
            return frozenset()
        supports = [g.support() for g in self.generators]
        transversals = _minimal_transversals(supports)
        return frozenset(MonomialPrime(self.ring, t) for t in transversals)


def _minimalize(nvars: int, monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    result: list[Monomial] = []
    for m in sorted(set(monomials), key=degrevlex_key):
        if not any(g.divides(m) for g in result):
            result = [g for g in result if not m.divides(g)] + [m]
    return tuple(sorted(result, key=degrevlex_key, reverse=True))


def _minimal_transversals(supports: Sequence[frozenset[int]]) -> set[frozenset[int]]:
    """All minimal hitting sets of a family of nonempty index sets."""
    found: set[frozenset[int]] = set()

    def extend(partial: frozenset[int], remaining: list[frozenset[int]]):
        uncovered = [s for s in remaining if not (s & partial)]
        if not uncovered:
            found.add(partial)
            return
        for i in sorted(uncovered[0]):
            extend(partial | {i}, uncovered[1:])

    if any(not s for s in supports):
        return set()
    extend(frozenset(), list(supports))
    return {t for t in found if not any(o < t for o in found)}


@dataclass(frozen=True)
class MonomialPrime:
    """The prime generated by a subset of the variables; the empty subset is the zero ideal."""

    ring: GradedRing
    indices: frozenset[int]

    def __post_init__(self):
        if not all(0 <= i < self.ring.nvars for i in self.indices):
            raise InputError("prime indices out of range")

    def ideal(self) -> MonomialIdeal:
        gens = [self.ring.variable_monomial(i) for i in sorted(self.indices)]
        return MonomialIdeal.generated_by(self.ring, gens)

    def contains_monomial(self, monomial: Monomial) -> bool:
        return bool(monomial.support() & self.indices)

    def outside_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.ring.nvars) if i not in self.indices)

    def sort_key(self) -> tuple:
        return (len(self.indices), tuple(sorted(self.indices)))


# ---------------------------------------------------------------------------
# Presented modules


@dataclass(frozen=True)
class Relation:
    """One homogeneous relation column: single-term entries tagged by row."""

    degree: GroupElement
    entries: tuple[tuple[int, Term], ...]

    def max_row(self) -> Optional[int]:
        return max((row for row, _ in self.entries), default=None)


@dataclass(frozen=True)
class PresentedModule:
    """Cokernel of a map of free modules with single-term matrix entries.

    Generator i spans a copy of the ring shifted so that the generator sits
    in degree ``generator_degrees[i]``; every relation column is homogeneous
    of its recorded degree.
    """

    ring: GradedRing
    generator_degrees: tuple[GroupElement, ...]
    relations: tuple[Relation, ...]

    def __post_init__(self):
        group = self.ring.group
        for b in self.generator_degrees:
            if b.group != group:
                raise InputError("generator degree lies outside the grading group")
        for col in self.relations:
            if col.degree.group != group:
                raise InputError("relation degree lies outside the grading group")
            seen_rows = set()
            for row, term in col.entries:
                if not 0 <= row < len(self.generator_degrees):
                    raise InputError(f"relation entry row {row} out of range")
                if row in seen_rows:
                    raise UnsupportedInputError(
                        "relation entry with several terms in one row is not supported"
                    )
                seen_rows.add(row)
                if term.monomial.nvars != self.ring.nvars:
                    raise InputError("relation monomial has the wrong number of variables")
                expected = self.generator_degrees[row] + self.ring.degree_of(term.monomial)
                if expected != col.degree:
                    raise InputError("inhomogeneous relation entry")

    @classmethod
    def build(
        cls,
        ring: GradedRing,
        generator_degrees: Sequence[GroupElement],
        columns: Sequence[tuple[Optional[GroupElement], Sequence[tuple[int, Term]]]],
    ) -> "PresentedModule":
        """Assemble a module, inferring omitted column degrees from any entry."""
        gen_degrees = tuple(generator_degrees)
        relations = []
        for degree, entries in columns:
            entries = tuple(sorted(entries, key=lambda pair: pair[0]))
            if degree is None:
                if not entries:
                    raise InputError("cannot infer the degree of an empty relation column")
                row, term = entries[0]
                if not 0 <= row < len(gen_degrees):
                    raise InputError(f"relation entry row {row} out of range")
                degree = gen_degrees[row] + ring.degree_of(term.monomial)
            relations.append(Relation(degree=degree, entries=entries))
        return cls(ring, gen_degrees, tuple(relations))

    @classmethod
    def free(cls, ring: GradedRing, generator_degrees: Sequence[GroupElement]) -> "PresentedModule":
        return cls(ring, tuple(generator_degrees), ())

    @classmethod
    def cyclic(
        cls, ring: GradedRing, ideal: MonomialIdeal, twist: Optional[GroupElement] = None
    ) -> "PresentedModule":
        """The module (ring / ideal) shifted by ``twist``."""
        if twist is None:
            twist = ring.group.zero()
        b = -twist
        columns = [
            (None, [(0, Term(Fraction(1), g))])
            for g in ideal.generators
        ]
        return cls.build(ring, [b], columns)

    @classmethod
    def direct_sum_of_cyclics(
        cls, ring: GradedRing, parts: Sequence[tuple[MonomialIdeal, GroupElement]]
    ) -> "PresentedModule":
        """Block presentation of a direct sum of twisted cyclic modules."""
        degrees = [-twist for _, twist in parts]
        columns = []
        for row, (ideal, _twist) in enumerate(parts):
            for g in ideal.generators:
                columns.append((None, [(row, Term(Fraction(1), g))]))
        return cls.build(ring, degrees, columns)

    def is_zero_presentation(self) -> bool:
        return not self.generator_degrees

    def is_componentwise(self) -> bool:
        """True when every relation column touches a single generator."""
        return all(len(col.entries) <= 1 for col in self.relations)

    def shift(self, g: GroupElement) -> "PresentedModule":
        """The shifted module; generator and column degrees drop by g."""
        if g.group != self.ring.group:
            raise InputError("shift element lies outside the grading group")
        return PresentedModule(
            self.ring,
            tuple(b - g for b in self.generator_degrees),
            tuple(Relation(col.degree - g, col.entries) for col in self.relations),
        )


def _rational_rank(rows: list[list[Fraction]]) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    rows = [row[:] for row in rows]
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / head
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def degree_piece_dimension(
    module: PresentedModule, piece: GroupElement, max_total_degree: Optional[int] = None
):
    """Dimension over Q of one graded piece of the module.

    Returns a nonnegative integer for pointed gradings.  For non-pointed
    gradings the count needs an explicit truncation bound and is then taken
    over monomials up to that total degree; without a bound the result is
    the NEEDS_BOUND sentinel (or INFINITE for a free module with a nonempty
    piece, which is decidable exactly).
    """
    ring = module.ring
    if piece.group != ring.group:
        raise InputError("degree lies outside the grading group")
    pointed = ring.is_pointed()
    if not pointed and max_total_degree is None:
        if module.relations:
            return NEEDS_BOUND
        zero = ring.group.zero()
        for b in module.generator_degrees:
            if monoid_coset_membership(ring.group, ring.degrees, zero, piece - b):
                return INFINITE
        return 0

    if module.is_componentwise():
        # The module splits as a direct sum of twisted monomial cyclics, so
        # the piece is counted by monomials outside each row's ideal.
        row_ideals = {}
        for col in module.relations:
            if col.entries:
                row, term = col.entries[0]
                row_ideals.setdefault(row, []).append(term.monomial)
        total = 0
        for i, b in enumerate(module.generator_degrees):
            ideal = MonomialIdeal.generated_by(ring, row_ideals.get(i, []))
            total += sum(
                1
                for m in monomials_of_degree(ring, piece - b, max_total_degree)
                if not ideal.contains(m)
            )
        return total

    basis: list[tuple[int, Monomial]] = []
    for i, b in enumerate(module.generator_degrees):
        for m in monomials_of_degree(ring, piece - b, max_total_degree):
            basis.append((i, m))
    if not module.relations:
        return len(basis)
    index = {key: pos for pos, key in enumerate(basis)}
    image_rows: list[list[Fraction]] = []
    for col in module.relations:
        for multiplier in monomials_of_degree(ring, piece - col.degree, max_total_degree):
            vector = [Fraction(0)] * len(basis)
            hit = False
            for row, term in col.entries:
                key = (row, multiplier.times(term.monomial))
                pos = index.get(key)
                if pos is None:
                    # Outside the truncation window; drop the product.
                    continue
                vector[pos] += term.coeff
                hit = True
            if hit:
                image_rows.append(vector)
    if not image_rows:
        return len(basis)
    return len(basis) - _rational_rank(image_rows)
