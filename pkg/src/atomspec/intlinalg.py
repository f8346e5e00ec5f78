"""Exact integer linear algebra for finitely generated abelian groups.

Everything here runs on arbitrary-precision Python integers; no floating
point and no fixed-width arithmetic anywhere.  The two workhorses are

* Smith normal form with all four transformation matrices tracked, which
  powers subgroup/coset normal forms and quotient invariants, and
* a breadth-first frontier search in the style of Contejean and Devie for
  nonnegative integer solutions of linear Diophantine systems, which powers
  the monoid/coset membership tests and degree-piece enumeration.

Both are complete decision procedures: they terminate with an exact answer
on every input, feasible or not.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import InputError


# ---------------------------------------------------------------------------
# Integer matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in row) for row in rows]
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise InputError("ragged rows in matrix input")
        else:
            width = 0 if cols is None else cols
        return cls(len(rows), width, tuple(itertools.chain.from_iterable(rows)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: Optional[int] = None) -> "IntMatrix":
        columns = [tuple(int(x) for x in col) for col in columns]
        if columns:
            height = len(columns[0])
            if any(len(col) != height for col in columns):
                raise InputError("ragged columns in matrix input")
        else:
            height = 0 if rows is None else rows
        entries = tuple(columns[j][i] for i in range(height) for j in range(len(columns)))
        return cls(height, len(columns), entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(self.column(j)) for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError("matrix dimensions do not match for multiplication")
        rows = []
        for i in range(self.rows):
            left = self.row(i)
            rows.append([
                sum(left[k] * other.entries[k * other.cols + j] for k in range(self.cols))
                for j in range(other.cols)
            ])
        return IntMatrix.from_rows(rows, cols=other.cols)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise InputError("vector length does not match matrix width")
        return tuple(sum(self.row(i)[k] * vector[k] for k in range(self.cols)) for i in range(self.rows))

    def determinant(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot_row is None:
                    return 0
                a[k], a[pivot_row] = a[pivot_row], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...

    The inverses are tracked during the reduction so callers get exact
    integer change-of-basis maps in both directions.
    """

    left: IntMatrix
    diagonal: IntMatrix
    right: IntMatrix
    left_inverse: IntMatrix
    right_inverse: IntMatrix

    @property
    def diagonal_entries(self) -> tuple[int, ...]:
        d = self.diagonal
        return tuple(d.at(i, i) for i in range(min(d.rows, d.cols)))


def _find_pivot(d: list[list[int]], t: int, m: int, n: int) -> Optional[tuple[int, int]]:
    # Smallest magnitude nonzero entry; ties resolved by lowest row, then column.
    best = None
    best_val = None
    for i in range(t, m):
        for j in range(t, n):
            v = d[i][j]
            if v == 0:
                continue
            if best_val is None or abs(v) < best_val:
                best, best_val = (i, j), abs(v)
    return best


@lru_cache(maxsize=None)
def smith_decomposition(matrix: IntMatrix) -> SmithDecomposition:
    """Compute the Smith normal form of an integer matrix.

    The pivot is always the smallest-magnitude nonzero entry of the remaining
    block, which keeps coefficient growth in check and makes the reduction
    deterministic.  Diagonal entries are normalized nonnegative.
    """
    m, n = matrix.rows, matrix.cols
    d = matrix.to_rows()
    u = IntMatrix.identity(m).to_rows()
    ui = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()
    vi = IntMatrix.identity(n).to_rows()

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for r in range(m):
            ui[r][i], ui[r][j] = ui[r][j], ui[r][i]

    def row_negate(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in range(m):
            ui[r][i] = -ui[r][i]

    def row_add(i, j, q):
        # row i += q * row j
        d[i] = [a + q * b for a, b in zip(d[i], d[j])]
        u[i] = [a + q * b for a, b in zip(u[i], u[j])]
        for r in range(m):
            ui[r][j] -= q * ui[r][i]

    def col_swap(i, j):
        for r in range(m):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]
        vi[i], vi[j] = vi[j], vi[i]

    def col_add(i, j, q):
        # column i += q * column j
        for r in range(m):
            d[r][i] += q * d[r][j]
        for r in range(n):
            v[r][i] += q * v[r][j]
        vi[j] = [a - q * b for a, b in zip(vi[j], vi[i])]

    for t in range(min(m, n)):
        while True:
            pivot = _find_pivot(d, t, m, n)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            if d[t][t] < 0:
                row_negate(t)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    q = d[i][t] // p
                    if q:
                        row_add(i, t, -q)
                    if d[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    q = d[t][j] // p
                    if q:
                        col_add(j, t, -q)
                    if d[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # Row and column of the pivot are clear; force divisibility of the
            # remaining block by folding an offending row into the pivot row.
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
        if _find_pivot(d, t, m, n) is None:
            break

    return SmithDecomposition(
        left=IntMatrix.from_rows(u, cols=m),
        diagonal=IntMatrix.from_rows(d, cols=n),
        right=IntMatrix.from_rows(v, cols=n),
        left_inverse=IntMatrix.from_rows(ui, cols=m),
        right_inverse=IntMatrix.from_rows(vi, cols=n),
    )


def smith_normal_form(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U*A*V = D, U and V unimodular, d_1 | d_2 | ..."""
    snf = smith_decomposition(matrix)
    return snf.left, snf.diagonal, snf.right


# ---------------------------------------------------------------------------
# Finitely generated abelian groups


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^k modulo the lattice spanned by the columns of ``relations``.

    Two groups compare equal only when they carry the identical ambient
    presentation; elements of equal groups interoperate freely.
    """

    ambient_rank: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.ambient_rank:
            raise InputError(
                f"relation matrix has {self.relations.rows} rows, expected {self.ambient_rank}"
            )

    @classmethod
    def free(cls, rank: int) -> "FgAbelianGroup":
        return cls(rank, IntMatrix.zero(rank, 0))

    @classmethod
    def with_invariants(cls, free_rank: int, torsion: Sequence[int]) -> "FgAbelianGroup":
        """Z^r + Z/t_1 + ... presented on r + len(torsion) ambient coordinates."""
        torsion = tuple(int(t) for t in torsion)
        if free_rank < 0 or any(t < 2 for t in torsion):
            raise InputError("free rank must be >= 0 and torsion orders >= 2")
        k = free_rank + len(torsion)
        diag = [0] * free_rank + list(torsion)
        return cls(k, IntMatrix.diagonal(diag))

    def element(self, coords: Iterable[int]) -> "GroupElement":
        return GroupElement(self, tuple(int(c) for c in coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ambient_rank)

    def relation_columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.relations.column(j) for j in range(self.relations.cols))

    def invariants(self) -> tuple[int, tuple[int, ...]]:
        """Invariant factor decomposition of the group itself."""
        red = coset_reduction(self.ambient_rank, self.relation_columns())
        return red.invariants()

    def is_trivial(self) -> bool:
        free_rank, torsion = self.invariants()
        return free_rank == 0 and not torsion


class GroupElement:
    """Integer vector of length ``ambient_rank`` interpreted modulo relations.

    Equality and hashing go through the canonical coset representative, so
    congruent vectors compare equal and collide in hash-based containers.
    """

    __slots__ = ("group", "coords")

    def __init__(self, group: FgAbelianGroup, coords: tuple[int, ...]):
        if len(coords) != group.ambient_rank:
            raise InputError(
                f"element has {len(coords)} coordinates, group expects {group.ambient_rank}"
            )
        self.group = group
        self.coords = coords

    def __repr__(self):
        return f"GroupElement{self.coords}"

    def _lattice(self) -> "CosetReduction":
        return coset_reduction(self.group.ambient_rank, self.group.relation_columns())

    def canonical_coords(self) -> tuple[int, ...]:
        return self._lattice().reduce(self.coords)

    def reduced(self) -> "GroupElement":
        return GroupElement(self.group, self.canonical_coords())

    def is_zero(self) -> bool:
        return self._lattice().contains(self.coords)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group == other.group and self.canonical_coords() == other.canonical_coords()

    def __hash__(self):
        return hash((self.group.ambient_rank, self.group.relations, self.canonical_coords()))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_group(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_group(other)
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "GroupElement":
        return GroupElement(self.group, tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def _check_same_group(self, other: "GroupElement"):
        if self.group != other.group:
            raise InputError("elements belong to different groups")


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of an ambient group given by a finite generator list."""

    group: FgAbelianGroup
    generators: tuple[GroupElement, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.group != self.group:
                raise InputError("subgroup generator lies in a different group")

    def generator_columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.coords for g in self.generators)


# ---------------------------------------------------------------------------
# Coset normal forms relative to an integer column span


@dataclass(frozen=True)
class CosetReduction:
    """Normal-form data for Z^k modulo the span of a fixed set of columns.

    In the transformed coordinates y = U x the span becomes the image of the
    diagonal matrix, so congruence is coordinatewise: y_i modulo ``moduli[i]``
    where modulus 0 means a free coordinate and modulus 1 a killed one.
    """

    ambient: int
    columns: int
    left: IntMatrix
    left_inverse: IntMatrix
    right: IntMatrix
    moduli: tuple[int, ...]

    @property
    def free_positions(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.moduli) if m == 0)

    @property
    def torsion_positions(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, m) for i, m in enumerate(self.moduli) if m > 1)

    def transform(self, coords: Sequence[int]) -> tuple[int, ...]:
        return self.left.apply(coords)

    def _reduce_transformed(self, y: Sequence[int]) -> tuple[int, ...]:
        return tuple(yi % m if m > 0 else yi for yi, m in zip(y, self.moduli))

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Canonical ambient representative of the coset of ``coords``."""
        y = self._reduce_transformed(self.transform(coords))
        return self.left_inverse.apply(y)

    def contains(self, coords: Sequence[int]) -> bool:
        return all(x == 0 for x in self.reduce(coords))

    def solve(self, coords: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Integer vector x with (column matrix) * x = coords, if one exists."""
        y = self.transform(coords)
        diag_len = min(self.ambient, self.columns)
        w = [0] * self.columns
        for i, yi in enumerate(y):
            if i < diag_len and self.moduli[i] != 0:
                if yi % self.moduli[i] != 0:
                    return None
                w[i] = yi // self.moduli[i]
            elif yi != 0:
                return None
        return self.right.apply(w)

    def invariants(self) -> tuple[int, tuple[int, ...]]:
        free_rank = sum(1 for m in self.moduli if m == 0)
        torsion = tuple(m for m in self.moduli if m > 1)
        return free_rank, torsion

    def project(self, coords: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Free and torsion quotient coordinates of an ambient vector."""
        y = self.transform(coords)
        free = tuple(y[i] for i in self.free_positions)
        torsion = tuple(y[i] % m for i, m in self.torsion_positions)
        return free, torsion

    def representatives(self, window: int) -> Iterator[tuple[int, ...]]:
        """Canonical ambient coset representatives with free coordinates in [-window, window].

        Torsion coordinates run over their full range, so for finite quotients
        this enumerates every coset exactly once.
        """
        free = self.free_positions
        torsion = self.torsion_positions
        free_ranges = [range(-window, window + 1)] * len(free)
        torsion_ranges = [range(m) for _, m in torsion]
        for free_vals in itertools.product(*free_ranges):
            for torsion_vals in itertools.product(*torsion_ranges):
                y = [0] * self.ambient
                for pos, val in zip(free, free_vals):
                    y[pos] = val
                for (pos, _), val in zip(torsion, torsion_vals):
                    y[pos] = val
                yield self.left_inverse.apply(y)


@lru_cache(maxsize=None)
def coset_reduction(ambient: int, columns: tuple[tuple[int, ...], ...]) -> CosetReduction:
    matrix = IntMatrix.from_columns(columns, rows=ambient)
    snf = smith_decomposition(matrix)
    diag = snf.diagonal_entries
    moduli = tuple(diag[i] if i < len(diag) else 0 for i in range(ambient))
    return CosetReduction(
        ambient=ambient,
        columns=matrix.cols,
        left=snf.left,
        left_inverse=snf.left_inverse,
        right=snf.right,
        moduli=moduli,
    )


# ---------------------------------------------------------------------------
# Subgroup membership and quotient invariants


def _combined_reduction(subgroup: Subgroup) -> CosetReduction:
    group = subgroup.group
    columns = subgroup.generator_columns() + group.relation_columns()
    return coset_reduction(group.ambient_rank, columns)


def subgroup_membership(
    subgroup: Subgroup, element: GroupElement
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Decide whether ``element`` lies in the subgroup (modulo relations).

    On success the returned coefficients c satisfy
    element = sum c_i * generator_i modulo the relation lattice.
    """
    if element.group != subgroup.group:
        raise InputError("element and subgroup live in different groups")
    red = _combined_reduction(subgroup)
    solution = red.solve(element.coords)
    if solution is None:
        return False, None
    return True, solution[: len(subgroup.generators)]


def quotient_invariants(
    group: FgAbelianGroup, subgroup: Subgroup
) -> tuple[int, tuple[int, ...]]:
    """Invariant factors of the quotient of ``group`` by ``subgroup``."""
    if subgroup.group != group:
        raise InputError("subgroup belongs to a different group")
    return _combined_reduction(subgroup).invariants()


def coset_representative(subgroup: Subgroup, element: GroupElement) -> GroupElement:
    """Canonical representative of ``element`` modulo subgroup and relations."""
    if element.group != subgroup.group:
        raise InputError("element and subgroup live in different groups")
    red = _combined_reduction(subgroup)
    return GroupElement(subgroup.group, red.reduce(element.coords))


# ---------------------------------------------------------------------------
# Nonnegative integer solutions of linear Diophantine systems


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _frontier_search(
    columns: Sequence[tuple[int, ...]],
    caps: Optional[Sequence[Optional[int]]] = None,
    stop: Optional[Callable[[tuple[int, ...]], bool]] = None,
) -> tuple[list[tuple[int, ...]], bool]:
    """Minimal nonnegative solutions of sum_i e_i * columns[i] = 0.

    Breadth-first frontier expansion: a vector e grows in coordinate i only
    while the scalar product of the current value with column i is negative,
    i.e. the step moves the value toward the origin.  Vectors dominating an
    already-found minimal solution are pruned.  Processing whole levels in
    order guarantees that solutions are recorded exactly when minimal.

    ``caps`` bounds individual coordinates (None meaning unbounded), which is
    sound whenever the caller only needs minimal solutions below the cap.
    ``stop`` is invoked on each recorded minimal solution; returning True
    aborts the search early.  Returns (minimals, stopped_early).
    """
    s = len(columns)
    if s == 0:
        return [], False
    dim = len(columns[0])
    zero = (0,) * dim
    if caps is None:
        caps = [None] * s
    minimals: list[tuple[int, ...]] = []

    def dominated(e: tuple[int, ...]) -> bool:
        return any(all(x >= y for x, y in zip(e, m)) for m in minimals)

    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for i in range(s):
        if caps[i] is not None and caps[i] < 1:
            continue
        e = tuple(1 if j == i else 0 for j in range(s))
        frontier[e] = columns[i]

    while frontier:
        next_frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
        for e in sorted(frontier):
            value = frontier[e]
            if value == zero:
                if not dominated(e):
                    minimals.append(e)
                    if stop is not None and stop(e):
                        return minimals, True
                continue
            for i in range(s):
                if caps[i] is not None and e[i] >= caps[i]:
                    continue
                if _dot(value, columns[i]) >= 0:
                    continue
                grown = e[:i] + (e[i] + 1,) + e[i + 1 :]
                if grown in next_frontier:
                    continue
                if dominated(grown):
                    continue
                next_frontier[grown] = tuple(a + b for a, b in zip(value, columns[i]))
        frontier = next_frontier
    return minimals, False


def nonneg_kernel_witness(columns: Sequence[tuple[int, ...]]) -> Optional[tuple[int, ...]]:
    """A nonzero nonnegative kernel vector of the column system, or None."""
    minimals, _ = _frontier_search(columns, stop=lambda _e: True)
    return minimals[0] if minimals else None


@dataclass(frozen=True)
class SolutionReport:
    """Outcome of enumerating A e = b over nonnegative integer vectors e.

    When the homogeneous system is pointed (only the zero solution),
    ``solutions`` is the complete finite solution set.  Otherwise the set may
    be infinite; ``homogeneous_witness`` is one nontrivial recession vector
    and ``solutions`` is None.
    """

    pointed: bool
    homogeneous_witness: Optional[tuple[int, ...]]
    solutions: Optional[tuple[tuple[int, ...], ...]]


def enumerate_nonneg_solutions(matrix: IntMatrix, rhs: Sequence[int]) -> SolutionReport:
    """Solve A e = b, e >= 0 completely, or report non-pointedness.

    The inhomogeneous system is homogenized with one extra slack variable t
    carrying the column -b and capped at 1.  Minimal solutions with t = 1 are
    exactly the minimal solutions of A e = b; in the pointed case all
    solutions are minimal, so the enumeration is complete.
    """
    rhs = tuple(int(x) for x in rhs)
    if len(rhs) != matrix.rows:
        raise InputError("right-hand side length does not match matrix height")
    columns = [matrix.column(j) for j in range(matrix.cols)]
    homogenized = columns + [tuple(-x for x in rhs)]
    caps = [None] * matrix.cols + [1]
    minimals, _ = _frontier_search(homogenized, caps=caps)
    witness = next((e[:-1] for e in minimals if e[-1] == 0), None)
    if witness is not None:
        return SolutionReport(pointed=False, homogeneous_witness=witness, solutions=None)
    solutions = tuple(sorted(e[:-1] for e in minimals if e[-1] == 1))
    return SolutionReport(pointed=True, homogeneous_witness=None, solutions=solutions)


def _nonneg_combination_feasible(
    columns: Sequence[tuple[int, ...]], target: tuple[int, ...]
) -> bool:
    """Is target a nonnegative integer combination of the columns?"""
    homogenized = list(columns) + [tuple(-x for x in target)]
    caps = [None] * len(columns) + [1]
    t = len(columns)
    _, stopped = _frontier_search(homogenized, caps=caps, stop=lambda e: e[t] == 1)
    return stopped


@lru_cache(maxsize=None)
def _monoid_coset_cached(
    group: FgAbelianGroup,
    monoid_coords: tuple[tuple[int, ...], ...],
    step_coords: tuple[int, ...],
    target_coords: tuple[int, ...],
) -> bool:
    k = group.ambient_rank
    red = coset_reduction(k, (step_coords,) + group.relation_columns())
    target_free, target_torsion = red.project(target_coords)
    n_free = len(target_free)
    torsion_moduli = [m for _, m in red.torsion_positions]
    columns = []
    for coords in monoid_coords:
        free, torsion = red.project(coords)
        columns.append(free + torsion)
    for j, m in enumerate(torsion_moduli):
        slack = [0] * (n_free + len(torsion_moduli))
        slack[n_free + j] = -m
        columns.append(tuple(slack))
    return _nonneg_combination_feasible(columns, target_free + target_torsion)


def monoid_coset_membership(
    group: FgAbelianGroup,
    monoid_generators: Sequence[GroupElement],
    step: GroupElement,
    target: GroupElement,
) -> bool:
    """Decide target = sum n_i * D_i + m * step modulo relations, n_i >= 0, m in Z.

    The subgroup generated by ``step`` (and the relation lattice) is split off
    first via the Smith-form quotient; what remains is a pure nonnegative
    feasibility problem over the free quotient coordinates together with
    congruences on the torsion coordinates, each absorbed by one slack
    variable.  The frontier search decides it exactly.
    """
    for el in tuple(monoid_generators) + (step, target):
        if el.group != group:
            raise InputError("all elements must belong to the given group")
    return _monoid_coset_cached(
        group,
        tuple(el.coords for el in monoid_generators),
        step.coords,
        target.coords,
    )
