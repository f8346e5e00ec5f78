"""Lattice-core tests: Smith form, memberships, Diophantine enumeration.

Brute-force oracles are deliberately independent of the code under test:
box enumeration of coefficient vectors for subgroup membership and bounded
search over (n, m) for the monoid/coset test.
"""

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from atomspec import (
    FgAbelianGroup,
    InputError,
    IntMatrix,
    Subgroup,
    enumerate_nonneg_solutions,
    monoid_coset_membership,
    quotient_invariants,
    smith_normal_form,
    subgroup_membership,
)
from atomspec.intlinalg import coset_reduction, smith_decomposition


def small_matrices(max_dim=4, max_entry=9):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.integers(-max_entry, max_entry), min_size=r * c, max_size=r * c
            ).map(lambda entries: IntMatrix(r, c, tuple(entries)))
        )
    )


class TestSmithNormalForm:
    def test_zero_matrix(self):
        A = IntMatrix.zero(2, 2)
        U, D, V = smith_normal_form(A)
        assert D.entries == (0, 0, 0, 0)
        assert U.entries == IntMatrix.identity(2).entries
        assert V.entries == IntMatrix.identity(2).entries

    def test_identity(self):
        A = IntMatrix.identity(2)
        _, D, _ = smith_normal_form(A)
        assert D.entries == A.entries

    def test_pinned_2x2(self):
        # d_1 = gcd of the entries, d_1 * d_2 = |det|.
        A = IntMatrix.from_rows([[2, 4], [6, 8]])
        U, D, V = smith_normal_form(A)
        assert (D.at(0, 0), D.at(1, 1)) == (2, 4)
        assert (U @ A @ V).entries == D.entries

    @given(small_matrices())
    def test_snf_properties(self, A):
        snf = smith_decomposition(A)
        U, D, V = snf.left, snf.diagonal, snf.right
        assert (U @ A @ V).entries == D.entries
        assert abs(U.determinant()) == 1
        assert abs(V.determinant()) == 1
        diag = snf.diagonal_entries
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            assert b == 0 or (a != 0 and b % a == 0) or (a == 0 and b == 0)
        # Off-diagonal must vanish.
        for i in range(D.rows):
            for j in range(D.cols):
                if i != j:
                    assert D.at(i, j) == 0
        assert (snf.left_inverse @ U).entries == IntMatrix.identity(A.rows).entries
        assert (V @ snf.right_inverse).entries == IntMatrix.identity(A.cols).entries

    def test_empty_shapes(self):
        A = IntMatrix.zero(3, 0)
        U, D, V = smith_normal_form(A)
        assert D.rows == 3 and D.cols == 0
        assert U.entries == IntMatrix.identity(3).entries


class TestSubgroupMembership:
    def test_parity(self):
        G = FgAbelianGroup.free(1)
        H = Subgroup(G, (G.element([2]),))
        assert subgroup_membership(H, G.element([3])) == (False, None)

    def test_sum_of_generators(self):
        G = FgAbelianGroup.free(2)
        H = Subgroup(G, (G.element([1, 1]), G.element([1, -1])))
        member, witness = subgroup_membership(H, G.element([2, 0]))
        assert member
        assert witness == (1, 1)

    def test_weighted_fiber_forces_odd_out(self):
        # In the Z-graded ring with degrees (1,1,2) the subgroup <2> misses 1.
        G = FgAbelianGroup.free(1)
        H = Subgroup(G, (G.element([2]),))
        assert subgroup_membership(H, G.element([1]))[0] is False

    def test_dimension_mismatch(self):
        G = FgAbelianGroup.free(2)
        H = Subgroup(G, (G.element([1, 0]),))
        other = FgAbelianGroup.free(1)
        with pytest.raises(InputError):
            subgroup_membership(H, other.element([1]))

    def test_witness_reproduces_element_modulo_relations(self):
        rng = random.Random(7)
        for _ in range(100):
            ambient = rng.randint(1, 3)
            torsion = [rng.choice([2, 3, 4]) for _ in range(rng.randint(0, 2))]
            G = FgAbelianGroup.with_invariants(ambient - len(torsion), torsion) \
                if ambient >= len(torsion) else FgAbelianGroup.free(ambient)
            k = G.ambient_rank
            gens = tuple(
                G.element([rng.randint(-4, 4) for _ in range(k)])
                for _ in range(rng.randint(0, 3))
            )
            H = Subgroup(G, gens)
            g = G.element([rng.randint(-6, 6) for _ in range(k)])
            member, witness = subgroup_membership(H, g)
            if member:
                combo = G.zero()
                for c, gen in zip(witness, gens):
                    combo = combo + c * gen
                assert combo == g
            else:
                # Brute force over a small coefficient box must not find one.
                found = False
                for coeffs in itertools.product(range(-5, 6), repeat=len(gens)):
                    combo = G.zero()
                    for c, gen in zip(coeffs, gens):
                        combo = combo + c * gen
                    if combo == g:
                        found = True
                        break
                assert not found


class TestQuotientInvariants:
    def test_free_fiber(self):
        G = FgAbelianGroup.free(1)
        assert quotient_invariants(G, Subgroup(G, ())) == (1, ())

    def test_order_two_fiber(self):
        G = FgAbelianGroup.free(1)
        assert quotient_invariants(G, Subgroup(G, (G.element([2]),))) == (0, (2,))

    def test_rank_two_quotient(self):
        G = FgAbelianGroup.free(2)
        H = Subgroup(G, (G.element([1, 1]), G.element([1, -1])))
        assert quotient_invariants(G, H) == (0, (2,))

    def test_trivial_subgroup_gives_group_invariants(self):
        G = FgAbelianGroup.with_invariants(1, [4])
        assert quotient_invariants(G, Subgroup(G, ())) == G.invariants() == (1, (4,))

    def test_full_generating_set_gives_trivial_quotient(self):
        G = FgAbelianGroup.with_invariants(1, [4])
        H = Subgroup(G, (G.element([1, 0]), G.element([0, 1])))
        assert quotient_invariants(G, H) == (0, ())


class TestMonoidCosetMembership:
    def test_even_monoid_misses_one(self):
        G = FgAbelianGroup.free(1)
        z = G.element
        assert monoid_coset_membership(G, [z([2])], z([2]), z([1])) is False

    def test_even_monoid_contains_zero(self):
        G = FgAbelianGroup.free(1)
        z = G.element
        assert monoid_coset_membership(G, [z([2])], z([2]), z([0])) is True

    def test_empty_combination(self):
        G = FgAbelianGroup.free(1)
        z = G.element
        assert monoid_coset_membership(G, [], z([0]), z([0])) is True
        assert monoid_coset_membership(G, [], z([0]), z([1])) is False

    def test_negative_target_reachable_through_step(self):
        G = FgAbelianGroup.free(1)
        z = G.element
        assert monoid_coset_membership(G, [z([1]), z([2])], z([3]), z([-5])) is True

    def test_torsion_side_conditions(self):
        G = FgAbelianGroup.with_invariants(0, [2])
        z = G.element
        assert monoid_coset_membership(G, [z([1])], z([0]), z([1])) is True
        assert monoid_coset_membership(G, [], z([0]), z([1])) is False

    def _brute_force(self, G, monoid, step, target, bound=12):
        for count in itertools.product(range(bound + 1), repeat=len(monoid)):
            for m in range(-bound, bound + 1):
                combo = G.zero()
                for c, gen in zip(count, monoid):
                    combo = combo + c * gen
                combo = combo + m * step
                if combo == target:
                    return True
        return False

    def test_agrees_with_bounded_brute_force(self):
        rng = random.Random(11)
        for _ in range(60):
            free = rng.randint(0, 2)
            torsion = [rng.choice([2, 3])] if rng.random() < 0.4 else []
            if free + len(torsion) == 0:
                free = 1
            G = FgAbelianGroup.with_invariants(free, torsion)
            k = G.ambient_rank
            monoid = [G.element([rng.randint(-3, 3) for _ in range(k)]) for _ in range(rng.randint(0, 3))]
            step = G.element([rng.randint(-3, 3) for _ in range(k)])
            target = G.element([rng.randint(-5, 5) for _ in range(k)])
            exact = monoid_coset_membership(G, monoid, step, target)
            brute = self._brute_force(G, monoid, step, target, bound=8)
            if brute:
                assert exact, (monoid, step, target)
            if not exact:
                assert not brute


class TestEnumerateNonnegSolutions:
    def test_pinned_complete_set(self):
        report = enumerate_nonneg_solutions(IntMatrix.from_rows([[1, 1, 2]]), [2])
        assert report.pointed
        assert set(report.solutions) == {(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)}

    def test_zero_rhs_pointed(self):
        report = enumerate_nonneg_solutions(IntMatrix.from_rows([[1, 1, 2]]), [0])
        assert report.pointed and report.solutions == ((0, 0, 0),)

    def test_infinite_flag_with_witness(self):
        report = enumerate_nonneg_solutions(IntMatrix.from_rows([[1, -1]]), [0])
        assert not report.pointed
        assert report.homogeneous_witness == (1, 1)
        assert report.solutions is None

    @given(
        st.lists(st.integers(-3, 3), min_size=2, max_size=6),
        st.integers(-6, 6),
    )
    def test_single_row_against_box_enumeration(self, coefficients, rhs):
        matrix = IntMatrix.from_rows([coefficients])
        report = enumerate_nonneg_solutions(matrix, [rhs])
        box = [
            e
            for e in itertools.product(range(8), repeat=len(coefficients))
            if sum(c * x for c, x in zip(coefficients, e)) == rhs
        ]
        if report.pointed:
            # Every box solution must be listed.
            assert set(box) <= set(report.solutions)
            for e in report.solutions:
                assert sum(c * x for c, x in zip(coefficients, e)) == rhs
        else:
            w = report.homogeneous_witness
            assert any(w)
            assert sum(c * x for c, x in zip(coefficients, w)) == 0


class TestCosetReduction:
    def test_canonical_representative_idempotent_and_congruent(self):
        red = coset_reduction(2, ((2, 0), (0, 3)))
        rep = red.reduce((5, -4))
        assert red.reduce(rep) == rep
        # rep differs from the input by a lattice vector.
        diff = (5 - rep[0], -4 - rep[1])
        assert diff[0] % 2 == 0 and diff[1] % 3 == 0
        # Congruent inputs share the representative; incongruent ones do not.
        assert red.reduce((5 + 2, -4 + 3)) == rep
        assert red.reduce((6, -4)) != rep

    def test_representatives_cover_finite_quotient_once(self):
        red = coset_reduction(2, ((2, 0), (0, 3)))
        reps = list(red.representatives(0))
        assert len(reps) == 6
        assert len({red.reduce(r) for r in reps}) == 6
