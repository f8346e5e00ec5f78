"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines.
All checks are exact; the only tolerances are the stated wall-clock budgets.
"""

import itertools
import random
import time

from atomspec import (
    FgAbelianGroup,
    GradedRing,
    IntMatrix,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    PresentedModule,
    fiber_invariants,
    kernel_decomposition_check,
    kernel_intersection_identity_check,
    monoid_coset_membership,
    prime_filtration,
    prime_filtration_cyclic,
    sheafifies_to_zero,
    sheafifies_to_zero_loc,
    support_minimal_primes,
    verify_filtration,
)
from atomspec.atoms import is_standard_shift
from atomspec.corpus import COX_NAMES, load_corpus_cox, load_corpus_module
from atomspec.intlinalg import coset_reduction, smith_decomposition
from atomspec.randgen import (
    random_matrix,
    random_monomial_ideal,
    random_nonstandard_cyclic_subquotient,
)
from atomspec.sheafkernel import REASON_FAILS, REASON_NONSTANDARD
from atomspec.toric import complement_monomial
from atomspec.verification import (
    check_oracle_consistency,
    check_route_agreement,
    enumerate_window_atoms,
    window_cyclic_modules,
)


def report(number, description, ok, seconds=None):
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number:>2} [{status}] {description}"
    if seconds is not None:
        line += f" ({seconds:.2f}s)"
    print(line)
    assert ok, line


def variables_prime(ring, *indices):
    return MonomialPrime(ring, frozenset(indices))


def maximal_ideal(ring):
    return MonomialIdeal.generated_by(
        ring, [ring.variable_monomial(i) for i in range(ring.nvars)]
    )


def test_criterion_1_weighted_point_headline():
    start = time.monotonic()
    cox = load_corpus_cox("p112")
    ring = cox.ring
    module = load_corpus_module("p112_point", ring)
    shifted = load_corpus_module("p112_point_shift1", ring)
    plain = sheafifies_to_zero(cox, module)
    remedied = sheafifies_to_zero(cox, shifted)
    ok = (
        plain.verdict is False
        and [f.reason for f in plain.factors] == [REASON_FAILS]
        and remedied.verdict is True
        and [f.reason for f in remedied.factors] == [REASON_NONSTANDARD]
        and sheafifies_to_zero_loc(cox, module) is False
        and sheafifies_to_zero_loc(cox, shifted) is True
    )
    elapsed = time.monotonic() - start
    report(1, "weighted point dies only after the shift, both routes agree", ok and elapsed < 1.0, elapsed)


def test_criterion_2_fiber_invariants():
    start = time.monotonic()
    ok = True
    group = FgAbelianGroup.free(1)
    one = group.element([1])
    for n in (1, 2, 3):
        ring = GradedRing(group, tuple(f"x{i}" for i in range(n + 1)), (one,) * (n + 1))
        ok = ok and fiber_invariants(ring, variables_prime(ring, *range(n + 1))) == (1, ())
    p112 = load_corpus_cox("p112").ring
    ok = ok and fiber_invariants(p112, variables_prime(p112, 0, 1)) == (0, (2,))
    elapsed = time.monotonic() - start
    report(2, "fibers: Z over the irrelevant point, Z/2 over the weighted line", ok and elapsed < 1.0, elapsed)


def test_criterion_3_projective_space_criterion():
    start = time.monotonic()
    ok = True
    for name in ("p1", "p2"):
        cox = load_corpus_cox(name)
        ring = cox.ring
        origin = PresentedModule.cyclic(ring, maximal_ideal(ring))
        for g in range(-2, 3):
            ok = ok and sheafifies_to_zero(cox, origin.shift(ring.group.element([g]))).verdict
    p1 = load_corpus_cox("p1")
    line = PresentedModule.cyclic(
        p1.ring, MonomialIdeal.generated_by(p1.ring, [p1.ring.variable_monomial(0)])
    )
    ok = ok and sheafifies_to_zero(p1, line).verdict is False
    elapsed = time.monotonic() - start
    report(3, "projective spaces kill the origin and nothing else", ok and elapsed < 1.0, elapsed)


def test_criterion_4_filtration_pin():
    group = FgAbelianGroup.free(1)
    ring = GradedRing(group, ("t",), (group.element([1]),))
    ideal = MonomialIdeal.generated_by(ring, [Monomial((2,))])
    factors = prime_filtration_cyclic(ideal)
    pinned = [(sorted(p.indices), t.coords) for p, t in factors] == [([0], (-1,)), ([0], (0,))]
    module = PresentedModule.cyclic(ring, ideal)
    certified = verify_filtration(
        module, prime_filtration(module), [group.element([i]) for i in range(6)]
    )
    report(4, "double point filtration pinned under the lowest-index rule", pinned and certified)


def test_criterion_5_route_agreement():
    start = time.monotonic()
    total_checked = 0
    total_disagreements = 0
    for name in COX_NAMES:
        cox = load_corpus_cox(name)
        checked, disagreements = check_route_agreement(cox, 300, seed=20240 + len(name))
        total_checked += checked
        total_disagreements += disagreements
    elapsed = time.monotonic() - start
    ok = total_checked == 300 * len(COX_NAMES) and total_disagreements == 0
    report(
        5,
        f"route agreement on {total_checked} random modules, {total_disagreements} disagreements",
        ok and elapsed < 30.0,
        elapsed,
    )


def test_criterion_6_identity_checks():
    ok = True
    for name in COX_NAMES:
        cox = load_corpus_cox(name)
        ring = cox.ring
        ok = ok and kernel_intersection_identity_check(cox, coset_window=3)
        atoms = enumerate_window_atoms(cox, 3)
        for cone in cox.sigma.sorted_members():
            ok = ok and kernel_decomposition_check(ring, complement_monomial(ring, cone), atoms)
    report(6, "kernel intersection and decomposition identities on the corpus", ok)


def test_criterion_7_nonstandard_propagation():
    rng = random.Random(777)
    produced = 0
    failures = 0
    rings = [load_corpus_cox(name).ring for name in COX_NAMES]
    while produced < 100:
        ring = rings[produced % len(rings)]
        module = random_nonstandard_cyclic_subquotient(rng, ring)
        if module is None:
            continue
        produced += 1
        for prime, twist in prime_filtration(module).factors:
            if is_standard_shift(ring, prime, twist):
                failures += 1
    report(7, f"non-standardness propagates to all factors on {produced} subquotients", failures == 0)


def test_criterion_8_support_projection():
    rng = random.Random(888)
    group = FgAbelianGroup.free(1)
    checked = 0
    mismatches = 0
    for nvars in (2, 3, 4):
        degrees = tuple(group.element([1 + (i % 2)]) for i in range(nvars))
        ring = GradedRing(group, tuple(f"x{i}" for i in range(nvars)), degrees)
        for _ in range(67):
            if checked == 200:
                break
            ideal = random_monomial_ideal(rng, ring, max_generators=5, max_exponent=3)
            if ideal.is_unit():
                ideal = maximal_ideal(ring)
            module = PresentedModule.cyclic(ring, ideal)
            from_filtration = {p.indices for p in support_minimal_primes(module)}
            oracle = {p.indices for p in ideal.minimal_primes()}
            checked += 1
            if from_filtration != oracle:
                mismatches += 1
    report(8, f"support projection matches the transversal oracle on {checked} ideals", checked >= 200 and mismatches == 0)


def _brute_force_monoid_coset(reduction, monoid, step, target, bound):
    """Independent bounded search over raw coordinates (n_i <= bound, |m| <= bound)."""
    k = len(target)
    target_rep = reduction.reduce(target)
    for counts in itertools.product(range(bound + 1), repeat=len(monoid)):
        base = [0] * k
        for c, gen in zip(counts, monoid):
            for i in range(k):
                base[i] += c * gen[i]
        for m in range(-bound, bound + 1):
            candidate = tuple(base[i] + m * step[i] for i in range(k))
            if reduction.reduce(candidate) == target_rep:
                return True
    return False


def test_criterion_9_lattice_core():
    start = time.monotonic()
    rng = random.Random(999)
    snf_ok = True
    for _ in range(500):
        A = random_matrix(rng)
        snf = smith_decomposition(A)
        U, D, V = snf.left, snf.diagonal, snf.right
        if (U @ A @ V).entries != D.entries:
            snf_ok = False
        if abs(U.determinant()) != 1 or abs(V.determinant()) != 1:
            snf_ok = False
        diag = snf.diagonal_entries
        for a, b in zip(diag, diag[1:]):
            if not (b == 0 or (a != 0 and b % a == 0)):
                snf_ok = False

    brute_ok = True
    for _ in range(100):
        free = rng.randint(1, 2)
        torsion = [rng.choice([2, 3])] if rng.random() < 0.3 else []
        group = FgAbelianGroup.with_invariants(free, torsion)
        k = group.ambient_rank
        monoid = [
            group.element([rng.randint(-3, 3) for _ in range(k)])
            for _ in range(rng.randint(0, 3))
        ]
        step = group.element([rng.randint(-3, 3) for _ in range(k)])
        target = group.element([rng.randint(-6, 6) for _ in range(k)])
        exact = monoid_coset_membership(group, monoid, step, target)
        reduction = coset_reduction(k, group.relation_columns())
        brute = _brute_force_monoid_coset(
            reduction,
            [g.coords for g in monoid],
            step.coords,
            target.coords,
            bound=12,
        )
        # A bounded witness is conclusive: it must never contradict an exact
        # "false".  (Exact "true" with no bounded witness is fine: the
        # certificate may simply lie outside the box.)
        if brute and not exact:
            brute_ok = False
    elapsed = time.monotonic() - start
    report(9, "Smith form property suite and membership brute-force agreement", snf_ok and brute_ok, elapsed)


def test_criterion_10_fan_pipeline():
    p2 = load_corpus_cox("p2")
    from atomspec import FanInput, cox_from_fan

    derived_p2 = cox_from_fan(
        FanInput.of([[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
    )
    ok = [d.coords for d in derived_p2.ring.degrees] == [(1,), (1,), (1,)]
    ok = ok and derived_p2.ring.group.invariants() == (1, ())
    ok = ok and [d.coords for d in p2.ring.degrees] == [(1,), (1,), (1,)]
    fan121 = load_corpus_cox("fan_121")
    ok = ok and [d.coords for d in fan121.ring.degrees] == [(1,), (2,), (1,)]
    torsion = load_corpus_cox("fan_torsion")
    ok = ok and torsion.ring.group.invariants() == (0, (2,))
    ok = ok and [d.canonical_coords() for d in torsion.ring.degrees] == [(1,), (1,)]
    report(10, "fan pipeline reproduces the pinned degree data", ok)


def test_supplementary_oracle_consistency():
    # Backs criterion 5: the bounded witness oracle agrees with the decision
    # on the window cyclics and the bundled examples of every corpus datum.
    ok = True
    for name in COX_NAMES:
        cox = load_corpus_cox(name)
        modules = window_cyclic_modules(cox, 2)
        checked, inconsistencies = check_oracle_consistency(cox, modules, k_max=6)
        ok = ok and checked == len(modules) and inconsistencies == 0
    report("S", "witness oracle consistent with the decision on window cyclics", ok)
