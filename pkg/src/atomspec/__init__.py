"""Atom-spectrum data of graded polynomial rings and sheafification-kernel decisions.

The package decides, in exact arithmetic, whether a finitely presented
graded module over a toric Cox ring sheafifies to zero, by two independent
routes that must agree: classifying the factors of a prime filtration
against the irrelevant ideal and the non-standard shifts, and running the
degree-zero localization kernel test at every cone.
"""

from .errors import (
    AtomspecError,
    InputError,
    InternalInvariantError,
    ParseError,
    ResourceLimitError,
    UnsupportedInputError,
)
from .intlinalg import (
    FgAbelianGroup,
    GroupElement,
    IntMatrix,
    SolutionReport,
    Subgroup,
    coset_representative,
    enumerate_nonneg_solutions,
    monoid_coset_membership,
    quotient_invariants,
    smith_normal_form,
    subgroup_membership,
)
from .rings import (
    INFINITE,
    NEEDS_BOUND,
    GradedRing,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    PresentedModule,
    Term,
    degree_piece_dimension,
    monomials_of_degree,
)
from .filtration import (
    PrimeFiltration,
    prime_filtration,
    prime_filtration_cyclic,
    verify_filtration,
)
from .atoms import (
    AtomPoint,
    atom_equal,
    atom_support_generators,
    degree_subgroup,
    fiber_classes,
    fiber_invariants,
    support_minimal_primes,
)
from .toric import (
    CoxData,
    FanInput,
    SigmaComplex,
    TorusFactorError,
    cox_from_fan,
    irrelevant_ideal,
)
from .sheafkernel import (
    FactorReport,
    LocalizationWitness,
    ZeroDecision,
    find_localization_witness,
    kernel_decomposition_check,
    kernel_intersection_identity_check,
    module_in_loc_kernel,
    point_in_degree_kernel,
    point_in_loc_kernel,
    sheafifies_to_zero,
    sheafifies_to_zero_loc,
)
from .serialize import (
    dump_cox,
    dump_module,
    dump_ring,
    load_cox,
    load_module,
    load_ring,
    parse_monomial,
)

__version__ = "0.1.0"

__all__ = [
    "AtomspecError",
    "InputError",
    "InternalInvariantError",
    "ParseError",
    "ResourceLimitError",
    "UnsupportedInputError",
    "FgAbelianGroup",
    "GroupElement",
    "IntMatrix",
    "SolutionReport",
    "Subgroup",
    "coset_representative",
    "enumerate_nonneg_solutions",
    "monoid_coset_membership",
    "quotient_invariants",
    "smith_normal_form",
    "subgroup_membership",
    "INFINITE",
    "NEEDS_BOUND",
    "GradedRing",
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "PresentedModule",
    "Term",
    "degree_piece_dimension",
    "monomials_of_degree",
    "PrimeFiltration",
    "prime_filtration",
    "prime_filtration_cyclic",
    "verify_filtration",
    "AtomPoint",
    "atom_equal",
    "atom_support_generators",
    "degree_subgroup",
    "fiber_classes",
    "fiber_invariants",
    "support_minimal_primes",
    "CoxData",
    "FanInput",
    "SigmaComplex",
    "TorusFactorError",
    "cox_from_fan",
    "irrelevant_ideal",
    "FactorReport",
    "LocalizationWitness",
    "ZeroDecision",
    "find_localization_witness",
    "kernel_decomposition_check",
    "kernel_intersection_identity_check",
    "module_in_loc_kernel",
    "point_in_degree_kernel",
    "point_in_loc_kernel",
    "sheafifies_to_zero",
    "sheafifies_to_zero_loc",
    "dump_cox",
    "dump_module",
    "dump_ring",
    "load_cox",
    "load_module",
    "load_ring",
    "parse_monomial",
]
