"""Positive solutions of polynomial systems supported on circuits.

Decides which circuits of n+2 points support a system with the maximal
number n+1 of non-degenerate positive solutions, builds explicit witness
systems, and counts positive solutions exactly through Gale duality.
"""
from .circuit import (
    AffineRelation,
    CharacterizationVerdict,
    Circuit,
    OrderingWitness,
    affine_relation,
    canonical_max_positive_relation,
    characterize,
    check_partial_sums,
    find_witness_ordering,
    kouchnirenko_bound,
    realize_circuit,
    sign_balance_check,
    validate_circuit,
)
from .dessin import DessinProfile, edge_counts, emit_graph, letter_layout
from .errors import *  # noqa: F401,F403
from .gale import (
    DiagonalSystem,
    PositiveSolution,
    SupportedSystem,
    count_positive_solutions,
    diagonalize,
    gale_polynomial,
    lift_solutions,
    normalize_support,
    positivity_domain,
    solve_system,
    system_residuals,
)
from .linalg import kernel, solve
from .polynomial import RatPoly, poly_mul, poly_pow
from .sturm import RatInterval, SturmChain, isolate_roots, refine_root, sturm_count
from .viro import (
    ViroCertificate,
    construct_system,
    facial_subpolynomials,
    gale_viro,
    heights,
    p_sequence,
    select_t,
    viro_exponents,
    viro_terms,
)

__version__ = "0.1.0"
