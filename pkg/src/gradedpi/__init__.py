"""gradedpi: group-graded polynomial identities, executable.

Finite groups as Cayley tables, the free graded associative algebra with
exact coefficients, finite-dimensional graded algebras by structure
constants, identity and semi-identity checking, graded codimensions, and
the permutation-pattern combinatorics behind the degree bounds.
"""

__version__ = "0.1.0"

from .algebras import (
    GradedAlgebra,
    SubalgebraPair,
    Subspace,
    counterexample_A,
    counterexample_direct_sum,
    direct_power,
    evaluate,
    group_algebra,
    homogeneous_component,
    ideal_example_UT2,
    lie_evaluate,
    matrix_algebra_elementary,
    semi_example,
    truncated_free_algebra,
)
from .combinatorics import (
    compositions,
    compositions_count,
    count_d_good,
    d_y_good_monomial,
    is_d_good,
    longest_decreasing_subsequence,
    multinomial,
    multinomial_bound_check,
    stirling_check,
    trivial_blocks,
)
from .errors import (
    AlgebraError,
    DegenerateBoundError,
    EvaluationError,
    FieldError,
    GradedPiError,
    GradingError,
    GroupAxiomError,
    LoadError,
    NonMultilinearError,
    PolySyntaxError,
    ResourceGuardError,
)
from .fields import Field
from .freepoly import (
    GradedPolynomial,
    GradedVariable,
    expand_x,
    is_multilinear,
    lie_bracket,
    multilinear_variables,
    substitute,
    word_degree,
)
from .grammar import parse_poly, print_poly
from .groups import GroupTable, cyclic_group, group_from_table, symmetric_group, trivial_group
from .identities import (
    IdentityReport,
    SignatureSpace,
    check_identity_general,
    check_identity_multilinear,
    check_sum_decomposition,
    codimension,
    compose_outer_graded,
    compose_outer_ordinary,
    generic_no_identity_check,
    left_ideal_witness,
)
from .semiidentities import (
    BlockShape,
    Pattern,
    SemiContext,
    block_shapes,
    dim_v,
    good_monomials,
    is_semi_identity,
    is_trivial_semi,
    l8_check,
    l8_threshold,
    lemma10_bound,
    pattern_split,
    riley_bound,
    sp_d,
    spanning_check,
    theorem_degree,
)
from .serialize import dump_algebra, load_algebra, load_algebra_dict
