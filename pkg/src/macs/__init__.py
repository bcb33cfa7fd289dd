"""Antichains and maximal antichains in a product of two finite chains.

The package materializes the bijections between antichains, strict
chains, three-letter grid-line words, string alignments and lattice
walks, counts (maximal) antichains by four mutually checking methods
with exact integer arithmetic, and computes growth diagnostics.
"""

from .asymptotics import (
    antichain_growth_ratio,
    density_series,
    growth_report,
    ratio_series,
    rho,
    rho_radical,
)
from .codec import (
    Alignment,
    Walk,
    alignment_has_alternate_skips,
    alignment_to_word,
    antichain_to_strict_chain,
    antichain_to_word,
    strict_chain_to_antichain,
    strict_chain_to_word,
    validate_word,
    walk_antichain_is_maximal,
    walk_augmenting_points,
    walk_strict_chain_is_maximal,
    walk_to_antichain,
    walk_to_strict_chain,
    walk_to_word,
    word_is_maximal,
    word_shape,
    word_to_alignment,
    word_to_antichain,
    word_to_strict_chain,
)
from .counting import (
    CountTable,
    TransitionProfile,
    build_table,
    count_antichains,
    count_maximal_double,
    count_maximal_explicit,
    count_maximal_heinz,
    count_maximal_simple,
    explicit_breakdown,
    heinz_bracket_divisible,
)
from .enumeration import (
    brute_force_count_maximal,
    enumerate_antichains,
    enumerate_canonical_words,
    enumerate_maximal_antichains,
    enumerate_maximal_words,
    enumerate_strict_chains,
    enumerate_walks,
)
from .errors import (
    LengthMismatchError,
    MacsError,
    MethodDisagreementError,
    NonCanonicalWordError,
    NonIntegerStepError,
    NotAntichainError,
    NotStepMatrixError,
    NotStrictChainError,
    TooLargeError,
    WrongKindError,
    WrongOrientationError,
)
from .poset import (
    BinaryMatrix,
    Classification,
    GridShape,
    MatrixRole,
    Point,
    PointSet,
    augmentation_matrix,
    classify,
    dominates,
    has_consecutive_ones,
    is_maximal,
    noses,
    step_matrices,
    strict_chain_step_matrices,
    strongly_dominates,
)

__version__ = "0.1.0"
