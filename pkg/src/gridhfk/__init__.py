"""Grid-diagram link homology over GF(2).

Compute the bigraded homology of the tilde complex of a grid diagram,
extract extremal (bottom/top) groups, genus, and tau-extremality flags,
verify the two Murasugi-sum theorems on curated cases, and run the
multiplicative polynomial ledger.
"""

from .errors import (
    GridHfkError,
    GridInputError,
    GridResourceError,
    InconsistentComplex,
    IndexMismatch,
    MarkingCollision,
    NegativeIndex,
    NotAKnot,
    NotAPermutation,
    NotDivisible,
    SizeMismatch,
    UnsupportedQ,
)
from .grids import (
    GridDiagram,
    connected_sum,
    corpus_case_path,
    corpus_path,
    count_components,
    list_corpus,
    load_corpus,
    load_grid,
    make_grid,
    mirror,
    parse_grid,
)
from .homology import (
    BigradedRanks,
    build_level_complex,
    deflate_to_hat,
    homology_ranks,
    induced_map_rank,
    inflate,
)
from .invariants import (
    ExtremalGroup,
    alexander_polynomial,
    bottom_group,
    genus2,
    hat_ranks,
    is_extremal_rank_one,
    is_extremal_thin,
    tau_bot_is_minus_g,
    tau_top_is_g,
    top_group,
)
from .ledger import (
    Ledger,
    LedgerEntry,
    PoincareFraction,
    b1_sum_check,
    cor6_obstruction,
    entry_from_grid,
    independent_by_coprimality,
    p_image,
)
from .murasugi import (
    CaseSide,
    MurasugiCase,
    VerificationReport,
    cable_top_group_predict,
    load_case,
    make_connected_sum_case,
    surface_index,
    verify_theorem1,
    verify_theorem2,
)
from .polynomials import LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "BigradedRanks",
    "CaseSide",
    "ExtremalGroup",
    "GridDiagram",
    "GridHfkError",
    "GridInputError",
    "GridResourceError",
    "InconsistentComplex",
    "IndexMismatch",
    "Ledger",
    "LedgerEntry",
    "LaurentPoly",
    "MarkingCollision",
    "MurasugiCase",
    "NegativeIndex",
    "NotAKnot",
    "NotAPermutation",
    "NotDivisible",
    "PoincareFraction",
    "SizeMismatch",
    "UnsupportedQ",
    "VerificationReport",
    "alexander_polynomial",
    "b1_sum_check",
    "bottom_group",
    "build_level_complex",
    "cable_top_group_predict",
    "connected_sum",
    "cor6_obstruction",
    "corpus_case_path",
    "corpus_path",
    "count_components",
    "deflate_to_hat",
    "entry_from_grid",
    "genus2",
    "hat_ranks",
    "homology_ranks",
    "independent_by_coprimality",
    "induced_map_rank",
    "inflate",
    "is_extremal_rank_one",
    "is_extremal_thin",
    "list_corpus",
    "load_case",
    "load_corpus",
    "load_grid",
    "make_connected_sum_case",
    "make_grid",
    "mirror",
    "p_image",
    "parse_grid",
    "surface_index",
    "tau_bot_is_minus_g",
    "tau_top_is_g",
    "top_group",
    "verify_theorem1",
    "verify_theorem2",
]
