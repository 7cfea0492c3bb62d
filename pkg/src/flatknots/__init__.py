"""Invariants, local moves, and equivalence search for knot projections.

Projections are given as cyclic double occurrence words (unsigned Gauss
codes).  The package computes sphere realizability and faces, the
crossing and unknotting style invariants of the chord interlacement
graph, applies curl and triangle rewrites, searches equivalence classes
under chosen move sets, and evaluates state sum polynomials of resolved
diagrams.
"""

from .words import (
    Word,
    WordError,
    canonical,
    chord_count,
    connected_sum,
    format_word,
    is_prime,
    letters,
    parse_word,
    prime_decompose,
    validate_word,
    words_equal,
)
from .embedding import (
    Embedding,
    Face,
    FaceInventory,
    NotRealizableError,
    faces,
    is_realizable,
    realize,
)
from .invariants import (
    InvariantReport,
    cross_chord_number,
    h_invariant,
    interlacement,
    invariant_report,
    r1_normal_form,
    reduce_r1,
    trefoil_summand_count,
    trivializing_number,
)
from .moves import (
    MoveError,
    MoveKind,
    MoveSite,
    apply_move,
    expected_cross_change,
    find_sites,
    move_set,
    neighbors,
)
from .explore import (
    ClassSearchResult,
    EquivalenceResult,
    SearchConfig,
    WitnessPath,
    enumerate_realizable,
    enumerate_words,
    equivalence_query,
    search_class,
    strong_class_test,
    strong_trivial_test,
    twist_family,
    verify_path,
)
from .corpus import (
    CorpusEntry,
    CorpusError,
    corpus_entry,
    load_corpus,
    parse_corpus,
    reduced_prime_census,
)
from .laurent import Laurent, laurent_format
from .knots import (
    Diagram,
    DiagramError,
    alternating_determinant,
    alternating_diagram,
    determinant,
    jones_normalized,
    kauffman_bracket,
    mirror_diagram,
    positive_resolution,
    resolve,
)

__version__ = "0.1.0"

__all__ = [
    "Word",
    "WordError",
    "canonical",
    "chord_count",
    "connected_sum",
    "format_word",
    "is_prime",
    "letters",
    "parse_word",
    "prime_decompose",
    "validate_word",
    "words_equal",
    "Embedding",
    "Face",
    "FaceInventory",
    "NotRealizableError",
    "faces",
    "is_realizable",
    "realize",
    "InvariantReport",
    "cross_chord_number",
    "h_invariant",
    "interlacement",
    "invariant_report",
    "r1_normal_form",
    "reduce_r1",
    "trefoil_summand_count",
    "trivializing_number",
    "MoveError",
    "MoveKind",
    "MoveSite",
    "apply_move",
    "expected_cross_change",
    "find_sites",
    "move_set",
    "neighbors",
    "ClassSearchResult",
    "EquivalenceResult",
    "SearchConfig",
    "WitnessPath",
    "enumerate_realizable",
    "enumerate_words",
    "equivalence_query",
    "search_class",
    "strong_class_test",
    "strong_trivial_test",
    "twist_family",
    "verify_path",
    "CorpusEntry",
    "CorpusError",
    "corpus_entry",
    "load_corpus",
    "parse_corpus",
    "reduced_prime_census",
    "Laurent",
    "laurent_format",
    "Diagram",
    "DiagramError",
    "alternating_determinant",
    "alternating_diagram",
    "determinant",
    "jones_normalized",
    "kauffman_bracket",
    "mirror_diagram",
    "positive_resolution",
    "resolve",
    "__version__",
]
