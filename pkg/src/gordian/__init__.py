"""Symbolic rewriting for positive braid words.

Five traceable rules — distant swap, neighbor braid, conjugate, destabilize,
crossing change — drive everything here: exact unknotting of positive braid
knots, machine-checkable certificates that one torus knot lies on a minimal
unknotting sequence of another, an invariant oracle (Alexander polynomial via
the reduced Burau representation), and exhaustive enumeration of positive
braid knots by unknotting number.
"""

from .adjacency import (
    AdjacencyCertificate,
    CatalogAnswer,
    CertificateCheck,
    CLAIMED,
    NOT_COVERED,
    adjacency_2_from_4,
    adjacency_3_from_4,
    adjacency_catalog,
    adjacency_ci,
    adjacency_cin,
    decompose_twists,
    delete_link_subword,
    endpoint_word,
    format_endpoint,
    full_twist,
    parse_certificate,
    peel_full_twist,
    serialize_certificate,
    strip_top_strand,
    verify_certificate,
    wrap_commute,
)
from .alexander import (
    EquivalenceEvidence,
    LaurentPoly,
    alexander,
    closures_equivalent_evidence,
    torus_alexander,
)
from .enumeration import (
    EnumerationResult,
    KnotClass,
    canonical_form,
    canonical_rotation,
    enumerate_positive_knots,
    format_enumeration_report,
    minimize_word,
    positive_path_diagnostic,
    positive_path_search,
    verify_positive_path,
)
from .errors import (
    BlockedByFreeStrand,
    BraidError,
    BudgetExceeded,
    DomainError,
    IllegalStep,
    NoSingleGenerator,
    NotFoundWithinBudget,
    ParseError,
    TraceCorrupt,
)
from .rules import (
    CONJUGATE,
    CROSSING_CHANGE,
    DESTABILIZE,
    DISTANT_SWAP,
    NEIGHBOR_BRAID,
    RewriteStep,
    RewriteTrace,
    TraceBuilder,
    apply_conjugate,
    apply_crossing_change,
    apply_destabilize,
    apply_distant_swap,
    apply_neighbor_braid,
    apply_step,
    neighbor_braid_direction,
    parse_trace,
    replay,
    serialize_trace,
)
from .unknotting import (
    generator_support_check,
    reduce_single_generator,
    reduce_subword,
    unknot,
    unknotting_sequence,
)
from .words import (
    BraidWord,
    ClosureInfo,
    TorusParams,
    ascending_run,
    closure_info,
    components,
    descending_run,
    format_word,
    is_knot,
    parse_word,
    torus_braid,
    torus_unknotting_number,
    unknotting_number,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # words
    "BraidWord",
    "ClosureInfo",
    "TorusParams",
    "ascending_run",
    "closure_info",
    "components",
    "descending_run",
    "format_word",
    "is_knot",
    "parse_word",
    "torus_braid",
    "torus_unknotting_number",
    "unknotting_number",
    # rules
    "CONJUGATE",
    "CROSSING_CHANGE",
    "DESTABILIZE",
    "DISTANT_SWAP",
    "NEIGHBOR_BRAID",
    "RewriteStep",
    "RewriteTrace",
    "TraceBuilder",
    "apply_conjugate",
    "apply_crossing_change",
    "apply_destabilize",
    "apply_distant_swap",
    "apply_neighbor_braid",
    "apply_step",
    "neighbor_braid_direction",
    "parse_trace",
    "replay",
    "serialize_trace",
    # invariants
    "EquivalenceEvidence",
    "LaurentPoly",
    "alexander",
    "closures_equivalent_evidence",
    "torus_alexander",
    # unknotting
    "generator_support_check",
    "reduce_single_generator",
    "reduce_subword",
    "unknot",
    "unknotting_sequence",
    # adjacency
    "AdjacencyCertificate",
    "CatalogAnswer",
    "CertificateCheck",
    "CLAIMED",
    "NOT_COVERED",
    "adjacency_2_from_4",
    "adjacency_3_from_4",
    "adjacency_catalog",
    "adjacency_ci",
    "adjacency_cin",
    "decompose_twists",
    "delete_link_subword",
    "endpoint_word",
    "format_endpoint",
    "full_twist",
    "parse_certificate",
    "peel_full_twist",
    "serialize_certificate",
    "strip_top_strand",
    "verify_certificate",
    "wrap_commute",
    # enumeration and search
    "EnumerationResult",
    "KnotClass",
    "canonical_form",
    "canonical_rotation",
    "enumerate_positive_knots",
    "format_enumeration_report",
    "minimize_word",
    "positive_path_diagnostic",
    "positive_path_search",
    "verify_positive_path",
    # errors
    "BlockedByFreeStrand",
    "BraidError",
    "BudgetExceeded",
    "DomainError",
    "IllegalStep",
    "NoSingleGenerator",
    "NotFoundWithinBudget",
    "ParseError",
    "TraceCorrupt",
]
