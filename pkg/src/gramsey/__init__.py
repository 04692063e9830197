"""Exact arithmetic, certificates, and finite-window largeness experiments over Z[i].

The package decides the all-ones matrix alternative exactly over Q(i),
classifies finite sets by syndetic / piecewise syndetic / thick / IP /
difference-set notions inside a square window, and runs reproducible
desk-scale experiments (monochromatic image search, preimage abundance
and preservation, congruence proof-checks) with deterministic JSON
reports.
"""

from .gaussian import (
    GaussInt,
    GaussRational,
    UNITS,
    canonical_associate,
    canonical_residue,
    choose_prime_exceeding,
    congruent_mod,
    div_rem,
    divides,
    exact_div,
    gcd,
    is_gaussian_prime,
    is_rational_prime,
    parse_gauss_int,
    parse_gauss_rational,
    point_key,
    prime_with_norm_exceeding,
    residue_system,
)
from .largeness import (
    DELTA_DEPTH_CAP,
    FS_LENGTH_CAP,
    GaussSet,
    IP_DEPTH_CAP,
    PsWitness,
    Window,
    as_seq,
    box_points,
    contains_delta,
    contains_ip,
    delta,
    fs,
    is_piecewise_syndetic,
    is_star_k,
    is_syndetic,
    is_thick,
    partial_sums,
)
from .linalg import (
    IprCertificate,
    MatrixQi,
    ParseError,
    certify,
    clear_denominators,
    find_obstruction,
    format_matrix,
    parse_matrix,
    progression_matrix,
    solve_all_ones,
    verify_translation_identity,
)
from .partition import (
    Coloring,
    ImageCertificate,
    SearchResult,
    abundance_report,
    congruence_proofcheck,
    positivity_filter,
    preimage_set,
    preservation_experiment,
    ramsey_refine,
    search_monochromatic,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "DELTA_DEPTH_CAP",
    "FS_LENGTH_CAP",
    "GaussInt",
    "GaussRational",
    "GaussSet",
    "IP_DEPTH_CAP",
    "ImageCertificate",
    "IprCertificate",
    "MatrixQi",
    "ParseError",
    "PsWitness",
    "SearchResult",
    "UNITS",
    "Window",
    "abundance_report",
    "as_seq",
    "box_points",
    "canonical_associate",
    "canonical_residue",
    "certify",
    "choose_prime_exceeding",
    "clear_denominators",
    "congruence_proofcheck",
    "congruent_mod",
    "contains_delta",
    "contains_ip",
    "delta",
    "div_rem",
    "divides",
    "exact_div",
    "find_obstruction",
    "format_matrix",
    "fs",
    "gcd",
    "is_gaussian_prime",
    "is_piecewise_syndetic",
    "is_rational_prime",
    "is_star_k",
    "is_syndetic",
    "is_thick",
    "parse_gauss_int",
    "parse_gauss_rational",
    "parse_matrix",
    "partial_sums",
    "point_key",
    "positivity_filter",
    "preimage_set",
    "preservation_experiment",
    "prime_with_norm_exceeding",
    "progression_matrix",
    "ramsey_refine",
    "residue_system",
    "search_monochromatic",
    "solve_all_ones",
    "verify_translation_identity",
]
