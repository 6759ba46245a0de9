"""Boolean function sensitivity laboratory.

Constructions with extreme sensitivity profiles, exact complexity measures,
spectral sensitivity solvers, and verification suites tying them together.
"""

from .core import (
    ArityError,
    BooleanFunction,
    CapExceeded,
    CertificateCollection,
    PartialAssignment,
    TruthTable,
    flip,
    point_bits,
    point_from_bits,
    satisfies,
)
from .codes import HammingCode
from .constructions import (
    ConstructionMeta,
    address_fn,
    chaf,
    data_compose,
    desensitize,
    from_descriptor,
    haf,
    maf,
    to_descriptor,
    tradeoff,
    tradeoff_profile,
)
from .measures import (
    Component,
    ConvergenceError,
    MeasureEntry,
    MeasureReport,
    SensitivityGraph,
    SpectralResult,
    Uc1Result,
    c0,
    c1,
    certificate_complexity_at,
    classify_component,
    compute_measures,
    degree,
    graph_dot_text,
    graph_edges_text,
    mobius_coefficients,
    s,
    s0,
    s1,
    sensitivity_at,
    spectral_sensitivity,
    two_layer_star_adjacency,
    two_layer_star_lambda,
    uc1,
)
from .verify import (
    ClaimResult,
    all_pass,
    claims_to_csv,
    claims_to_json,
    verify_desensitization,
    verify_edge_bound,
    verify_lemma_chain,
    verify_lemma_chain_random,
    verify_maf_proposition,
    verify_simon,
    verify_subgraph_lemma,
    verify_theorem1,
    verify_tradeoff,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "BooleanFunction",
    "CapExceeded",
    "CertificateCollection",
    "ClaimResult",
    "Component",
    "ConstructionMeta",
    "ConvergenceError",
    "HammingCode",
    "MeasureEntry",
    "MeasureReport",
    "PartialAssignment",
    "SensitivityGraph",
    "SpectralResult",
    "TruthTable",
    "Uc1Result",
    "address_fn",
    "all_pass",
    "c0",
    "c1",
    "certificate_complexity_at",
    "chaf",
    "claims_to_csv",
    "claims_to_json",
    "classify_component",
    "compute_measures",
    "data_compose",
    "degree",
    "desensitize",
    "flip",
    "from_descriptor",
    "graph_dot_text",
    "graph_edges_text",
    "haf",
    "maf",
    "mobius_coefficients",
    "point_bits",
    "point_from_bits",
    "s",
    "s0",
    "s1",
    "satisfies",
    "sensitivity_at",
    "spectral_sensitivity",
    "to_descriptor",
    "tradeoff",
    "tradeoff_profile",
    "two_layer_star_adjacency",
    "two_layer_star_lambda",
    "uc1",
    "verify_desensitization",
    "verify_edge_bound",
    "verify_lemma_chain",
    "verify_lemma_chain_random",
    "verify_maf_proposition",
    "verify_simon",
    "verify_subgraph_lemma",
    "verify_theorem1",
    "verify_tradeoff",
]
