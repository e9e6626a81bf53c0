"""Verification toolkit for two-dimensional shifts of finite type.

Basic sets of allowed 2x2 patterns (or edge tiles) induce strip
transition matrices whose primitivity, combined with finitely checkable
structure conditions, certifies topological mixing, block gluing
evidence, and strong specification.  A brute-force enumeration oracle
referees the matrix computations on small windows.
"""

__version__ = "0.1.0"

from .core import (
    BasicSet,
    CapExceeded,
    parse_basic_set,
    pattern_coords,
    pattern_from_coords,
    psi,
    serialize_basic_set,
    transition_pair,
    unpsi,
)
from .matrices import (
    CountMatrix,
    PrimitivityReport,
    is_N_primitive,
    primitivity_analysis,
)
from .transfer import (
    build_transition,
    elementary_pattern,
    transition_block,
    verify_reduction,
)
from .connect import (
    build_connecting,
    connecting_block,
    connector_entry,
    connector_entry_pattern,
    verify_connect_reduction,
)
from .structure import (
    corner_conditions,
    crisscross_closure,
    degeneracy_profile,
    infer_rectangle_extendability,
    is_crisscross_extendable,
    k_crisscross,
    r_extendability,
)
from .certify import (
    CertifyCaps,
    Verdict,
    block_gluing_verdict,
    find_commutative_pair,
    find_invariant_diagonal_cycle,
    mixing_verdict,
    primitivity_all_n_certificate,
    replay,
)
from .holefill import (
    check_hfc,
    check_hfc_k,
    strong_specification_verdict,
    ufp_corner_gluing_evidence,
)
from .edge import (
    edge_certificates,
    edge_family,
    edge_set_from_arrows,
    edge_transfer,
    verify_edge_reduction,
)
from .examples import EXAMPLES
from . import oracle

__all__ = [
    "BasicSet",
    "CapExceeded",
    "CertifyCaps",
    "CountMatrix",
    "EXAMPLES",
    "PrimitivityReport",
    "Verdict",
    "block_gluing_verdict",
    "build_connecting",
    "build_transition",
    "check_hfc",
    "check_hfc_k",
    "connecting_block",
    "connector_entry",
    "connector_entry_pattern",
    "corner_conditions",
    "crisscross_closure",
    "degeneracy_profile",
    "edge_certificates",
    "edge_family",
    "edge_set_from_arrows",
    "edge_transfer",
    "elementary_pattern",
    "find_commutative_pair",
    "find_invariant_diagonal_cycle",
    "infer_rectangle_extendability",
    "is_N_primitive",
    "is_crisscross_extendable",
    "k_crisscross",
    "mixing_verdict",
    "oracle",
    "parse_basic_set",
    "pattern_coords",
    "pattern_from_coords",
    "primitivity_all_n_certificate",
    "primitivity_analysis",
    "psi",
    "r_extendability",
    "replay",
    "serialize_basic_set",
    "strong_specification_verdict",
    "transition_block",
    "transition_pair",
    "unpsi",
    "verify_connect_reduction",
    "verify_edge_reduction",
    "verify_reduction",
]
