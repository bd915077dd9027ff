"""minorsmith: graph-minor computation engine and certification harness."""

from .graph import (
    Graph,
    Edit,
    SplitSpec,
    apply_edit,
    split_vertex,
    is_k_connected,
    is_internally_4_connected,
    bridges,
    structural_predicates,
    line_graph,
)
from .canon import (
    AutGroup,
    automorphism_group,
    are_isomorphic,
    canonical_form,
    orbit_representatives,
)
from .catalog import NamedGraph, builtin, builtin_graph, load_collection, validate
from .minors import (
    HamiltonCycle,
    MinorCertificate,
    SubdivisionMap,
    has_minor,
    has_topological_minor,
    is_hamiltonian,
    oracle_has_minor,
    verify_certificate,
)
from .splitter import (
    ExtensionStep,
    check_subdivision_promotion,
    enumerate_extensions,
    splitter_reach,
)
from .subdivision import (
    classify_bridges,
    enumerate_unstable_fragments,
    find_stable_subdivision,
    is_spanning,
)
from .lemmas import registry, verify as verify_statement, verify_all

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Edit",
    "SplitSpec",
    "apply_edit",
    "split_vertex",
    "is_k_connected",
    "is_internally_4_connected",
    "bridges",
    "structural_predicates",
    "line_graph",
    "AutGroup",
    "automorphism_group",
    "are_isomorphic",
    "canonical_form",
    "orbit_representatives",
    "NamedGraph",
    "builtin",
    "builtin_graph",
    "load_collection",
    "validate",
    "MinorCertificate",
    "SubdivisionMap",
    "HamiltonCycle",
    "has_minor",
    "has_topological_minor",
    "is_hamiltonian",
    "oracle_has_minor",
    "verify_certificate",
    "ExtensionStep",
    "enumerate_extensions",
    "splitter_reach",
    "check_subdivision_promotion",
    "enumerate_unstable_fragments",
    "classify_bridges",
    "find_stable_subdivision",
    "is_spanning",
    "registry",
    "verify_statement",
    "verify_all",
    "__version__",
]
