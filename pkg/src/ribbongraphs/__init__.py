"""Ribbon graphs, partial duality, and low-genus partial-dual decisions."""

from .core import (
    ArrowPresentation,
    RibbonGraph,
    RibbonGraphError,
    are_equivalent,
    bouquet,
    canonical_graph,
    find_isomorphism,
    flip_vertex,
    from_arrow_presentation,
    single_vertex,
)
from .pdual import genus_profile, geometric_dual, partial_dual
from .io import ParseError, load, parse_ribbon_graph, print_ribbon_graph
from .minors import (
    CONTRACT_EDGE,
    DELETE_EDGE,
    DELETE_VERTEX,
    MinorCertificate,
    has_minor,
    one_step_minors,
    replay,
    verify_certificate,
)
from .biseparation import (
    NOT_A_BISEPARATION,
    OTHER,
    PLANE,
    RP2,
    BiseparationCertificate,
    biseparation_kind,
    find_biseparation,
)
from .bouquet import (
    BouquetError,
    arc_labelling,
    find_obstruction_minor,
    interlaced,
    intersection_graph,
    minimal_odd_cycle,
    quotient_graph,
    split,
)
from .characterize import (
    characterize_graph,
    obstruction_search,
    pinned_obstructions,
    verify_characterization,
)
from .enumeration import (
    EnumerationSpec,
    bouquet_classes,
    connected_classes,
    disjoint_union,
    enumerate_classes,
)
from .knots import (
    DiagramError,
    all_a_ribbon_graph,
    gauss_to_pd,
    parse_gauss,
    parse_pd,
    print_gauss,
    print_pd,
    representable_in_rp3,
)

# importing the submodule of the same name rebinds the package attribute;
# the constructor wins
from .core import bouquet

__all__ = [
    "ArrowPresentation",
    "RibbonGraph",
    "RibbonGraphError",
    "are_equivalent",
    "bouquet",
    "canonical_graph",
    "find_isomorphism",
    "flip_vertex",
    "from_arrow_presentation",
    "single_vertex",
    "geometric_dual",
    "genus_profile",
    "partial_dual",
    "ParseError",
    "load",
    "parse_ribbon_graph",
    "print_ribbon_graph",
    "CONTRACT_EDGE",
    "DELETE_EDGE",
    "DELETE_VERTEX",
    "MinorCertificate",
    "has_minor",
    "one_step_minors",
    "replay",
    "verify_certificate",
    "NOT_A_BISEPARATION",
    "OTHER",
    "PLANE",
    "RP2",
    "BiseparationCertificate",
    "biseparation_kind",
    "find_biseparation",
    "BouquetError",
    "arc_labelling",
    "find_obstruction_minor",
    "interlaced",
    "intersection_graph",
    "minimal_odd_cycle",
    "quotient_graph",
    "split",
    "characterize_graph",
    "obstruction_search",
    "pinned_obstructions",
    "verify_characterization",
    "EnumerationSpec",
    "bouquet_classes",
    "connected_classes",
    "disjoint_union",
    "enumerate_classes",
    "DiagramError",
    "all_a_ribbon_graph",
    "gauss_to_pd",
    "parse_gauss",
    "parse_pd",
    "print_gauss",
    "print_pd",
    "representable_in_rp3",
]
