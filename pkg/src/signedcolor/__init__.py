"""Edge-coloring of signed multigraphs.

Constructive colorings within floor(3*Delta/2) colors for every signed
multigraph without negative loops, within Delta+1 colors for balanced ones
(exactly Delta when a matching leaves an even maximum degree), and an exact
brute-force chromatic index for small instances.
"""
from .bounds import (
    ColoringResult,
    chromatic_upper_bound,
    claim1_color,
    claim2_color,
    claim3_color,
    koenig_color,
    koenig_is_delta,
    shannon_color,
)
from .coloring import (
    Color,
    HalfEdgeColoring,
    Palette,
    color_circuit,
    color_layer,
    color_path,
    combine_colorings,
    kempe_resign,
    missing_colors,
    pair_self_inverse_classes,
    verify_coloring,
)
from .exceptions import (
    ColoringError,
    GraphFormatError,
    InstanceTooLargeError,
    NegativeLoopError,
    NotBalancedError,
    SignedColorError,
)
from .graph import (
    Circuit,
    Edge,
    HalfEdge,
    SignedGraph,
    build_graph,
    circuit_sign,
    degree_stats,
    enumerate_circuits,
    format_graph,
)
from .layers import LayerDecomposition, decompose_layers, eulerize
from .matching import matching_covering, matching_max_cover, maximum_matching
from .oracle import ChromaticReport, chromatic_index, feasible
from .signature import (
    BalanceWitness,
    is_antibalanced,
    is_balanced,
    make_edges_negative,
    resign,
    signatures_equivalent,
)

__version__ = "0.1.0"
