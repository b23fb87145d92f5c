"""polyvis: boundary Hamiltonian cycles of tower, pseudo-tower and
pseudo-triangle polygons from their visibility graphs, plus the exact
geometric oracle used to generate and check ground truth.
"""

from .graph import (
    CycleCandidate,
    Graph,
    GraphParseError,
    canonicalize,
    connected_components,
    induced_subgraph,
    is_connected,
    is_cycle_in_graph,
    parse_graph,
    serialize_graph,
)
from .tower import (
    Bordering,
    BorderingGraph,
    Leveling,
    NotTowerError,
    bordering_graph,
    check_strong_ordering,
    compute_leveling,
    enumerate_borderings,
    solve_tower,
    tower_hamiltonian,
    tower_top_candidates,
)
from .pseudotower import (
    NotPseudoTowerError,
    PseudoTowerSolution,
    extract_tail,
    solve_pseudo_tower,
)
from .pseudotriangle import (
    Chain,
    NotPseudoTriangleError,
    PartSolution,
    PseudoTriangleSolution,
    SplitChain,
    SplitDecomposition,
    apply_bordering_constraints,
    assemble_hamiltonian,
    chain_neighborhood,
    compute_split_chain,
    degenerate_candidates,
    extract_cap,
    solve as solve_pseudo_triangle,
    split_edge_candidates,
    split_parts,
    top_joint_candidates,
    verify_candidate,
    verify_cycle,
)
from .geometry import (
    Point,
    Polygon,
    PolygonError,
    PseudoTowerInstance,
    boundary_cycle,
    convex_vertex_indices,
    gen_pseudo_tower,
    gen_pseudo_triangle,
    gen_tower,
    parse_polygon,
    render_svg,
    segment_inside,
    visibility_graph,
    write_polygon,
)
from .kernels import ACTIVE_KERNEL

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_KERNEL",
    "Bordering",
    "BorderingGraph",
    "Chain",
    "CycleCandidate",
    "Graph",
    "GraphParseError",
    "Leveling",
    "NotPseudoTowerError",
    "NotPseudoTriangleError",
    "NotTowerError",
    "PartSolution",
    "Point",
    "Polygon",
    "PolygonError",
    "PseudoTowerInstance",
    "PseudoTowerSolution",
    "PseudoTriangleSolution",
    "SplitChain",
    "SplitDecomposition",
    "apply_bordering_constraints",
    "assemble_hamiltonian",
    "boundary_cycle",
    "bordering_graph",
    "compute_split_chain",
    "canonicalize",
    "chain_neighborhood",
    "check_strong_ordering",
    "compute_leveling",
    "connected_components",
    "convex_vertex_indices",
    "degenerate_candidates",
    "enumerate_borderings",
    "extract_cap",
    "extract_tail",
    "gen_pseudo_tower",
    "gen_pseudo_triangle",
    "gen_tower",
    "induced_subgraph",
    "is_connected",
    "is_cycle_in_graph",
    "parse_graph",
    "parse_polygon",
    "render_svg",
    "segment_inside",
    "serialize_graph",
    "solve_pseudo_tower",
    "solve_pseudo_triangle",
    "solve_tower",
    "split_edge_candidates",
    "split_parts",
    "top_joint_candidates",
    "tower_hamiltonian",
    "tower_top_candidates",
    "verify_candidate",
    "verify_cycle",
    "visibility_graph",
    "write_polygon",
]
