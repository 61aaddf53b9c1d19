"""Colouring certificates and structural checks for crown-free graph classes."""

from .certificate import (
    CLAW_FREE,
    CROWN_FORK,
    CROWN_P3P2,
    CROWN_P3P2_CONJECTURED,
    CROWN_P5,
    P3P2_CUBIC,
    BoundFunction,
    ColoredCertificate,
    layered_bound,
    validate_certificate,
)
from .colorers import (
    SCHEMES,
    by_components,
    color_claw_free,
    color_crown_fork,
    color_crown_p3p2,
    color_crown_p5,
    color_layered_generic,
)
from .errors import CrownFreeError
from .graph import Graph, complement, induced_subgraph, parse_graph6, write_graph6
from .harness import SweepSpec, SweepSummary, enumerate_graphs, ingest_graph6, random_graph, sweep
from .oracles import (
    chromatic_number,
    clique_number,
    color_perfect,
    find_odd_antihole,
    find_odd_hole,
    is_perfect,
    partition_testers,
)
from .patterns import classify, find_induced, is_free, pattern_catalog
from .structure import (
    build_partition,
    verify_hole_attachment,
    verify_structure_fork,
    verify_structure_p3p2,
)

__version__ = "0.1.0"

__all__ = [
    "CLAW_FREE",
    "CROWN_FORK",
    "CROWN_P3P2",
    "CROWN_P3P2_CONJECTURED",
    "CROWN_P5",
    "P3P2_CUBIC",
    "BoundFunction",
    "ColoredCertificate",
    "layered_bound",
    "validate_certificate",
    "SCHEMES",
    "by_components",
    "color_claw_free",
    "color_crown_fork",
    "color_crown_p3p2",
    "color_crown_p5",
    "color_layered_generic",
    "CrownFreeError",
    "Graph",
    "complement",
    "induced_subgraph",
    "parse_graph6",
    "write_graph6",
    "SweepSpec",
    "SweepSummary",
    "enumerate_graphs",
    "ingest_graph6",
    "random_graph",
    "sweep",
    "chromatic_number",
    "clique_number",
    "color_perfect",
    "find_odd_antihole",
    "find_odd_hole",
    "is_perfect",
    "partition_testers",
    "classify",
    "find_induced",
    "is_free",
    "pattern_catalog",
    "build_partition",
    "verify_hole_attachment",
    "verify_structure_fork",
    "verify_structure_p3p2",
]
