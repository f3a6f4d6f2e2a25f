"""Certified 3-coloring of planar graphs with few triangles, and the tools
to check the underlying theorems exhaustively on small graphs."""

from threecolor._kernels import BACKEND
from threecolor.colorer import (
    BudgetExceeded,
    Coloring,
    chromatic_number,
    enumerate_3_colorings,
    enumerate_colorings,
    extend_precoloring,
    find_k_coloring,
    is_k_colorable,
)
from threecolor.critical import (
    BoundViolation,
    CriticalityReport,
    extract_4_critical_subgraph,
    is_4_critical,
    ky_bound,
)
from threecolor.embedding import (
    Face,
    NonplanarWitness,
    RotationEmbedding,
    embed_planar,
    euler_characteristic,
    faces,
    is_contractible,
    is_planar,
)
from threecolor.graph import (
    Graph,
    canonical_key,
    identify,
    parse_graph6,
    triangle_count,
    write_graph6,
)
from threecolor.reductions import (
    ReductionTrace,
    SafeIdentify,
    Witness,
    analyze_quad_face,
    lift_coloring,
    reduce_quad_faces,
)
from threecolor.theorems import (
    TheoremVerdict,
    color_plus_apex,
    color_plus_edge,
    color_three_triangles,
    extend_face_precoloring,
    extend_two_vertex_precoloring,
    grotzsch_color,
    verify_456,
    verify_projective,
)

__version__ = "0.1.0"
