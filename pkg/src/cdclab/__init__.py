"""Combinatorial maps, planar-graph surgeries, and circuit double covers."""

from .apollonian import (
    ClassificationReport,
    EdgeClass,
    Triangle,
    apollonian_dual,
    check_edge_classification,
    generate_apollonian,
    is_apollonian,
    random_stacks,
    separating_triangles,
)
from .cdc import (
    CircuitDoubleCover,
    CircuitReport,
    CoverReport,
    EnumerationResult,
    GenusReport,
    OrientedCover,
    TranslationReport,
    check_orientability,
    enumerate_covers,
    facial_cover,
    genus,
    require_complete,
    translate_cover,
    validate_circuit,
    validate_cover,
)
from .errors import (
    BadSelector,
    CdcLabError,
    CorrespondenceMismatch,
    Disconnected,
    EdgeLimitExceeded,
    FaceNotInMap,
    InvalidCover,
    MapError,
    NonPlanarEmbedding,
    NonSymmetricAdjacency,
    NotApollonian,
    NotSimple,
    NotSimpleDual,
    NotThreeConnected,
    OddCharacteristic,
    OddEulerDefect,
    TimeBudgetExceeded,
    TooLarge,
    TooSmall,
    TranslationNotACover,
    UnknownEdge,
    VertexNotInMap,
)
from .iso import (
    SquareReport,
    cross_check_isomorphism,
    graph_canonical_code,
    graphs_isomorphic,
    map_canonical_code,
    maps_isomorphic,
    verify_square,
)
from .planar_map import (
    Face,
    PlanarMap,
    SimpleGraph,
    dualize,
    euler_genus,
    from_rotation,
    is_3_connected,
    mirror,
    trace_faces,
    underlying_graph,
)
from .surgery import (
    Correspondence,
    augment_face,
    complete_augmentation,
    complete_truncation,
    truncate_vertex,
)

__all__ = [
    "BadSelector",
    "CdcLabError",
    "CircuitDoubleCover",
    "CircuitReport",
    "ClassificationReport",
    "Correspondence",
    "CorrespondenceMismatch",
    "CoverReport",
    "Disconnected",
    "EdgeClass",
    "EdgeLimitExceeded",
    "EnumerationResult",
    "Face",
    "FaceNotInMap",
    "GenusReport",
    "InvalidCover",
    "MapError",
    "NonPlanarEmbedding",
    "NonSymmetricAdjacency",
    "NotApollonian",
    "NotSimple",
    "NotSimpleDual",
    "NotThreeConnected",
    "OddCharacteristic",
    "OddEulerDefect",
    "OrientedCover",
    "PlanarMap",
    "SimpleGraph",
    "SquareReport",
    "TimeBudgetExceeded",
    "TooLarge",
    "TooSmall",
    "TranslationNotACover",
    "TranslationReport",
    "Triangle",
    "UnknownEdge",
    "VertexNotInMap",
    "apollonian_dual",
    "augment_face",
    "check_edge_classification",
    "check_orientability",
    "complete_augmentation",
    "complete_truncation",
    "cross_check_isomorphism",
    "dualize",
    "enumerate_covers",
    "euler_genus",
    "facial_cover",
    "from_rotation",
    "generate_apollonian",
    "genus",
    "graph_canonical_code",
    "graphs_isomorphic",
    "is_3_connected",
    "is_apollonian",
    "map_canonical_code",
    "maps_isomorphic",
    "mirror",
    "random_stacks",
    "require_complete",
    "separating_triangles",
    "trace_faces",
    "translate_cover",
    "truncate_vertex",
    "underlying_graph",
    "validate_circuit",
    "validate_cover",
    "verify_square",
]

__version__ = "0.1.0"
