"""Exact overlap counting for pairs of simple polygons."""
from .bounds import BoundRecord, SceneReport, bounds, convex_value, verify_scene
from .constructions import (
    ConstructionSpec,
    Kind,
    UnsupportedParameterError,
    construct,
    convex_pair,
    saw_pair,
    special_pair,
)
from .formats import dumps_scene, loads_scene, read_scene, write_scene
from .geometry import (
    GeometryError,
    Location,
    MalformedInputError,
    Orientation,
    Point,
    Polygon,
    Segment,
    Violation,
    general_position,
    is_simple,
    orient,
    point_in_polygon,
    segment_intersection,
    signed_area,
)
from .oracle import oracle_count
from .overlap import (
    EdgeProvenance,
    EngineInvariantError,
    InapplicableInputError,
    Overlap,
    build_arrangement,
    count_components,
    overlaps,
    provenance_alternates,
    vertex_free_parity_holds,
)
from .perturbation import (
    Deformation,
    DeformationCertificate,
    PerturbationError,
    resolve_degeneracies,
    verify_certificate,
)
from .render import RenderStyle, render_svg
from .scene import DegenerateSceneError, Scene
from .search import SearchResult, hill_climb, random_search

__all__ = [
    "BoundRecord",
    "bounds",
    "build_arrangement",
    "construct",
    "ConstructionSpec",
    "convex_pair",
    "convex_value",
    "count_components",
    "Deformation",
    "DeformationCertificate",
    "DegenerateSceneError",
    "dumps_scene",
    "EdgeProvenance",
    "EngineInvariantError",
    "general_position",
    "GeometryError",
    "hill_climb",
    "InapplicableInputError",
    "is_simple",
    "Kind",
    "loads_scene",
    "Location",
    "MalformedInputError",
    "oracle_count",
    "orient",
    "Orientation",
    "Overlap",
    "overlaps",
    "PerturbationError",
    "Point",
    "point_in_polygon",
    "Polygon",
    "provenance_alternates",
    "random_search",
    "read_scene",
    "render_svg",
    "RenderStyle",
    "resolve_degeneracies",
    "saw_pair",
    "Scene",
    "SceneReport",
    "SearchResult",
    "Segment",
    "segment_intersection",
    "signed_area",
    "special_pair",
    "UnsupportedParameterError",
    "verify_certificate",
    "verify_scene",
    "vertex_free_parity_holds",
    "Violation",
    "write_scene",
]

__version__ = "0.1.0"
