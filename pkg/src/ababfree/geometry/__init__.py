"""Exact planar geometry: curve families, lens elimination, compactification and stabbed disks."""

from .compact import (
    NotEvenError,
    PseudoDiskPolygon,
    boundary_intersections,
    compactify,
    evenize,
    is_even,
    point_in_polygon,
)
from .curves import (
    CurveFamily,
    DegeneratePosition,
    GeometryError,
    OverlapError,
    PointSet,
    PolylineCurve,
    crossing_count,
    crossings,
    hypergraph_from_curves,
)
from .disks import (
    Disk,
    StabbedDiskFamily,
    angular_order,
    enumerate_stabbed_disk_hypergraph,
    enumerate_stabbed_disks,
    hypergraph_from_stabbed_disks,
    stabbed_order,
    trace_hypergraph,
)
from .lenses import eliminate_empty_lenses, initial_curves, intersection_bound, realize_as_curves, total_crossings
from .rational import Q, fmt, q
from .svg import render_svg

__all__ = [
    "CurveFamily",
    "DegeneratePosition",
    "Disk",
    "GeometryError",
    "NotEvenError",
    "OverlapError",
    "PointSet",
    "PolylineCurve",
    "PseudoDiskPolygon",
    "Q",
    "StabbedDiskFamily",
    "angular_order",
    "boundary_intersections",
    "compactify",
    "crossing_count",
    "crossings",
    "eliminate_empty_lenses",
    "enumerate_stabbed_disk_hypergraph",
    "enumerate_stabbed_disks",
    "evenize",
    "fmt",
    "hypergraph_from_curves",
    "hypergraph_from_stabbed_disks",
    "initial_curves",
    "intersection_bound",
    "is_even",
    "point_in_polygon",
    "q",
    "realize_as_curves",
    "render_svg",
    "stabbed_order",
    "total_crossings",
    "trace_hypergraph",
]
