"""Interval geometry with three-valued, proof-carrying predicates."""

from . import _euclid
from ._euclid import (
    Csp,
    Disabled,
    Interval,
    Line2,
    Line3,
    Plane,
    Point2,
    Point3,
    Status,
    Truth,
    ScriptError,
    ValidationError,
    Vec3,
    common_perpendicular,
    div_rel,
    format_interval,
    intersect,
    in_plane,
    line_in_plane,
    line_through,
    lines_intersect,
    meet_line_plane,
    meet_planes,
    midpoint,
    on_line,
    parallel,
    perpendicular_through,
    perpendicular_to_plane,
    plane_from_point_line,
    points_equal,
    run_script,
    same_side,
    check_script,
)

__version__ = _euclid.__version__

__all__ = [name for name in dir() if not name.startswith("_")]
