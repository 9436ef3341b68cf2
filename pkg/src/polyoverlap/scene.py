"""Scenes: an ordered pair of polygons with their general-position certificate."""
from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import (
    GeometryError,
    Polygon,
    ccw,
    check_polygon,
    common_scale,
    general_position_scaled,
    scaled_ints,
)


class DegenerateSceneError(GeometryError):
    """The scene is not in general position; run it through
    :func:`polyoverlap.perturbation.resolve_degeneracies` first."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        lines = "; ".join(v.describe() for v in self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        super().__init__(
            f"scene is not in general position: {lines}{more}; "
            "resolve it with polyoverlap.perturbation.resolve_degeneracies"
        )


@dataclass(frozen=True)
class Scene:
    """``P`` is the n-gon, ``Q`` the m-gon.  Both must be simple, CCW and
    free of straight-angle vertices; degenerate relative position is allowed
    and recorded in ``violations``."""

    P: Polygon
    Q: Polygon
    violations: tuple = field(init=False, compare=False)
    _scale: int = field(init=False, repr=False, compare=False)
    _ints: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_polygon(self.P, "P")
        check_polygon(self.Q, "Q")
        scale = common_scale(self.P, self.Q)
        Pi = scaled_ints(self.P, scale)
        Qi = scaled_ints(self.Q, scale)
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_ints", (Pi, Qi))
        object.__setattr__(self, "violations", tuple(general_position_scaled(Pi, Qi, scale)))

    @classmethod
    def from_points(cls, P, Q) -> "Scene":
        """Build a scene from vertex lists, fixing orientation to CCW."""
        return cls(ccw(Polygon(P)), ccw(Polygon(Q)))

    @property
    def general_position(self) -> bool:
        return not self.violations

    @property
    def n(self) -> int:
        return len(self.P)

    @property
    def m(self) -> int:
        return len(self.Q)

    def swapped(self) -> "Scene":
        return Scene(self.Q, self.P)

    def require_general_position(self) -> None:
        if self.violations:
            raise DegenerateSceneError(self.violations)

