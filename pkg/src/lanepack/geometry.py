"""Axis-aligned geometric primitives and the leftmost-feasible-position solver.

All lane strategies reduce circle placement to a 1-D question: at a fixed
height inside a lane, what is the smallest x at which a circle of radius r
can sit without hitting an obstacle circle or a reserved vertical strip?
Each obstacle excludes a single open x-interval at that height, so the
solver is an exact interval-merge sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

# Global default tolerance (container units). Circles may touch exactly;
# penetration smaller than EPS is legal.
EPS = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float


@dataclass(frozen=True)
class CircleSpec:
    """An input circle: just a radius."""

    r: float

    def __post_init__(self):
        if not (self.r > 0 and math.isfinite(self.r)):
            raise ValueError(f"radius must be positive and finite, got {self.r}")

    @property
    def area(self) -> float:
        return math.pi * self.r * self.r


@dataclass(frozen=True)
class PlacedCircle:
    """A committed circle in container coordinates."""

    x: float
    y: float
    r: float
    seq: int
    lane_id: str
    class_index: int = -1

    @property
    def area(self) -> float:
        return math.pi * self.r * self.r


@dataclass(frozen=True)
class Rect:
    x0: float
    y0: float
    x1: float
    y1: float

    def __post_init__(self):
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(f"degenerate rectangle {self}")

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @property
    def area(self) -> float:
        return self.width * self.height

    def contains_point(self, x: float, y: float) -> bool:
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1


class Orientation(Enum):
    RIGHTWARDS = "rightwards"
    LEFTWARDS = "leftwards"
    UPWARDS = "upwards"
    DOWNWARDS = "downwards"


# Direction of the canonical u (length) and v (width) axes in the parent
# coordinate system, per orientation.  v always points from the side that
# plays the role of the canonical bottom.
_AXES = {
    Orientation.RIGHTWARDS: ((1, 0), (0, 1)),
    Orientation.LEFTWARDS: ((-1, 0), (0, 1)),
    Orientation.UPWARDS: ((0, 1), (1, 0)),
    Orientation.DOWNWARDS: ((0, -1), (1, 0)),
}


@dataclass(frozen=True)
class Frame:
    """Isometric map between a lane's canonical coordinates and the container.

    Canonical coordinates: u in [0, length] along the packing direction,
    v in [0, width] across the lane, (0, 0) at the corner where packing
    starts on the canonical bottom side.  The basis vectors are axis-aligned
    unit vectors, so composition stays exact.
    """

    origin: tuple[float, float]
    eu: tuple[int, int]
    ev: tuple[int, int]
    length: float
    width: float

    @staticmethod
    def from_rect(rect: Rect, orientation: Orientation) -> "Frame":
        (eux, euy), (evx, evy) = _AXES[orientation]
        if orientation in (Orientation.RIGHTWARDS, Orientation.LEFTWARDS):
            length, width = rect.width, rect.height
        else:
            length, width = rect.height, rect.width
        if width > length + EPS:
            raise ValueError(f"lane width {width} exceeds length {length}")
        # Canonical origin: corner at u=0, v=0.
        if orientation == Orientation.RIGHTWARDS:
            origin = (rect.x0, rect.y0)
        elif orientation == Orientation.LEFTWARDS:
            origin = (rect.x1, rect.y0)
        elif orientation == Orientation.UPWARDS:
            origin = (rect.x0, rect.y0)
        else:  # DOWNWARDS
            origin = (rect.x0, rect.y1)
        return Frame(origin, (eux, euy), (evx, evy), length, width)

    def to_container(self, u: float, v: float) -> tuple[float, float]:
        return (
            self.origin[0] + u * self.eu[0] + v * self.ev[0],
            self.origin[1] + u * self.eu[1] + v * self.ev[1],
        )

    def to_local(self, x, y):
        """Map container coordinates into the canonical frame.

        Works elementwise on numpy arrays.
        """
        dx = x - self.origin[0]
        dy = y - self.origin[1]
        u = dx * self.eu[0] + dy * self.eu[1]
        v = dx * self.ev[0] + dy * self.ev[1]
        return u, v

    def subframe(self, local_rect: Rect, orientation: Orientation) -> "Frame":
        """Frame of a sub-lane given by its rectangle in canonical coordinates."""
        inner = Frame.from_rect(local_rect, orientation)
        ox, oy = self.to_container(inner.origin[0], inner.origin[1])

        def _map_dir(d: tuple[int, int]) -> tuple[int, int]:
            return (
                d[0] * self.eu[0] + d[1] * self.ev[0],
                d[0] * self.eu[1] + d[1] * self.ev[1],
            )

        return Frame((ox, oy), _map_dir(inner.eu), _map_dir(inner.ev),
                     inner.length, inner.width)

    def bounding_rect(self) -> Rect:
        corners = [self.to_container(u, v)
                   for u in (0.0, self.length) for v in (0.0, self.width)]
        xs = [c[0] for c in corners]
        ys = [c[1] for c in corners]
        return Rect(min(xs), min(ys), max(xs), max(ys))


def circles_overlap(a: PlacedCircle, b: PlacedCircle, eps: float = EPS) -> bool:
    """True iff the disks properly overlap; touching is not overlap."""
    return math.hypot(a.x - b.x, a.y - b.y) < a.r + b.r - eps


def circle_in_rect(c: PlacedCircle, rect: Rect, eps: float = EPS) -> bool:
    """True iff the disk lies inside the rectangle with slack -eps per side."""
    return (c.x - c.r >= rect.x0 - eps and c.x + c.r <= rect.x1 + eps
            and c.y - c.r >= rect.y0 - eps and c.y + c.r <= rect.y1 + eps)


def forbidden_interval(obstacle: PlacedCircle, y: float, r: float
                       ) -> Optional[tuple[float, float]]:
    """Open x-interval excluded by one obstacle for a circle of radius r at height y."""
    rsum = r + obstacle.r
    dy = y - obstacle.y
    if abs(dy) >= rsum:
        return None
    d = math.sqrt(rsum * rsum - dy * dy)
    return (obstacle.x - d, obstacle.x + d)


def _obstacle_intervals(xs: np.ndarray, ys: np.ndarray, rs: np.ndarray,
                        y: float, r: float, eps: float) -> np.ndarray:
    """Forbidden open x-intervals, shrunk by eps/2 so tangency stays feasible.

    Half the tolerance keeps the committed penetration strictly below eps
    even after rounding.
    """
    if len(xs) == 0:
        return np.empty((0, 2))
    rsum = rs + r - 0.5 * eps
    dy = ys - y
    mask = np.abs(dy) < rsum
    if not mask.any():
        return np.empty((0, 2))
    rsum = rsum[mask]
    dy = dy[mask]
    d = np.sqrt(rsum * rsum - dy * dy)
    cx = xs[mask]
    return np.column_stack((cx - d, cx + d))


def leftmost_feasible(x_min: float, x_max: float, y: float, r: float,
                      obs_x: np.ndarray, obs_y: np.ndarray, obs_r: np.ndarray,
                      exclusions: Sequence[tuple[float, float]] = (),
                      floor: float = 0.0, eps: float = EPS) -> Optional[float]:
    """Smallest feasible x in [max(x_min, floor), x_max], or None.

    Feasible means: x avoids every obstacle's forbidden interval and
    [x - r, x + r] does not enter the interior of any exclusion interval.
    """
    lo = max(x_min, floor)
    if lo > x_max:
        return None
    intervals = _obstacle_intervals(obs_x, obs_y, obs_r, y, r, eps)
    extra = [(a - r + 0.5 * eps, b + r - 0.5 * eps) for a, b in exclusions]
    if extra:
        extra_arr = np.array(extra)
        extra_arr = extra_arr[extra_arr[:, 0] < extra_arr[:, 1]]
        if len(extra_arr):
            intervals = np.vstack((intervals, extra_arr)) if len(intervals) else extra_arr
    if len(intervals) == 0:
        return lo
    order = np.argsort(intervals[:, 0], kind="stable")
    x = lo
    for s, e in intervals[order]:
        if e <= x:
            continue
        if s >= x:
            break
        x = e
    return x if x <= x_max else None
