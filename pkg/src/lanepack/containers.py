"""Online container drivers: the 1 x b rectangle and the unit square.

Both drivers are strictly online: circles are placed one at a time, never
moved, and the run stops at the first circle that cannot be placed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import bounds
from .classification import (ClassTable, TooLarge, TooSmall,
                             build_class_table, classify)
from .dslp import DslpLane, dslp_metrics, dslp_pack, make_dslp
from .geometry import EPS, Frame, Orientation, PlacedCircle, Rect
from .lanes import LaneState, Packing, Strategy, metrics, tlp_place

SQUARE_WIDTH_GENERAL = 0.288480
SQUARE_WIDTH_NO_TINY = 0.277927
NO_TINY_Q2 = 0.191578
NO_TINY_MIN_RADIUS = 0.026623

STATUS_ALL_PACKED = "all_packed"
STATUS_REJECTED = "rejected"


@dataclass(frozen=True)
class LaneInfo:
    """Serializable description of one lane, enough to rebuild its frame."""

    lane_id: str
    origin: tuple[float, float]
    eu: tuple[int, int]
    ev: tuple[int, int]
    length: float
    width: float
    strategy: str
    class_index: int

    @staticmethod
    def from_lane(lane: LaneState) -> "LaneInfo":
        f = lane.frame
        return LaneInfo(lane_id=lane.lane_id, origin=f.origin, eu=f.eu,
                        ev=f.ev, length=f.length, width=f.width,
                        strategy=lane.strategy.value,
                        class_index=lane.class_index)

    def frame(self) -> Frame:
        return Frame(origin=tuple(self.origin), eu=tuple(self.eu),
                     ev=tuple(self.ev), length=self.length, width=self.width)


@dataclass
class PackResult:
    status: str
    container: str  # 'square' or 'rect'
    mode: Optional[str]  # square packing mode, None for rect
    w: float  # medium lane width (1.0 for the rectangle)
    b: Optional[float]  # rectangle aspect, None for the square
    guarantee: float
    placements: list[PlacedCircle]
    lanes: list[LaneInfo]
    rejected_index: Optional[int] = None
    rejected_radius: Optional[float] = None
    per_lane: dict = field(default_factory=dict)
    eps: float = EPS

    @property
    def total_packed_area(self) -> float:
        return sum(c.area for c in self.placements)

    def to_json_dict(self) -> dict:
        out = {
            "status": self.status,
            "container": self.container,
            "mode": self.mode,
            "w": self.w,
            "b": self.b,
            "guarantee": self.guarantee,
            "eps": self.eps,
            "total_packed_area": self.total_packed_area,
            "placements": [
                {"i": c.seq, "x": c.x, "y": c.y, "r": c.r,
                 "class": c.class_index, "lane": c.lane_id}
                for c in self.placements
            ],
            "lanes": [
                {"id": li.lane_id, "origin": list(li.origin),
                 "eu": list(li.eu), "ev": list(li.ev),
                 "length": li.length, "width": li.width,
                 "strategy": li.strategy, "class": li.class_index}
                for li in self.lanes
            ],
            "per_lane": self.per_lane,
        }
        if self.rejected_index is not None:
            out["rejected_index"] = self.rejected_index
            out["rejected_radius"] = self.rejected_radius
        return out

    @staticmethod
    def from_json_dict(d: dict) -> "PackResult":
        placements = [
            PlacedCircle(x=p["x"], y=p["y"], r=p["r"], seq=p["i"],
                         lane_id=p["lane"], class_index=p["class"])
            for p in d["placements"]
        ]
        lanes = [
            LaneInfo(lane_id=li["id"], origin=tuple(li["origin"]),
                     eu=tuple(li["eu"]), ev=tuple(li["ev"]),
                     length=li["length"], width=li["width"],
                     strategy=li["strategy"], class_index=li["class"])
            for li in d["lanes"]
        ]
        return PackResult(
            status=d["status"], container=d["container"], mode=d.get("mode"),
            w=d["w"], b=d.get("b"), guarantee=d["guarantee"],
            placements=placements, lanes=lanes,
            rejected_index=d.get("rejected_index"),
            rejected_radius=d.get("rejected_radius"),
            per_lane=d.get("per_lane", {}), eps=d.get("eps", EPS))


def table_for(container: str, mode: Optional[str], w: float) -> ClassTable:
    if container == "rect":
        return build_class_table(1.0)
    if mode == "no_tiny":
        return build_class_table(w, q2_override=NO_TINY_Q2,
                                 min_radius=NO_TINY_MIN_RADIUS, large=True)
    return build_class_table(w, large=True)


def container_rect(result: PackResult) -> Rect:
    if result.container == "rect":
        return Rect(0.0, 0.0, result.b, 1.0)
    return Rect(0.0, 0.0, 1.0, 1.0)


def _check_radius(r: float) -> None:
    if not (isinstance(r, (int, float)) and math.isfinite(r) and r > 0):
        raise ValueError(f"radii must be positive finite numbers, got {r}")


class RectRun:
    """One online packing run into a 1 x b rectangle."""

    def __init__(self, b: float, eps: float = EPS):
        if not (b >= 1 and math.isfinite(b)):
            raise ValueError(f"aspect b must be >= 1, got {b}")
        self.b = b
        self.eps = eps
        self.table = build_class_table(1.0)
        self.packing = Packing()
        self.dslp: DslpLane = make_dslp(
            "L1", Rect(0.0, 0.0, b, 1.0), Orientation.RIGHTWARDS, self.table)

    def pack(self, radii: Sequence[float]) -> PackResult:
        status = STATUS_ALL_PACKED
        rejected_index = None
        rejected_radius = None
        for i, r in enumerate(radii):
            _check_radius(r)
            try:
                cls = classify(r, self.table)
            except (TooLarge, TooSmall):
                cls = None
            circle = None
            if cls is not None:
                circle = dslp_pack(self.dslp, r, cls, i, self.packing,
                                   self.eps)
            if circle is None:
                status = STATUS_REJECTED
                rejected_index = i
                rejected_radius = r
                break
        return self._result(status, rejected_index, rejected_radius)

    def _result(self, status, rejected_index, rejected_radius) -> PackResult:
        d = self.dslp
        lanes = [LaneInfo.from_lane(d.host), LaneInfo.from_lane(d.top),
                 LaneInfo.from_lane(d.bottom)]
        lanes += [LaneInfo.from_lane(vl.lane) for vl in d.ledger.all_vlanes]
        m = dslp_metrics(d)
        per_lane = {
            d.lane_id: {
                "n": len(self.packing), "p_t": m.p_t, "p_b": m.p_b,
                "closed": d.host.closed,
                "blocks": d.ledger.to_dict(),
            }
        }
        return PackResult(
            status=status, container="rect", mode=None, w=1.0, b=self.b,
            guarantee=bounds.guarantee_rect(self.b),
            placements=list(self.packing.circles), lanes=lanes,
            rejected_index=rejected_index, rejected_radius=rejected_radius,
            per_lane=per_lane, eps=self.eps)


def square_layout(w: float) -> dict[str, tuple[Rect, Orientation]]:
    """Lane rectangles and orientations for the unit square, given the

    medium lane width w.  The four medium lanes spiral around the border;
    the large lane is the bottom slab of height 1 - w.
    """
    if not (0 < w < 0.5):
        raise ValueError(f"lane width must be in (0, 0.5), got {w}")
    return {
        "L0": (Rect(0.0, 0.0, 1.0, 1.0 - w), Orientation.LEFTWARDS),
        "L1": (Rect(0.0, 1.0 - w, 1.0, 1.0), Orientation.RIGHTWARDS),
        "L2": (Rect(1.0 - w, 0.0, 1.0, 1.0 - w), Orientation.DOWNWARDS),
        "L3": (Rect(0.0, 0.0, 1.0 - w, w), Orientation.RIGHTWARDS),
        "L4": (Rect(0.0, w, w, 1.0 - w), Orientation.UPWARDS),
    }


class SquareRun:
    """One online packing run into the unit square."""

    def __init__(self, mode: str = "general", eps: float = EPS):
        if mode not in ("general", "no_tiny"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.eps = eps
        self.w = (SQUARE_WIDTH_GENERAL if mode == "general"
                  else SQUARE_WIDTH_NO_TINY)
        self.table = table_for("square", mode, self.w)
        self.packing = Packing()
        layout = square_layout(self.w)
        rect0, orient0 = layout["L0"]
        self.large_lane = LaneState(
            lane_id="L0", frame=Frame.from_rect(rect0, orient0),
            strategy=Strategy.TLP, class_index=0)
        self.medium_lanes: list[DslpLane] = [
            make_dslp(name, layout[name][0], layout[name][1], self.table)
            for name in ("L1", "L2", "L3", "L4")
        ]

    def pack(self, radii: Sequence[float]) -> PackResult:
        status = STATUS_ALL_PACKED
        rejected_index = None
        rejected_radius = None
        for i, r in enumerate(radii):
            _check_radius(r)
            if self.mode == "no_tiny" and r < NO_TINY_MIN_RADIUS:
                raise ValueError(
                    f"radius {r} below the no-tiny minimum "
                    f"{NO_TINY_MIN_RADIUS} (input {i})")
            if not self._pack_one(r, i):
                status = STATUS_REJECTED
                rejected_index = i
                rejected_radius = r
                break
        return self._result(status, rejected_index, rejected_radius)

    def _pack_one(self, r: float, seq: int) -> bool:
        try:
            cls = classify(r, self.table)
        except (TooLarge, TooSmall):
            return False
        if cls == 0:
            return tlp_place(self.large_lane, r, seq, 0, self.packing,
                             self.eps) is not None
        for d in self.medium_lanes:
            if d.host.closed:
                continue
            if dslp_pack(d, r, cls, seq, self.packing, self.eps) is not None:
                return True
        return False

    def _result(self, status, rejected_index, rejected_radius) -> PackResult:
        lanes = [LaneInfo.from_lane(self.large_lane)]
        per_lane = {
            "L0": {"n": len(self.large_lane.placed),
                   "p": metrics(self.large_lane).packing_length},
        }
        for d in self.medium_lanes:
            lanes += [LaneInfo.from_lane(d.host), LaneInfo.from_lane(d.top),
                      LaneInfo.from_lane(d.bottom)]
            lanes += [LaneInfo.from_lane(vl.lane)
                      for vl in d.ledger.all_vlanes]
            m = dslp_metrics(d)
            per_lane[d.lane_id] = {
                "p_t": m.p_t, "p_b": m.p_b, "closed": d.host.closed,
                "blocks": d.ledger.to_dict(),
            }
        return PackResult(
            status=status, container="square", mode=self.mode, w=self.w,
            b=None, guarantee=bounds.guarantee_square(self.mode),
            placements=list(self.packing.circles), lanes=lanes,
            rejected_index=rejected_index, rejected_radius=rejected_radius,
            per_lane=per_lane, eps=self.eps)


def pack_rect_online(b: float, radii: Iterable[float],
                     eps: float = EPS) -> PackResult:
    return RectRun(b, eps).pack(list(radii))


def pack_square_online(mode: str, radii: Iterable[float],
                       eps: float = EPS) -> PackResult:
    return SquareRun(mode, eps).pack(list(radii))
