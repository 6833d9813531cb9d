"""Double-sided lane packing: a medium lane plus two half-width small lanes.

The host lane takes medium circles (standard placement) and tiny/very-tiny
circles (via the block engine); the two small lanes partition the host
rectangle and are packed in the opposite direction.  A small circle goes
to whichever small lane ends up with the shorter packing length, ties to
the bottom lane.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .blocks import BlockLedger, on_medium_packed, pack_small_class
from .classification import ClassTable
from .geometry import EPS, Frame, Orientation, PlacedCircle, Rect
from .lanes import (LaneState, Packing, Strategy, commit, find_position,
                    metrics, packing_extent)


@dataclass
class DslpLane:
    lane_id: str
    host: LaneState
    ledger: BlockLedger
    top: LaneState
    bottom: LaneState
    table: ClassTable


@dataclass
class DslpMetrics:
    p_t: float
    p_b: float
    f_t: float
    f_b: float


def make_dslp(lane_id: str, rect: Rect, orientation: Orientation,
              table: ClassTable) -> DslpLane:
    frame = Frame.from_rect(rect, orientation)
    w, length = frame.width, frame.length
    host = LaneState(lane_id=f"{lane_id}:host", frame=frame,
                     strategy=Strategy.SLP, class_index=1)
    ledger = BlockLedger(host=host, table=table)
    top = LaneState(
        lane_id=f"{lane_id}:top",
        frame=frame.subframe(Rect(0.0, w / 2.0, length, w),
                             Orientation.LEFTWARDS),
        strategy=Strategy.SLP, class_index=2)
    bottom = LaneState(
        lane_id=f"{lane_id}:bottom",
        frame=frame.subframe(Rect(0.0, 0.0, length, w / 2.0),
                             Orientation.LEFTWARDS),
        strategy=Strategy.SLP, class_index=2)
    return DslpLane(lane_id=lane_id, host=host, ledger=ledger,
                    top=top, bottom=bottom, table=table)


def _length_after(lane: LaneState, u: float, r: float) -> float:
    extent = packing_extent(lane)
    if extent is None:
        return 2.0 * r
    return max(extent[1], u + r) - min(extent[0], u - r)


def dslp_pack(d: DslpLane, r: float, class_index: int, seq: int,
              packing: Packing, eps: float = EPS) -> Optional[PlacedCircle]:
    """Pack one circle; None means this lane could not take it.

    A class >= 3 failure closes the host lane (five-step routine, last
    step); medium and small failures leave the lane open.
    """
    if d.host.closed:
        return None
    if class_index == 1:
        pos = find_position(d.host, r, packing, eps)
        if pos is None:
            return None
        u, v = pos
        circle = commit(d.host, u, v, r, seq, class_index, packing)
        half_side = "bottom" if v <= d.host.width / 2.0 else "top"
        on_medium_packed(d.ledger, u, r, half_side)
        return circle
    if class_index >= 3:
        return pack_small_class(d.ledger, r, class_index, seq, packing, eps)
    # Class 2: tentatively place into both small lanes, keep the shorter one.
    # The small lanes honor the host's vertical sub-lane strips; their u
    # axis runs opposite to the host's, so the intervals mirror.
    ell = d.host.length
    strips = [(ell - vl.x1, ell - vl.x0) for vl in d.ledger.all_vlanes]
    d.top.exclusions = strips
    d.bottom.exclusions = list(strips)
    pos_top = find_position(d.top, r, packing, eps)
    pos_bottom = find_position(d.bottom, r, packing, eps)
    if pos_top is None and pos_bottom is None:
        return None
    if pos_bottom is None:
        lane, pos = d.top, pos_top
    elif pos_top is None:
        lane, pos = d.bottom, pos_bottom
    else:
        p_top = _length_after(d.top, pos_top[0], r)
        p_bottom = _length_after(d.bottom, pos_bottom[0], r)
        if p_bottom <= p_top:
            lane, pos = d.bottom, pos_bottom
        else:
            lane, pos = d.top, pos_top
    return commit(lane, pos[0], pos[1], r, seq, class_index, packing)


def host_extent(d: DslpLane) -> Optional[tuple[float, float]]:
    """Longitudinal extent of everything packed into the host lane itself,

    including circles inside vertical sub-lanes, in host-canonical x.
    """
    extents = []
    own = packing_extent(d.host)
    if own is not None:
        extents.append(own)
    for vl in d.ledger.all_vlanes:
        for p in vl.lane.placed:
            x, y = vl.lane.frame.to_container(p.u, p.v)
            u, _ = d.host.frame.to_local(x, y)
            extents.append((u - p.r, u + p.r))
    if not extents:
        return None
    return (min(e[0] for e in extents), max(e[1] for e in extents))


def dslp_metrics(d: DslpLane) -> DslpMetrics:
    extent = host_extent(d)
    p_host = 0.0 if extent is None else extent[1] - extent[0]
    p_top = metrics(d.top).packing_length
    p_bottom = metrics(d.bottom).packing_length
    length = d.host.length
    # The host stream and a small-lane stream may interleave once the lane
    # is nearly full; their combined longitudinal extent still cannot
    # exceed the lane, so the free length stays nonnegative.
    p_t = min(length, p_host + p_top)
    p_b = min(length, p_host + p_bottom)
    return DslpMetrics(p_t=p_t, p_b=p_b, f_t=length - p_t, f_b=length - p_b)


def occupied_area(d: DslpLane) -> float:
    total = metrics(d.host).occupied_area
    total += metrics(d.top).occupied_area
    total += metrics(d.bottom).occupied_area
    for vl in d.ledger.all_vlanes:
        total += metrics(vl.lane).occupied_area
    return total
