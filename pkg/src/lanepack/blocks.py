"""Dense/sparse/free block bookkeeping inside a medium lane.

A medium circle's center line splits the lane into blocks: two consecutive
centers bound a dense block, the last center opens a sparse block that
runs until the next medium circle caps it at its left tangent.  Tiny and
very tiny circles (classes >= 3) go into vertical sub-lanes placed inside
sparse blocks, or directly into the lane's free area, via a five-step
routine; when every step fails the whole lane closes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .classification import ClassTable
from .geometry import EPS, Orientation, Rect
from .lanes import LaneState, Packing, PlacedCircle, Strategy, slp_place

FREE = "free"
CLOSED = "closed"

_POS_TOL = 1e-12


def reservation_for(class_index: int) -> str:
    if class_index in (3, 4):
        return f"reserved_{class_index}"
    if class_index >= 5:
        return "reserved_ge5"
    raise ValueError(f"no reservation state for class {class_index}")


@dataclass
class VerticalLane:
    class_index: int
    x0: float  # host-canonical interval occupied by the lane
    x1: float
    lane: LaneState
    open: bool = True


@dataclass
class SparseBlock:
    owner_u: float  # center of the medium circle whose half it contains
    owner_r: float
    half_side: str  # 'bottom' or 'top', in host-canonical terms
    x_cap: float
    state: str = FREE
    vlanes: list[VerticalLane] = field(default_factory=list)

    @property
    def x_left(self) -> float:
        return self.owner_u

    @property
    def content_edge(self) -> float:
        edge = self.owner_u + self.owner_r
        for vl in self.vlanes:
            edge = max(edge, vl.x1)
        return edge


@dataclass
class DenseBlock:
    x_left: float
    x_right: float
    mixed: bool = False


@dataclass
class BlockLedger:
    host: LaneState
    table: ClassTable
    dense: list[DenseBlock] = field(default_factory=list)
    sparse: list[SparseBlock] = field(default_factory=list)
    free_vlanes: list[VerticalLane] = field(default_factory=list)
    all_vlanes: list[VerticalLane] = field(default_factory=list)
    current: Optional[SparseBlock] = None  # uncapped block of the last medium

    def frontier(self) -> float:
        """Right edge of all committed content in host-canonical x."""
        edge = 0.0
        for d in self.dense:
            edge = max(edge, d.x_right)
        for s in self.sparse:
            edge = max(edge, s.content_edge)
        for vl in self.all_vlanes:
            edge = max(edge, vl.x1)
        return edge

    def to_dict(self) -> dict:
        return {
            "dense": [{"x_left": d.x_left, "x_right": d.x_right,
                       "mixed": d.mixed} for d in self.dense],
            "sparse": [{"x_left": s.x_left, "x_cap": s.x_cap,
                        "state": s.state, "half_side": s.half_side,
                        "vlanes": [[vl.x0, vl.x1] for vl in s.vlanes]}
                       for s in self.sparse],
            "free_vlanes": [[vl.x0, vl.x1] for vl in self.free_vlanes],
        }


def on_medium_packed(ledger: BlockLedger, u: float, r: float,
                     half_side: str) -> None:
    """Update block structure after a medium circle landed at canonical u."""
    prev = ledger.current
    if prev is not None:
        if not prev.vlanes:
            ledger.sparse.remove(prev)
            ledger.dense.append(DenseBlock(prev.owner_u, u, mixed=False))
        else:
            prev.x_cap = u - r
            ledger.dense.append(DenseBlock(prev.owner_u, u, mixed=True))
    block = SparseBlock(owner_u=u, owner_r=r, half_side=half_side,
                        x_cap=ledger.host.length)
    ledger.sparse.append(block)
    ledger.current = block


def _leftmost_strip(start: float, cap: float, width: float,
                    intervals: list[tuple[float, float]]) -> Optional[float]:
    """Leftmost x >= start with [x, x+width] free of intervals and inside cap."""
    x = start
    for a, b in sorted(intervals):
        if b <= x + _POS_TOL:
            continue
        if a >= x + width - _POS_TOL:
            break
        x = b
    if x + width <= cap + _POS_TOL:
        return x
    return None


def _vlane_intervals(ledger: BlockLedger) -> list[tuple[float, float]]:
    return [(vl.x0, vl.x1) for vl in ledger.all_vlanes]


def vlane_position(ledger: BlockLedger, block: SparseBlock,
                   width: float) -> Optional[float]:
    """Leftmost feasible position for a new vertical lane inside a block."""
    return _leftmost_strip(block.owner_u + block.owner_r, block.x_cap,
                           width, _vlane_intervals(ledger))


def fit_in_block(ledger: BlockLedger, block: SparseBlock, width: float) -> bool:
    return vlane_position(ledger, block, width) is not None


def _eligible(block: SparseBlock, class_index: int) -> bool:
    return block.state in (FREE, reservation_for(class_index))


def _create_vlane(ledger: BlockLedger, class_index: int, x0: float,
                  orientation: Orientation) -> VerticalLane:
    host = ledger.host
    width = ledger.table.row(class_index).width
    rect = Rect(x0, 0.0, x0 + width, host.width)
    frame = host.frame.subframe(rect, orientation)
    n = len(ledger.all_vlanes)
    lane = LaneState(lane_id=f"{host.lane_id}:v{class_index}#{n}",
                     frame=frame, strategy=Strategy.SLP,
                     class_index=class_index)
    vl = VerticalLane(class_index=class_index, x0=x0, x1=x0 + width, lane=lane)
    ledger.all_vlanes.append(vl)
    host.exclusions.append((x0, x0 + width))
    return vl


def pack_small_class(ledger: BlockLedger, r: float, class_index: int,
                     seq: int, packing: Packing,
                     eps: float = EPS) -> Optional[PlacedCircle]:
    """Pack a class >= 3 circle via the five-step routine.

    Returns the placed circle, or None after closing the host lane.
    """
    if class_index < 3:
        raise ValueError(f"five-step routine only handles classes >= 3, "
                         f"got {class_index}")
    host = ledger.host
    width = ledger.table.row(class_index).width

    # Step 1: try the open vertical lane of this class, closing it on failure.
    for vl in ledger.all_vlanes:
        if vl.open and vl.class_index == class_index:
            circle = slp_place(vl.lane, r, seq, class_index, packing, eps)
            if circle is not None:
                return circle
            vl.open = False
            vl.lane.closed = True
            break

    # Step 2: close exhausted sparse blocks eligible for this class.
    for block in ledger.sparse:
        if _eligible(block, class_index) and not fit_in_block(ledger, block,
                                                              width):
            block.state = CLOSED

    # Step 3: open a new vertical lane inside the leftmost eligible block.
    for block in sorted(ledger.sparse, key=lambda s: s.owner_u):
        if not _eligible(block, class_index):
            continue
        pos = vlane_position(ledger, block, width)
        if pos is None:
            continue
        orientation = (Orientation.DOWNWARDS if block.half_side == "bottom"
                       else Orientation.UPWARDS)
        vl = _create_vlane(ledger, class_index, pos, orientation)
        block.vlanes.append(vl)
        if block.state == FREE:
            block.state = reservation_for(class_index)
        circle = slp_place(vl.lane, r, seq, class_index, packing, eps)
        if circle is not None:
            return circle
        # The fresh lane is obstructed by circles from other lanes.
        vl.open = False
        vl.lane.closed = True
        break

    # Step 4: place a vertical lane in the free area at the frontier.
    pos = _leftmost_strip(ledger.frontier(), host.length, width,
                          _vlane_intervals(ledger))
    if pos is not None:
        vl = _create_vlane(ledger, class_index, pos, Orientation.UPWARDS)
        ledger.free_vlanes.append(vl)
        circle = slp_place(vl.lane, r, seq, class_index, packing, eps)
        if circle is not None:
            return circle
        vl.open = False
        vl.lane.closed = True

    # Step 5: the lane is exhausted for this class; close it for good.
    host.closed = True
    return None
