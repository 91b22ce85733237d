"""Per-link and per-receiver blockage, and percentage blockage over the grid."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .allocation import Allocation
from .geometry import Disc, Point3, Segment, segment_disc_intersection
from .scene import DiscSpec, Scene


@dataclass(frozen=True)
class PercentBlockage:
    blocked: int
    total: int

    @property
    def value(self) -> float:
        return 100 * self.blocked / self.total

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class BlockageMap:
    entries: tuple[tuple[Point3, bool], ...]

    def __len__(self):
        return len(self.entries)

    def percentage(self) -> PercentBlockage:
        return PercentBlockage(sum(1 for _, b in self.entries if b), len(self.entries))


def link_blocked(receiver: Point3, ap: Point3, disc: Disc) -> bool:
    return segment_disc_intersection(Segment(receiver, ap), disc).blocked


def relative_link_blocked(receiver: Point3, ap: Point3, spec: DiscSpec) -> bool:
    """Same verdict as ``link_blocked`` with the disc from ``instantiate_disc``,
    evaluated in receiver-relative coordinates.

    Never forming the absolute disc centre avoids the rounding in
    ``receiver.y + distance``, so a rim through the receiver (h=0, d=r)
    is exactly tangent and therefore blocked.
    """
    dz = ap.z - receiver.z
    if dz == 0.0:
        return False
    t = spec.height / dz
    if not 0.0 <= t < 1.0:
        return False
    ox = t * (ap.x - receiver.x)
    oy = t * (ap.y - receiver.y) - spec.distance
    return math.hypot(ox, oy) <= spec.radius


def _all_links_blocked(receiver: Point3, ap_positions, spec: DiscSpec) -> bool:
    return all(relative_link_blocked(receiver, ap, spec) for ap in ap_positions)


def _positions(alloc: Allocation, scene: Scene) -> list[Point3]:
    alloc.check(scene.aps)
    return [scene.aps.position(i) for i in alloc.ap_indices]


def receiver_blocked(receiver: Point3, alloc: Allocation, spec: DiscSpec, scene: Scene) -> bool:
    """True iff every allocated link is occluded; one surviving link serves the user."""
    return _all_links_blocked(receiver, _positions(alloc, scene), spec)


def blockage_map(scene: Scene, alloc: Allocation, spec: DiscSpec) -> BlockageMap:
    aps = _positions(alloc, scene)
    return BlockageMap(tuple((p, _all_links_blocked(p, aps, spec)) for p in scene.grid))


def percentage_blockage(scene: Scene, alloc: Allocation, spec: DiscSpec) -> PercentBlockage:
    aps = _positions(alloc, scene)
    count = sum(1 for p in scene.grid if _all_links_blocked(p, aps, spec))
    return PercentBlockage(count, len(scene.grid))
