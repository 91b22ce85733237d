"""Points, line-of-sight segments and horizontal discs.

All comparisons are plain floating point; there is no epsilon anywhere in
this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional


class InvalidInputError(ValueError):
    pass


@dataclass(frozen=True)
class Point3:
    """A position in room coordinates, meters."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidInputError(f"Point3.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def translated(self, dx: float, dy: float, dz: float) -> "Point3":
        return Point3(self.x + dx, self.y + dy, self.z + dz)


@dataclass(frozen=True)
class Segment:
    """Line-of-sight segment from receiver ``a`` to access point ``b``."""

    a: Point3
    b: Point3

    def __post_init__(self):
        if self.a == self.b:
            raise InvalidInputError("degenerate segment: endpoints coincide")

    def at(self, t: float) -> Point3:
        a, b = self.a, self.b
        return Point3(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z))


@dataclass(frozen=True)
class Disc:
    """Opaque horizontal disc (normal along +z)."""

    center: Point3
    radius: float

    def __post_init__(self):
        r = float(self.radius)
        if not (math.isfinite(r) and r >= 0):
            raise InvalidInputError(f"disc radius must be finite and >= 0, got {self.radius!r}")
        object.__setattr__(self, "radius", r)


class Occlusion(NamedTuple):
    blocked: bool
    hit_point: Optional[Point3] = None

    def __bool__(self):
        return self.blocked


_CLEAR = Occlusion(False, None)


def plane_offset(seg: Segment, disc: Disc) -> Optional[tuple[float, float, float]]:
    """Return ``(t, ox, oy)`` where the segment meets the disc plane, or None.

    ``t`` is restricted to [0, 1): the receiver end counts, the AP end
    does not. ``(ox, oy)`` is the horizontal offset of the crossing from
    the disc centre. The offset is accumulated from ``a - center`` so that
    mirrored geometry produces exactly negated offsets.
    """
    a, b, c = seg.a, seg.b, disc.center
    dz = b.z - a.z
    if dz == 0.0:
        # horizontal segment: either never reaches the plane or lies in it
        return None
    t = (c.z - a.z) / dz
    if not 0.0 <= t < 1.0:
        return None
    ox = (a.x - c.x) + t * (b.x - a.x)
    oy = (a.y - c.y) + t * (b.y - a.y)
    return t, ox, oy


def segment_disc_intersection(seg: Segment, disc: Disc) -> Occlusion:
    """Test whether ``disc`` occludes the segment.

    Tangency (offset equal to the radius) is reported as blocked.
    """
    crossing = plane_offset(seg, disc)
    if crossing is None:
        return _CLEAR
    t, ox, oy = crossing
    if math.hypot(ox, oy) > disc.radius:
        return _CLEAR
    a, b = seg.a, seg.b
    hit = Point3(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), disc.center.z)
    return Occlusion(True, hit)
