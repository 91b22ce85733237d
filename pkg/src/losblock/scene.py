"""Room, ceiling access points, communication-floor receiver grid and the
receiver-relative disc occluder."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .geometry import Disc, Point3

DEFAULT_AP_POSITIONS = (
    (1.0, 1.0, 3.0),
    (1.0, 3.0, 3.0),
    (1.0, 5.0, 3.0),
    (1.0, 7.0, 3.0),
    (3.0, 1.0, 3.0),
    (3.0, 3.0, 3.0),
    (3.0, 5.0, 3.0),
    (3.0, 7.0, 3.0),
)

_DIVISIBILITY_RTOL = 1e-9


class ConfigurationError(ValueError):
    pass


def _positive(name, value):
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise ConfigurationError(f"{name} must be > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class Room:
    width_x: float = 4.0
    length_y: float = 8.0
    height_z: float = 3.0

    def __post_init__(self):
        for name in ("width_x", "length_y", "height_z"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))

    def contains(self, p: Point3) -> bool:
        return 0 <= p.x <= self.width_x and 0 <= p.y <= self.length_y and 0 <= p.z <= self.height_z


@dataclass(frozen=True)
class AccessPoint:
    index: int
    position: Point3


@dataclass(frozen=True)
class ApLayout:
    aps: tuple[AccessPoint, ...]

    def __post_init__(self):
        aps = tuple(self.aps)
        if not aps:
            raise ConfigurationError("AP layout is empty")
        for expected, ap in enumerate(aps, start=1):
            if ap.index != expected:
                raise ConfigurationError(
                    f"AP indices must be 1..N in order; position {expected} has index {ap.index}"
                )
        object.__setattr__(self, "aps", aps)

    @classmethod
    def from_positions(cls, positions: Iterable[Sequence[float]]) -> "ApLayout":
        return cls(tuple(AccessPoint(i, Point3(*p)) for i, p in enumerate(positions, start=1)))

    @classmethod
    def default(cls) -> "ApLayout":
        return cls.from_positions(DEFAULT_AP_POSITIONS)

    def __len__(self):
        return len(self.aps)

    def __iter__(self) -> Iterator[AccessPoint]:
        return iter(self.aps)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(ap.index for ap in self.aps)

    def position(self, index: int) -> Point3:
        if not 1 <= index <= len(self.aps):
            raise KeyError(index)
        return self.aps[index - 1].position

    def is_default(self) -> bool:
        return tuple(tuple(ap.position) for ap in self.aps) == DEFAULT_AP_POSITIONS


@dataclass(frozen=True)
class ReceiverGrid:
    cf_height: float
    spacing: float
    points: tuple[Point3, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[Point3]:
        return iter(self.points)


def _cell_count(extent: float, spacing: float, axis: str) -> int:
    ratio = extent / spacing
    n = round(ratio)
    if n < 1 or abs(ratio - n) > _DIVISIBILITY_RTOL * ratio:
        raise ConfigurationError(
            f"spacing {spacing!r} does not divide room {axis} extent {extent!r}"
        )
    return n


def generate_grid(room: Room, cf_height: float = 1.0, spacing: float = 0.25) -> ReceiverGrid:
    """Cell-centred receiver grid on the communication floor.

    Points are ordered with y varying fastest, then x.
    """
    spacing = _positive("spacing", spacing)
    cf_height = float(cf_height)
    nx = _cell_count(room.width_x, spacing, "x")
    ny = _cell_count(room.length_y, spacing, "y")
    half = spacing / 2
    points = tuple(
        Point3(half + i * spacing, half + j * spacing, cf_height)
        for i in range(nx)
        for j in range(ny)
    )
    return ReceiverGrid(cf_height, spacing, points)


@dataclass(frozen=True)
class DiscSpec:
    """Occluder placement relative to a receiver: ``radius``, ``height``
    above the communication floor and ``distance`` along +y."""

    radius: float
    height: float
    distance: float

    def __post_init__(self):
        for name in ("radius", "height", "distance"):
            value = float(getattr(self, name))
            if not (math.isfinite(value) and value >= 0):
                raise ConfigurationError(f"{name} must be finite and >= 0, got {value!r}")
            object.__setattr__(self, name, value)


def instantiate_disc(spec: DiscSpec, receiver: Point3) -> Disc:
    # no clamping: the disc may overhang the walls
    center = Point3(receiver.x, receiver.y + spec.distance, receiver.z + spec.height)
    return Disc(center, spec.radius)


@dataclass(frozen=True)
class Scene:
    room: Room
    aps: ApLayout
    grid: ReceiverGrid

    def __post_init__(self):
        if not 0 <= self.grid.cf_height < self.room.height_z:
            raise ConfigurationError(
                f"cf_height {self.grid.cf_height!r} must lie in [0, {self.room.height_z!r})"
            )
        for ap in self.aps:
            p = ap.position
            if not self.room.contains(p):
                raise ConfigurationError(f"AP {ap.index} at {tuple(p)} lies outside the room")
            if p.z != self.room.height_z:
                raise ConfigurationError(
                    f"AP {ap.index} must be ceiling-mounted at z={self.room.height_z!r}, got {p.z!r}"
                )


def build_scene(
    room: Room | None = None,
    cf_height: float = 1.0,
    spacing: float = 0.25,
    ap_positions: Iterable[Sequence[float]] | None = None,
) -> Scene:
    room = room or Room()
    layout = ApLayout.default() if ap_positions is None else ApLayout.from_positions(ap_positions)
    return Scene(room, layout, generate_grid(room, cf_height, spacing))


def build_default_scene() -> Scene:
    """4 x 8 x 3 m room, eight ceiling APs, 512 receivers at 1 m."""
    return build_scene()
