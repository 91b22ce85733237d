"""AP allocations: a serving link plus optional protection links."""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable

from .scene import ApLayout


class InvalidAllocationError(ValueError):
    pass


class UnsupportedPresetError(ValueError):
    pass


@dataclass(frozen=True)
class Allocation:
    label: str
    ap_indices: tuple[int, ...]

    def __post_init__(self):
        indices = tuple(self.ap_indices)
        if not indices:
            raise InvalidAllocationError(f"allocation {self.label!r} is empty")
        for i in indices:
            if isinstance(i, bool) or not isinstance(i, int) or i < 1:
                raise InvalidAllocationError(
                    f"allocation {self.label!r}: AP index {i!r} is not a positive integer"
                )
        if len(set(indices)) != len(indices):
            raise InvalidAllocationError(f"allocation {self.label!r} has duplicate AP indices")
        object.__setattr__(self, "ap_indices", indices)

    def check(self, layout: ApLayout) -> None:
        missing = [i for i in self.ap_indices if i > len(layout)]
        if missing:
            raise InvalidAllocationError(
                f"allocation {self.label!r} references unknown AP index {missing[0]}"
            )


# Concrete index sets for the default 8-AP layout. APs 1-4 sit on x=1 and
# 5-8 on x=3, y increasing 1, 3, 5, 7 within each column.
_FIXED_PRESETS = {
    "adjacent_pair": (1, 2),
    "middle_plus_corner": (3, 5),
    "quad_one_side": (1, 2, 3, 4),
    "quad_centre": (2, 3, 6, 7),
    "quad_centre_corner": (1, 4, 6, 7),
    "all": (1, 2, 3, 4, 5, 6, 7, 8),
}
PRESET_NAMES = (
    "single(i)",
    "adjacent_pair",
    "max_separated_pair",
    "middle_plus_corner",
    "quad_one_side",
    "quad_centre",
    "quad_centre_corner",
    "all",
)
_SINGLE = re.compile(r"single\((\d+)\)\Z")


def is_preset_name(name: str) -> bool:
    return name in _FIXED_PRESETS or name == "max_separated_pair" or bool(_SINGLE.match(name))


def resolve_preset(name: str, layout: ApLayout) -> Allocation:
    """Resolve a strategy preset name to its index set; the label is the name."""
    if not layout.is_default():
        raise UnsupportedPresetError(f"preset {name!r} is only defined on the default 8-AP layout")
    m = _SINGLE.match(name)
    if m:
        index = int(m.group(1))
        alloc = Allocation(name, (index,))
    elif name == "max_separated_pair":
        alloc = Allocation(name, max_separation_subset(2, layout).ap_indices)
    elif name in _FIXED_PRESETS:
        alloc = Allocation(name, _FIXED_PRESETS[name])
    else:
        raise UnsupportedPresetError(f"unknown allocation preset {name!r}")
    alloc.check(layout)
    return alloc


def default_presets() -> list[str]:
    """Every concrete preset name valid on the default layout."""
    return [f"single({i})" for i in range(1, 9)] + [n for n in PRESET_NAMES if n != "single(i)"]


def _xy_distance(p, q) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def _close(u: float, v: float) -> bool:
    return math.isclose(u, v, rel_tol=1e-12, abs_tol=1e-12)


def max_separation_subset(k: int, layout: ApLayout) -> Allocation:
    """Pick ``k`` APs maximising the minimum pairwise xy-distance.

    Ties go to the larger sum of pairwise distances, then to the
    lexicographically smallest index list. Float ties are compared with a
    1e-12 relative tolerance so that symmetric subsets, whose sums differ
    only by summation order, still tie.
    """
    n = len(layout)
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
        raise InvalidAllocationError(f"k must be an integer in 1..{n}, got {k!r}")

    candidates = []
    for combo in itertools.combinations(layout.indices, k):
        dists = [
            _xy_distance(layout.position(i), layout.position(j))
            for i, j in itertools.combinations(combo, 2)
        ]
        candidates.append((min(dists, default=math.inf), sum(dists), combo))

    best_min = max(c[0] for c in candidates)
    pool = [c for c in candidates if c[0] == best_min or _close(c[0], best_min)]
    best_sum = max(c[1] for c in pool)
    pool = [c for c in pool if _close(c[1], best_sum)]
    chosen = min(c[2] for c in pool)
    label = "max_separated_pair" if k == 2 else f"max_separated_{k}"
    return Allocation(label, chosen)


def explicit(label: str, indices: Iterable[int], layout: ApLayout | None = None) -> Allocation:
    alloc = Allocation(label, tuple(indices))
    if layout is not None:
        alloc.check(layout)
    return alloc
