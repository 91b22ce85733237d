import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from losblock.allocation import Allocation, InvalidAllocationError, resolve_preset
from losblock.blockage import (
    blockage_map,
    link_blocked,
    percentage_blockage,
    receiver_blocked,
    relative_link_blocked,
)
from losblock.geometry import Disc, Point3
from losblock.scene import DiscSpec, build_default_scene, instantiate_disc

import oracles

SCENE = build_default_scene()
ALL = resolve_preset("all", SCENE.aps)
MIRROR = {1: 5, 2: 6, 3: 7, 4: 8, 5: 1, 6: 2, 7: 3, 8: 4}

# blocked counts out of 512, frozen from oracles.blocked_count
GOLDEN = [
    ((1,), (0.2, 0.5, 0.5), 0),
    ((4,), (0.2, 0.5, 0.5), 32),
    ((1,), (0.5, 0.3, 0.2), 167),
    ((4,), (0.5, 0.3, 0.2), 333),
    ((2, 3), (0.5, 0.3, 0.2), 248),
    ((1, 8), (0.5, 0.3, 0.2), 8),
    ((1, 2, 3, 4, 5, 6, 7, 8), (0.5, 0.3, 0.2), 2),
    ((1,), (1.0, 1.0, 1.0), 36),
    ((4, 8), (1.0, 1.0, 1.0), 84),
    ((1,), (0.3, 0.1, 0.05), 372),
    ((1, 8), (0.3, 0.1, 0.05), 360),
    ((1, 2, 3, 4, 5, 6, 7, 8), (0.3, 0.1, 0.05), 336),
]


def alloc(*idx):
    return Allocation("-".join(map(str, idx)), idx)


def test_link_blocked_examples():
    assert link_blocked(Point3(1, 1, 1), Point3(1, 1, 3), Disc(Point3(1, 1, 1.1), 0.1))
    assert not link_blocked(Point3(2, 4, 1), Point3(3, 5, 3), Disc(Point3(2, 4.5, 1.5), 0.3))


def test_zero_radius_off_segment():
    assert not link_blocked(Point3(2, 4, 1), Point3(3, 5, 3), Disc(Point3(2, 4.5, 1.5), 0.0))


def test_single_link_reduction():
    rx = Point3(0.875, 0.875, 1)
    spec = DiscSpec(0.1, 0.1, 0)
    disc = Disc(Point3(0.875, 0.875, 1.1), 0.1)
    assert receiver_blocked(rx, alloc(1), spec, SCENE) == link_blocked(rx, SCENE.aps.position(1), disc)


def test_zero_radius_never_blocks_any_receiver():
    for p in SCENE.grid.points[::37]:
        assert not receiver_blocked(p, ALL, DiscSpec(0, 0.5, 0.5), SCENE)


def test_large_overhead_disc_blocks_every_link():
    rx = Point3(2.125, 4.125, 1)
    assert receiver_blocked(rx, ALL, DiscSpec(2.0, 0.1, 0), SCENE)
    # per-AP oracle: crossing offset is 0.05 x horizontal distance
    for k in range(1, 9):
        ap = oracles.AP_XYZ[k - 1]
        off = 0.05 * ((ap[0] - rx.x) ** 2 + (ap[1] - rx.y) ** 2) ** 0.5
        assert off < 2.0


def test_unknown_index_rejected():
    with pytest.raises(InvalidAllocationError):
        receiver_blocked(Point3(1, 1, 1), alloc(9), DiscSpec(0.1, 0.1, 0), SCENE)


@pytest.mark.parametrize("name", ["single(1)", "adjacent_pair", "all"])
def test_full_coverage_at_floor(name):
    assert percentage_blockage(SCENE, resolve_preset(name, SCENE.aps), DiscSpec(0.3, 0, 0)).value == 100.0


def test_zero_radius_percentage():
    assert percentage_blockage(SCENE, ALL, DiscSpec(0, 0.5, 0.5)).value == 0.0


@pytest.mark.parametrize("indices, spec, count", GOLDEN)
def test_golden_counts(indices, spec, count):
    res = percentage_blockage(SCENE, alloc(*indices), DiscSpec(*spec))
    assert (res.blocked, res.total) == (count, 512)
    assert res.value == 100 * count / 512


def test_map_agrees_with_oracle_mask():
    spec = (0.5, 0.3, 0.2)
    bmap = blockage_map(SCENE, alloc(2, 3), DiscSpec(*spec))
    mask = oracles.blocked_mask(*spec, (2, 3))
    assert len(bmap) == 512
    assert [b for _, b in bmap.entries] == mask.tolist()
    assert [p for p, _ in bmap.entries] == list(SCENE.grid.points)
    assert bmap.percentage() == percentage_blockage(SCENE, alloc(2, 3), DiscSpec(*spec))


specs = st.builds(
    DiscSpec,
    radius=st.floats(0, 1.5),
    height=st.floats(0, 2.5),
    distance=st.floats(0, 2),
)
subsets = st.lists(st.integers(1, 8), min_size=1, max_size=8, unique=True)


@settings(max_examples=30, deadline=None)
@given(specs, subsets, subsets)
def test_allocation_monotonicity(spec, a, extra):
    small = alloc(*a)
    big = alloc(*a, *[i for i in extra if i not in a])
    assert percentage_blockage(SCENE, big, spec).blocked <= percentage_blockage(SCENE, small, spec).blocked


@settings(max_examples=20, deadline=None)
@given(st.floats(0, 2.5), st.floats(0, 2), st.floats(0, 1.5), st.floats(0, 1.5), subsets)
def test_radius_monotonicity(h, d, r1, r2, idx):
    lo, hi = sorted((r1, r2))
    a = alloc(*idx)
    assert percentage_blockage(SCENE, a, DiscSpec(lo, h, d)).blocked <= percentage_blockage(
        SCENE, a, DiscSpec(hi, h, d)
    ).blocked


@settings(max_examples=20, deadline=None)
@given(st.floats(2, 5), st.floats(0, 3), st.floats(0, 3), subsets)
def test_ceiling_cutoff(h, r, d, idx):
    assert percentage_blockage(SCENE, alloc(*idx), DiscSpec(r, h, d)).blocked == 0


@settings(max_examples=20, deadline=None)
@given(st.floats(0.01, 2), st.floats(0, 1), subsets)
def test_floor_coverage(r, frac, idx):
    spec = DiscSpec(r, 0, r * frac)
    assert percentage_blockage(SCENE, alloc(*idx), spec).value == 100.0


@settings(max_examples=20, deadline=None)
@given(specs, subsets)
def test_x_mirror_symmetry(spec, idx):
    a = alloc(*idx)
    m = alloc(*(MIRROR[i] for i in idx))
    assert percentage_blockage(SCENE, a, spec) == percentage_blockage(SCENE, m, spec)


def test_brute_force_equivalence_random():
    rng = random.Random(11)
    for _ in range(5):
        spec = (rng.uniform(0, 1), rng.uniform(0, 2), rng.uniform(0, 1.5))
        idx = tuple(sorted(rng.sample(range(1, 9), rng.randint(1, 8))))
        got = percentage_blockage(SCENE, alloc(*idx), DiscSpec(*spec)).blocked
        assert got == oracles.blocked_count(*spec, idx)


@pytest.mark.parametrize("r", [0.1, 0.27738484578367845, 1.529911491763462, 1.696393136505093])
def test_rim_through_receiver_is_blocked(r):
    # d == r puts the receiver exactly on the rim; tangency blocks
    assert percentage_blockage(SCENE, ALL, DiscSpec(r, 0, r)).blocked == 512


def test_relative_path_matches_absolute_geometry():
    rng = random.Random(5)
    checked = 0
    for _ in range(3000):
        spec = DiscSpec(rng.uniform(0, 1.5), rng.uniform(0, 2.5), rng.uniform(0, 2))
        rx = rng.choice(SCENE.grid.points)
        ap = SCENE.aps.position(rng.randint(1, 8))
        disc = instantiate_disc(spec, rx)
        off = oracles.analytic_offset(tuple(rx), tuple(ap), tuple(disc.center))
        if off is not None and abs(off - spec.radius) < 1e-9:
            continue
        checked += 1
        assert relative_link_blocked(rx, ap, spec) == link_blocked(rx, ap, disc)
    assert checked > 2900
