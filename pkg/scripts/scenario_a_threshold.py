"""Find the smallest swept radius at which a disc 10 cm above the receiver
blocks every link of every allocation family, and compare it with the
geometric bound (largest crossing offset over the grid)."""

import math

from losblock.allocation import default_presets, resolve_preset
from losblock.blockage import percentage_blockage
from losblock.scene import DiscSpec, build_default_scene

HEIGHT = 0.1


def crossing_bound(scene, indices):
    frac = HEIGHT / (scene.room.height_z - scene.grid.cf_height)
    return max(
        frac * math.hypot(scene.aps.position(k).x - p.x, scene.aps.position(k).y - p.y)
        for p in scene.grid
        for k in indices
    )


def main():
    scene = build_default_scene()
    radii = [i * 0.01 for i in range(101)]
    for name in default_presets():
        alloc = resolve_preset(name, scene.aps)
        full = next(
            (r for r in radii if percentage_blockage(scene, alloc, DiscSpec(r, HEIGHT, 0)).blocked == len(scene.grid)),
            None,
        )
        print(f"{name:20s} saturates at r={full!s:6s} bound {crossing_bound(scene, alloc.ap_indices):.4f} m")


if __name__ == "__main__":
    main()
