"""Line-of-sight blockage and protection-link resilience in an indoor
optical wireless room."""

from .allocation import Allocation, max_separation_subset, resolve_preset
from .blockage import (
    BlockageMap,
    PercentBlockage,
    blockage_map,
    link_blocked,
    percentage_blockage,
    receiver_blocked,
)
from .geometry import Disc, Occlusion, Point3, Segment, segment_disc_intersection
from .scene import DiscSpec, Room, Scene, build_default_scene, generate_grid, instantiate_disc
from .sweep import SweepResult, SweepSpec, run_sweep, scenario_presets

__version__ = "0.1.0"
