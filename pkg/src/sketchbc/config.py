"""Layered run configuration: dataclass sections, YAML loading, CLI overrides, hashing.

Every persisted artifact records the hash of the config section(s) that
produced it; loaders verify those hashes so stale-input bugs fail loudly.
"""
from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Optional

import yaml

FORMAT_VERSION = 1


# ---------------------------------------------------------------------------
# Sections
# ---------------------------------------------------------------------------
@dataclass
class EnvConfig:
    """Simulator + renderer settings (world geometry, gains, palette)."""

    raster_size: int = 64
    step_gain: float = 0.05            # world units moved per unit action
    grasp_radius: float = 0.03
    close_threshold: float = -0.5      # width slot <= this -> gripper closes
    open_threshold: float = 0.5        # width slot >= this -> gripper opens
    roll_threshold: float = 0.5        # |roll| >= this while holding -> flip orientation
    handle_radius: float = 0.06
    drawer_front_base: float = 0.06    # front-edge y at openness 0
    drawer_travel: float = 0.18        # front-edge y displacement at openness 1
    drawer_x0: float = 0.30
    drawer_x1: float = 0.70
    object_half_extent: float = 0.052  # world units
    spawn_margin: float = 0.12
    spawn_min_y: float = 0.34          # keep objects clear of the drawer zone
    min_spacing: float = 0.17
    max_extra_objects: int = 2         # task-irrelevant objects added by reset
    gripper_home: tuple[float, float] = (0.50, 0.88)
    pick_zone: tuple[float, float] = (0.80, 0.78)
    place_distance: float = 0.055      # expert release distance from reference
    success_radius: float = 0.08       # rho, shared by eval predicates + catalogs
    table_color: tuple[int, int, int] = (206, 196, 182)
    table_edge_color: tuple[int, int, int] = (120, 112, 100)
    drawer_color: tuple[int, int, int] = (134, 106, 77)
    drawer_edge_color: tuple[int, int, int] = (74, 56, 38)
    gripper_color: tuple[int, int, int] = (24, 22, 22)
    outline_scale: float = 0.55        # object outline = color * scale
    palette: tuple[tuple[int, int, int], ...] = (
        (214, 58, 46),    # red
        (60, 152, 58),    # green
        (52, 94, 196),    # blue
        (232, 186, 46),   # yellow
        (146, 70, 180),   # purple
        (238, 130, 50),   # orange
        (52, 172, 176),   # teal
        (206, 84, 156),   # pink
    )


@dataclass
class ExpertConfig:
    """Scripted-demonstration settings."""

    waypoint_noise: float = 0.02   # sigma of Gaussian waypoint jitter, world units
    waypoint_tol: float = 0.006    # proportional controller stop distance
    retreat_steps: int = 4
    max_episode_steps: int = 80
    retries: int = 5


@dataclass
class SketchStyleConfig:
    """One ground-truth sketch style (stands in for a single annotator)."""

    stroke_width: float = 1.0
    jitter_amplitude: float = 0.0   # px
    omit_distractors: bool = False
    colorize: bool = False
    warp_rotation: float = 0.0      # degrees
    warp_scale: float = 1.0
    warp_shift: float = 0.0         # px, max |translation| per axis


@dataclass
class SketcherConfig:
    """Image-to-sketch translator training (cGAN with min-alignment L1)."""

    lambda_adv: float = 0.01
    lr_generator: float = 1e-3
    lr_discriminator: float = 1e-3
    adam_beta1: float = 0.5
    adam_beta2: float = 0.999
    batch_size: int = 4
    steps: int = 500
    seed: int = 0
    variants_per_image: int = 3
    holdout_fraction: float = 0.1
    base_channels: int = 16
    noise_keep_prob: float = 0.75
    prob_eps: float = 1e-7          # clamp for log() in the adversarial terms
    # style family used to draw the multi-variant ground-truth sketches
    jitter_range: tuple[float, float] = (0.4, 1.6)
    stroke_widths: tuple[float, ...] = (1.0, 1.0, 2.0)
    omit_probability: float = 0.5
    sample_grid_every: int = 0      # emit (image, output, nearest gt) PNG grids every N steps


@dataclass
class AugmentConfig:
    """Goal augmentation: mode distribution + filter parameters."""

    mode_weights: tuple[float, float, float, float] = (0.25, 0.25, 0.25, 0.25)
    blur_sigma: float = 2.0
    sobel_threshold: float = 0.2


@dataclass
class PolicyConfig:
    """Goal-conditioned behavioral cloning policy."""

    history_length: int = 6
    bins: int = 64
    patch_size: int = 4
    encoder_channels: int = 32
    encoder_blocks: int = 4         # patch stem + (blocks-1) 3x3 convs
    tokens_per_frame: int = 8
    d_model: int = 64
    heads: int = 4
    depth: int = 4
    mlp_ratio: int = 2
    coord_channels: bool = True
    learning_rate: float = 1e-3
    warmup_steps: int = 100
    grad_clip: float = 1.0
    batch_size: int = 8
    steps: int = 2000
    seed: int = 0


@dataclass
class EvalConfig:
    """Benchmark protocol knobs (reported in every metrics file)."""

    max_steps: int = 80
    retry_regrasp_limit: int = 2    # R: re-grasps after first success
    line_style: SketchStyleConfig = field(default_factory=lambda: SketchStyleConfig(
        stroke_width=1.0, jitter_amplitude=1.0, omit_distractors=True))
    freehand_style: SketchStyleConfig = field(default_factory=lambda: SketchStyleConfig(
        stroke_width=2.0, jitter_amplitude=2.5, omit_distractors=True,
        warp_rotation=8.0, warp_scale=1.08, warp_shift=2.5))
    distractor_min: int = 5
    distractor_max: int = 9


@dataclass
class RunConfig:
    env: EnvConfig = field(default_factory=EnvConfig)
    expert: ExpertConfig = field(default_factory=ExpertConfig)
    sketcher: SketcherConfig = field(default_factory=SketcherConfig)
    augment: AugmentConfig = field(default_factory=AugmentConfig)
    policy: PolicyConfig = field(default_factory=PolicyConfig)
    eval: EvalConfig = field(default_factory=EvalConfig)
    seed: int = 0
    artifact_dir: str = "artifacts"


# ---------------------------------------------------------------------------
# Dict <-> dataclass plumbing
# ---------------------------------------------------------------------------
def _from_dict(cls, data: dict):
    if not isinstance(data, dict):
        raise ConfigError(f"expected mapping for {cls.__name__}, got {type(data).__name__}")
    fields = {f.name: f for f in dataclasses.fields(cls)}
    unknown = set(data) - set(fields)
    if unknown:
        raise ConfigError(f"unknown {cls.__name__} keys: {sorted(unknown)}")
    kwargs = {}
    for name, value in data.items():
        ftype = fields[name].type
        if dataclasses.is_dataclass(_resolve(ftype)):
            kwargs[name] = _from_dict(_resolve(ftype), value)
        elif isinstance(value, list):
            kwargs[name] = _tuplify(value)
        else:
            kwargs[name] = value
    return cls(**kwargs)


_SECTION_TYPES = {}


def _resolve(ftype):
    if isinstance(ftype, str):
        return _SECTION_TYPES.get(ftype, ftype)
    return ftype


def _tuplify(value):
    if isinstance(value, list):
        return tuple(_tuplify(v) for v in value)
    return value


def to_plain(obj) -> Any:
    """Dataclass -> JSON-serializable dict (tuples become lists)."""
    if dataclasses.is_dataclass(obj):
        return {f.name: to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    return obj


class ConfigError(ValueError):
    pass


for _cls in (EnvConfig, ExpertConfig, SketchStyleConfig, SketcherConfig,
             AugmentConfig, PolicyConfig, EvalConfig, RunConfig):
    _SECTION_TYPES[_cls.__name__] = _cls


def load_run_config(path: Optional[str] = None,
                    overrides: Optional[list[str]] = None) -> RunConfig:
    """Load the layered config file, then apply ``section.key=value`` overrides."""
    data: dict = {}
    if path is not None:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
    cfg = _from_dict(RunConfig, data)
    for item in overrides or []:
        cfg = apply_override(cfg, item)
    return cfg


def apply_override(cfg: RunConfig, item: str) -> RunConfig:
    """Apply one dotted override, e.g. ``policy.steps=4000``."""
    if "=" not in item:
        raise ConfigError(f"override '{item}' must look like section.key=value")
    dotted, raw = item.split("=", 1)
    keys = dotted.strip().split(".")
    plain = to_plain(cfg)
    node = plain
    for k in keys[:-1]:
        if k not in node:
            raise ConfigError(f"unknown config path '{dotted}'")
        node = node[k]
    if keys[-1] not in node:
        raise ConfigError(f"unknown config path '{dotted}'")
    node[keys[-1]] = yaml.safe_load(raw)
    return _from_dict(RunConfig, plain)


# ---------------------------------------------------------------------------
# Hashing
# ---------------------------------------------------------------------------
def config_hash(obj) -> str:
    """Stable 12-hex-digit digest of a config dataclass (or plain dict)."""
    plain = to_plain(obj) if dataclasses.is_dataclass(obj) else obj
    blob = json.dumps(plain, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:12]
