"""Rasterizers: RGB observations and procedural ground-truth goal sketches.

Both are deterministic functions of their inputs (the sketch renderer consumes
an explicit seed for its jitter/warp draws). The sketch renderer never draws
the gripper marker and never invents objects that are not in the state.
"""
from __future__ import annotations

import math
from typing import Iterable, Optional

import numpy as np

from .. import kernels
from ..config import EnvConfig, SketchStyleConfig
from .shapes import object_polygon, subdivide_closed, world_to_px
from .simulator import drawer_front_y
from .types import SceneState

BLACK = np.array([0, 0, 0], dtype=np.uint8)
WHITE = np.array([255, 255, 255], dtype=np.uint8)


def render(state: SceneState, cfg: EnvConfig) -> np.ndarray:
    """Observation raster: table, drawer, shaded objects, gripper marker."""
    s = cfg.raster_size
    img = np.empty((s, s, 3), dtype=np.uint8)
    img[:, :] = np.array(cfg.table_color, dtype=np.uint8)

    kernels.draw_polyline(img, _table_border(s), 1.6,
                          np.array(cfg.table_edge_color, dtype=np.uint8), closed=True)
    _draw_drawer(img, state, cfg)

    for obj in state.objects:
        poly = object_polygon(obj, cfg.object_half_extent, s)
        color = np.array(obj.color, dtype=np.uint8)
        kernels.fill_polygon(img, poly, color)
        outline = (np.array(obj.color, dtype=np.float64) * cfg.outline_scale)
        kernels.draw_polyline(img, poly, 1.0, outline.astype(np.uint8), closed=True)

    _draw_gripper(img, state, cfg)
    return img


def _table_border(s: int, inset: float = 1.0) -> np.ndarray:
    hi = s - 1 - inset
    return np.array([[inset, inset], [inset, hi], [hi, hi], [hi, inset]],
                    dtype=np.float64)


def _drawer_geometry(state: SceneState, cfg: EnvConfig):
    s = cfg.raster_size
    front = drawer_front_y(state.drawer.openness, cfg) * (s - 1)
    x0 = cfg.drawer_x0 * (s - 1)
    x1 = cfg.drawer_x1 * (s - 1)
    return front, x0, x1


def _draw_drawer(img, state, cfg):
    front, x0, x1 = _drawer_geometry(state, cfg)
    body = np.array([[0.0, x0], [0.0, x1], [front, x1], [front, x0]], dtype=np.float64)
    kernels.fill_polygon(img, body, np.array(cfg.drawer_color, dtype=np.uint8))
    edge = np.array(cfg.drawer_edge_color, dtype=np.uint8)
    kernels.draw_polyline(img, np.array([[front, x0], [front, x1]]), 1.4, edge)
    cx = 0.5 * (x0 + x1)
    handle = np.array([[front - 1.2, cx - 2.0], [front - 1.2, cx + 2.0],
                       [front + 1.2, cx + 2.0], [front + 1.2, cx - 2.0]])
    kernels.fill_polygon(img, handle, edge)


def _draw_gripper(img, state, cfg):
    s = cfg.raster_size
    cy, cx = world_to_px(state.gripper.position, s)
    color = np.array(cfg.gripper_color, dtype=np.uint8)
    arm = 3.2
    kernels.draw_polyline(img, np.array([[cy - arm, cx], [cy + arm, cx]]), 1.0, color)
    kernels.draw_polyline(img, np.array([[cy, cx - arm], [cy, cx + arm]]), 1.0, color)
    if state.gripper.closed:
        sq = np.array([[cy - 1.6, cx - 1.6], [cy - 1.6, cx + 1.6],
                       [cy + 1.6, cx + 1.6], [cy + 1.6, cx - 1.6]])
        kernels.fill_polygon(img, sq, color)


# ---------------------------------------------------------------------------
# ground-truth sketches
# ---------------------------------------------------------------------------
def render_gt_sketch(state: SceneState, style: SketchStyleConfig, seed: int,
                     cfg: EnvConfig,
                     keep_ids: Optional[Iterable[str]] = None) -> np.ndarray:
    """Procedural stand-in for a human annotator's sketch of the scene.

    Black contour strokes (object outlines, table edge, drawer front) on a
    white canvas, perturbed per the style; omit_distractors drops objects not
    in keep_ids; colorize flat-fills object interiors with their color.
    """
    s = cfg.raster_size
    img = np.full((s, s, 3), 255, dtype=np.uint8)
    rng = np.random.default_rng(seed)
    warp = _sample_warp(rng, style, s)
    keep = None if keep_ids is None else set(keep_ids)

    def prep(poly: np.ndarray) -> np.ndarray:
        pts = subdivide_closed(poly)
        if style.jitter_amplitude > 0:
            pts = pts + rng.normal(0.0, style.jitter_amplitude, size=pts.shape)
        return _apply_warp(pts, warp)

    table = prep(_table_border(s, inset=1.5))
    kernels.draw_polyline(img, table, style.stroke_width, BLACK, closed=True)

    front, x0, x1 = _drawer_geometry(state, cfg)
    kernels.draw_polyline(img, prep(np.array([[front, x0], [front, x1]])),
                          style.stroke_width, BLACK, closed=False)
    cx = 0.5 * (x0 + x1)
    handle = np.array([[front - 1.2, cx - 2.0], [front - 1.2, cx + 2.0],
                       [front + 1.2, cx + 2.0], [front + 1.2, cx - 2.0]])
    kernels.draw_polyline(img, prep(handle), style.stroke_width, BLACK, closed=True)

    for obj in state.objects:
        if style.omit_distractors and keep is not None and obj.id not in keep:
            continue
        poly = prep(object_polygon(obj, cfg.object_half_extent, s))
        if style.colorize:
            kernels.fill_polygon(img, poly, np.array(obj.color, dtype=np.uint8))
        kernels.draw_polyline(img, poly, style.stroke_width, BLACK, closed=True)
    return img


def _sample_warp(rng, style: SketchStyleConfig, s: int):
    # rotation/scale about the raster center plus a translation, all small
    rot = math.radians(rng.uniform(-style.warp_rotation, style.warp_rotation)) \
        if style.warp_rotation > 0 else 0.0
    if style.warp_scale != 1.0:
        hi = max(style.warp_scale, 1.0 / style.warp_scale)
        scale = rng.uniform(1.0 / hi, hi)
    else:
        scale = 1.0
    shift = (rng.uniform(-style.warp_shift, style.warp_shift, size=2)
             if style.warp_shift > 0 else np.zeros(2))
    c = 0.5 * (s - 1)
    return rot, scale, shift, c


def _apply_warp(pts: np.ndarray, warp) -> np.ndarray:
    rot, scale, shift, c = warp
    if rot == 0.0 and scale == 1.0 and not np.any(shift):
        return pts
    cosr, sinr = math.cos(rot), math.sin(rot)
    rel = pts - c
    out = np.empty_like(rel)
    out[:, 0] = scale * (cosr * rel[:, 0] - sinr * rel[:, 1]) + c + shift[0]
    out[:, 1] = scale * (sinr * rel[:, 0] + cosr * rel[:, 1]) + c + shift[1]
    return out
