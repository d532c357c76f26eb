"""Object contour polygons in pixel space, shared by the RGB renderer and the
ground-truth sketch renderer. Sideways orientation changes the aspect ratio so
the two poses are visually distinct."""
from __future__ import annotations

import math

import numpy as np

from .types import ObjectSpec

_CIRCLE_SEGMENTS = 24


def world_to_px(pos: tuple[float, float], raster_size: int) -> tuple[float, float]:
    """(x, y) in [0,1]^2 -> (row, col) pixel coordinates."""
    s = raster_size - 1
    return (pos[1] * s, pos[0] * s)


def object_polygon(obj: ObjectSpec, half_extent: float, raster_size: int) -> np.ndarray:
    """Closed contour (N, 2) float64 in (row, col) px for one object."""
    cy, cx = world_to_px(obj.position, raster_size)
    r = half_extent * (raster_size - 1)
    sideways = obj.orientation == "sideways"
    if obj.shape == "circle":
        ry, rx = (0.62 * r, 1.35 * r) if sideways else (r, r)
        return _ellipse(cy, cx, ry, rx)
    if obj.shape == "square":
        hy, hx = (0.55 * r, 1.45 * r) if sideways else (0.95 * r, 0.95 * r)
        return _rect(cy, cx, hy, hx)
    if obj.shape == "triangle":
        if sideways:
            return np.array([[cy + 0.55 * r, cx - 1.4 * r],
                             [cy - 0.55 * r, cx],
                             [cy + 0.55 * r, cx + 1.4 * r]], dtype=np.float64)
        return np.array([[cy - 1.05 * r, cx],
                         [cy + 0.85 * r, cx - r],
                         [cy + 0.85 * r, cx + r]], dtype=np.float64)
    if obj.shape == "bar":
        hy, hx = (0.42 * r, 1.55 * r) if sideways else (1.55 * r, 0.42 * r)
        return _rect(cy, cx, hy, hx)
    raise ValueError(f"unknown shape '{obj.shape}'")


def _ellipse(cy, cx, ry, rx) -> np.ndarray:
    ang = np.arange(_CIRCLE_SEGMENTS) * (2.0 * math.pi / _CIRCLE_SEGMENTS)
    return np.stack([cy + ry * np.sin(ang), cx + rx * np.cos(ang)], axis=1)


def _rect(cy, cx, hy, hx) -> np.ndarray:
    return np.array([[cy - hy, cx - hx], [cy - hy, cx + hx],
                     [cy + hy, cx + hx], [cy + hy, cx - hx]], dtype=np.float64)


def subdivide_closed(pts: np.ndarray, max_seg: float = 4.0) -> np.ndarray:
    """Insert vertices so no edge exceeds max_seg px (gives jitter something to bend)."""
    out = []
    n = len(pts)
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        seg = math.dist(a, b)
        steps = max(1, int(math.ceil(seg / max_seg)))
        for t in range(steps):
            out.append(a + (b - a) * (t / steps))
    return np.asarray(out, dtype=np.float64)
