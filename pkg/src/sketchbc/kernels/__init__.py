"""Backend dispatch for the per-pixel kernels.

The env var SKETCHBC_KERNELS selects the implementation:

    auto   (default) numba if importable, else numpy
    numba  force @njit-compiled kernels
    numpy  force the pure-Python/numpy reference path

Both backends run the same source (kernels/_impl.py) and produce bit-identical
buffers; see benchmarks/bench_kernels.py for the speed comparison.
"""
from __future__ import annotations

import os

from . import _impl

_KERNEL_NAMES = (
    "fill_polygon",
    "draw_polyline",
    "sobel_gradients",
    "blur_separable",
    "col2im_accumulate",
)

_active: dict = {}
_backend_name = "unset"


def _compile_numba():
    import numba

    compiled = {}
    for name in _KERNEL_NAMES:
        compiled[name] = numba.njit(cache=True)(getattr(_impl, name))
    return compiled


def set_backend(name: str) -> str:
    """Select 'numba', 'numpy', or 'auto'. Returns the backend actually active."""
    global _active, _backend_name
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown kernel backend '{name}'")
    if name == "numpy":
        _active = {k: getattr(_impl, k) for k in _KERNEL_NAMES}
        _backend_name = "numpy"
    else:
        try:
            _active = _compile_numba()
            _backend_name = "numba"
        except ImportError:
            if name == "numba":
                raise
            _active = {k: getattr(_impl, k) for k in _KERNEL_NAMES}
            _backend_name = "numpy"
    return _backend_name


def active_backend() -> str:
    return _backend_name


set_backend(os.environ.get("SKETCHBC_KERNELS", "auto"))


def fill_polygon(img, pts, color):
    _active["fill_polygon"](img, pts, color)


def draw_polyline(img, pts, width, color, closed=False):
    _active["draw_polyline"](img, pts, float(width), color, closed)


def sobel_gradients(gray):
    return _active["sobel_gradients"](gray)


def blur_separable(img, kernel):
    return _active["blur_separable"](img, kernel)


def col2im_accumulate(cols, h, w, kh, kw, stride, out):
    _active["col2im_accumulate"](cols, h, w, kh, kw, stride, out)
