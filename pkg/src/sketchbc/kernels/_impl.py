"""Raw per-pixel kernels, written so the same source runs as plain Python/numpy
or compiled by numba's @njit. Keep this module free of Python features numba
cannot lower (dicts, closures, fancy indexing) — the two backends must produce
bit-identical output.

All image buffers are (H, W, 3) uint8 unless noted; point arrays are (N, 2)
float64 in (y, x) pixel coordinates.
"""
import math

import numpy as np


def fill_polygon(img, pts, color):
    """Scanline even-odd fill of a closed polygon, sampled at integer pixel centers."""
    h, w = img.shape[0], img.shape[1]
    n = pts.shape[0]
    ymin = h - 1
    ymax = 0
    for i in range(n):
        y = pts[i, 0]
        if y < ymin:
            ymin = int(math.floor(y))
        if y > ymax:
            ymax = int(math.ceil(y))
    if ymin < 0:
        ymin = 0
    if ymax > h - 1:
        ymax = h - 1
    xs = np.empty(n, dtype=np.float64)
    for y in range(ymin, ymax + 1):
        yc = float(y)
        k = 0
        for i in range(n):
            y0 = pts[i, 0]
            x0 = pts[i, 1]
            y1 = pts[(i + 1) % n, 0]
            x1 = pts[(i + 1) % n, 1]
            # half-open rule: count edges spanning [min, max)
            if (y0 <= yc < y1) or (y1 <= yc < y0):
                t = (yc - y0) / (y1 - y0)
                xs[k] = x0 + t * (x1 - x0)
                k += 1
        # insertion sort of the k crossings
        for a in range(1, k):
            v = xs[a]
            b = a - 1
            while b >= 0 and xs[b] > v:
                xs[b + 1] = xs[b]
                b -= 1
            xs[b + 1] = v
        j = 0
        while j + 1 < k:
            x_start = int(math.ceil(xs[j]))
            x_end = int(math.floor(xs[j + 1]))
            if x_start < 0:
                x_start = 0
            if x_end > w - 1:
                x_end = w - 1
            for x in range(x_start, x_end + 1):
                img[y, x, 0] = color[0]
                img[y, x, 1] = color[1]
                img[y, x, 2] = color[2]
            j += 2


def draw_polyline(img, pts, width, color, closed):
    """Stroke a polyline: pixels within width/2 of any segment, round caps."""
    h, w = img.shape[0], img.shape[1]
    n = pts.shape[0]
    r = width * 0.5
    r2 = r * r
    last = n if closed else n - 1
    for i in range(last):
        y0 = pts[i, 0]
        x0 = pts[i, 1]
        y1 = pts[(i + 1) % n, 0]
        x1 = pts[(i + 1) % n, 1]
        lo_y = int(math.floor(min(y0, y1) - r))
        hi_y = int(math.ceil(max(y0, y1) + r))
        lo_x = int(math.floor(min(x0, x1) - r))
        hi_x = int(math.ceil(max(x0, x1) + r))
        if lo_y < 0:
            lo_y = 0
        if lo_x < 0:
            lo_x = 0
        if hi_y > h - 1:
            hi_y = h - 1
        if hi_x > w - 1:
            hi_x = w - 1
        dy = y1 - y0
        dx = x1 - x0
        seg2 = dy * dy + dx * dx
        for y in range(lo_y, hi_y + 1):
            for x in range(lo_x, hi_x + 1):
                py = float(y) - y0
                px = float(x) - x0
                if seg2 > 0.0:
                    t = (py * dy + px * dx) / seg2
                    if t < 0.0:
                        t = 0.0
                    elif t > 1.0:
                        t = 1.0
                else:
                    t = 0.0
                ey = py - t * dy
                ex = px - t * dx
                if ey * ey + ex * ex <= r2:
                    img[y, x, 0] = color[0]
                    img[y, x, 1] = color[1]
                    img[y, x, 2] = color[2]


def sobel_gradients(gray):
    """3x3 Sobel gradients with replicate padding.

    Gx = [[-1,0,1],[-2,0,2],[-1,0,1]], Gy = Gx^T. Returns (gx, gy) float64.
    """
    h, w = gray.shape[0], gray.shape[1]
    gx = np.empty((h, w), dtype=np.float64)
    gy = np.empty((h, w), dtype=np.float64)
    for y in range(h):
        ym = y - 1 if y > 0 else 0
        yp = y + 1 if y < h - 1 else h - 1
        for x in range(w):
            xm = x - 1 if x > 0 else 0
            xp = x + 1 if x < w - 1 else w - 1
            a = gray[ym, xm]
            b = gray[ym, x]
            c = gray[ym, xp]
            d = gray[y, xm]
            f = gray[y, xp]
            g = gray[yp, xm]
            hh = gray[yp, x]
            i = gray[yp, xp]
            gx[y, x] = (c + 2.0 * f + i) - (a + 2.0 * d + g)
            gy[y, x] = (g + 2.0 * hh + i) - (a + 2.0 * b + c)
    return gx, gy


def blur_separable(img, kernel):
    """Gaussian blur of an (H, W, C) float64 image, replicate padding."""
    h, w, c = img.shape[0], img.shape[1], img.shape[2]
    k = kernel.shape[0]
    half = k // 2
    tmp = np.empty((h, w, c), dtype=np.float64)
    out = np.empty((h, w, c), dtype=np.float64)
    for y in range(h):
        for x in range(w):
            for ch in range(c):
                acc = 0.0
                for t in range(k):
                    xx = x + t - half
                    if xx < 0:
                        xx = 0
                    elif xx > w - 1:
                        xx = w - 1
                    acc += kernel[t] * img[y, xx, ch]
                tmp[y, x, ch] = acc
    for y in range(h):
        for x in range(w):
            for ch in range(c):
                acc = 0.0
                for t in range(k):
                    yy = y + t - half
                    if yy < 0:
                        yy = 0
                    elif yy > h - 1:
                        yy = h - 1
                    acc += kernel[t] * tmp[yy, x, ch]
                out[y, x, ch] = acc
    return out


def col2im_accumulate(cols, h, w, kh, kw, stride, out):
    """Scatter-add im2col columns back onto an (N, C, H, W) gradient buffer.

    cols has shape (N, out_h, out_w, C, kh, kw); out must be zero-initialized.
    """
    n = cols.shape[0]
    out_h = cols.shape[1]
    out_w = cols.shape[2]
    c = cols.shape[3]
    for b in range(n):
        for oy in range(out_h):
            for ox in range(out_w):
                y0 = oy * stride
                x0 = ox * stride
                for ch in range(c):
                    for ky in range(kh):
                        for kx in range(kw):
                            out[b, ch, y0 + ky, x0 + kx] += cols[b, oy, ox, ch, ky, kx]
