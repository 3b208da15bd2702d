"""Deterministic adaptive Gauss-Legendre quadrature, 1-D and tensorized 2-D.

Panels carry an embedded error estimate (high order minus low order); the
worst panel is split first, ties broken by position, and the final sum runs
in interval order so results are reproducible bit-for-bit.
"""

from __future__ import annotations

import heapq
from functools import lru_cache

import numpy as np

from .errors import DomainError


@lru_cache(maxsize=None)
def _gl_nodes(k: int):
    x, w = np.polynomial.legendre.leggauss(k)
    return x, w


_LOW, _HIGH = 10, 21


def _panel_1d(f, a, b, order):
    x, w = _gl_nodes(order)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    total = 0.0
    for xi, wi in zip(x, w):
        total += wi * f(mid + half * xi)
    return half * total


def adaptive_1d(f, a: float, b: float, tol: float, max_panels: int = 2000):
    """Integrate f on [a, b] to absolute tolerance tol.

    Returns (value, error_estimate, panels_used).
    """
    def measure(lo, hi):
        coarse = _panel_1d(f, lo, hi, _LOW)
        fine = _panel_1d(f, lo, hi, _HIGH)
        return fine, abs(fine - coarse)

    val, err = measure(a, b)
    heap = [(-err, a, b, val, err)]
    count = 1
    while heap and sum(item[4] for item in heap) > tol and count < max_panels:
        _, lo, hi, _, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        for seg in ((lo, mid), (mid, hi)):
            v, e = measure(*seg)
            heapq.heappush(heap, (-e, seg[0], seg[1], v, e))
        count += 1
    panels = sorted(heap, key=lambda t: t[1])
    value = sum(p[3] for p in panels)
    err_est = sum(p[4] for p in panels)
    if err_est > max(tol, 1e-300) * 50 and count >= max_panels:
        raise DomainError(f"quadrature did not converge: error estimate {err_est:.2e}")
    return value, err_est, count


def _panel_2d(f, box, order):
    x, w = _gl_nodes(order)
    (ax, bx), (ay, by) = box
    mx, hx = 0.5 * (ax + bx), 0.5 * (bx - ax)
    my, hy = 0.5 * (ay + by), 0.5 * (by - ay)
    total = 0.0
    for xi, wi in zip(x, w):
        row = 0.0
        px = mx + hx * xi
        for yj, wj in zip(x, w):
            row += wj * f(px, my + hy * yj)
        total += wi * row
    return hx * hy * total


def adaptive_2d(f, box, tol: float, max_panels: int = 4000):
    """Integrate f over box = ((ax, bx), (ay, by)) to absolute tolerance."""
    def measure(b):
        coarse = _panel_2d(f, b, _LOW)
        fine = _panel_2d(f, b, 15)
        return fine, abs(fine - coarse)

    val, err = measure(box)
    heap = [(-err, box[0], box[1], val, err)]
    count = 1
    while heap and sum(item[4] for item in heap) > tol and count < max_panels:
        _, bx, by, _, _ = heapq.heappop(heap)
        # split the longer side
        if (bx[1] - bx[0]) >= (by[1] - by[0]):
            mid = 0.5 * (bx[0] + bx[1])
            subs = (((bx[0], mid), by), ((mid, bx[1]), by))
        else:
            mid = 0.5 * (by[0] + by[1])
            subs = ((bx, (by[0], mid)), (bx, (mid, by[1])))
        for sb in subs:
            v, e = measure(sb)
            heapq.heappush(heap, (-e, sb[0], sb[1], v, e))
        count += 1
    panels = sorted(heap, key=lambda t: (t[1], t[2]))
    value = sum(p[3] for p in panels)
    err_est = sum(p[4] for p in panels)
    if err_est > max(tol, 1e-300) * 50 and count >= max_panels:
        raise DomainError(f"2-D quadrature did not converge: error estimate {err_est:.2e}")
    return value, err_est, count
