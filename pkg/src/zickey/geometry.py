"""Planar geometry for down-closed convex rate regions.

Regions live in the first quadrant, are convex, and contain the axis
projections of every point (down-closure: achievable rate pairs can always
be throttled). Vertices are stored counter-clockwise starting at the
lexicographically smallest vertex, so identical inputs give byte-identical
outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GEOM_TOL = 1e-12   # orientation and self-consistency predicates
REGION_TOL = 1e-9  # cross-module containment queries


class UnboundedRegionError(ValueError):
    """The half-plane set does not bound the region inside the quadrant."""


@dataclass(frozen=True, eq=False)
class Region:
    """Convex down-closed polygon.

    vertices: (n, 2) array, CCW from the lexicographically smallest vertex.
    halfplanes: rows (a, b, c) with unit (a, b), meaning a*x + b*y <= c.
    mode: 'rate' for bit/use axes, 'gdof' for normalized-degrees axes.
    """

    vertices: np.ndarray
    halfplanes: tuple
    mode: str = "rate"

    @property
    def max_x(self) -> float:
        return float(self.vertices[:, 0].max())

    @property
    def max_y(self) -> float:
        return float(self.vertices[:, 1].max())

    @property
    def max_sum(self) -> float:
        return float(self.vertices.sum(axis=1).max())


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain(pts: np.ndarray) -> np.ndarray:
    """Monotone-chain convex hull, collinear points dropped, CCW order."""
    pts = pts + 0.0  # folds -0.0 into 0.0, leaves every other value alone
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    p = pts[order]
    if len(p) > 1:
        keep = np.empty(len(p), dtype=bool)
        keep[0] = True
        keep[1:] = np.any(p[1:] != p[:-1], axis=1)
        p = p[keep]
    if len(p) <= 2:
        return p
    pts_list = [(float(x), float(y)) for x, y in p]
    lower = []
    for q in pts_list:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], q) <= 0.0:
            lower.pop()
        lower.append(q)
    upper = []
    for q in reversed(pts_list):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], q) <= 0.0:
            upper.pop()
        upper.append(q)
    return np.array(lower[:-1] + upper[:-1])


def pareto_filter(pts: np.ndarray) -> np.ndarray:
    """Drop points dominated by another point in both coordinates.

    Dominated points can never be hull vertices of a down-closed region, so
    this is a safe (and large) reduction before hulling swept point clouds.
    """
    if len(pts) == 0:
        return pts
    order = np.argsort(-pts[:, 0])
    p = pts[order]
    ymax = np.maximum.accumulate(p[:, 1])
    keep = np.empty(len(p), dtype=bool)
    keep[0] = True
    keep[1:] = p[1:, 1] > ymax[:-1]
    return p[keep]


def _planes_from_vertices(v: np.ndarray) -> tuple:
    """Outward unit-normal half-planes of a CCW polygon (axes included)."""
    xmax = float(v[:, 0].max()) if len(v) else 0.0
    ymax = float(v[:, 1].max()) if len(v) else 0.0
    if len(v) <= 2:
        # point or axis-aligned segment; down-closure keeps it on the axes
        return ((-1.0, 0.0, 0.0), (0.0, -1.0, 0.0),
                (1.0, 0.0, xmax), (0.0, 1.0, ymax))
    planes = []
    n = len(v)
    for i in range(n):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % n]
        dx, dy = x1 - x0, y1 - y0
        norm = math.hypot(dx, dy)
        if norm <= GEOM_TOL:
            continue
        a, b = dy / norm, -dx / norm
        planes.append((a, b, a * x0 + b * y0))
    return tuple(planes)


def _as_points(items) -> np.ndarray:
    if isinstance(items, Region):
        return items.vertices
    if isinstance(items, np.ndarray):
        arr = np.asarray(items, dtype=float)
        if arr.ndim == 2 and arr.shape[1] == 2:
            return arr
        raise ValueError(f"expected an (n, 2) array, got shape {arr.shape}")
    # iterable mixing Regions, points and point arrays
    blocks = []
    for it in items:
        if isinstance(it, Region):
            blocks.append(it.vertices)
        else:
            a = np.asarray(it, dtype=float)
            blocks.append(a.reshape(-1, 2))
    if not blocks:
        return np.zeros((0, 2))
    return np.vstack(blocks)


def hull(items, mode: str = "rate") -> Region:
    """Down-closed convex hull of points and/or regions.

    Every input point contributes its axis projections (x, 0) and (0, y),
    plus the origin, before hulling; the result is therefore always a valid
    down-closed region.
    """
    pts = _as_points(items)
    if len(pts) == 0:
        raise ValueError("hull needs at least one point")
    if not np.all(np.isfinite(pts)):
        raise ValueError("hull input must be finite")
    if np.any(pts < -REGION_TOL):
        raise ValueError("hull input must lie in the first quadrant")
    pts = np.maximum(pts, 0.0)
    pts = pareto_filter(pts)
    aug = np.vstack([
        pts,
        np.column_stack([pts[:, 0], np.zeros(len(pts))]),
        np.column_stack([np.zeros(len(pts)), pts[:, 1]]),
        [[0.0, 0.0]],
    ])
    v = _chain(aug)
    return Region(vertices=v, halfplanes=_planes_from_vertices(v), mode=mode)


def intersect_halfplanes(planes, mode: str = "rate") -> Region:
    """Region cut out by half-planes a*x + b*y <= c inside the first quadrant.

    x >= 0 and y >= 0 are implicit. Raises UnboundedRegionError when the
    planes fail to bound x or y from above.
    """
    norm_planes = []
    for a, b, c in planes:
        s = math.hypot(a, b)
        if s <= GEOM_TOL:
            raise ValueError(f"degenerate half-plane ({a}, {b}, {c})")
        norm_planes.append((a / s, b / s, c / s))
    if not any(p[0] > GEOM_TOL for p in norm_planes):
        raise UnboundedRegionError("no half-plane bounds x from above")
    if not any(p[1] > GEOM_TOL for p in norm_planes):
        raise UnboundedRegionError("no half-plane bounds y from above")
    allp = norm_planes + [(-1.0, 0.0, 0.0), (0.0, -1.0, 0.0)]

    cand = []
    for i in range(len(allp)):
        a1, b1, c1 = allp[i]
        for j in range(i + 1, len(allp)):
            a2, b2, c2 = allp[j]
            det = a1 * b2 - a2 * b1
            if abs(det) <= GEOM_TOL:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            cand.append((x, y))
    feas = []
    for x, y in cand:
        if all(a * x + b * y <= c + REGION_TOL for a, b, c in allp):
            feas.append((max(x, 0.0), max(y, 0.0)))
    if not feas:
        raise ValueError("half-planes cut an empty region")
    # deterministic dedupe of near-identical corner solves
    feas.sort()
    dedup = [feas[0]]
    for p in feas[1:]:
        if abs(p[0] - dedup[-1][0]) > REGION_TOL or abs(p[1] - dedup[-1][1]) > REGION_TOL:
            dedup.append(p)
    v = _chain(np.array(dedup))
    return Region(vertices=v, halfplanes=_planes_from_vertices(v), mode=mode)


def contains(region: Region, point, tol: float = REGION_TOL) -> bool:
    """Whether a point satisfies every face of the region within tol."""
    x, y = float(point[0]), float(point[1])
    return all(a * x + b * y <= c + tol for a, b, c in region.halfplanes)


def containment_margin(region: Region, points) -> float:
    """Largest face violation over the given points (<= 0 means contained)."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    worst = -math.inf
    for a, b, c in region.halfplanes:
        worst = max(worst, float((a * pts[:, 0] + b * pts[:, 1] - c).max()))
    return worst


def subset_of(inner: Region, outer: Region, tol: float = REGION_TOL) -> bool:
    """Whether every vertex of `inner` lies inside `outer` within tol."""
    return containment_margin(outer, inner.vertices) <= tol


def distance_to_region(region: Region, point) -> float:
    """Euclidean distance from a point to the region (0 when inside)."""
    x, y = float(point[0]), float(point[1])
    if contains(region, (x, y), tol=0.0):
        return 0.0
    v = region.vertices
    if len(v) == 1:
        return math.hypot(x - v[0, 0], y - v[0, 1])
    best = math.inf
    n = len(v)
    for i in range(n):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % n]
        dx, dy = x1 - x0, y1 - y0
        den = dx * dx + dy * dy
        if den <= GEOM_TOL:
            continue
        t = max(0.0, min(1.0, ((x - x0) * dx + (y - y0) * dy) / den))
        best = min(best, math.hypot(x - (x0 + t * dx), y - (y0 + t * dy)))
    return best


def max_y_at_x(region: Region, x: float, tol: float = REGION_TOL):
    """Largest y with (x, y) in the region, or None when x is out of range."""
    if x < -tol or x > region.max_x + tol:
        return None
    y = math.inf
    for a, b, c in region.halfplanes:
        if b > GEOM_TOL:
            y = min(y, (c - a * x) / b)
        elif a > GEOM_TOL and a * x > c + tol:
            return None
    if y is math.inf:
        return None
    return max(y, 0.0)
