"""Shared frame conventions and small geometry kernels.

Frame convention used across the package (vehicle frame and ego frame):
+x points lateral-left, +y points longitudinal-forward, +z points up.
Azimuths (bearings) are measured from the +y axis, positive toward +x,
so 0 deg is dead ahead and +90 deg is directly left.

World headings are radians CCW from the world +x axis (atan2 convention).
"""

from __future__ import annotations

import numpy as np

EPS = 1e-9


def deg2rad(deg):
    return np.asarray(deg, dtype=float) * (np.pi / 180.0)


def rad2deg(rad):
    return np.asarray(rad, dtype=float) * (180.0 / np.pi)


def wrap_angle(rad):
    """Wrap an angle (radians) into (-pi, pi]."""
    a = np.mod(np.asarray(rad, dtype=float) + np.pi, 2.0 * np.pi) - np.pi
    return np.where(a == -np.pi, np.pi, a) if np.ndim(a) else (np.pi if a == -np.pi else float(a))


def bearing_to_direction(azimuth_deg: float, elevation_deg: float = 0.0) -> np.ndarray:
    """Unit 3-vector for a bearing: azimuth from +y toward +x, elevation from the ground plane."""
    az = float(deg2rad(azimuth_deg))
    el = float(deg2rad(elevation_deg))
    return np.array([np.sin(az) * np.cos(el), np.cos(az) * np.cos(el), np.sin(el)])


def bearing_of(xy) -> float:
    """Azimuth in degrees of a planar point (x lateral, y forward); 0 = ahead, + = left."""
    x, y = float(xy[0]), float(xy[1])
    return float(rad2deg(np.arctan2(x, y)))


def sensor_axes(azimuth_deg: float, elevation_deg: float, roll_deg: float) -> np.ndarray:
    """Orthonormal triad (boresight, right, up) rows for a sensor orientation.

    Roll rotates the right/up pair about the boresight (positive = CCW looking
    along the boresight). Valid for |elevation| < 90 deg.
    """
    az = float(deg2rad(azimuth_deg))
    el = float(deg2rad(elevation_deg))
    d = np.array([np.sin(az) * np.cos(el), np.cos(az) * np.cos(el), np.sin(el)])
    # right = boresight x world-up, then up completes the triad
    r = np.cross(d, np.array([0.0, 0.0, 1.0]))
    nr = np.linalg.norm(r)
    if nr < EPS:
        raise ValueError("degenerate sensor orientation: boresight parallel to +z")
    r /= nr
    u = np.cross(r, d)
    if abs(roll_deg) > EPS:
        ph = float(deg2rad(roll_deg))
        r, u = np.cos(ph) * r + np.sin(ph) * u, -np.sin(ph) * r + np.cos(ph) * u
    return np.vstack([d, r, u])


def world_to_ego(points_xy: np.ndarray, ego_xy, ego_heading: float) -> np.ndarray:
    """Rotate/translate world-frame planar points into the ego frame.

    ego_heading is the world heading (radians, CCW from world +x) of the ego
    forward axis. Output columns are (lateral-left, forward).
    """
    p = np.atleast_2d(np.asarray(points_xy, dtype=float)) - np.asarray(ego_xy, dtype=float)
    c, s = np.cos(ego_heading), np.sin(ego_heading)
    fwd = p[:, 0] * c + p[:, 1] * s
    left = -p[:, 0] * s + p[:, 1] * c
    out = np.column_stack([left, fwd])
    return out if np.ndim(points_xy) > 1 else out[0]


def polygon_area(vertices: np.ndarray) -> float:
    """Signed shoelace area (positive = CCW)."""
    v = np.asarray(vertices, dtype=float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def polygon_is_simple(vertices: np.ndarray) -> bool:
    """True if no two non-adjacent edges intersect (O(M^2), M is small here)."""
    v = np.asarray(vertices, dtype=float)
    m = len(v)
    if m < 3:
        return False
    edges = [(v[i], v[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if _segments_intersect(edges[i][0], edges[i][1], edges[j][0], edges[j][1]):
                return False
    return True


def _segments_intersect(p1, p2, q1, q2) -> bool:
    d1 = np.cross(q2 - q1, p1 - q1)
    d2 = np.cross(q2 - q1, p2 - q1)
    d3 = np.cross(p2 - p1, q1 - p1)
    d4 = np.cross(p2 - p1, q2 - p1)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)):
        return True
    return False


def points_in_polygon(points: np.ndarray, vertices: np.ndarray, boundary_tol: float = 1e-9) -> np.ndarray:
    """Vectorized point-in-polygon test; boundary points count as inside.

    Crossing-number parity plus an explicit on-edge test, so the result is
    invariant under vertex-order reversal.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    v = np.asarray(vertices, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    inside = np.zeros(len(pts), dtype=bool)
    on_edge = np.zeros(len(pts), dtype=bool)
    m = len(v)
    for i in range(m):
        x1, y1 = v[i]
        x2, y2 = v[(i + 1) % m]
        # parity flip where the horizontal ray from the point crosses the edge
        crosses = (y1 > y) != (y2 > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
        inside ^= crosses & (x < xint)
        # on-edge test: zero cross product and inside the segment bbox
        ex, ey = x2 - x1, y2 - y1
        cross = ex * (y - y1) - ey * (x - x1)
        seg_len2 = ex * ex + ey * ey
        if seg_len2 < boundary_tol:
            on_edge |= (np.abs(x - x1) < boundary_tol) & (np.abs(y - y1) < boundary_tol)
            continue
        t = ((x - x1) * ex + (y - y1) * ey) / seg_len2
        on_edge |= (np.abs(cross) < boundary_tol * np.sqrt(seg_len2)) & (t >= -boundary_tol) & (t <= 1 + boundary_tol)
    result = inside | on_edge
    return result if np.ndim(points) > 1 else bool(result[0])


def polygon_grid_samples(vertices: np.ndarray, step: float) -> np.ndarray:
    """Deterministic sample grid (cell centers, `step` spacing) inside a polygon."""
    v = np.asarray(vertices, dtype=float)
    xmin, ymin = v.min(axis=0)
    xmax, ymax = v.max(axis=0)
    xs = np.arange(xmin + step / 2.0, xmax, step)
    ys = np.arange(ymin + step / 2.0, ymax, step)
    if len(xs) == 0 or len(ys) == 0:
        return np.empty((0, 2))
    gx, gy = np.meshgrid(xs, ys)
    pts = np.column_stack([gx.ravel(), gy.ravel()])
    return pts[points_in_polygon(pts, v)]


def segment_hits_rectangle(p0, p1, center, heading: float, length: float, width: float,
                           shrink: float = 1e-6) -> bool:
    """True if the planar segment p0->p1 passes through an oriented rectangle.

    heading is radians CCW from +x of the rectangle's long axis. Endpoints
    exactly on the boundary do not count (shrink guards the target's own
    footprint corner cases).
    """
    c, s = np.cos(heading), np.sin(heading)
    # into rectangle frame
    def to_local(p):
        d = np.asarray(p, dtype=float) - np.asarray(center, dtype=float)
        return np.array([d[0] * c + d[1] * s, -d[0] * s + d[1] * c])

    a = to_local(p0)
    b = to_local(p1)
    hx, hy = length / 2.0 - shrink, width / 2.0 - shrink
    # Liang-Barsky clip of the segment against the axis-aligned box
    d = b - a
    t0, t1 = 0.0, 1.0
    for axis, h in ((0, hx), (1, hy)):
        if abs(d[axis]) < EPS:
            if abs(a[axis]) > h:
                return False
            continue
        ta = (-h - a[axis]) / d[axis]
        tb = (h - a[axis]) / d[axis]
        ta, tb = min(ta, tb), max(ta, tb)
        t0, t1 = max(t0, ta), min(t1, tb)
        if t0 > t1:
            return False
    return True
