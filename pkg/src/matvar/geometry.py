"""Planar geometry of finite point sets in the complex plane.

Variance of a weighted point set, the (max - min)^2 / 4 bound on the variance
of bounded real samples, the smallest enclosing circle (Welzl's randomized
incremental algorithm), the variance-maximizing distribution over a point
set (supported on at most three boundary points of the enclosing circle),
and the Chebyshev-like center minimizing the power mean of the two largest
distances.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from scipy import optimize

__all__ = [
    "Circle",
    "variance",
    "murthy_sethi_bound",
    "enclosing_circle",
    "boundary_support",
    "max_variance_distribution",
    "two_largest_radius",
    "hull_membership_margin",
]

_SHUFFLE_SEED = 0x5EED


class Circle(NamedTuple):
    center: complex
    radius: float


def _as_points(points) -> np.ndarray:
    a = np.asarray(points, dtype=np.complex128).reshape(-1)
    if a.size < 1:
        raise ValueError("need at least one point")
    if not np.isfinite(a).all():
        raise ValueError("points must be finite")
    return a


def _as_probs(probs, n: int) -> np.ndarray:
    p = np.asarray(probs, dtype=np.float64).reshape(-1)
    if p.size != n:
        raise ValueError(f"{n} points but {p.size} probabilities")
    if p.min() < -1e-12:
        raise ValueError(f"negative probability {p.min():.3e}")
    p = np.clip(p, 0.0, None)
    s = p.sum()
    if abs(s - 1.0) > 1e-10:
        raise ValueError(f"probabilities sum to {s!r}, not 1")
    return p / s


def variance(points, probs) -> float:
    """sum_i p_i |x_i - mean|^2 for complex points x with weights p."""
    x = _as_points(points)
    p = _as_probs(probs, x.size)
    mu = np.dot(p, x)
    return max(float(np.dot(p, np.abs(x - mu) ** 2)), 0.0)


def murthy_sethi_bound(lo: float, hi: float) -> float:
    """Largest possible variance of a real sample confined to [lo, hi]."""
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise ValueError(f"need finite bounds with lo <= hi, got ({lo!r}, {hi!r})")
    return 0.25 * (hi - lo) ** 2


# ---------------------------------------------------------------------------
# smallest enclosing circle


def _cross(p: complex, q: complex, x: complex) -> float:
    # twice the signed area of the triangle (p, q, x)
    return float(((q - p).conjugate() * (x - p)).imag)


def _circumcircle(a: complex, b: complex, c: complex) -> Circle | None:
    u = b - a
    v = c - a
    det = u.real * v.imag - u.imag * v.real
    scale = max(abs(u), abs(v), 1e-300)
    if abs(det) <= 1e-14 * scale * scale:
        return None  # collinear triple
    bu = 0.5 * (u.real * u.real + u.imag * u.imag)
    bv = 0.5 * (v.real * v.real + v.imag * v.imag)
    wx = (bu * v.imag - bv * u.imag) / det
    wy = (u.real * bv - v.real * bu) / det
    center = a + complex(wx, wy)
    return Circle(center, max(abs(a - center), abs(b - center), abs(c - center)))


def _diameter_circle(a: complex, b: complex) -> Circle:
    center = 0.5 * (a + b)
    return Circle(center, max(abs(a - center), abs(b - center)))


def _inside(x: complex, c: Circle) -> bool:
    return abs(x - c.center) <= c.radius * (1.0 + 1e-14) + 1e-14


def _circle_two_fixed(pts: np.ndarray, p: complex, q: complex) -> Circle:
    # smallest circle through p and q containing pts; track the extreme
    # circumcircles on each side of the chord pq
    base = _diameter_circle(p, q)
    left: Circle | None = None
    right: Circle | None = None
    left_key = right_key = 0.0
    for s in pts:
        if _inside(s, base):
            continue
        side = _cross(p, q, s)
        circ = _circumcircle(p, q, s)
        if circ is None:
            continue
        key = _cross(p, q, circ.center)
        if side > 0.0 and (left is None or key > left_key):
            left, left_key = circ, key
        elif side < 0.0 and (right is None or key < right_key):
            right, right_key = circ, key
    if left is None and right is None:
        return base
    if left is None:
        return right  # type: ignore[return-value]
    if right is None:
        return left
    return left if left.radius <= right.radius else right


def _circle_one_fixed(pts: np.ndarray, p: complex) -> Circle:
    c = Circle(p, 0.0)
    for j, q in enumerate(pts):
        if not _inside(q, c):
            if c.radius == 0.0:
                c = _diameter_circle(p, q)
            else:
                c = _circle_two_fixed(pts[: j + 1], p, q)
    return c


def enclosing_circle(points) -> Circle:
    """Smallest circle containing all points (unique; found in randomized
    incremental fashion but with a fixed shuffle so calls are deterministic)."""
    pts = _as_points(points)
    order = np.random.default_rng(_SHUFFLE_SEED).permutation(pts.size)
    shuffled = pts[order]
    c = Circle(complex(shuffled[0]), 0.0)
    for i, p in enumerate(shuffled):
        if not _inside(p, c):
            c = _circle_one_fixed(shuffled[:i], complex(p))
    # report the exact covering radius of the computed center
    return Circle(c.center, float(np.abs(pts - c.center).max()))


def boundary_support(points, circle: Circle, tol: float = 1e-9) -> np.ndarray:
    """Indices of points within tol (relative) of the circle boundary."""
    pts = _as_points(points)
    scale = 1.0 + circle.radius
    return np.flatnonzero(np.abs(np.abs(pts - circle.center) - circle.radius) <= tol * scale)


# ---------------------------------------------------------------------------
# max-variance distribution


def _pair_weights(points: np.ndarray, idx: np.ndarray, c: complex, tol: float):
    for ii in range(idx.size):
        for jj in range(ii + 1, idx.size):
            a, b = points[idx[ii]], points[idx[jj]]
            if abs(a + b - 2.0 * c) <= tol:
                return [(idx[ii], 0.5), (idx[jj], 0.5)]
    return None


def _triple_weights(points: np.ndarray, idx: np.ndarray, c: complex, tol: float):
    for ii in range(idx.size):
        for jj in range(ii + 1, idx.size):
            for kk in range(jj + 1, idx.size):
                a, b, d = (points[idx[t]] for t in (ii, jj, kk))
                u, v = b - a, d - a
                det = u.real * v.imag - u.imag * v.real
                if abs(det) <= 1e-14 * (1.0 + abs(u)) * (1.0 + abs(v)):
                    continue
                w = c - a
                s = (w.real * v.imag - w.imag * v.real) / det
                t = (u.real * w.imag - u.imag * w.real) / det
                lams = np.array([1.0 - s - t, s, t])
                if lams.min() >= -1e-9:
                    lams = np.clip(lams, 0.0, None)
                    lams /= lams.sum()
                    return [(idx[t2], lams[pos]) for pos, t2 in enumerate((ii, jj, kk))]
    return None


def max_variance_distribution(points) -> tuple[np.ndarray, float]:
    """Probabilities maximizing the variance over a fixed point set.

    The maximum equals the squared radius of the smallest enclosing circle,
    attained by a distribution on at most three boundary points whose mean
    is the circle center.
    """
    pts = _as_points(points)
    n = pts.size
    if n == 1:
        return np.array([1.0]), 0.0
    circ = enclosing_circle(pts)
    if circ.radius <= 1e-15 * (1.0 + abs(circ.center)):
        out = np.zeros(n)
        out[0] = 1.0
        return out, 0.0
    probs = np.zeros(n)
    tol = 1e-9 * (1.0 + circ.radius)
    for widen in range(4):
        idx = boundary_support(pts, circ, tol=1e-9 * 10.0**widen)
        chosen = _pair_weights(pts, idx, circ.center, tol * 10.0**widen)
        if chosen is None:
            chosen = _triple_weights(pts, idx, circ.center, tol * 10.0**widen)
        if chosen is not None:
            for i, w in chosen:
                probs[i] = w
            return probs, circ.radius**2
    raise RuntimeError("could not locate a boundary distribution with the circle center as mean")


# ---------------------------------------------------------------------------
# two-largest-distance radius


def _two_largest_mean(dists: np.ndarray, p: float) -> float:
    if dists.size < 2:
        raise ValueError("need at least two points")
    two = np.partition(dists, dists.size - 2)[-2:]
    top = float(two.max())
    if math.isinf(p):
        return top
    if top == 0.0:
        return 0.0
    return top * (0.5 * ((two[0] / top) ** p + (two[1] / top) ** p)) ** (1.0 / p)


def two_largest_radius(points, p: float) -> tuple[complex, float]:
    """Minimize over centers z the p-mean of the two largest |x_i - z|.

    For every p >= 1 the minimum equals the radius of the smallest enclosing
    circle and is attained at its center.
    """
    pts = _as_points(points)
    if pts.size < 2:
        raise ValueError("need at least two points")
    if not (p >= 1.0):
        raise ValueError(f"power mean exponent must be >= 1, got {p!r}")

    def objective(xy):
        z = complex(xy[0], xy[1])
        return _two_largest_mean(np.abs(pts - z), p)

    circ = enclosing_circle(pts)
    centroid = complex(pts.mean())
    best_z, best_val = circ.center, objective([circ.center.real, circ.center.imag])
    for start in (circ.center, centroid):
        res = optimize.minimize(
            objective,
            [start.real, start.imag],
            method="Nelder-Mead",
            options={"xatol": 1e-11, "fatol": 1e-13, "maxiter": 2000, "maxfev": 4000},
        )
        if res.fun < best_val:
            best_val = float(res.fun)
            best_z = complex(res.x[0], res.x[1])
    return best_z, best_val


# ---------------------------------------------------------------------------
# convex hull membership (support function test)


def hull_membership_margin(z: complex, points, angles: int = 720) -> float:
    """min over directions of (support of points) - (support of z).

    Nonnegative (up to grid resolution) exactly when z lies in the convex
    hull of the points.
    """
    pts = _as_points(points)
    theta = np.linspace(0.0, 2.0 * math.pi, angles, endpoint=False)
    phase = np.exp(-1j * theta)
    support = (phase[:, None] * pts[None, :]).real.max(axis=1)
    return float((support - (phase * z).real).min())
