"""Matrix radii and the numerical range.

The radius of a square matrix X with respect to a modulus kind * in
{L, R, C} is

    r_*(X) = min_y || |X - y 1|_* ||_inf,

the smallest spectral norm of a shifted modulus over all complex centers y.
Its square equals the largest quantum variance

    max_rho  Tr[rho |X|_*^2] - |Tr[rho X]|^2

over density matrices rho, and the maximum is always attained at a pure
state.  ``radius`` solves the outer minimization over centers directly
(the objective is convex in y) and certifies the value with an explicit
pure-state witness for the inner maximization, reporting the duality gap.

The numerical range W(X) is sampled by support directions: for each angle
the top eigenpair of the Hermitian part of a rotated copy of X yields one
supporting half plane and one boundary point.  The numerical radius w(X),
the recentered radius min_z w(X - z 1), and a membership test for W(X) are
all driven by the same support function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .geometry import enclosing_circle
from .linalg import (
    MODULUS_KINDS,
    as_density,
    modulus_squared,
    require_square,
)

__all__ = [
    "RadiusResult",
    "NumericalRangeSample",
    "Membership",
    "ConvergenceError",
    "quantum_variance",
    "max_variance",
    "radius",
    "numerical_range",
    "numerical_radius",
    "central_numerical_radius",
    "membership_in_range",
]


class ConvergenceError(RuntimeError):
    """Raised when the center minimization fails to converge."""


def _check_kind(kind: str) -> str:
    if kind not in MODULUS_KINDS:
        raise ValueError(f"kind must be one of {MODULUS_KINDS}, got {kind!r}")
    return kind


# ---------------------------------------------------------------------------
# quantum variance


def quantum_variance(x, rho, kind: str) -> float:
    """Tr[rho |X|_kind^2] - |Tr[rho X]|^2 for a density matrix rho."""
    a = require_square(x)
    _check_kind(kind)
    r = as_density(rho)
    if r.shape != a.shape:
        raise ValueError(f"shape mismatch: X is {a.shape}, rho is {r.shape}")
    second = float(np.trace(r @ modulus_squared(a, kind)).real)
    mean = complex(np.trace(r @ a))
    return max(second - abs(mean) ** 2, 0.0)


# ---------------------------------------------------------------------------
# internals shared by the primal and dual radius computations


def _shifted_modulus_sq(a: np.ndarray, y: complex, kind: str) -> np.ndarray:
    s = a - y * np.eye(a.shape[0], dtype=np.complex128)
    if kind == "L":
        m = s.conj().T @ s
    elif kind == "R":
        m = s @ s.conj().T
    else:
        m = 0.5 * (s.conj().T @ s + s @ s.conj().T)
    return 0.5 * (m + m.conj().T)


def _lam_max(h: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(h)[-1])


def _is_scalar_multiple_of_identity(a: np.ndarray) -> bool:
    d = a.shape[0]
    scale = 1.0 + float(np.abs(a).max())
    off = a - a[0, 0] * np.eye(d)
    return float(np.abs(off).max()) <= 1e-14 * scale


def _support_grid(a: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Angles theta_j = 2 pi j / k and h(theta_j) = lam_max(Re(e^{-i theta} X))."""
    theta = 2.0 * math.pi * np.arange(k) / k
    phase = np.exp(-1j * theta)
    stack = 0.5 * (phase[:, None, None] * a[None] + np.conj(phase)[:, None, None] * a.conj().T[None])
    vals = np.linalg.eigvalsh(stack)[:, -1]
    return theta, vals


def _dual_center(a: np.ndarray, kind: str, extra_starts=()) -> tuple[complex, float]:
    """Minimize lam_max(|X - y 1|_kind^2) over complex centers y (convex)."""
    d = a.shape[0]

    def phi(xy) -> float:
        return _lam_max(_shifted_modulus_sq(a, complex(xy[0], xy[1]), kind))

    starts = [complex(np.trace(a)) / d, 0j]
    theta, vals = _support_grid(a, 16)
    starts.append(complex(np.mean(vals * np.exp(1j * theta))) * 2.0)  # crude range centroid
    starts.extend(complex(s) for s in extra_starts)
    dedup: list[complex] = []
    for s in starts:
        if all(abs(s - t) > 1e-12 for t in dedup):
            dedup.append(s)

    best_y, best_val, converged = dedup[0], math.inf, False
    last = dedup[0]
    for s in dedup:
        res = optimize.minimize(
            phi,
            [s.real, s.imag],
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 4000, "maxfev": 8000},
        )
        last = complex(res.x[0], res.x[1])
        converged = converged or bool(res.success)
        if res.fun < best_val:
            best_val = float(res.fun)
            best_y = last
    if not converged:
        raise ConvergenceError(f"center search did not converge; last iterate {last!r}")
    return best_y, best_val


def _var_value(a: np.ndarray, psi: np.ndarray, kind: str) -> float:
    xp = a @ psi
    if kind == "L":
        second = float(np.vdot(xp, xp).real)
    elif kind == "R":
        xhp = a.conj().T @ psi
        second = float(np.vdot(xhp, xhp).real)
    else:
        xhp = a.conj().T @ psi
        second = 0.5 * float(np.vdot(xp, xp).real + np.vdot(xhp, xhp).real)
    mean = complex(np.vdot(psi, xp))
    return second - abs(mean) ** 2


def _ascend(a: np.ndarray, msq: np.ndarray, psi: np.ndarray, kind: str,
            max_iter: int = 400) -> tuple[float, np.ndarray]:
    """Projected gradient ascent for the pure-state variance, with a
    monotonicity safeguard (Armijo backtracking)."""
    psi = psi / np.linalg.norm(psi)
    f = _var_value(a, psi, kind)
    step = 0.5
    for _ in range(max_iter):
        xp = a @ psi
        xhp = a.conj().T @ psi
        mean = complex(np.vdot(psi, xp))
        grad = msq @ psi - np.conj(mean) * xp - mean * xhp
        grad -= np.vdot(psi, grad) * psi  # tangent projection
        gnorm2 = float(np.vdot(grad, grad).real)
        if gnorm2 <= 1e-22 * (1.0 + abs(f)) ** 2:
            break
        improved = False
        while step > 1e-14:
            cand = psi + step * grad
            cand /= np.linalg.norm(cand)
            fc = _var_value(a, cand, kind)
            if fc >= f + 1e-4 * step * gnorm2:
                psi, f = cand, fc
                step *= 1.5
                improved = True
                break
            step *= 0.5
        if not improved:
            break
    return f, psi


def _eigenspace_polish(a: np.ndarray, y: complex, lam1: float, kind: str,
                       seed: int) -> tuple[float, np.ndarray] | None:
    """In a degenerate top eigenspace of the shifted modulus, hunt for a unit
    vector whose expectation of X lands on the center y; its variance then
    meets the dual value exactly."""
    msq = _shifted_modulus_sq(a, y, kind)
    w, v = np.linalg.eigh(msq)
    scale = 1.0 + abs(w[-1])
    top = np.flatnonzero(w >= w[-1] - 1e-8 * scale)
    if top.size < 2:
        return None
    sub = v[:, top]
    xt = sub.conj().T @ a @ sub
    m = xt.shape[0]

    def off(u_flat) -> float:
        u = u_flat[:m] + 1j * u_flat[m:]
        n = np.linalg.norm(u)
        if n < 1e-12:
            return 1.0
        u = u / n
        return abs(complex(np.vdot(u, xt @ u)) - y) ** 2

    rng = np.random.default_rng([seed, 0xE16])
    best = None
    for _ in range(6):
        u0 = rng.standard_normal(2 * m)
        res = optimize.minimize(off, u0, method="Nelder-Mead",
                                options={"xatol": 1e-12, "fatol": 1e-24,
                                         "maxiter": 4000, "maxfev": 8000})
        if best is None or res.fun < best.fun:
            best = res
        if best.fun < 1e-22:
            break
    u = best.x[:m] + 1j * best.x[m:]
    u /= np.linalg.norm(u)
    psi = sub @ u
    return _var_value(a, psi, kind), psi


def max_variance(x, kind: str, restarts: int = 20, seed: int = 0,
                 _dual: tuple[complex, float] | None = None) -> tuple[float, np.ndarray]:
    """Largest quantum variance of X over states, with a pure witness.

    The value equals the squared radius r_kind(X)^2; the returned unit
    vector attains it (up to the ascent tolerance).
    """
    a = require_square(x)
    _check_kind(kind)
    d = a.shape[0]
    if _is_scalar_multiple_of_identity(a):
        e1 = np.zeros(d, dtype=np.complex128)
        e1[0] = 1.0
        return 0.0, e1
    if _dual is None:
        _dual = _dual_center(a, kind)
    y_star, lam1 = _dual
    msq = modulus_squared(a, kind)
    msq_shift = _shifted_modulus_sq(a, y_star, kind)

    starts = [np.linalg.eigh(msq)[1][:, -1], np.linalg.eigh(msq_shift)[1][:, -1]]
    for i in range(max(restarts - len(starts), 0)):
        rng = np.random.default_rng([seed, i])
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        starts.append(v / np.linalg.norm(v))

    best_f, best_psi = -math.inf, starts[0]
    for psi0 in starts:
        f, psi = _ascend(a, msq, psi0, kind)
        if f > best_f:
            best_f, best_psi = f, psi
    polished = _eigenspace_polish(a, y_star, lam1, kind, seed)
    if polished is not None and polished[0] > best_f:
        best_f, best_psi = polished
    return max(best_f, 0.0), best_psi


@dataclass(frozen=True)
class RadiusResult:
    kind: str
    y_star: complex
    value: float
    primal_value: float
    witness: np.ndarray

    @property
    def gap(self) -> float:
        return abs(self.value**2 - self.primal_value)


def radius(x, kind: str, restarts: int = 8, seed: int = 0) -> RadiusResult:
    """r_kind(X): minimize the spectral norm of the shifted modulus over
    centers, certified by a matching pure-state variance witness."""
    a = require_square(x)
    _check_kind(kind)
    d = a.shape[0]
    if _is_scalar_multiple_of_identity(a):
        e1 = np.zeros(d, dtype=np.complex128)
        e1[0] = 1.0
        return RadiusResult(kind, complex(a[0, 0]), 0.0, 0.0, e1)
    y_star, lam1 = _dual_center(a, kind)
    primal, witness = max_variance(a, kind, restarts=restarts, seed=seed,
                                   _dual=(y_star, lam1))
    return RadiusResult(kind, y_star, math.sqrt(max(lam1, 0.0)), primal, witness)


# ---------------------------------------------------------------------------
# numerical range


class NumericalRangeSample(NamedTuple):
    angles: np.ndarray
    support_values: np.ndarray
    boundary_points: np.ndarray


class Membership(NamedTuple):
    member: bool
    margin: float


def numerical_range(x, k: int = 64) -> NumericalRangeSample:
    """Support sample of W(X) at k equispaced angles.

    support_values[j] is the largest eigenvalue of Re(e^{i theta_j} X) and
    boundary_points[j] = <v, X v> for the corresponding top eigenvector, a
    point of W(X) on the supporting line.
    """
    a = require_square(x)
    if k < 8:
        raise ValueError(f"need at least 8 angles, got {k}")
    theta = 2.0 * math.pi * np.arange(k) / k
    phase = np.exp(1j * theta)
    stack = 0.5 * (phase[:, None, None] * a[None] + np.conj(phase)[:, None, None] * a.conj().T[None])
    vals, vecs = np.linalg.eigh(stack)
    top = vecs[:, :, -1]
    boundary = np.einsum("ki,ij,kj->k", top.conj(), a, top)
    return NumericalRangeSample(theta, vals[:, -1], boundary)


def membership_in_range(x, z: complex, angles: int = 360) -> Membership:
    """Support-function membership test: z is in W(X) exactly when
    Re(e^{i phi} z) never exceeds lam_max(Re(e^{i phi} X))."""
    a = require_square(x)
    if angles < 8:
        raise ValueError(f"need at least 8 angles, got {angles}")
    theta = 2.0 * math.pi * np.arange(angles) / angles
    phase = np.exp(1j * theta)
    stack = 0.5 * (phase[:, None, None] * a[None] + np.conj(phase)[:, None, None] * a.conj().T[None])
    support = np.linalg.eigvalsh(stack)[:, -1]
    margin = float((support - (phase * complex(z)).real).min())
    return Membership(margin >= -1e-8, margin)


def _h_single(a: np.ndarray, theta: float) -> float:
    phase = np.exp(-1j * theta)
    return _lam_max(0.5 * (phase * a + np.conj(phase) * a.conj().T))


def _refine_peaks(a: np.ndarray, theta: np.ndarray, g: np.ndarray, shift: complex,
                  n_peaks: int, xatol: float) -> float:
    """Sharpen the largest local maxima of theta -> h(theta) - Re(e^{-i theta} shift)."""
    k = theta.size
    best = float(g.max())
    left = np.roll(g, 1)
    right = np.roll(g, -1)
    peaks = np.flatnonzero((g >= left) & (g >= right))
    peaks = peaks[np.argsort(g[peaks])[::-1][:n_peaks]]
    two_pi = 2.0 * math.pi
    for j in peaks:
        lo = theta[j] - two_pi / k
        hi = theta[j] + two_pi / k

        def neg(t: float) -> float:
            return -(_h_single(a, t) - (np.exp(-1j * t) * shift).real)

        res = optimize.minimize_scalar(neg, bounds=(lo, hi), method="bounded",
                                       options={"xatol": xatol})
        best = max(best, -float(res.fun))
    return best


def numerical_radius(x, grid: int = 360) -> float:
    """w(X) = max_theta lam_max(Re(e^{-i theta} X)), grid plus local polish."""
    a = require_square(x)
    if grid < 8:
        raise ValueError(f"need at least 8 angles, got {grid}")
    theta, vals = _support_grid(a, grid)
    return _refine_peaks(a, theta, vals, 0j, n_peaks=3, xatol=1e-10)


def central_numerical_radius(x, boundary_k: int = 1024) -> tuple[complex, float]:
    """min_z w(X - z 1) with its optimal recentering z.

    Started from the center of the smallest circle enclosing a dense
    boundary sample of W(X), then polished by direct minimization of the
    exact recentered numerical radius.
    """
    a = require_square(x)
    if _is_scalar_multiple_of_identity(a):
        return complex(a[0, 0]), 0.0
    sample = numerical_range(a, boundary_k)
    circ = enclosing_circle(sample.boundary_points)
    theta, h = _support_grid(a, boundary_k)

    def w_of(xy) -> float:
        z = complex(xy[0], xy[1])
        g = h - (np.exp(-1j * theta) * z).real
        return _refine_peaks(a, theta, g, z, n_peaks=3, xatol=1e-7)

    z0 = circ.center
    spread = max(1e-3, 1e-3 * circ.radius)
    simplex = np.array([[z0.real, z0.imag],
                        [z0.real + spread, z0.imag],
                        [z0.real, z0.imag + spread]])
    res = optimize.minimize(w_of, [z0.real, z0.imag], method="Nelder-Mead",
                            options={"xatol": 1e-9, "fatol": 1e-12,
                                     "initial_simplex": simplex,
                                     "maxiter": 600, "maxfev": 900})
    z_best = complex(res.x[0], res.x[1])
    val = float(res.fun)
    start_val = w_of([z0.real, z0.imag])
    if start_val < val:
        z_best, val = z0, start_val
    return z_best, val
