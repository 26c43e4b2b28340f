"""Commutator norm bounds and the search for their best constants.

The Frobenius-norm bound ||[X, Y]||_2 <= sqrt(2) ||X||_2 ||Y||_2 is sharp;
its proof runs through an exact algebraic identity, a Cauchy-Schwarz step,
and the density matrix rho = (X*X + XX*) / (2 ||X||_2^2), and sharpens to a
chain through the Cartesian radius of Y.  For general Schatten exponents the
best constant c_{p,q,r} in ||[X, Y]||_p <= c ||X||_q ||Y||_r is only
conjectured: 2^{max(1/p, 1-1/p, 1-1/r)} when p = q.  This module evaluates
the proven bounds on given pairs, produces the exact witness families that
pin the constants from below, and runs a seeded randomized search that
could, in principle, falsify the conjecture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import enclosing_circle
from .linalg import (
    PAULI_X,
    PAULI_Z,
    basis_matrix,
    ginibre,
    random_normal_matrix,
    require_square,
)
from .norms import NormSpec, norm
from .radii import quantum_variance, radius

__all__ = [
    "BoundEntry",
    "BoundReport",
    "WitnessFamily",
    "SearchResult",
    "commutator",
    "proof_identity_residual",
    "rho_from_x",
    "evaluate_bounds",
    "witness_families",
    "search_constant",
    "conjectured_constant",
]


def _inv(p: float) -> float:
    return 0.0 if math.isinf(p) else 1.0 / p


def _check_exponent(name: str, value: float) -> float:
    v = float(value)
    if math.isnan(v) or v < 1.0:
        raise ValueError(f"exponent {name} must satisfy {name} >= 1, got {value!r}")
    return v


def _pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    a = require_square(x)
    b = require_square(y)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a, b


def commutator(x, y) -> np.ndarray:
    """XY - YX."""
    a, b = _pair(x, y)
    return a @ b - b @ a


def proof_identity_residual(x, y) -> float:
    """|  ||XY-YX||_2^2 + ||X*Y+YX*||_2^2 - Tr[(X*X+XX*)(Y*Y+YY*)]  |.

    The three terms satisfy an exact algebraic identity, so the residual is
    pure floating-point noise: at most 1e-9 times the scale of the terms.
    """
    a, b = _pair(x, y)
    comm = a @ b - b @ a
    anti = a.conj().T @ b + b @ a.conj().T
    lhs = float(np.sum(np.abs(comm) ** 2) + np.sum(np.abs(anti) ** 2))
    gram_x = a.conj().T @ a + a @ a.conj().T
    gram_y = b.conj().T @ b + b @ b.conj().T
    rhs = float(np.trace(gram_x @ gram_y).real)
    return abs(lhs - rhs)


def rho_from_x(x) -> np.ndarray:
    """The density matrix (X*X + XX*) / (2 ||X||_2^2)."""
    a = require_square(x)
    fro2 = float(np.sum(np.abs(a) ** 2))
    if math.sqrt(fro2) <= 1e-14:
        raise ValueError("matrix is numerically zero; no density matrix to normalize")
    m = a.conj().T @ a + a @ a.conj().T
    m = 0.5 * (m + m.conj().T)
    return m / (2.0 * fro2)


def _is_normal(a: np.ndarray) -> bool:
    dev = a @ a.conj().T - a.conj().T @ a
    return float(np.abs(dev).max()) <= 1e-12 * (1.0 + float(np.abs(a).max()) ** 2)


def _spectral_radius_center(a: np.ndarray) -> float:
    return enclosing_circle(np.linalg.eigvals(a)).radius


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: float
    holds: bool
    slack: float


@dataclass(frozen=True)
class BoundReport:
    lhs: float
    bounds: list[BoundEntry]
    ratio: float | None


def evaluate_bounds(x, y, p: float, q: float, r: float,
                    slack_tol: float = 1e-9) -> BoundReport:
    """Evaluate every proven upper bound applicable to ||[X, Y]||_p.

    Included where their hypotheses hold: the sqrt(2) Frobenius bound
    (p = q = r = 2), the factor-2 Hoelder bound (1/p = 1/q + 1/r), the
    sharpened Frobenius chain through the Cartesian radius of Y (p = 2),
    and the normal-Y strengthening (p = 2, Y normal).
    """
    a, b = _pair(x, y)
    p = _check_exponent("p", p)
    q = _check_exponent("q", q)
    r = _check_exponent("r", r)
    if _inv(p) > _inv(q) + _inv(r) + 1e-12:
        raise ValueError(
            f"exponents must satisfy 1/p <= 1/q + 1/r, got 1/{p:g} > 1/{q:g} + 1/{r:g}")

    comm = a @ b - b @ a
    lhs = norm(comm, NormSpec.schatten(p))
    denom = norm(a, NormSpec.schatten(q)) * norm(b, NormSpec.schatten(r))
    ratio = lhs / denom if denom >= 1e-14 else None

    def entry(name: str, value: float) -> BoundEntry:
        slack = value - lhs
        return BoundEntry(name, value, slack >= -slack_tol * (1.0 + value), slack)

    bounds: list[BoundEntry] = []
    x2 = norm(a, NormSpec.schatten(2))
    if p == 2.0 and q == 2.0 and r == 2.0:
        bounds.append(entry("frobenius", math.sqrt(2.0) * x2 * norm(b, NormSpec.schatten(2))))
    if abs(_inv(p) - _inv(q) - _inv(r)) <= 1e-12:
        bounds.append(entry("holder", 2.0 * norm(a, NormSpec.schatten(q))
                            * norm(b, NormSpec.schatten(r))))
    if p == 2.0:
        fro_x = float(np.sqrt(np.sum(np.abs(a) ** 2)))
        if fro_x > 1e-14:
            var = quantum_variance(b, rho_from_x(a), "C")
            bounds.append(entry("chain_variance", 2.0 * x2 * math.sqrt(var)))
        bounds.append(entry("chain_cartesian_radius", 2.0 * x2 * radius(b, "C").value))
        bounds.append(entry("chain_kyfan_two", math.sqrt(2.0) * x2
                            * norm(b, NormSpec.kyfanpk(2, 2))))
        bounds.append(entry("chain_schatten", 2.0 ** max(0.5, 1.0 - _inv(p)) * x2
                            * norm(b, NormSpec.schatten(p))))
        if _is_normal(b):
            bounds.append(entry("normal_radius", 2.0 * x2 * _spectral_radius_center(b)))
            bounds.append(entry("normal_kyfan_two", x2 * norm(b, NormSpec.kyfan(2))))
    return BoundReport(lhs, bounds, ratio)


# ---------------------------------------------------------------------------
# witness families


@dataclass(frozen=True)
class WitnessFamily:
    name: str
    x: np.ndarray
    y: np.ndarray
    exact_ratio: float


def _item3_pair() -> tuple[np.ndarray, np.ndarray]:
    s = math.sqrt(2.0)
    x3 = np.array([[s, -2.0 - s], [2.0 - s, -s]], dtype=np.complex128) / 4.0
    y3 = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / s
    return x3, y3


def witness_families(p: float, q: float, r: float) -> list[WitnessFamily]:
    """The structured pairs that force the constants c_{p,q,r} from below.

    Each family's ratio ||[X,Y]||_p / (||X||_q ||Y||_r) has a closed form:
    the anticommuting Pauli pair gives 2^{1+1/p-1/q-1/r}, the matrix-unit
    ladder pair gives 2^{1/p}, and a rank-one contraction paired with a
    unitary gives 2^{1-1/r} (and 2^{1-1/q} with the roles swapped).
    """
    p = _check_exponent("p", p)
    q = _check_exponent("q", q)
    r = _check_exponent("r", r)
    ip, iq, ir = _inv(p), _inv(q), _inv(r)
    x3, y3 = _item3_pair()
    return [
        WitnessFamily("pauli_pair", PAULI_X.copy(), PAULI_Z.copy(),
                      2.0 ** (1.0 + ip - iq - ir)),
        WitnessFamily("ladder_pair", basis_matrix(1, 2, 2), basis_matrix(2, 1, 2),
                      2.0 ** ip),
        WitnessFamily("contraction_unitary", x3, y3, 2.0 ** (1.0 - ir)),
        WitnessFamily("unitary_contraction", y3, x3, 2.0 ** (1.0 - iq)),
    ]


# ---------------------------------------------------------------------------
# randomized constant search


def conjectured_constant(p: float, q: float, r: float) -> float | None:
    """2^{max(1/p, 1-1/p, 1-1/r)} when p = q; no conjecture otherwise."""
    if abs(_inv(p) - _inv(q)) > 1e-12:
        return None
    ip, ir = _inv(p), _inv(r)
    return 2.0 ** max(ip, 1.0 - ip, 1.0 - ir)


@dataclass(frozen=True)
class SearchResult:
    best_ratio: float
    witness_x: np.ndarray
    witness_y: np.ndarray
    witness_source: str
    trials: int
    skipped: int
    conjectured: float | None
    falsification: bool
    dims_tried: tuple[int, ...]
    seed: int
    p: float
    q: float
    r: float


def _trial_ratio(a: np.ndarray, b: np.ndarray, p: float, q: float, r: float) -> float | None:
    denom = norm(a, NormSpec.schatten(q)) * norm(b, NormSpec.schatten(r))
    if denom < 1e-14:
        return None
    return norm(a @ b - b @ a, NormSpec.schatten(p)) / denom


def search_constant(p: float, q: float, r: float, dims, trials: int,
                    seed: int) -> SearchResult:
    """Randomized lower-bound search for the best constant c_{p,q,r}.

    The exact witness families seed the running best; random trials mix
    Ginibre pairs (70%), normal pairs (20%), and Gaussian perturbations of
    the best pair so far (10%).  Deterministic for fixed (seed, dims,
    trials).  A ratio beating the conjectured constant by more than 1e-6
    is flagged as a falsification candidate, never clamped.
    """
    p = _check_exponent("p", p)
    q = _check_exponent("q", q)
    r = _check_exponent("r", r)
    if _inv(p) > _inv(q) + _inv(r) + 1e-12:
        raise ValueError(
            f"exponents must satisfy 1/p <= 1/q + 1/r, got 1/{p:g} > 1/{q:g} + 1/{r:g}")
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 2 for d in dims):
        raise ValueError(f"dims must be integers >= 2, got {dims!r}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    best_ratio = -math.inf
    best_x = best_y = None
    best_source = ""
    for fam in witness_families(p, q, r):
        if fam.exact_ratio > best_ratio:
            best_ratio = fam.exact_ratio
            best_x, best_y = fam.x, fam.y
            best_source = f"family:{fam.name}"

    skipped = 0
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        u = rng.random()
        if u < 0.7 or best_x is None:
            d = int(dims[rng.integers(len(dims))])
            a, b = ginibre(d, rng), ginibre(d, rng)
        elif u < 0.9:
            d = int(dims[rng.integers(len(dims))])
            a = random_normal_matrix(d, rng)
            b = random_normal_matrix(d, rng)
        else:
            d = best_x.shape[0]
            a = best_x + 0.05 * (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
            b = best_y + 0.05 * (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
            a = a / norm(a, NormSpec.schatten(2))
            b = b / norm(b, NormSpec.schatten(2))
        ratio = _trial_ratio(a, b, p, q, r)
        if ratio is None:
            skipped += 1
            continue
        if ratio > best_ratio:
            best_ratio = ratio
            best_x, best_y = a, b
            best_source = f"trial:{t}"

    conj = conjectured_constant(p, q, r)
    falsification = conj is not None and best_ratio > conj + 1e-6
    return SearchResult(best_ratio, best_x, best_y, best_source, trials, skipped,
                        conj, falsification, dims, seed, p, q, r)
