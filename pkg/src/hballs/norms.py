"""Bloch, weighted-Lipschitz and Lipschitz-number functionals.

All sup-type functionals are reported as SupEstimate values: the maximum
of the functional over an explicit sample set, together with the witness
sample attaining it.  An estimate is a certified lower bound of the true
supremum; nothing here claims the supremum itself.

Sample sets combine a radial grid (the Bloch weight peaks at the origin)
with directions from a deterministic low-discrepancy sphere sequence,
plus seeded uniform pairs.  Ties in the maximum break toward the lowest
sample index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .calculus import wirtinger_fd_many, operator_norm
from .errors import DegeneratePair, DimensionMismatch, EmptySampleSet
from .geometry import coords_of, hyperbolic_distance
from .quadrature import STREAM_PAIRS, rng_stream

__all__ = [
    "SupEstimate",
    "ball_grid",
    "pair_samples",
    "near_diagonal_pairs",
    "bloch_seminorm",
    "alpha_bloch_seminorm",
    "weighted_lipschitz",
    "weighted_lipschitz_sup",
    "lipschitz_number",
]

DEFAULT_RADII = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7)


@dataclass(frozen=True)
class SupEstimate:
    """Lower bound for a sup-type functional, with its attaining witness."""

    value: float
    witness: Any
    witness_index: int
    sample_spec: dict = field(default_factory=dict)


def _halton(index: np.ndarray, base: int) -> np.ndarray:
    """Radical-inverse (van der Corput) sequence in the given base."""
    out = np.zeros(len(index), dtype=float)
    f = 1.0 / base
    i = index.copy()
    while np.any(i > 0):
        out += f * (i % base)
        i //= base
        f /= base
    return out


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


def sphere_directions(n: int, count: int) -> np.ndarray:
    """Deterministic low-discrepancy directions on the unit sphere of C^n.

    n = 1 uses equally spaced angles; higher dimensions map Halton points
    through Box-Muller to Gaussians and normalize.
    """
    if n == 1:
        return np.exp(2j * np.pi * np.arange(count) / count).reshape(-1, 1)
    dims = 2 * n
    idx = np.arange(1, count + 1)
    u = np.stack([_halton(idx, _PRIMES[d % len(_PRIMES)]) for d in range(dims)], axis=1)
    u = np.clip(u, 1e-12, 1 - 1e-12)
    # Box-Muller on consecutive column pairs
    g = np.empty_like(u)
    for d in range(0, dims, 2):
        r = np.sqrt(-2.0 * np.log(u[:, d]))
        g[:, d] = r * np.cos(2.0 * np.pi * u[:, d + 1])
        g[:, d + 1] = r * np.sin(2.0 * np.pi * u[:, d + 1])
    z = g[:, :n] + 1j * g[:, n:]
    return z / np.linalg.norm(z, axis=1)[:, None]


def ball_grid(n: int, radii=DEFAULT_RADII, n_dirs: int = 16) -> np.ndarray:
    """Tensor grid radii x directions inside the ball (origin kept once)."""
    dirs = sphere_directions(n, n_dirs)
    pts = [np.zeros((1, n), dtype=complex)] if 0.0 in radii else []
    for r in radii:
        if r == 0.0:
            continue
        pts.append(r * dirs)
    return np.concatenate(pts, axis=0)


def uniform_ball(n: int, count: int, rng: np.random.Generator, rmax: float) -> np.ndarray:
    g = rng.standard_normal((count, 2 * n))
    z = g[:, :n] + 1j * g[:, n:]
    z /= np.linalg.norm(g, axis=1)[:, None]
    radii = rmax * rng.random(count) ** (1.0 / (2 * n))
    return z * radii[:, None]


def pair_samples(n: int, count: int, seed: int, rmax: float = 0.7) -> np.ndarray:
    """Seeded uniform pairs inside the ball of radius rmax, shape (P, 2, n)."""
    rng = rng_stream(seed, STREAM_PAIRS)
    z = uniform_ball(n, count, rng, rmax)
    w = uniform_ball(n, count, rng, rmax)
    keep = np.linalg.norm(z - w, axis=1) > 1e-9
    return np.stack([z[keep], w[keep]], axis=1)


def near_diagonal_pairs(points: np.ndarray, delta: float = 1e-4,
                        n_phases: int = 32) -> np.ndarray:
    """Pairs (z, z + delta * phase * e_1) probing the derivative limit."""
    points = np.atleast_2d(points)
    n = points.shape[1]
    phases = np.exp(2j * np.pi * np.arange(n_phases) / n_phases)
    out = []
    for z in points:
        for ph in phases:
            w = z.copy()
            w[0] += delta * ph
            if np.linalg.norm(w) < 1.0:
                out.append((z, w))
    return np.asarray(out)


def _argmax_estimate(values: np.ndarray, witnesses, spec: dict) -> SupEstimate:
    if len(values) == 0:
        raise EmptySampleSet("sup estimate over an empty sample set")
    idx = int(np.argmax(values))   # lowest index wins ties
    return SupEstimate(float(values[idx]), witnesses[idx], idx, spec)


def _points_array(samples) -> np.ndarray:
    """Coerce an (S, n) array or a sequence of points/BallPoints."""
    if isinstance(samples, np.ndarray):
        return np.atleast_2d(np.asarray(samples, dtype=complex))
    if len(samples) == 0:
        raise EmptySampleSet("sup estimate over an empty sample set")
    return np.atleast_2d(np.asarray([coords_of(p) for p in samples], dtype=complex))


def bloch_seminorm(f, samples, step_factor: float = 1e-4) -> SupEstimate:
    """max over samples of (1-|z|^2) (|grad f| + |grad fbar|), scalar f."""
    samples = _points_array(samples)
    if len(samples) == 0:
        raise EmptySampleSet("sup estimate over an empty sample set")
    data = wirtinger_fd_many(f, samples, step_factor)
    weights = 1.0 - np.linalg.norm(samples, axis=1) ** 2
    values = np.array([w * sum(d.gradient_norms()) for w, d in zip(weights, data)])
    spec = {"kind": "bloch", "samples": len(samples), "step_factor": step_factor}
    return _argmax_estimate(values, samples, spec)


def alpha_bloch_seminorm(f, alpha: float, samples,
                         step_factor: float = 1e-4) -> SupEstimate:
    """max over samples of (1-|z|^2)^alpha (|f_z| + |f_zbar|), operator norms."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    samples = _points_array(samples)
    if len(samples) == 0:
        raise EmptySampleSet("sup estimate over an empty sample set")
    data = wirtinger_fd_many(f, samples, step_factor)
    weights = (1.0 - np.linalg.norm(samples, axis=1) ** 2) ** alpha
    values = np.array([
        w * (operator_norm(d.fz) + operator_norm(d.fzbar))
        for w, d in zip(weights, data)
    ])
    spec = {"kind": "alpha-bloch", "alpha": alpha, "samples": len(samples),
            "step_factor": step_factor}
    return _argmax_estimate(values, samples, spec)


def weighted_lipschitz(f, z, w) -> float:
    """(1-|z|^2)^(1/2) (1-|w|^2)^(1/2) |f(z)-f(w)| / |z-w|."""
    zc, wc = coords_of(z), coords_of(w)
    gap = float(np.linalg.norm(zc - wc))
    if gap == 0.0:
        raise DegeneratePair("weighted Lipschitz quotient needs z != w")
    fz, fw = (np.asarray(f(np.stack([zc, wc]))).reshape(2, -1))
    val = float(np.linalg.norm(fz - fw))
    wz = np.sqrt(1.0 - float(np.linalg.norm(zc)) ** 2)
    ww = np.sqrt(1.0 - float(np.linalg.norm(wc)) ** 2)
    return wz * ww * val / gap


def weighted_lipschitz_sup(f, pairs: np.ndarray) -> SupEstimate:
    """max of the weighted Lipschitz quotient over sampled pairs."""
    pairs = np.asarray(pairs, dtype=complex)
    if pairs.size == 0:
        raise EmptySampleSet("sup estimate over an empty sample set")
    z, w = pairs[:, 0, :], pairs[:, 1, :]
    gaps = np.linalg.norm(z - w, axis=1)
    if np.any(gaps == 0.0):
        raise DegeneratePair("weighted Lipschitz quotient needs z != w")
    flat = np.concatenate([z, w], axis=0)
    vals = np.asarray(f(flat))
    vals = vals.reshape(len(flat), -1)
    fz, fw = vals[: len(z)], vals[len(z):]
    diff = np.linalg.norm(fz - fw, axis=1)
    wz = np.sqrt(1.0 - np.linalg.norm(z, axis=1) ** 2)
    ww = np.sqrt(1.0 - np.linalg.norm(w, axis=1) ** 2)
    values = wz * ww * diff / gaps
    spec = {"kind": "weighted-lipschitz", "pairs": len(pairs)}
    return _argmax_estimate(values, [(pairs[i, 0], pairs[i, 1]) for i in range(len(pairs))], spec)


def lipschitz_number(f, pairs: np.ndarray) -> SupEstimate:
    """max over pairs of |f(z)-f(w)| / rho(z, w) in the unit disk.

    The derivative form sup (1-|z|^2)(|f_z|+|f_zbar|) of the same number
    is bloch_seminorm; the two agree in the disk and tests cross-check them.
    """
    pairs = np.asarray(pairs, dtype=complex)
    if pairs.size == 0:
        raise EmptySampleSet("sup estimate over an empty sample set")
    if pairs.shape[2] != 1:
        raise DimensionMismatch("the Lipschitz number is the n = 1 notion")
    z, w = pairs[:, 0, 0], pairs[:, 1, 0]
    rho = np.array([hyperbolic_distance(a, b) for a, b in zip(z, w)])
    if np.any(rho == 0.0):
        raise DegeneratePair("Lipschitz quotient needs z != w")
    flat = np.concatenate([z, w]).reshape(-1, 1)
    vals = np.asarray(f(flat)).reshape(-1)
    diff = np.abs(vals[: len(z)] - vals[len(z):])
    values = diff / rho
    spec = {"kind": "lipschitz-number", "pairs": len(pairs)}
    return _argmax_estimate(values, [(pairs[i, 0], pairs[i, 1]) for i in range(len(pairs))], spec)
