"""Wirtinger calculus and real-Jacobian machinery.

Conversions between the real partials of f = u + iv and its Wirtinger
derivatives, per coordinate z_k = x_k + i y_k:

    f_{z_k}    = (u_{x_k} + v_{y_k} + i (v_{x_k} - u_{y_k})) / 2
    f_{zbar_k} = (u_{x_k} - v_{y_k} + i (v_{x_k} + u_{y_k})) / 2

The real Jacobian of a map f = (f_1, ..., f_k) uses the fixed coordinate
order rows (u_1, v_1, ..., u_k, v_k) by columns (x_1, y_1, ..., x_n, y_n);
this is the wire order used everywhere in the package.  The distortion
numbers are the extreme singular values of that matrix:

    Lambda_f = max |J theta| = max over complex unit theta of |f_z theta + f_zbar conj(theta)|
    lambda_f = min |J theta|,

the two maxima ranging over the same set because a complex unit vector and
its real coordinates have equal length.

Numerical derivatives are second-order central differences with one
Richardson extrapolation level (steps h and h/2); evaluators receive a
(P, n) batch of complex points and return (P,) or (P, k) values, so a whole
stencil costs one evaluator call.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import StepTooLarge
from .geometry import coords_of

__all__ = [
    "WirtingerData",
    "RealJacobian",
    "wirtinger_from_real",
    "wirtinger_from_jacobian",
    "real_jacobian_from_wirtinger",
    "jacobian_real",
    "wirtinger_fd",
    "wirtinger_fd_many",
    "operator_norm",
    "lambda_bounds",
    "lambda_bounds_wirtinger",
]

JACOBIAN_STEP_FACTOR = 1e-4  # default step is this times (1 - |z|)


@dataclass(frozen=True)
class WirtingerData:
    """Wirtinger derivative matrices at a point.

    ``fz`` holds the rows (df_j/dz_1, ..., df_j/dz_n) and ``fzbar`` the rows
    (df_j/dzbar_1, ...); a scalar function is the k = 1 case.
    """

    fz: np.ndarray
    fzbar: np.ndarray

    def __post_init__(self):
        fz = np.atleast_2d(np.asarray(self.fz, dtype=complex))
        fzbar = np.atleast_2d(np.asarray(self.fzbar, dtype=complex))
        if fz.shape != fzbar.shape:
            raise ValueError("fz and fzbar shapes differ")
        if not (np.all(np.isfinite(fz.view(float))) and np.all(np.isfinite(fzbar.view(float)))):
            raise ValueError("Wirtinger data must be finite")
        object.__setattr__(self, "fz", fz)
        object.__setattr__(self, "fzbar", fzbar)

    @property
    def out_dim(self) -> int:
        return self.fz.shape[0]

    @property
    def dim(self) -> int:
        return self.fz.shape[1]

    def gradient_norms(self):
        """(|grad f|, |grad fbar|) for the scalar case (k = 1)."""
        if self.out_dim != 1:
            raise ValueError("gradient norms are the scalar-function notion")
        return float(np.linalg.norm(self.fz[0])), float(np.linalg.norm(self.fzbar[0]))


@dataclass(frozen=True)
class RealJacobian:
    """Real Jacobian in the order rows (u_1, v_1, ...) x cols (x_1, y_1, ...)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] % 2 or m.shape[1] % 2:
            raise ValueError("real Jacobian must have even-by-even shape")
        if not np.all(np.isfinite(m)):
            raise ValueError("real Jacobian must be finite")
        object.__setattr__(self, "matrix", m)

    def det(self) -> float:
        return float(np.linalg.det(self.matrix))


def wirtinger_from_real(ux, uy, vx, vy):
    """(f_{z_k}, f_{zbar_k}) from the four real partials at one coordinate."""
    fz = 0.5 * (np.asarray(ux) + np.asarray(vy) + 1j * (np.asarray(vx) - np.asarray(uy)))
    fzbar = 0.5 * (np.asarray(ux) - np.asarray(vy) + 1j * (np.asarray(vx) + np.asarray(uy)))
    if np.ndim(fz) == 0:
        return complex(fz), complex(fzbar)
    return fz, fzbar


def wirtinger_from_jacobian(jac: RealJacobian) -> WirtingerData:
    """Convert a real Jacobian to the Wirtinger matrices (f_z, f_zbar)."""
    J = jac.matrix
    k, n = J.shape[0] // 2, J.shape[1] // 2
    fz = np.empty((k, n), dtype=complex)
    fzbar = np.empty((k, n), dtype=complex)
    for j in range(k):
        ux, uy = J[2 * j, 0::2], J[2 * j, 1::2]
        vx, vy = J[2 * j + 1, 0::2], J[2 * j + 1, 1::2]
        fz[j], fzbar[j] = wirtinger_from_real(ux, uy, vx, vy)
    return WirtingerData(fz, fzbar)


def real_jacobian_from_wirtinger(data: WirtingerData) -> RealJacobian:
    """Inverse conversion: real Jacobian from (f_z, f_zbar)."""
    a, b = data.fz, data.fzbar
    k, n = a.shape
    J = np.empty((2 * k, 2 * n))
    J[0::2, 0::2] = (a + b).real        # du/dx
    J[0::2, 1::2] = (b - a).imag        # du/dy
    J[1::2, 0::2] = (a + b).imag        # dv/dx
    J[1::2, 1::2] = (a - b).real        # dv/dy
    return RealJacobian(J)


def _stencil(z: np.ndarray, step: float) -> np.ndarray:
    """Points z +/- s e along each real coordinate, s in {h, h/2}, center last."""
    n = z.size
    offsets = []
    for k in range(n):
        for unit in (1.0, 1j):
            for s in (step, -step, step / 2.0, -step / 2.0):
                e = np.zeros(n, dtype=complex)
                e[k] = unit * s
                offsets.append(e)
    offsets.append(np.zeros(n, dtype=complex))
    return z[None, :] + np.asarray(offsets)


def _first_derivatives(values: np.ndarray, step: float, n: int) -> np.ndarray:
    """Richardson-extrapolated central first differences along x_k, y_k.

    ``values`` is the evaluator output on a ``_stencil`` batch, shaped
    (8n + 1, ...); returns (2n, ...) derivatives in x_1, y_1, ..., x_n, y_n order.
    """
    v = values.reshape(n, 2, 4, *values.shape[1:])
    d_h = (v[:, :, 0] - v[:, :, 1]) / (2.0 * step)
    d_h2 = (v[:, :, 2] - v[:, :, 3]) / step
    rich = (4.0 * d_h2 - d_h) / 3.0
    return rich.reshape(2 * n, *values.shape[1:])


def default_step(z: np.ndarray, factor: float = JACOBIAN_STEP_FACTOR) -> float:
    return factor * (1.0 - float(np.linalg.norm(z)))


def _fd_partials(f, z, step):
    """Evaluate f on the stencil and return real-coordinate partials."""
    zc = coords_of(z)
    n = zc.size
    if step is None:
        step = default_step(zc)
    if float(np.linalg.norm(zc)) + step >= 1.0:
        raise StepTooLarge(f"step {step:g} leaves the ball at |z| = {np.linalg.norm(zc):.4g}")
    pts = _stencil(zc, step)
    values = np.asarray(f(pts), dtype=complex)
    return _first_derivatives(values[:-1], step, n), n


def jacobian_real(f, z, step: float = None) -> RealJacobian:
    """Central-difference real Jacobian of f at z (with Richardson step pair).

    ``f`` maps a (P, n) batch to (P,) or (P, k) complex values.
    """
    partials, n = _fd_partials(f, z, step)   # (2n,) or (2n, k) complex
    partials = np.atleast_2d(partials.T)      # (k, 2n)
    k = partials.shape[0]
    J = np.empty((2 * k, 2 * n))
    J[0::2, :] = partials.real
    J[1::2, :] = partials.imag
    return RealJacobian(J)


def wirtinger_fd(f, z, step: float = None) -> WirtingerData:
    """Finite-difference Wirtinger derivatives of f at z."""
    return wirtinger_from_jacobian(jacobian_real(f, z, step))


def wirtinger_fd_many(f, points: np.ndarray, step_factor: float = JACOBIAN_STEP_FACTOR):
    """Wirtinger derivatives at every row of ``points``, one evaluator call.

    Returns a list of WirtingerData.  Steps follow the per-point policy
    step = step_factor * (1 - |z|).
    """
    points = np.atleast_2d(np.asarray(points, dtype=complex))
    count, n = points.shape
    steps = step_factor * (1.0 - np.linalg.norm(points, axis=1))
    if np.any(np.linalg.norm(points, axis=1) + steps >= 1.0):
        raise StepTooLarge("stencil leaves the ball for at least one sample")
    batches = [
        _stencil(points[i], steps[i]) for i in range(count)
    ]
    stencil_len = batches[0].shape[0]
    values = np.asarray(f(np.concatenate(batches, axis=0)), dtype=complex)
    out = []
    for i in range(count):
        chunk = values[i * stencil_len:(i + 1) * stencil_len]
        partials = _first_derivatives(chunk[:-1], steps[i], n)
        partials = np.atleast_2d(partials.T)
        J = np.empty((2 * partials.shape[0], 2 * n))
        J[0::2, :] = partials.real
        J[1::2, :] = partials.imag
        out.append(wirtinger_from_jacobian(RealJacobian(J)))
    return out


def operator_norm(matrix) -> float:
    """Largest singular value; equals the max of |A theta| over unit theta."""
    m = np.atleast_2d(np.asarray(matrix))
    return float(np.linalg.svd(m, compute_uv=False)[0])


def lambda_bounds(jac: RealJacobian):
    """(Lambda, lambda): extreme singular values of the real Jacobian."""
    s = np.linalg.svd(jac.matrix, compute_uv=False)
    return float(s[0]), float(s[-1])


def lambda_bounds_wirtinger(data: WirtingerData):
    """(Lambda, lambda) of the real-linear map theta -> f_z theta + f_zbar conj(theta)."""
    return lambda_bounds(real_jacobian_from_wirtinger(data))
