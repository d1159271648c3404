"""Verification harness: every final inequality becomes a replayable check.

Each check produces a CheckReport holding both sides of the inequality,
the tolerance that was granted and where it came from, and enough input
metadata (function label, points, seed, rule) to replay the check
bit-identically.  Tolerances follow one policy:

    tolerance = analytic slack
              + 10 * (quadrature standard error)
              + 10 * (finite-difference truncation estimate),

with the three parts recorded separately.  An inequality that is strict in
the mathematics (the separation probe) uses a strict comparison instead of
a slack.

Suites group the checks the way the command line exposes them: lemma21
(gradient-versus-boundary-mean bound on real balls), lemma22 (Wirtinger
versus real gradient norms), thm24 (weighted-Lipschitz versus Bloch),
schwarzpick (value and gradient bounds for bounded h-harmonic maps),
lemma33 (growth of vanishing matrix-valued maps), lemmaB (determinant
versus smallest singular value), landau (univalence-radius constants and
probes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .calculus import (
    lambda_bounds_wirtinger,
    operator_norm,
    real_jacobian_from_wirtinger,
    wirtinger_fd_many,
    WirtingerData,
)
from .extension import HExtension, boundary_registry, h_extend, vector_boundary
from .geometry import coords_of
from .norms import (
    ball_grid,
    bloch_seminorm,
    near_diagonal_pairs,
    pair_samples,
    uniform_ball,
    weighted_lipschitz_sup,
)
from .quadrature import (
    STREAM_GEOMETRY,
    STREAM_MATRICES,
    STREAM_PROBE,
    STREAM_SAMPLES,
    QuadratureRule,
    circle_rule,
    real_circle_rule,
    rng_stream,
    sphere_rule_mc,
)

__all__ = [
    "CheckReport",
    "LandauConstants",
    "HarnessConfig",
    "landau_constants",
    "check_lemma21",
    "check_lemma22",
    "check_thm24_necessity",
    "check_schwarz_pick_value",
    "check_schwarz_pick_gradient",
    "check_lemma33",
    "check_lemmaB",
    "univalence_probe",
    "covered_ball_probe",
    "AffineMapping",
    "mapping_registry",
    "run_suite",
    "SUITES",
]

_FD_TRUNCATION = 1e-9   # Richardson-extrapolated central differences at our steps


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one inequality check.

    ``passed`` is lhs <= rhs + tolerance, or lhs < rhs when ``strict``
    (used by the separation probe, where equality must count as failure).
    """

    check_id: str
    lhs: float
    rhs: float
    tolerance: float
    passed: bool
    tol_breakdown: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    rule: dict = field(default_factory=dict)
    strict: bool = False

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "pass": self.passed,
            "tolerance": self.tolerance,
            "tolerance_breakdown": dict(self.tol_breakdown),
            "strict": self.strict,
            "inputs": dict(self.inputs),
            "rule": dict(self.rule),
        }


def make_report(check_id: str, lhs: float, rhs: float, *, analytic: float = 0.0,
                quad_error: float = 0.0, fd_error: float = 0.0, inputs: dict = None,
                rule: dict = None, strict: bool = False) -> CheckReport:
    tolerance = analytic + 10.0 * quad_error + 10.0 * fd_error
    lhs, rhs = float(lhs), float(rhs)
    passed = lhs < rhs if strict else lhs <= rhs + tolerance
    return CheckReport(
        check_id=check_id, lhs=lhs, rhs=rhs, tolerance=float(tolerance),
        passed=bool(passed),
        tol_breakdown={"analytic": analytic, "quadrature": 10.0 * quad_error,
                       "finite_difference": 10.0 * fd_error},
        inputs=inputs or {}, rule=rule or {}, strict=strict,
    )


def _cplx(vec) -> list:
    """JSON-friendly [re, im] pairs for a complex vector."""
    v = np.atleast_1d(np.asarray(vec, dtype=complex))
    return [[float(c.real), float(c.imag)] for c in v]


# ---------------------------------------------------------------------------
# Landau constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LandauConstants:
    """Univalence-ball constants for normalized alpha-Bloch maps.

    rho = 3^alpha / ((2M)^(2n) (3^alpha + 4^alpha)); the map is univalent on
    the ball of radius rho/2 and its range covers a ball of radius at least
    r_lower = rho / (4 M^(2n-1)).
    """

    n: int
    alpha: float
    bound: float
    rho: float
    half_rho: float
    r_lower: float

    def __post_init__(self):
        if not (0.0 < self.rho < 1.0 and self.half_rho > 0.0 and self.r_lower > 0.0):
            raise ValueError("Landau constants must be positive with rho < 1")


def landau_constants(n: int, alpha: float, bound: float) -> LandauConstants:
    """Evaluate the univalence-ball constants for dimension n, weight alpha.

    ``bound`` is the alpha-Bloch norm bound M; the normalization det J = 1
    at the origin forces M >= 1, so smaller values are rejected.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    if bound < 1.0:
        raise ValueError("the norm bound M must be >= 1")
    rho = 3.0 ** alpha / ((2.0 * bound) ** (2 * n) * (3.0 ** alpha + 4.0 ** alpha))
    return LandauConstants(
        n=n, alpha=float(alpha), bound=float(bound),
        rho=rho, half_rho=rho / 2.0, r_lower=rho / (4.0 * bound ** (2 * n - 1)),
    )


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def _real_gradient_fd(f, a: np.ndarray, step: float) -> np.ndarray:
    """Richardson central-difference gradient of a real function on R^m."""
    m = a.size
    pts = []
    for i in range(m):
        for s in (step, -step, step / 2.0, -step / 2.0):
            e = np.zeros(m)
            e[i] = s
            pts.append(a + e)
    vals = np.asarray(f(np.asarray(pts)), dtype=float).reshape(m, 4)
    d_h = (vals[:, 0] - vals[:, 1]) / (2.0 * step)
    d_h2 = (vals[:, 2] - vals[:, 3]) / step
    return (4.0 * d_h2 - d_h) / 3.0


def check_lemma21(f, a, r: float, rule: QuadratureRule, *, fd_step: float = None,
                  check_id: str = "lemma21") -> CheckReport:
    """Gradient bound |grad f(a)| <= (2(m-1) sqrt(m) / (m V(m) r^m)) * I.

    I is the integral of |f(a) - f(t)| over the boundary sphere of B(a, r)
    in the UNNORMALIZED surface measure; with the normalized rule this is
    surface_area * mean, and the bound collapses to
    (2(m-1) sqrt(m) / r) * mean|f(a) - f(t)|.  ``f`` maps (P, m) real
    points to real values and must be h-harmonic on the ball; ``rule``
    lives on the unit sphere of R^m and is mapped to radius r about a.
    """
    a = np.asarray(a, dtype=float).reshape(-1)
    m = a.size
    if m < 2:
        raise ValueError("the bound is degenerate below real dimension 2")
    if fd_step is None:
        fd_step = 1e-5 * r
    lhs = float(np.linalg.norm(_real_gradient_fd(f, a, fd_step)))

    fa = float(np.asarray(f(a.reshape(1, -1)))[0])
    nodes = a + r * rule.nodes

    def boundary_mean(node_subset, weight_subset):
        vals = np.abs(np.asarray(f(node_subset), dtype=float) - fa)
        return float(np.sum(weight_subset * vals) / np.sum(weight_subset))

    mean_full = boundary_mean(nodes, rule.weights)
    # quadrature error estimate: compare against the half rule
    mean_half = boundary_mean(nodes[::2], rule.weights[::2])
    prefactor = 2.0 * (m - 1) * math.sqrt(m) / r
    rhs = prefactor * mean_full
    quad_err = prefactor * abs(mean_full - mean_half)
    return make_report(
        check_id, lhs, rhs, quad_error=quad_err, fd_error=_FD_TRUNCATION,
        inputs={"m": m, "a": list(map(float, a)), "r": float(r), "f(a)": fa,
                "fd_step": fd_step},
        rule=dict(rule.meta),
    )


def _lemma22_report(data: WirtingerData, zc: np.ndarray, label: str,
                    check_id: str) -> CheckReport:
    lhs = sum(data.gradient_norms())
    J = real_jacobian_from_wirtinger(data).matrix  # rows (u, v) x cols (x1, y1, ...)
    rhs = float(np.linalg.norm(J[0]) + np.linalg.norm(J[1]))
    return make_report(
        check_id, lhs, rhs, analytic=1e-12, fd_error=_FD_TRUNCATION,
        inputs={"f": label, "z": _cplx(zc)},
    )


def check_lemma22(f, z, *, label: str = "f", check_id: str = None) -> CheckReport:
    """|grad f| + |grad fbar| <= |grad u| + |grad v| at z, one FD partial set."""
    zc = coords_of(z)
    data = wirtinger_fd_many(f, zc[None, :])[0]
    return _lemma22_report(data, zc, label, check_id or f"lemma22[{label}]")


def check_thm24_necessity(f, pairs: np.ndarray, grid: np.ndarray, *, n: int,
                          label: str = "f", check_id: str = None) -> CheckReport:
    """Pair-sup of the weighted Lipschitz quotient vs pi sqrt(n) * Bloch sup.

    Both sides are sample estimates on matching grids; the derivative side
    carries the finite-difference tolerance.  The qualitative converse
    (finite pair-sup alongside finite derivative-sup) is recorded in the
    inputs rather than checked quantitatively.
    """
    pair_est = weighted_lipschitz_sup(f, pairs)
    bloch_est = bloch_seminorm(f, grid)
    lhs = pair_est.value
    rhs = math.pi * math.sqrt(n) * bloch_est.value
    cid = check_id or f"thm24[n={n},f={label}]"
    return make_report(
        cid, lhs, rhs, fd_error=_FD_TRUNCATION,
        inputs={
            "f": label, "n": n, "pairs": int(len(pairs)), "grid": int(len(grid)),
            "pair_sup": pair_est.value, "bloch_sup": bloch_est.value,
            "pair_witness": [_cplx(w) for w in pair_est.witness],
            "bloch_witness": _cplx(bloch_est.witness),
            "both_finite": bool(np.isfinite(lhs) and np.isfinite(rhs)),
        },
    )


def _kernel_ratio(norm_z: float, n: int) -> float:
    return ((1.0 - norm_z) / (1.0 + norm_z)) ** (2 * n - 1)


def _schwarz_value_report(ext: HExtension, zc: np.ndarray, fz, f0, quad_se: float,
                          check_id: str) -> CheckReport:
    n = ext.dim
    bound = ext.boundary.sup_bound
    kappa = _kernel_ratio(float(np.linalg.norm(zc)), n)
    lhs = float(np.linalg.norm(np.atleast_1d(fz - kappa * f0)))
    rhs = bound * (1.0 - kappa)
    # lhs carries the integrand's error, rhs the bound times the normalization error
    quad_err = (1.0 + bound) * quad_se
    return make_report(
        check_id, lhs, rhs, analytic=1e-12, quad_error=quad_err,
        inputs={"f": ext.boundary.label, "n": n, "M": bound, "z": _cplx(zc),
                "kappa": kappa},
        rule=dict(ext.rule.meta),
    )


def check_schwarz_pick_value(ext: HExtension, z, *, check_id: str = None) -> CheckReport:
    """|f(z) - kappa f(0)| <= M (1 - kappa), kappa the boundary kernel ratio."""
    if ext.boundary.sup_bound is None:
        raise ValueError("the value bound needs a declared sup bound M")
    zc = coords_of(z)
    values, errors = ext.values_with_errors(zc[None, :])
    cid = check_id or f"schwarzpick.value[n={ext.dim},f={ext.boundary.label}]"
    return _schwarz_value_report(ext, zc, values[0], ext.value_at_zero(),
                                 float(errors[0]), cid)


def check_schwarz_pick_gradient(ext: HExtension, z, *, check_id: str = None) -> CheckReport:
    """Lambda_f(z) <= 2 (2n-1) M / (1 - |z|)^2 via the kernel derivatives."""
    if ext.boundary.sup_bound is None:
        raise ValueError("the gradient bound needs a declared sup bound M")
    zc = coords_of(z)
    n = ext.dim
    bound = ext.boundary.sup_bound
    norm_z = float(np.linalg.norm(zc))
    data, grad_se = ext.wirtinger_with_error(zc)
    big_lambda, _ = lambda_bounds_wirtinger(data)
    rhs = 2.0 * (2 * n - 1) * bound / (1.0 - norm_z) ** 2
    cid = check_id or f"schwarzpick.gradient[n={n},f={ext.boundary.label}]"
    return make_report(
        cid, big_lambda, rhs, analytic=1e-12, quad_error=grad_se,
        inputs={"f": ext.boundary.label, "n": n, "M": bound, "z": _cplx(zc)},
        rule=dict(ext.rule.meta),
    )


def check_lemma33(matrix_map, r: float, bound: float, z, *, n: int,
                  label: str = "A", quad_error: float = 0.0,
                  check_id: str = None) -> CheckReport:
    """|A(z)| <= M [1 - ((r-|z|)/(r+|z|))^(2n-1)] for A(0) = 0, |A| <= M on B(r)."""
    zc = coords_of(z)
    norm_z = float(np.linalg.norm(zc))
    if norm_z >= r:
        raise ValueError("z must lie inside the ball of radius r")
    lhs = operator_norm(matrix_map(zc))
    ratio = ((r - norm_z) / (r + norm_z)) ** (2 * n - 1)
    rhs = bound * (1.0 - ratio)
    cid = check_id or f"lemma33[n={n},r={r},A={label}]"
    return make_report(
        cid, lhs, rhs, analytic=1e-12, quad_error=quad_error,
        inputs={"A": label, "n": n, "r": float(r), "M": float(bound), "z": _cplx(zc)},
    )


def check_lemmaB(matrix, *, check_id: str = "lemmaB") -> CheckReport:
    """|det A| |A|^(1-n) <= smallest singular value of A.

    Stated over all unit directions theta as |A theta| >= |det A| |A|^(1-n);
    the minimum of |A theta| is the smallest singular value, so a single
    SVD settles the whole family.
    """
    A = np.atleast_2d(np.asarray(matrix))
    n = A.shape[0]
    s = np.linalg.svd(A, compute_uv=False)
    lhs = abs(np.linalg.det(A)) * float(s[0]) ** (1 - n)
    rhs = float(s[-1])
    return make_report(check_id, lhs, rhs, analytic=1e-12,
                       inputs={"n": n, "sigma_max": float(s[0]), "sigma_min": rhs})


def univalence_probe(f, radius: float, pairs: np.ndarray, separation_floor: float,
                     *, label: str = "f", check_id: str = None) -> CheckReport:
    """Evidence of injectivity: every sampled pair must stay separated.

    Passes when the worst ratio |f(z') - f(z'')| / |z' - z''| over the pairs
    strictly exceeds the floor, so a floor of zero demands genuine
    separation.  Sampling evidence only, not a univalence proof.
    """
    pairs = np.asarray(pairs, dtype=complex)
    z, w = pairs[:, 0, :], pairs[:, 1, :]
    if np.any(np.linalg.norm(z, axis=1) >= radius) or np.any(np.linalg.norm(w, axis=1) >= radius):
        raise ValueError("probe pairs must lie inside the probed ball")
    gaps = np.linalg.norm(z - w, axis=1)
    flat = np.concatenate([z, w], axis=0)
    vals = np.asarray(f(flat)).reshape(len(flat), -1)
    sep = np.linalg.norm(vals[: len(z)] - vals[len(z):], axis=1)
    ratios = sep / gaps
    worst = int(np.argmin(ratios))
    cid = check_id or f"univalence[{label}]"
    return make_report(
        cid, separation_floor, float(ratios[worst]), strict=True,
        inputs={"f": label, "radius": float(radius), "pairs": int(len(pairs)),
                "worst_pair": [_cplx(z[worst]), _cplx(w[worst])],
                "worst_ratio": float(ratios[worst])},
    )


def covered_ball_probe(f, constants: LandauConstants, count: int, seed: int, *,
                       label: str = "f", check_id: str = None) -> CheckReport:
    """Sampled |F(zeta)| >= rho / (2 M^(2n-1)) on |zeta| = rho, F = 2 f(./2)."""
    n = constants.n
    dirs = uniform_ball(n, count, rng_stream(seed, STREAM_PROBE), 1.0)
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    zeta = constants.rho * dirs
    big_f = 2.0 * np.asarray(f(zeta / 2.0)).reshape(len(zeta), -1)
    rhs = float(np.min(np.linalg.norm(big_f, axis=1)))
    lhs = constants.rho / (2.0 * constants.bound ** (2 * n - 1))
    cid = check_id or f"covered_ball[{label}]"
    return make_report(
        cid, lhs, rhs,
        inputs={"f": label, "n": n, "rho": constants.rho, "M": constants.bound,
                "count": int(count), "seed": int(seed)},
    )


# ---------------------------------------------------------------------------
# mapping registry for the univalence checks
# ---------------------------------------------------------------------------

class AffineMapping:
    """f(z) = c (A z + B conj(z)), scaled so det J = 1 at the origin.

    Affine maps have h-harmonic (constant) partial derivatives, exact
    Wirtinger data (c A, c B) and an exactly known alpha-Bloch norm
    c (|A| + |B|), so they satisfy the univalence theorem's hypotheses
    with no numerical slack.
    """

    def __init__(self, label: str, a_matrix, b_matrix):
        A = np.atleast_2d(np.asarray(a_matrix, dtype=complex))
        B = np.atleast_2d(np.asarray(b_matrix, dtype=complex))
        if A.shape != B.shape or A.shape[0] != A.shape[1]:
            raise ValueError("need square matrices of equal shape")
        self.label = label
        self.n = A.shape[0]
        det = real_jacobian_from_wirtinger(WirtingerData(A, B)).det()
        if det <= 0.0:
            raise ValueError("orientation-reversing or degenerate map")
        scale = det ** (-1.0 / (2 * self.n))
        self.a_matrix = scale * A
        self.b_matrix = scale * B
        self.bound = operator_norm(self.a_matrix) + operator_norm(self.b_matrix)

    def __call__(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=complex))
        out = np.zeros_like(pts)
        for j in range(self.n):
            for k in range(self.n):
                out[:, j] += self.a_matrix[j, k] * pts[:, k]
                out[:, j] += self.b_matrix[j, k] * np.conj(pts[:, k])
        return out

    def wirtinger(self) -> WirtingerData:
        return WirtingerData(self.a_matrix, self.b_matrix)


def mapping_registry(n: int) -> list[AffineMapping]:
    """Normalized mappings satisfying the univalence theorem's hypotheses."""
    identity = AffineMapping("identity", np.eye(n), np.zeros((n, n)))
    shear_b = np.zeros((n, n), dtype=complex)
    if n == 1:
        shear_b[0, 0] = 0.1
    else:
        shear_b[0, 1] = 0.1
    shear = AffineMapping("shear", np.eye(n), shear_b)
    return [identity, shear]


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

@dataclass
class HarnessConfig:
    """Resolved configuration of one verification run."""

    n: int = 1
    nodes: int = 4096          # circle-rule nodes (n = 1)
    mc_nodes: int = 200000     # Monte Carlo nodes (n >= 2)
    seed: int = 0
    rmax: float = 0.8
    samples: int = 200         # sampled z per pointwise sweep
    trials: int = 10000        # random matrices per dimension
    pairs: int = 2000          # sampled pairs per pair sweep
    alpha: float = 1.0
    bound: float = 1.0         # the norm bound M

    def to_dict(self) -> dict:
        return {
            "n": self.n, "nodes": self.nodes, "mc_nodes": self.mc_nodes,
            "seed": self.seed, "rmax": self.rmax, "samples": self.samples,
            "trials": self.trials, "pairs": self.pairs, "alpha": self.alpha,
            "m": self.bound,
        }


def rule_for(cfg: HarnessConfig) -> QuadratureRule:
    """Default rule in the configured dimension (spectral circle or seeded MC)."""
    if cfg.n == 1:
        return circle_rule(cfg.nodes)
    return sphere_rule_mc(cfg.n, cfg.mc_nodes, cfg.seed)


def _sample_ball(cfg: HarnessConfig, count: int, rmax: float) -> np.ndarray:
    return uniform_ball(cfg.n, count, rng_stream(cfg.seed, STREAM_SAMPLES), rmax)


def _aggregate(reports: list[CheckReport], check_id: str) -> CheckReport:
    """Collapse per-sample reports into one, keeping the worst-margin sample."""
    worst = min(reports, key=lambda rep: rep.margin + rep.tolerance)
    inputs = dict(worst.inputs)
    inputs.update({
        "samples": len(reports),
        "failures": sum(0 if rep.passed else 1 for rep in reports),
        "worst_margin": worst.margin,
    })
    return CheckReport(
        check_id=check_id, lhs=worst.lhs, rhs=worst.rhs, tolerance=worst.tolerance,
        passed=all(rep.passed for rep in reports), tol_breakdown=dict(worst.tol_breakdown),
        inputs=inputs, rule=dict(worst.rule), strict=worst.strict,
    )


def suite_lemma21(cfg: HarnessConfig, cases: int = 20) -> list[CheckReport]:
    """Real-ball gradient bound on restrictions of disk extensions (m = 2)."""
    rule = circle_rule(cfg.nodes)
    boundary_rule = real_circle_rule(1024)
    rng = rng_stream(cfg.seed, STREAM_GEOMETRY)
    registry = boundary_registry(1)
    extensions = [h_extend(entry, rule, guard_radius=cfg.rmax) for entry in registry]
    reports = []
    for case in range(cases):
        ext = extensions[case % len(extensions)]
        center = uniform_ball(1, 1, rng, 0.4)[0]
        radius = 0.1 + 0.25 * float(rng.random())
        take_real = case % 2 == 0

        def f_real(xy, ext=ext, take_real=take_real):
            pts = (np.asarray(xy)[:, 0] + 1j * np.asarray(xy)[:, 1]).reshape(-1, 1)
            vals = ext(pts)
            return vals.real if take_real else vals.imag

        a = np.array([center[0].real, center[0].imag])
        part = "re" if take_real else "im"
        reports.append(check_lemma21(
            f_real, a, radius, boundary_rule,
            check_id=f"lemma21[m=2,f={ext.boundary.label}.{part},case={case}]"))
    return reports


def suite_lemma22(cfg: HarnessConfig, samples: int = 100) -> list[CheckReport]:
    """Wirtinger-versus-real gradient inequality over the function registry."""
    reports = []
    zs = _sample_ball(cfg, samples, 0.7)
    for label, f in _scalar_functions(cfg):
        data = wirtinger_fd_many(f, zs)   # one batched pass per function
        per_point = [
            _lemma22_report(data[i], zs[i], label, f"lemma22[n={cfg.n},f={label},i={i}]")
            for i in range(len(zs))
        ]
        reports.append(_aggregate(per_point, f"lemma22[n={cfg.n},f={label}]"))
    return reports


def _scalar_functions(cfg: HarnessConfig):
    """(label, batch evaluator) pairs: exact extensions when known, else rules."""
    rule = rule_for(cfg)
    out = []
    for entry in boundary_registry(cfg.n):
        if entry.exact_extension is not None:
            out.append((entry.label, entry.exact_extension))
        else:
            out.append((entry.label, h_extend(entry, rule, guard_radius=cfg.rmax)))
    return out


def suite_thm24(cfg: HarnessConfig) -> list[CheckReport]:
    """Weighted-Lipschitz pair sup against pi sqrt(n) times the Bloch sup."""
    grid = ball_grid(cfg.n)
    seeded = pair_samples(cfg.n, cfg.pairs, cfg.seed, rmax=0.7)
    near = near_diagonal_pairs(grid)
    pairs = np.concatenate([near, seeded], axis=0)
    reports = []
    for label, f in _scalar_functions(cfg):
        reports.append(check_thm24_necessity(f, pairs, grid, n=cfg.n, label=label))
    return reports


def suite_schwarzpick(cfg: HarnessConfig) -> list[CheckReport]:
    """Value and gradient bounds for bounded extensions, plus equality case."""
    rule = rule_for(cfg)
    reports = []
    zs = _sample_ball(cfg, cfg.samples, cfg.rmax)
    boundaries = [b for b in boundary_registry(cfg.n) if b.sup_bound]
    if cfg.n >= 2:
        scalars = boundary_registry(cfg.n)
        boundaries.append(vector_boundary(scalars[1:1 + cfg.n]))
    for entry in boundaries:
        ext = h_extend(entry, rule, guard_radius=cfg.rmax)
        batch, errors = ext.values_with_errors(zs)
        f0 = ext.value_at_zero()
        values = [
            _schwarz_value_report(ext, zs[i], batch[i], f0, float(errors[i]),
                                  f"schwarzpick.value[i={i}]")
            for i in range(len(zs))
        ]
        grads = [
            check_schwarz_pick_gradient(ext, z, check_id=f"schwarzpick.gradient[i={i}]")
            for i, z in enumerate(zs)
        ]
        reports.append(_aggregate(values, f"schwarzpick.value[n={cfg.n},f={entry.label}]"))
        reports.append(_aggregate(grads, f"schwarzpick.gradient[n={cfg.n},f={entry.label}]"))
    # equality case: constant boundary data M makes the value bound tight
    const = boundary_registry(cfg.n)[0]
    ext = h_extend(const, rule, guard_radius=cfg.rmax)
    eq_points = zs[: min(20, len(zs))]
    eq_reports = [check_schwarz_pick_value(ext, z) for z in eq_points]
    worst_gap = max(abs(rep.margin) for rep in eq_reports)
    gap_tol = max(rep.tolerance for rep in eq_reports)
    reports.append(make_report(
        f"schwarzpick.equality[n={cfg.n}]", worst_gap, gap_tol,
        analytic=1e-12,
        inputs={"f": const.label, "points": len(eq_points),
                "note": "constant data attains the value bound"},
        rule=dict(rule.meta),
    ))
    return reports


def suite_lemma33(cfg: HarnessConfig) -> list[CheckReport]:
    """Growth bound for diagonal matrix maps built from vanishing extensions."""
    rule = rule_for(cfg)
    reports = []
    entry = next(b for b in boundary_registry(cfg.n) if b.label == "re1")
    ext = h_extend(entry, rule, guard_radius=cfg.rmax)
    f0 = ext.value_at_zero()
    scale = 1.0 / (2.0 * entry.sup_bound)
    rng = rng_stream(cfg.seed, STREAM_SAMPLES)
    for r in (0.5, 0.9):
        def matrix_map(z, r=r):
            w = coords_of(z) / r
            return scale * (ext(w[None, :])[0] - f0) * np.eye(cfg.n, dtype=complex)

        zs = uniform_ball(cfg.n, 25, rng, 0.95) * (r * cfg.rmax)
        per_point = [
            check_lemma33(matrix_map, r, 1.0, z, n=cfg.n, label=f"diag({entry.label})",
                          quad_error=ext.value_error(coords_of(z) / r) * scale * 2,
                          check_id=f"lemma33[i]")
            for z in zs
        ]
        reports.append(_aggregate(per_point, f"lemma33[n={cfg.n},r={r}]"))
    return reports


def suite_lemmaB(cfg: HarnessConfig) -> list[CheckReport]:
    """Determinant vs smallest singular value over seeded random matrices."""
    rng = rng_stream(cfg.seed, STREAM_MATRICES)
    reports = []
    for n in (2, 3, 4):
        mats = rng.standard_normal((cfg.trials, n, n)) + 1j * rng.standard_normal((cfg.trials, n, n))
        s = np.linalg.svd(mats, compute_uv=False)
        lhs = np.abs(np.linalg.det(mats)) * s[:, 0] ** (1 - n)
        margins = s[:, -1] - lhs
        worst = int(np.argmin(margins))
        reports.append(make_report(
            f"lemmaB[n={n},trials={cfg.trials}]",
            float(lhs[worst]), float(s[worst, -1]), analytic=1e-12,
            inputs={"n": n, "trials": cfg.trials, "seed": cfg.seed,
                    "failures": int(np.sum(margins < -1e-12)), "worst_index": worst},
        ))
        # equality needs every middle singular value equal to the largest
        diag = np.diag([2.0] * (n - 1) + [0.5])
        rep = check_lemmaB(diag, check_id=f"lemmaB.diagonal[n={n}]")
        reports.append(rep)
    return reports


def suite_landau(cfg: HarnessConfig) -> list[CheckReport]:
    """Constants, their monotonicity, and the univalence/covered-ball probes."""
    reports = []
    consts = landau_constants(cfg.n, cfg.alpha, cfg.bound)
    # consistency: same constant through an algebraically different route
    alt_rho = 1.0 / ((2.0 * cfg.bound) ** (2 * cfg.n) * (1.0 + (4.0 / 3.0) ** cfg.alpha))
    reports.append(make_report(
        f"landau.constants[n={cfg.n},alpha={cfg.alpha:g},M={cfg.bound:g}]",
        abs(consts.rho - alt_rho), 1e-15 * consts.rho,
        inputs={"n": cfg.n, "alpha": cfg.alpha, "M": cfg.bound, "rho": consts.rho,
                "half_rho": consts.half_rho, "r_lower": consts.r_lower},
    ))
    # strict monotonicity in M, n and alpha
    for name, values in (
        ("M", [landau_constants(cfg.n, cfg.alpha, m).rho for m in (1.0, 1.5, 2.0)]),
        ("n", [landau_constants(n, cfg.alpha, max(cfg.bound, 1.0)).rho for n in (1, 2, 3, 4)]),
        ("alpha", [landau_constants(cfg.n, a, cfg.bound).rho for a in (0.5, 1.0, 2.0)]),
    ):
        gaps = np.diff(values)
        reports.append(make_report(
            f"landau.monotone[{name}]", float(np.max(gaps)), 0.0, strict=True,
            inputs={"rhos": [float(v) for v in values], "varying": name},
        ))
    # probes on the mapping registry
    for mapping in mapping_registry(cfg.n):
        m_bound = max(mapping.bound, 1.0)
        c = landau_constants(cfg.n, cfg.alpha, m_bound)
        pairs = pair_samples(cfg.n, cfg.pairs, cfg.seed, rmax=c.half_rho * 0.999)
        lam_origin = lambda_bounds_wirtinger(mapping.wirtinger())[1]
        reports.append(univalence_probe(
            mapping, c.half_rho, pairs, 0.0, label=mapping.label,
            check_id=f"landau.univalence[n={cfg.n},f={mapping.label}]"))
        covered = covered_ball_probe(
            mapping, c, 100, cfg.seed, label=mapping.label,
            check_id=f"landau.covered[n={cfg.n},f={mapping.label}]")
        covered.inputs["lambda_at_origin"] = float(lam_origin)
        covered.inputs["lambda_floor_ok"] = bool(lam_origin >= m_bound ** (1 - 2 * cfg.n) - 1e-12)
        reports.append(covered)
    # negative control: z^2 collapses antipodal pairs
    square_pairs = np.array([[[0.3 + 0.0j], [-0.3 + 0.0j]]])

    def square(pts):
        return np.asarray(pts) ** 2

    neg = univalence_probe(square, 0.5, square_pairs, 0.0, label="z^2",
                           check_id="landau.negative_control[z^2]")
    reports.append(make_report(
        "landau.negative_control[z^2]", neg.rhs, 0.0, analytic=1e-15,
        inputs={"note": "separation probe must fail on the squaring map",
                "probe_ratio": neg.rhs},
    ))
    return reports


SUITES = {
    "lemma21": suite_lemma21,
    "lemma22": suite_lemma22,
    "thm24": suite_thm24,
    "schwarzpick": suite_schwarzpick,
    "lemma33": suite_lemma33,
    "lemmaB": suite_lemmaB,
    "landau": suite_landau,
}


def run_suite(name: str, cfg: HarnessConfig) -> list[CheckReport]:
    """Run one named suite, or all of them in a fixed order."""
    if name == "all":
        reports = []
        for key in SUITES:
            reports.extend(SUITES[key](cfg))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](cfg)
