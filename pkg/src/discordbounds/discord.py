"""Geometric discord in Schatten norms.

The 2-norm geometric discord is the squared Hilbert-Schmidt distance from
rho to the nearest classical-quantum state. Minimizing over the CQ family
reduces to minimizing ||rho - Pi(rho)||_2^2 over rank-1 projective
measurements Pi on subsystem A, because Pi is an orthogonal projection in
the trace inner product (Tr[rho Pi(rho)] = Tr[Pi(rho)^2]). For a qubit A
this collapses to the closed form

    D2 = (Tr rho^2 - lambda_max(M)) / 2,
    M_ij = Tr[(sigma_i (x) I) rho (sigma_j (x) I) rho],

with sigma_i the Pauli operators on A. Three computation paths are kept
deliberately independent (closed form, measurement-descent optimizer,
Fibonacci-grid oracle) so each can audit the others.

The trace-norm (p = 1) distance over the measured family is only an upper
estimate of the trace-norm discord: the nearest CQ state in trace norm
need not be of measured form. Bound checks that need rigor use per-state
inequalities instead (see the bounds module).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from .errors import DimsError, UnsupportedDimsError
from .linalg import BipartiteDims, kron
from .states import BipartiteDensityMatrix, haar_unitary, make_rng, validate

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_OBJECTIVE_TOL = 1e-10


@dataclass(frozen=True)
class ProjectiveMeasurementA:
    """Rank-1 projective measurement on subsystem A.

    For a qubit this is a Bloch direction e (projectors (I +- e.sigma)/2);
    for larger A it is an orthonormal basis given as unitary columns.
    """

    bloch: np.ndarray | None = None
    basis: np.ndarray | None = None

    @classmethod
    def from_bloch(cls, e) -> "ProjectiveMeasurementA":
        v = np.asarray(e, dtype=float)
        n = float(np.linalg.norm(v))
        if v.shape != (3,) or n == 0.0:
            raise DimsError(f"bloch vector must be a nonzero 3-vector, got {e!r}")
        return cls(bloch=v / n)

    @classmethod
    def from_basis(cls, U) -> "ProjectiveMeasurementA":
        M = np.asarray(U, dtype=complex)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise DimsError(f"basis must be a square matrix of columns, got shape {M.shape}")
        gram = np.conj(M).T @ M
        if float(np.abs(gram - np.eye(M.shape[0])).max()) > 1e-10:
            raise DimsError("basis columns are not orthonormal within 1e-10")
        return cls(basis=M)

    def projectors(self, dA: int) -> list:
        if self.bloch is not None:
            if dA != 2:
                raise DimsError("a Bloch-vector measurement only applies to dA = 2")
            e = self.bloch
            s = e[0] * PAULI[0] + e[1] * PAULI[1] + e[2] * PAULI[2]
            return [(np.eye(2) + s) / 2, (np.eye(2) - s) / 2]
        if self.basis is None or self.basis.shape[0] != dA:
            raise DimsError("measurement basis does not match subsystem dimension")
        return [np.outer(self.basis[:, k], self.basis[:, k].conj()) for k in range(dA)]


@dataclass(frozen=True)
class OptimizerInfo:
    restarts: int
    iterations: int
    best_measurement: ProjectiveMeasurementA | None


@dataclass(frozen=True)
class DiscordEstimate:
    """A discord value with its provenance.

    norm is 2 (squared Hilbert-Schmidt) or 1 (trace norm);
    is_upper_bound_only marks trace-norm values, which bound the true
    trace-norm discord from above.
    """

    value: float
    norm: int
    method: str
    optimizer: OptimizerInfo | None = None
    is_upper_bound_only: bool = False


def measure_A(rho: BipartiteDensityMatrix, m: ProjectiveMeasurementA) -> BipartiteDensityMatrix:
    """Dephase rho with the measurement: sum_k (P_k (x) I) rho (P_k (x) I)."""
    dA, dB = rho.dims.dA, rho.dims.dB
    IB = np.eye(dB)
    out = np.zeros_like(rho.matrix)
    for P in m.projectors(dA):
        PI = kron(P, IB)
        out = out + PI @ rho.matrix @ PI
    return validate(out, rho.dims, seed_provenance=rho.seed_provenance)


def _measured_diff(rho: BipartiteDensityMatrix, m: ProjectiveMeasurementA) -> np.ndarray:
    dA, dB = rho.dims.dA, rho.dims.dB
    IB = np.eye(dB)
    pi = np.zeros_like(rho.matrix)
    for P in m.projectors(dA):
        PI = kron(P, IB)
        pi = pi + PI @ rho.matrix @ PI
    return rho.matrix - pi


def _objective(rho: BipartiteDensityMatrix, m: ProjectiveMeasurementA, norm: int) -> float:
    diff = _measured_diff(rho, m)
    if norm == 2:
        return float(np.sum(np.abs(diff) ** 2))
    return float(np.abs(np.linalg.eigvalsh(diff)).sum())


def geometric_discord_2norm_qubitA(rho: BipartiteDensityMatrix) -> DiscordEstimate:
    """Closed-form 2-norm geometric discord for a qubit subsystem A."""
    if rho.dims.dA != 2:
        raise UnsupportedDimsError(
            f"closed form requires dA = 2, got dA = {rho.dims.dA}; use the optimizer"
        )
    IB = np.eye(rho.dims.dB)
    ops = [kron(s, IB) for s in PAULI]
    M = np.empty((3, 3))
    for i in range(3):
        for j in range(i, 3):
            M[i, j] = M[j, i] = float(np.trace(ops[i] @ rho.matrix @ ops[j] @ rho.matrix).real)
    w, V = np.linalg.eigh(M)
    value = (rho.purity - float(w[-1])) / 2
    if -1e-10 < value < 0.0:
        value = 0.0
    best = ProjectiveMeasurementA.from_bloch(V[:, -1])
    return DiscordEstimate(
        value=value,
        norm=2,
        method="closed_form",
        optimizer=OptimizerInfo(restarts=0, iterations=0, best_measurement=best),
    )


def _bloch_from_angles(x) -> np.ndarray:
    th, ph = float(x[0]), float(x[1])
    return np.array([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)])


def _angles_from_bloch(e) -> np.ndarray:
    return np.array([np.arccos(np.clip(e[2], -1.0, 1.0)), np.arctan2(e[1], e[0])])


def _hermitian_from_params(theta: np.ndarray, d: int) -> np.ndarray:
    H = np.zeros((d, d), dtype=complex)
    H[np.diag_indices(d)] = theta[:d]
    k = d
    for i in range(d):
        for j in range(i + 1, d):
            H[i, j] = theta[k] + 1j * theta[k + 1]
            H[j, i] = theta[k] - 1j * theta[k + 1]
            k += 2
    return H


def _descend_qubit(rho, norm, start_bloch):
    f = lambda x: _objective(rho, ProjectiveMeasurementA.from_bloch(_bloch_from_angles(x)), norm)
    res = minimize(
        f,
        _angles_from_bloch(start_bloch),
        method="Nelder-Mead",
        options={"fatol": _OBJECTIVE_TOL, "xatol": 1e-8, "maxiter": 400},
    )
    meas = ProjectiveMeasurementA.from_bloch(_bloch_from_angles(res.x))
    return float(res.fun), meas, int(res.nit)


def _descend_basis(rho, norm, U0):
    d = rho.dims.dA
    nparams = d * d

    def f(theta):
        U = U0 @ expm(1j * _hermitian_from_params(np.asarray(theta), d))
        return _objective(rho, ProjectiveMeasurementA(basis=U), norm)

    x0 = np.zeros(nparams)
    if norm == 2:
        res = minimize(f, x0, method="L-BFGS-B", options={"ftol": 1e-14, "gtol": 1e-10})
    else:
        res = minimize(
            f, x0, method="Nelder-Mead", options={"fatol": _OBJECTIVE_TOL, "maxiter": 2000}
        )
    U = U0 @ expm(1j * _hermitian_from_params(res.x, d))
    # re-orthonormalize drift from the matrix exponential
    q, r = np.linalg.qr(U)
    U = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return float(res.fun), ProjectiveMeasurementA(basis=U), int(res.nit)


def _minimize_over_measurements(rho, norm, restarts, rng):
    if restarts < 1:
        raise ValueError(f"restarts must be >= 1, got {restarts}")
    if rng is None:
        rng = make_rng(0)
    best_val, best_meas, iters = np.inf, None, 0
    for _ in range(restarts):
        if rho.dims.dA == 2:
            e = rng.standard_normal(3)
            e /= np.linalg.norm(e)
            val, meas, nit = _descend_qubit(rho, norm, e)
        else:
            val, meas, nit = _descend_basis(rho, norm, haar_unitary(rho.dims.dA, rng))
        iters += nit
        if val < best_val:
            best_val, best_meas = val, meas
    return best_val, best_meas, iters


def geometric_discord_2norm_opt(
    rho: BipartiteDensityMatrix, restarts: int = 20, rng: np.random.Generator | None = None
) -> DiscordEstimate:
    """2-norm geometric discord by local descent over measurements.

    Works for any dA and is deterministic given the generator. This path
    deliberately evaluates the distance directly (no Pauli reduction), so
    it cross-checks the closed form instead of repeating it.
    """
    val, meas, iters = _minimize_over_measurements(rho, 2, restarts, rng)
    return DiscordEstimate(
        value=max(0.0, val),
        norm=2,
        method="optimized",
        optimizer=OptimizerInfo(restarts=restarts, iterations=iters, best_measurement=meas),
    )


def trace_discord_upper(
    rho: BipartiteDensityMatrix, restarts: int = 20, rng: np.random.Generator | None = None
) -> DiscordEstimate:
    """Minimized trace-norm distance to the measured family.

    An upper estimate of the trace-norm discord: every measured state is
    classical-quantum, but the trace-norm-nearest CQ state need not be of
    measured form.
    """
    val, meas, iters = _minimize_over_measurements(rho, 1, restarts, rng)
    return DiscordEstimate(
        value=max(0.0, val),
        norm=1,
        method="optimized",
        optimizer=OptimizerInfo(restarts=restarts, iterations=iters, best_measurement=meas),
        is_upper_bound_only=True,
    )


def fibonacci_sphere(n: int) -> np.ndarray:
    """n roughly equidistributed unit vectors (golden-angle spiral)."""
    k = np.arange(n) + 0.5
    polar = np.arccos(1.0 - 2.0 * k / n)
    azim = np.pi * (1.0 + np.sqrt(5.0)) * k
    return np.stack(
        [np.sin(polar) * np.cos(azim), np.sin(polar) * np.sin(azim), np.cos(polar)], axis=1
    )


def grid_oracle_qubitA(
    rho: BipartiteDensityMatrix,
    norm: int = 2,
    grid_points: int = 10_000,
    refine: bool = True,
) -> DiscordEstimate:
    """Brute-force oracle for dA = 2: dense Bloch-sphere grid plus refinement.

    Evaluates the measured-family distance at every grid direction and
    then polishes the best one with a local search. Independent of both
    the closed form and the restart optimizer.
    """
    if rho.dims.dA != 2:
        raise UnsupportedDimsError("grid oracle over the Bloch sphere requires dA = 2")
    grid = fibonacci_sphere(grid_points)
    vals = np.empty(grid_points)
    for i in range(grid_points):
        vals[i] = _objective(rho, ProjectiveMeasurementA(bloch=grid[i]), norm)
    best_idx = int(vals.argmin())
    best_val = float(vals[best_idx])
    best_e = grid[best_idx]
    iters = grid_points
    if refine:
        val, meas, nit = _descend_qubit(rho, norm, best_e)
        iters += nit
        if val < best_val:
            best_val, best_e = val, meas.bloch
    return DiscordEstimate(
        value=max(0.0, best_val),
        norm=norm,
        method="oracle_grid",
        optimizer=OptimizerInfo(
            restarts=0,
            iterations=iters,
            best_measurement=ProjectiveMeasurementA.from_bloch(best_e),
        ),
        is_upper_bound_only=(norm == 1),
    )


def basis_grid_oracle(
    rho: BipartiteDensityMatrix,
    norm: int = 2,
    n_grid: int = 200,
    rng: np.random.Generator | None = None,
    refine: bool = True,
) -> DiscordEstimate:
    """Coarse oracle for dA > 2: Haar-basis grid with local refinement."""
    if rng is None:
        rng = make_rng(1)
    best_val, best_U = np.inf, None
    for _ in range(n_grid):
        U = haar_unitary(rho.dims.dA, rng)
        v = _objective(rho, ProjectiveMeasurementA(basis=U), norm)
        if v < best_val:
            best_val, best_U = v, U
    iters = n_grid
    meas = ProjectiveMeasurementA(basis=best_U)
    if refine:
        val, meas2, nit = _descend_basis(rho, norm, best_U)
        iters += nit
        if val < best_val:
            best_val, meas = val, meas2
    return DiscordEstimate(
        value=max(0.0, best_val),
        norm=norm,
        method="oracle_grid",
        optimizer=OptimizerInfo(restarts=0, iterations=iters, best_measurement=meas),
        is_upper_bound_only=(norm == 1),
    )


def hs_distance_sq(a: BipartiteDensityMatrix, b: BipartiteDensityMatrix) -> float:
    """Squared Hilbert-Schmidt distance ||a - b||_2^2."""
    if a.dims != b.dims:
        raise DimsError(f"dims mismatch: {a.dims} vs {b.dims}")
    return float(np.sum(np.abs(a.matrix - b.matrix) ** 2))


def trace_distance_raw(a: BipartiteDensityMatrix, b: BipartiteDensityMatrix) -> float:
    """Trace-norm distance ||a - b||_1 with no 1/2 convention."""
    if a.dims != b.dims:
        raise DimsError(f"dims mismatch: {a.dims} vs {b.dims}")
    return float(np.abs(np.linalg.eigvalsh(a.matrix - b.matrix)).sum())
