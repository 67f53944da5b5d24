"""Validated bipartite density matrices and seeded random ensembles.

All randomness flows through counter-based Philox generators built from an
explicit integer seed plus a spawn key, so ensemble generation is
reproducible sample-by-sample and safe to parallelize: the draw for index
i never depends on how many workers ran or in what order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimsError,
    NonHermitianError,
    NotPSDError,
    NotSquareError,
    TraceError,
)
from .linalg import BipartiteDims, _as_matrix, dagger, kron

DEFAULT_TOL = 1e-9


def make_rng(seed: int, key: tuple = ()) -> np.random.Generator:
    """Deterministic Philox generator for (seed, spawn key).

    Distinct keys give statistically independent streams from the same
    seed; identical (seed, key) always reproduces the same draws.
    """
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


@dataclass(frozen=True)
class BipartiteDensityMatrix:
    """A validated state: Hermitian, unit trace, PSD within tolerance."""

    matrix: np.ndarray
    dims: BipartiteDims
    label: str | None = None
    seed_provenance: tuple | None = None

    @property
    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


def validate(
    matrix,
    dims: BipartiteDims,
    tol: float = DEFAULT_TOL,
    label: str | None = None,
    seed_provenance: tuple | None = None,
) -> BipartiteDensityMatrix:
    """Check density-matrix invariants and wrap the result.

    Raises the specific error naming the violated invariant: NotSquareError,
    DimsError (side vs dA*dB), NonHermitianError, TraceError, NotPSDError.
    The returned matrix is a read-only copy.
    """
    A = _as_matrix(matrix, "state")
    if A.shape[0] != A.shape[1]:
        raise NotSquareError(f"state matrix must be square, got shape {A.shape}")
    if A.shape[0] != dims.total:
        raise DimsError(
            f"state side {A.shape[0]} does not match dims {dims} (dA*dB = {dims.total})"
        )
    dev = float(np.abs(A - dagger(A)).max())
    if dev > tol:
        raise NonHermitianError(
            f"state is not Hermitian: max|rho - rho^dag| = {dev:.3e} > {tol:.3e}",
            deviation=dev,
        )
    H = (A + dagger(A)) / 2
    tr = complex(np.trace(H))
    excess = abs(tr - 1.0)
    if excess > tol:
        raise TraceError(
            f"state trace deviates from 1 by {excess:.3e} (trace = {tr.real:.12g}) > {tol:.3e}",
            excess=excess,
        )
    lam_min = float(np.linalg.eigvalsh(H).min())
    if lam_min < -tol:
        raise NotPSDError(
            f"state has negative eigenvalue {lam_min:.3e} beyond tolerance {tol:.3e}",
            min_eigenvalue=lam_min,
        )
    out = np.array(A, dtype=complex)
    out.setflags(write=False)
    return BipartiteDensityMatrix(out, dims, label=label, seed_provenance=seed_provenance)


def bell_phi_plus(d: int) -> BipartiteDensityMatrix:
    """Projector onto the maximally entangled vector (1/sqrt d) sum_i |ii>."""
    if d < 2:
        raise DimsError(f"local dimension must be >= 2, got {d}")
    v = np.zeros(d * d, dtype=complex)
    v[:: d + 1] = 1.0 / np.sqrt(d)
    return validate(np.outer(v, v.conj()), BipartiteDims(d, d), label=f"phi_plus_{d}")


def isotropic(d: int, p: float) -> BipartiteDensityMatrix:
    """Mixture p * phi_plus + (1 - p) * I / d^2.

    PSD only for p in [-1/(d^2 - 1), 1]; out-of-range p surfaces as
    NotPSDError from validation.
    """
    phi = bell_phi_plus(d)
    mat = p * phi.matrix + (1.0 - p) * np.eye(d * d) / (d * d)
    return validate(mat, BipartiteDims(d, d), label=f"isotropic_{d}_p{p:g}")


def random_pure(
    dims: BipartiteDims,
    rng: np.random.Generator,
    seed_provenance: tuple | None = None,
) -> BipartiteDensityMatrix:
    """Projector onto a Haar-random unit vector."""
    D = dims.total
    v = rng.standard_normal(D) + 1j * rng.standard_normal(D)
    v /= np.linalg.norm(v)
    return validate(np.outer(v, v.conj()), dims, seed_provenance=seed_provenance)


def _random_density(d: int, ancilla: int, rng: np.random.Generator) -> np.ndarray:
    G = rng.standard_normal((d, ancilla)) + 1j * rng.standard_normal((d, ancilla))
    M = G @ dagger(G)
    return M / float(np.trace(M).real)


def random_mixed_induced(
    dims: BipartiteDims,
    ancilla: int,
    rng: np.random.Generator,
    seed_provenance: tuple | None = None,
) -> BipartiteDensityMatrix:
    """Mixed state from the induced measure with the given ancilla dimension.

    Draws G as a (dA*dB) x ancilla complex Gaussian matrix and returns
    G G^dag / Tr(G G^dag), the state obtained by tracing an ancilla out of
    a Haar-random pure state. ancilla = 1 reduces to a pure draw.
    """
    if ancilla < 1:
        raise DimsError(f"ancilla dimension must be >= 1, got {ancilla}")
    return validate(
        _random_density(dims.total, ancilla, rng), dims, seed_provenance=seed_provenance
    )


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed d x d unitary (QR of a complex Gaussian, phases fixed)."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


@dataclass(frozen=True)
class ClassicalQuantumState:
    """Zero-discord state sum_k p_k |k><k| (x) rho_k with its ingredients.

    `basis` holds the orthonormal vectors |k> as columns; `assembled` is
    the validated full state.
    """

    basis: np.ndarray
    probabilities: np.ndarray
    conditional_states: list = field(default_factory=list)
    assembled: BipartiteDensityMatrix = None


def random_cq(
    dims: BipartiteDims,
    rng: np.random.Generator,
    seed_provenance: tuple | None = None,
) -> ClassicalQuantumState:
    """Random classical-quantum state.

    Basis from a Haar unitary's columns, probabilities from normalized
    exponential variates (flat Dirichlet), conditional states on B from a
    square-ancilla induced draw.
    """
    U = haar_unitary(dims.dA, rng)
    w = rng.exponential(scale=1.0, size=dims.dA)
    probs = w / w.sum()
    conds = [_random_density(dims.dB, dims.dB, rng) for _ in range(dims.dA)]
    total = np.zeros((dims.total, dims.total), dtype=complex)
    for k in range(dims.dA):
        ket = U[:, k]
        total += probs[k] * kron(np.outer(ket, ket.conj()), conds[k])
    assembled = validate(total, dims, seed_provenance=seed_provenance)
    return ClassicalQuantumState(
        basis=U, probabilities=probs, conditional_states=conds, assembled=assembled
    )


def _check_density_factor(M, name: str, tol: float = DEFAULT_TOL) -> np.ndarray:
    A = _as_matrix(M, name)
    if A.shape[0] != A.shape[1]:
        raise NotSquareError(f"{name} must be square, got shape {A.shape}")
    dev = float(np.abs(A - dagger(A)).max())
    if dev > tol:
        raise NonHermitianError(f"{name} is not Hermitian (deviation {dev:.3e})", deviation=dev)
    excess = abs(complex(np.trace(A)) - 1.0)
    if excess > tol:
        raise TraceError(f"{name} trace deviates from 1 by {excess:.3e}", excess=excess)
    lam = float(np.linalg.eigvalsh((A + dagger(A)) / 2).min())
    if lam < -tol:
        raise NotPSDError(f"{name} has negative eigenvalue {lam:.3e}", min_eigenvalue=lam)
    return A


def product(rhoA, rhoB, seed_provenance: tuple | None = None) -> BipartiteDensityMatrix:
    """Tensor product of two single-system density matrices."""
    A = _check_density_factor(rhoA, "rhoA")
    B = _check_density_factor(rhoB, "rhoB")
    dims = BipartiteDims(A.shape[0], B.shape[0])
    return validate(kron(A, B), dims, seed_provenance=seed_provenance)


def random_product(
    dims: BipartiteDims,
    rng: np.random.Generator,
    seed_provenance: tuple | None = None,
) -> BipartiteDensityMatrix:
    """Random product state (square-ancilla induced draw on each factor)."""
    return product(
        _random_density(dims.dA, dims.dA, rng),
        _random_density(dims.dB, dims.dB, rng),
        seed_provenance=seed_provenance,
    )
