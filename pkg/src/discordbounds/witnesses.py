"""Partial-transpose analysis, negativity, and entanglement witnesses.

Two witness families are built here, both decomposable (of the form
Q^{T_A} with Q positive semidefinite, hence nonnegative on every
separable state):

* the negativity witness, the partially transposed projector onto the
  negative subspace of rho^{T_A}; its witnessed value equals the
  negativity and Tr(W^2) counts the negative eigenvalues;
* the PPT random-robustness witness, D times the partially transposed
  projector onto the most negative eigenvector of rho^{T_A}; its
  witnessed value is the minimal s such that (rho + s I/D)^{T_A} is PSD.

Sign convention: witnesses are stored so that Tr(W rho) < 0 on the state
that generated them, and the witnessed entanglement is max(0, -Tr(W rho)).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateWitnessError, DimsError, PPTError
from .linalg import BipartiteDims, hermitian_eigensystem, partial_transpose
from .states import BipartiteDensityMatrix, random_product

# Sums of partial-transpose eigenvalues below this are reported as exactly
# zero negativity, so PPT states do not leak eigensolver dust.
_NEGATIVITY_FLOOR = 1e-12


def default_neg_tol(dims: BipartiteDims) -> float:
    """Classification threshold for negative PT eigenvalues: 1e-9 * dim."""
    return 1e-9 * dims.total


@dataclass(frozen=True)
class NegativeSubspace:
    """Spectral data of the negative part of rho^{T_A}."""

    projector: np.ndarray
    count: int
    negative_eigenvalues: list
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class EntanglementWitness:
    """Hermitian witness with its cached scalar data.

    e_w is the witnessed entanglement of the source state, hs_sq is
    Tr(W^2), sup_norm is the largest absolute eigenvalue, and neg_count
    is the negative-eigenvalue count m (negativity kind only).
    """

    matrix: np.ndarray
    dims: BipartiteDims
    kind: str
    e_w: float
    hs_sq: float
    sup_norm: float
    neg_count: int | None = None
    normalized: bool = False


def pt_negative_subspace(rho: BipartiteDensityMatrix, tol: float | None = None) -> NegativeSubspace:
    """Collect the eigenpairs of rho^{T_A} with eigenvalue < -tol.

    Raises PPTError (carrying the smallest eigenvalue) when there are
    none; eigenvalues in [-tol, 0) count as zero so round-off near the
    PPT boundary cannot inflate the count.
    """
    if tol is None:
        tol = default_neg_tol(rho.dims)
    w, V = hermitian_eigensystem(partial_transpose(rho.matrix, rho.dims, "A"))
    mask = w < -tol
    if not mask.any():
        raise PPTError(
            f"state is PPT at tolerance {tol:.1e} (lambda_min = {w[0]:.3e})",
            lambda_min=float(w[0]),
        )
    vecs = V[:, mask]
    proj = vecs @ np.conj(vecs).T
    return NegativeSubspace(
        projector=proj,
        count=int(mask.sum()),
        negative_eigenvalues=[float(x) for x in w[mask]],
        eigenvectors=vecs,
    )


def negativity(rho: BipartiteDensityMatrix) -> float:
    """Absolute sum of the negative eigenvalues of rho^{T_A} (unnormalized).

    Equals (||rho^{T_A}||_1 - 1)/2 up to round-off; results below 1e-12
    are clamped to exactly 0 so PPT states report zero.
    """
    w = np.linalg.eigvalsh(partial_transpose(rho.matrix, rho.dims, "A"))
    raw = float(-w[w < 0].sum()) if (w < 0).any() else 0.0
    return raw if raw > _NEGATIVITY_FLOOR else 0.0


def negativity_witness(rho: BipartiteDensityMatrix, tol: float | None = None) -> EntanglementWitness:
    """Witness P_minus^{T_A} from the negative subspace of rho^{T_A}."""
    ns = pt_negative_subspace(rho, tol)
    W = partial_transpose(ns.projector, rho.dims, "A")
    W = (W + np.conj(W).T) / 2
    tr_w_rho = float(np.trace(W @ rho.matrix).real)
    spectrum = np.linalg.eigvalsh(W)
    return EntanglementWitness(
        matrix=W,
        dims=rho.dims,
        kind="negativity",
        e_w=max(0.0, -tr_w_rho),
        hs_sq=float(np.trace(W @ W).real),
        sup_norm=float(np.abs(spectrum).max()),
        neg_count=ns.count,
    )


def random_robustness_witness(
    rho: BipartiteDensityMatrix, tol: float | None = None
) -> EntanglementWitness:
    """PPT random-robustness witness D * (|v_min><v_min|)^{T_A}.

    Its witnessed value -D * lambda_min equals the minimal s for which
    (rho + s I/D)^{T_A} is positive semidefinite; Tr(W) = D. For a
    degenerate lambda_min the eigenvector returned first by the
    ascending-order decomposition is used (deterministic).
    """
    if tol is None:
        tol = default_neg_tol(rho.dims)
    D = rho.dims.total
    w, V = hermitian_eigensystem(partial_transpose(rho.matrix, rho.dims, "A"))
    if w[0] >= -tol:
        raise PPTError(
            f"state is PPT at tolerance {tol:.1e} (lambda_min = {w[0]:.3e})",
            lambda_min=float(w[0]),
        )
    v = V[:, 0]
    W = D * partial_transpose(np.outer(v, v.conj()), rho.dims, "A")
    W = (W + np.conj(W).T) / 2
    tr_w_rho = float(np.trace(W @ rho.matrix).real)
    spectrum = np.linalg.eigvalsh(W)
    return EntanglementWitness(
        matrix=W,
        dims=rho.dims,
        kind="random_robustness",
        e_w=max(0.0, -tr_w_rho),
        hs_sq=float(np.trace(W @ W).real),
        sup_norm=float(np.abs(spectrum).max()),
        neg_count=None,
    )


def witnessed_entanglement(rho: BipartiteDensityMatrix, W: EntanglementWitness) -> float:
    """max(0, -Tr(W rho)); zero when the witness does not detect rho."""
    if W.matrix.shape != rho.matrix.shape:
        raise DimsError(
            f"witness shape {W.matrix.shape} does not match state shape {rho.matrix.shape}"
        )
    t = complex(np.trace(W.matrix @ rho.matrix))
    if abs(t.imag) >= 1e-10:
        raise DimsError(f"Tr(W rho) has imaginary residue {t.imag:.3e}; inputs not Hermitian")
    return max(0.0, -t.real)


def sup_normalize(W: EntanglementWitness) -> EntanglementWitness:
    """Rescale the witness by its sup norm so that -I <= W <= I.

    Positive rescaling preserves which states are detected; e_w and
    Tr(W^2) scale by 1/sup_norm and 1/sup_norm^2.
    """
    if not W.sup_norm > 0.0:
        raise DegenerateWitnessError("witness has zero sup norm; cannot normalize")
    f = W.sup_norm
    return replace(
        W,
        matrix=W.matrix / f,
        e_w=W.e_w / f,
        hs_sq=W.hs_sq / (f * f),
        sup_norm=1.0,
        normalized=True,
    )


def min_product_expectation(
    W: EntanglementWitness, samples: int, rng: np.random.Generator
) -> float:
    """Minimum of Tr(W sigma) over random product states sigma.

    Statistical validity check: decomposable witnesses must stay
    nonnegative (within tolerance) on every draw.
    """
    lo = np.inf
    for _ in range(samples):
        sigma = random_product(W.dims, rng)
        val = float(np.trace(W.matrix @ sigma.matrix).real)
        if val < lo:
            lo = val
    return float(lo)
