"""Dense complex-matrix primitives.

Tensor products, partial transpose and trace over a bipartite split,
Hermitian eigensystems, Schatten p-norms, and the operator Holder
inequality check. Everything here is a pure function of its inputs;
arrays are never mutated in place.

The infinite Schatten order is always the ``math.inf`` sentinel, never a
large float, so conjugate-exponent arithmetic with ``1/inf == 0.0`` stays
exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimsError,
    InvalidOrderError,
    NonHermitianError,
    NotSquareError,
)


@dataclass(frozen=True)
class BipartiteDims:
    """Subsystem dimensions (dA, dB) of a bipartite operator.

    The ordering convention dA <= dB is not forced; checks that need the
    smaller local dimension use :attr:`min_dim`.
    """

    dA: int
    dB: int

    def __post_init__(self):
        if not (isinstance(self.dA, (int, np.integer)) and isinstance(self.dB, (int, np.integer))):
            raise DimsError(f"dimensions must be integers, got ({self.dA!r}, {self.dB!r})")
        if self.dA < 2 or self.dB < 2:
            raise DimsError(f"both subsystem dimensions must be >= 2, got ({self.dA}, {self.dB})")
        object.__setattr__(self, "dA", int(self.dA))
        object.__setattr__(self, "dB", int(self.dB))

    @property
    def total(self) -> int:
        return self.dA * self.dB

    @property
    def min_dim(self) -> int:
        """The smaller local dimension d = min(dA, dB)."""
        return min(self.dA, self.dB)

    @classmethod
    def from_string(cls, text: str) -> "BipartiteDims":
        """Parse 'AxB' (e.g. '2x32') into dimensions."""
        parts = text.lower().split("x")
        if len(parts) != 2:
            raise DimsError(f"dims must look like 'AxB', got {text!r}")
        try:
            da, db = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise DimsError(f"dims must look like 'AxB' with integers, got {text!r}") from exc
        return cls(da, db)

    def __str__(self) -> str:
        return f"{self.dA}x{self.dB}"


@dataclass(frozen=True)
class HolderPair:
    """Conjugate Schatten orders (p, q) with 1/p + 1/q = 1.

    Infinity is represented by ``math.inf`` exactly; the conjugate of 1 is
    ``math.inf`` and vice versa, with no floating slop.
    """

    p: float
    q: float

    def __post_init__(self):
        for name, value in (("p", self.p), ("q", self.q)):
            if not (value == math.inf or value >= 1):
                raise InvalidOrderError(f"Schatten order {name} must be >= 1 or inf, got {value!r}")
        inv = (0.0 if self.p == math.inf else 1.0 / self.p) + (
            0.0 if self.q == math.inf else 1.0 / self.q
        )
        if abs(inv - 1.0) > 1e-12:
            raise InvalidOrderError(
                f"orders are not conjugate: 1/{self.p} + 1/{self.q} = {inv!r}"
            )

    @classmethod
    def conjugate(cls, p: float) -> "HolderPair":
        """Build the pair (p, q) with q the Holder conjugate of p."""
        if p == math.inf:
            return cls(math.inf, 1.0)
        if p < 1:
            raise InvalidOrderError(f"Schatten order must be >= 1 or inf, got {p!r}")
        if p == 1:
            return cls(1.0, math.inf)
        return cls(float(p), p / (p - 1.0))


def _as_matrix(M, name: str = "matrix") -> np.ndarray:
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2:
        raise DimsError(f"{name} must be 2-dimensional, got shape {A.shape}")
    if not np.all(np.isfinite(A.real)) or not np.all(np.isfinite(A.imag)):
        raise ValueError(f"{name} has non-finite entries")
    return A


def _as_square(M, name: str = "matrix") -> np.ndarray:
    A = _as_matrix(M, name)
    if A.shape[0] != A.shape[1]:
        raise NotSquareError(f"{name} must be square, got shape {A.shape}")
    return A


def dagger(M: np.ndarray) -> np.ndarray:
    return np.conj(M).T


def kron(A, B) -> np.ndarray:
    """Tensor (Kronecker) product of two operators."""
    return np.kron(_as_matrix(A, "A"), _as_matrix(B, "B"))


def _check_side(M: np.ndarray, dims: BipartiteDims) -> None:
    if M.shape[0] != dims.total:
        raise DimsError(
            f"matrix side {M.shape[0]} does not equal dA*dB = {dims.dA}*{dims.dB} = {dims.total}"
        )


def partial_transpose(M, dims: BipartiteDims, subsystem: str = "A") -> np.ndarray:
    """Transpose the indices of one subsystem only.

    Parameters
    ----------
    M : array_like
        Square operator on the dA*dB product space.
    dims : BipartiteDims
        The bipartite split.
    subsystem : {'A', 'B'}
        Which factor to transpose.

    Returns
    -------
    numpy.ndarray
        The partially transposed operator. Trace and Hermiticity are
        preserved, and applying the map twice returns the input exactly.
    """
    A = _as_square(M)
    _check_side(A, dims)
    T = A.reshape(dims.dA, dims.dB, dims.dA, dims.dB)
    if subsystem == "A":
        T = T.transpose(2, 1, 0, 3)
    elif subsystem == "B":
        T = T.transpose(0, 3, 2, 1)
    else:
        raise DimsError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return T.reshape(dims.total, dims.total).copy()


def partial_trace(M, dims: BipartiteDims, subsystem: str = "B") -> np.ndarray:
    """Trace out one subsystem; the result acts on the other factor."""
    A = _as_square(M)
    _check_side(A, dims)
    T = A.reshape(dims.dA, dims.dB, dims.dA, dims.dB)
    if subsystem == "B":
        return np.einsum("abcb->ac", T)
    if subsystem == "A":
        return np.einsum("abad->bd", T)
    raise DimsError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def hermiticity_deviation(H: np.ndarray) -> float:
    """Spectral norm of H - H^dagger."""
    return float(np.linalg.norm(H - dagger(H), 2))


def hermitian_eigensystem(H, tol: float | None = None):
    """Eigendecomposition of a Hermitian operator.

    The input is symmetrized to (H + H^dagger)/2 before decomposition so
    that floating-point drift from repeated products cannot feed a
    non-symmetric matrix to the solver. The Hermiticity precondition is
    still enforced against `tol` first.

    Parameters
    ----------
    H : array_like
        Square matrix, Hermitian within `tol`.
    tol : float, optional
        Allowed spectral-norm deviation of H from H^dagger. Defaults to
        1e-9 * max(1, ||H||_inf).

    Returns
    -------
    (eigenvalues, eigenvectors)
        Eigenvalues ascending; eigenvectors as orthonormal columns of a
        unitary matrix, aligned with the eigenvalue order.
    """
    A = _as_square(H, "H")
    w, V = np.linalg.eigh((A + dagger(A)) / 2)
    if tol is None:
        tol = 1e-9 * max(1.0, float(np.abs(w).max()))
    dev = hermiticity_deviation(A)
    if dev > tol:
        raise NonHermitianError(
            f"matrix is not Hermitian: ||H - H^dag|| = {dev:.3e} > tol = {tol:.3e}",
            deviation=dev,
        )
    return w, V


def singular_values(M) -> np.ndarray:
    """Singular values in descending order.

    Hermitian inputs use the absolute eigenvalues directly; otherwise the
    values come from the eigenvalues of M^dagger M with negative round-off
    clamped to zero (no general SVD primitive is needed).
    """
    A = _as_matrix(M)
    if A.shape[0] == A.shape[1] and hermiticity_deviation(A) <= 1e-12 * max(1.0, float(np.abs(A).max())):
        s = np.abs(np.linalg.eigvalsh((A + dagger(A)) / 2))
    else:
        gram = dagger(A) @ A
        s = np.sqrt(np.clip(np.linalg.eigvalsh((gram + dagger(gram)) / 2), 0.0, None))
    return np.sort(s)[::-1]


def schatten_norm(M, p) -> float:
    """Schatten p-norm (sum of singular values to the p, root 1/p).

    p = 1 is the trace norm, p = 2 the Hilbert-Schmidt norm, and
    p = math.inf the operator (largest-singular-value) norm.
    """
    if p != math.inf and not p >= 1:
        raise InvalidOrderError(f"Schatten order must be >= 1 or inf, got {p!r}")
    s = singular_values(M)
    if s.size == 0:
        return 0.0
    if p == math.inf:
        return float(s[0])
    if p == 1:
        return float(s.sum())
    if p == 2:
        return float(np.sqrt(np.sum(s * s)))
    return float(np.sum(s ** float(p)) ** (1.0 / float(p)))


def holder_check(A, B, pair: HolderPair) -> float:
    """Signed margin of the operator Holder inequality.

    Returns ||A||_q * ||B||_p - |Tr(A B^dagger)|, which is nonnegative up
    to about -1e-10 of numerical slack for every conjugate pair (p, q).
    """
    MA = _as_matrix(A, "A")
    MB = _as_matrix(B, "B")
    if MA.shape != MB.shape:
        raise DimsError(f"shape mismatch: A is {MA.shape}, B is {MB.shape}")
    lhs = schatten_norm(MA, pair.q) * schatten_norm(MB, pair.p)
    rhs = abs(complex(np.trace(MA @ dagger(MB))))
    return float(lhs - rhs)
