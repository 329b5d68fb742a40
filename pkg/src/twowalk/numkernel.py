"""Small numeric kernels: Hermitian eigenvalues and the DFT.

Both routines are double precision throughout.  ``hermitian_eigenvalues``
defaults to LAPACK (``numpy.linalg.eigvalsh``); a cyclic complex Jacobi
solver is kept alongside it for cross-checking and for environments where
a reference implementation is wanted.
"""

from __future__ import annotations

import numpy as np

HERMITIAN_TOL = 1e-12


class NumericalError(ValueError):
    """Raised when an input violates a numeric precondition."""


def as_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate ``m`` as a square Hermitian matrix and return it as complex128."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NumericalError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise NumericalError("matrix dimension must be positive")
    if not np.all(np.isfinite(m)):
        raise NumericalError("matrix has non-finite entries")
    defect = np.max(np.abs(m - m.conj().T))
    if defect > tol:
        raise NumericalError(f"matrix is not Hermitian (defect {defect:.3e})")
    return m


def hermitian_eigenvalues(m, method: str = "lapack") -> np.ndarray:
    """Return the eigenvalues of a Hermitian matrix in ascending order.

    ``method`` is ``"lapack"`` or ``"jacobi"``.
    """
    m = as_hermitian(m)
    if method == "lapack":
        return np.linalg.eigvalsh(m)
    if method == "jacobi":
        return np.sort(jacobi_eigenvalues(m))
    raise ValueError(f"unknown eigenvalue method {method!r}")


def jacobi_eigenvalues(m, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi diagonalisation of a complex Hermitian matrix.

    Each rotation zeroes one off-diagonal pair (p, q) with a unitary
    Givens-like transform.  Sweeps stop once the off-diagonal Frobenius norm
    drops below ``tol`` times the Frobenius norm of the input.
    """
    a = np.array(m, dtype=np.complex128)
    n = a.shape[0]
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0.0:
        return np.real(np.diag(a)).copy()
    target = tol * scale
    offdiag = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        if np.linalg.norm(a[offdiag]) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                # reduce to a real symmetric 2x2 problem by rephasing q
                phase = apq / mag
                app = a[p, p].real
                aqq = a[q, q].real
                theta = 0.5 * np.arctan2(2.0 * mag, aqq - app)
                c = np.cos(theta)
                s = np.sin(theta)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise NumericalError("Jacobi iteration did not converge")
    return np.real(np.diag(a)).copy()


def dft(x) -> np.ndarray:
    """Discrete Fourier transform X[k] = sum_n x[n] exp(-2 pi i k n / L).

    Any length >= 1 is accepted; no padding is applied, so bin ``k`` maps
    to frequency ``k / L`` exactly.
    """
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim != 1 or x.size == 0:
        raise NumericalError("dft needs a non-empty 1-D sequence")
    return np.fft.fft(x)
