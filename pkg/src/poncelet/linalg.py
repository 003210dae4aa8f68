"""Dense small-dimension linear algebra.

Everything here targets matrices of size <= ~16: eigendecomposition is a
cyclic Jacobi iteration (robust and simple at these sizes), Gram-Schmidt is
the modified variant with one re-orthogonalization pass, and Haar-distributed
orthogonal matrices come from orthonormalizing a Gaussian matrix.

Matrices are plain ``numpy.ndarray``; the ``assert_*`` helpers enforce the
invariants (symmetry, positive-definiteness, orthogonality) at module
boundaries.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DegeneracyError,
    NotPositiveDefiniteError,
    NotSymmetricError,
)

#: Default absolute tolerance on residuals, overridable everywhere.
DEFAULT_TOL = 1e-9

_SYM_RTOL = 1e-12
_JACOBI_EPS = 1e-14
_MAX_SWEEPS = 100


def assert_symmetric(matrix: np.ndarray, rtol: float = _SYM_RTOL, name: str = "matrix") -> None:
    """Raise :class:`NotSymmetricError` unless ``matrix`` is symmetric within
    relative tolerance ``rtol``."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetricError(f"{name} must be square, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m))))
    skew = float(np.max(np.abs(m - m.T)))
    if skew > rtol * scale:
        raise NotSymmetricError(f"{name} is not symmetric: max|M - M^T| = {skew:.3e}")


def assert_orthogonal(q: np.ndarray, tol: float = DEFAULT_TOL, name: str = "Q") -> None:
    """Raise ``ValueError`` unless ``q`` has orthonormal columns within ``tol``."""
    q = np.asarray(q, dtype=float)
    n = q.shape[0]
    if q.ndim != 2 or q.shape[1] != n:
        raise ValueError(f"{name} must be square, got shape {q.shape}")
    resid = float(np.max(np.abs(q.T @ q - np.eye(n))))
    if resid > tol:
        raise ValueError(f"{name} is not orthogonal: max|Q^T Q - I| = {resid:.3e}")


def symmetric_eigen(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, q)`` with eigenvalues ascending and ``q``
    orthogonal such that ``matrix = q @ diag(eigenvalues) @ q.T``.

    Raises:
        NotSymmetricError: if the input is not symmetric within 1e-12 relative.
    """
    assert_symmetric(matrix)
    a = np.asarray(matrix, dtype=float).copy()
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    q = np.eye(n)
    if n == 1:
        return a.ravel().copy(), q

    norm = float(np.linalg.norm(a))
    thresh = _JACOBI_EPS * max(norm, 1e-300)
    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2) * 2.0)
        if off <= thresh:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if abs(apr) <= 0.25 * thresh / n:
                    continue
                phi = 0.5 * np.arctan2(2.0 * apr, a[r, r] - a[p, p])
                c = np.cos(phi)
                s = np.sin(phi)
                app, arr = a[p, p], a[r, r]
                a[p, p] = c * c * app + s * s * arr - 2.0 * s * c * apr
                a[r, r] = s * s * app + c * c * arr + 2.0 * s * c * apr
                a[p, r] = a[r, p] = 0.0
                mask = np.ones(n, dtype=bool)
                mask[[p, r]] = False
                aip = a[mask, p].copy()
                air = a[mask, r].copy()
                a[mask, p] = a[p, mask] = c * aip - s * air
                a[mask, r] = a[r, mask] = s * aip + c * air
                qp = q[:, p].copy()
                qr = q[:, r].copy()
                q[:, p] = c * qp - s * qr
                q[:, r] = s * qp + c * qr
    else:
        raise DegeneracyError("Jacobi iteration did not converge")

    eigvals = np.diag(a).copy()
    order = np.argsort(eigvals, kind="stable")
    return eigvals[order], q[:, order]


def _spd_power(matrix: np.ndarray, exponent: float) -> np.ndarray:
    eigvals, q = symmetric_eigen(matrix)
    floor = 1e-12 * max(abs(float(eigvals[-1])), 1e-300)
    if eigvals[0] <= floor:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite: smallest eigenvalue {eigvals[0]:.3e}"
        )
    powered = (q * eigvals**exponent) @ q.T
    return 0.5 * (powered + powered.T)


def spd_sqrt(matrix: np.ndarray) -> np.ndarray:
    """Symmetric positive-definite square root: ``S @ S = matrix``.

    Raises:
        NotPositiveDefiniteError: if any eigenvalue is <= 0.
    """
    return _spd_power(matrix, 0.5)


def spd_inv_sqrt(matrix: np.ndarray) -> np.ndarray:
    """Inverse SPD square root: ``S @ matrix @ S = I``."""
    return _spd_power(matrix, -0.5)


def _as_columns(basis) -> np.ndarray:
    arr = np.asarray(basis, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise ValueError(f"basis must be a matrix of column vectors, got ndim={arr.ndim}")
    return arr


def gram_schmidt(basis) -> np.ndarray:
    """Modified Gram-Schmidt with positive triangular diagonal.

    ``basis`` is a matrix whose columns are the input vectors (a sequence of
    vectors is stacked as columns).  Returns the matrix with orthonormal
    columns spanning the same flag: for each i, span of the first i output
    columns equals span of the first i input columns, and the change of basis
    is upper triangular with positive diagonal.

    One re-orthogonalization pass keeps ``Q^T Q = I`` near machine precision
    even for moderately ill-conditioned input.

    Raises:
        DegeneracyError: on (numerically) rank-deficient input.
    """
    arr = _as_columns(basis)
    if isinstance(basis, (list, tuple)):
        arr = np.column_stack([np.asarray(v, dtype=float) for v in basis])
    n, k = arr.shape
    if k > n:
        raise DegeneracyError(f"cannot orthonormalize {k} vectors in dimension {n}")
    q = arr.copy()
    col_scale = np.linalg.norm(arr, axis=0)
    for j in range(k):
        for _ in range(2):  # MGS with one re-orthogonalization pass
            for i in range(j):
                q[:, j] -= (q[:, i] @ q[:, j]) * q[:, i]
        norm = np.linalg.norm(q[:, j])
        if norm <= 1e-12 * max(col_scale[j], 1e-300):
            raise DegeneracyError(f"basis vector {j} is dependent on its predecessors")
        q[:, j] /= norm
    return q


def haar_random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed random orthogonal matrix.

    Orthonormalizes a matrix of iid standard normals (positive diagonal
    convention), then flips column signs with independent fair coins so both
    components of O(n) are covered.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    gauss = rng.standard_normal((n, n))
    q = gram_schmidt(gauss)
    signs = rng.choice([-1.0, 1.0], size=n)
    return q * signs
