"""Dense linear algebra with the error semantics the graph code relies on.

Floating-point work is delegated to LAPACK via numpy/scipy; the integer
determinant is fraction-free Bareiss elimination over Python ints so
spanning-tree counts stay exact far beyond 2**53.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

__all__ = [
    "LinAlgError",
    "SingularMatrixError",
    "DisconnectedLaplacianError",
    "Spectrum",
    "eigh_symmetric",
    "solve",
    "det_integer",
    "pinv_laplacian",
]

_SYM_TOL = 1e-12
_PIVOT_TOL = 1e-12
_NULL_TOL = 1e-9


class LinAlgError(ValueError):
    pass


class SingularMatrixError(LinAlgError):
    pass


class DisconnectedLaplacianError(LinAlgError):
    """Laplacian has more than one (near-)zero eigenvalue."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues ascending; vectors[:, i] is the unit eigenvector of values[i]."""

    values: np.ndarray
    vectors: np.ndarray


def _as_square(a) -> np.ndarray:
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise LinAlgError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def eigh_symmetric(a) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix.

    Parameters
    ----------
    a : (n, n) array_like
        Must be symmetric to within 1e-12 (absolute, relative to max entry).

    Returns
    -------
    Spectrum
        Ascending eigenvalues and an orthonormal eigenvector basis.
    """
    arr = _as_square(a)
    scale = max(1.0, float(np.max(np.abs(arr))) if arr.size else 1.0)
    if float(np.max(np.abs(arr - arr.T))) > _SYM_TOL * scale:
        raise LinAlgError("matrix is not symmetric within tolerance")
    vals, vecs = np.linalg.eigh(arr)
    return Spectrum(values=vals, vectors=vecs)


def solve(a, b) -> np.ndarray:
    """Solve a x = b by partial-pivot LU; tiny pivots raise SingularMatrixError."""
    arr = _as_square(a)
    rhs = np.asarray(b, dtype=float)
    if rhs.shape[0] != arr.shape[0]:
        raise LinAlgError(
            f"rhs length {rhs.shape[0]} does not match matrix order {arr.shape[0]}"
        )
    if arr.shape[0] == 0:
        return np.zeros_like(rhs)
    lu, piv = scipy.linalg.lu_factor(arr, check_finite=True)
    scale = max(1.0, float(np.max(np.abs(arr))))
    if float(np.min(np.abs(np.diag(lu)))) <= _PIVOT_TOL * scale:
        raise SingularMatrixError("matrix is singular to working precision")
    return scipy.linalg.lu_solve((lu, piv), rhs)


def det_integer(a) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss).

    Accepts nested sequences or an integer ndarray; entries are taken as
    Python ints so there is no overflow at any size.
    """
    if isinstance(a, np.ndarray):
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise LinAlgError(f"expected a square matrix, got shape {a.shape}")
        if not np.issubdtype(a.dtype, np.integer):
            raise LinAlgError("det_integer needs integer entries")
        mat = [[int(x) for x in row] for row in a]
    else:
        mat = [[int(x) for x in row] for row in a]
        if any(len(row) != len(mat) for row in mat):
            raise LinAlgError("expected a square matrix")
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, n):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = mat[k][k]
        for i in range(k + 1, n):
            row_i = mat[i]
            row_k = mat[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * mat[n - 1][n - 1]


def pinv_laplacian(lap) -> np.ndarray:
    """Moore-Penrose pseudoinverse of a connected graph's Laplacian.

    The null space must be exactly the all-ones direction: a second
    eigenvalue below 1e-9 means the graph was disconnected and raises
    DisconnectedLaplacianError.
    """
    arr = _as_square(lap)
    spec = eigh_symmetric(arr)
    vals = spec.values
    near_zero = int(np.sum(np.abs(vals) <= _NULL_TOL))
    if near_zero == 0:
        raise LinAlgError("not a Laplacian: no zero eigenvalue found")
    if near_zero > 1:
        raise DisconnectedLaplacianError(
            f"{near_zero} near-zero eigenvalues; Laplacian of a disconnected graph"
        )
    inv = np.zeros_like(vals)
    mask = np.abs(vals) > _NULL_TOL
    inv[mask] = 1.0 / vals[mask]
    return (spec.vectors * inv) @ spec.vectors.T
