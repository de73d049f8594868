"""Dense matrix helpers: validation, norms, submatrix selection and small
determinant / solve kernels used throughout the package.

All matrices are plain float64 numpy arrays.  ``check_matrix`` is the single
entry point that enforces the package-wide contract (2-D, real, finite).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

#: double precision machine epsilon, 2**-52
EPS_MACH = 2.0 ** -52

#: largest dimension accepted by the brute-force determinant
DET_BRUTEFORCE_MAX = 8


class SingularMatrixError(ValueError):
    """Raised when a solve meets a numerically singular matrix."""


def check_matrix(a, name="matrix"):
    """Validate and convert input to a float64 2-D array.

    Rejects non-finite entries (NaN/Inf) outright; the elimination and the
    volume formulas assume real arithmetic.
    """
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got ndim={arr.ndim}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return np.ascontiguousarray(arr)


def check_index_set(indices, bound, name="index set"):
    """Validate a strictly increasing set of 0-based indices below ``bound``."""
    idx = np.asarray(indices, dtype=int).reshape(-1)
    if idx.size:
        if idx.min() < 0 or idx.max() >= bound:
            raise IndexError(f"{name} out of range [0, {bound})")
        if np.any(np.diff(idx) <= 0):
            raise ValueError(f"{name} must be strictly increasing without duplicates")
    return idx


def max_abs_norm(a):
    """Maximum absolute entry of a matrix (Chebyshev norm); 0 for empty input."""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0.0
    return float(np.abs(a).max())


def select(a, rows, cols):
    """Extract the submatrix of ``a`` given by row and column index sets."""
    a = check_matrix(a)
    m, n = a.shape
    rows = check_index_set(rows, m, "row index set")
    cols = check_index_set(cols, n, "column index set")
    return a[np.ix_(rows, cols)].copy()


@lru_cache(maxsize=None)
def _perms_and_signs(k):
    # cached permutation table with parities for the permutation-sum determinant
    perms = np.array(list(permutations(range(k))), dtype=int)
    signs = np.ones(len(perms))
    for i in range(k - 1):
        for j in range(i + 1, k):
            signs *= np.where(perms[:, i] > perms[:, j], -1.0, 1.0)
    return perms, signs


def det_bruteforce(a):
    """Exact-algorithm determinant by permutation sum, for k <= 8.

    Used only as an independent oracle in tests and verification batteries;
    cost grows as k! so the dimension is capped.
    """
    a = check_matrix(a)
    k, k2 = a.shape
    if k != k2:
        raise ValueError("determinant requires a square matrix")
    if k > DET_BRUTEFORCE_MAX:
        raise ValueError(f"brute-force determinant limited to k <= {DET_BRUTEFORCE_MAX}")
    if k == 0:
        return 1.0
    perms, signs = _perms_and_signs(k)
    prods = a[np.arange(k)[None, :], perms].prod(axis=1)
    return float(signs @ prods)


def lu_complete(a):
    """LU factorization with complete (full) pivoting.

    Returns ``(lu, prow, pcol, parity)`` where ``lu`` packs the unit lower
    factor below the diagonal and U on and above it, and ``prow``/``pcol``
    are the row/column permutations so that A[prow][:, pcol] = L @ U.
    """
    a = check_matrix(a)
    k, k2 = a.shape
    if k != k2:
        raise ValueError("LU with complete pivoting requires a square matrix")
    lu = a.copy()
    prow = np.arange(k)
    pcol = np.arange(k)
    parity = 1.0
    for t in range(k):
        block = np.abs(lu[t:, t:])
        i, j = np.unravel_index(np.argmax(block), block.shape)
        i += t
        j += t
        if i != t:
            lu[[t, i], :] = lu[[i, t], :]
            prow[[t, i]] = prow[[i, t]]
            parity = -parity
        if j != t:
            lu[:, [t, j]] = lu[:, [j, t]]
            pcol[[t, j]] = pcol[[j, t]]
            parity = -parity
        piv = lu[t, t]
        if piv == 0.0:
            break
        lu[t + 1:, t] /= piv
        lu[t + 1:, t + 1:] -= np.outer(lu[t + 1:, t], lu[t, t + 1:])
    return lu, prow, pcol, parity


def solve(a, b):
    """Solve ``a @ x = b`` through the fully pivoted LU factors.

    Raises :class:`SingularMatrixError` when the pivot-ratio condition
    estimate exceeds 1/eps_mach (the matrix is singular to working
    precision).
    """
    a = check_matrix(a)
    k = a.shape[0]
    b = np.asarray(b, dtype=float)
    squeeze = b.ndim == 1
    rhs = b.reshape(k, -1).copy()
    if k == 0:
        return rhs[:, 0] if squeeze else rhs
    lu, prow, pcol, _ = lu_complete(a)
    diag = np.abs(np.diag(lu))
    if diag.min() == 0.0 or diag.max() / diag.min() > 1.0 / EPS_MACH:
        raise SingularMatrixError("matrix is singular to working precision")
    rhs = rhs[prow]
    for t in range(1, k):
        rhs[t] -= lu[t, :t] @ rhs[:t]
    for t in range(k - 1, -1, -1):
        rhs[t] -= lu[t, t + 1:] @ rhs[t + 1:]
        rhs[t] /= lu[t, t]
    x = np.empty_like(rhs)
    x[pcol] = rhs
    return x[:, 0] if squeeze else x


def inverse(a):
    """Explicit inverse via the fully pivoted solve (small matrices only)."""
    a = check_matrix(a)
    return solve(a, np.eye(a.shape[0]))


def schur_complement(a, rows, cols):
    """Schur complement of the block selected by ``rows`` x ``cols``.

    Computes A22 - A21 A11^{-1} A12 by fresh sequential elimination of the
    selected pivots (with complete pivoting restricted to the selected
    block), which resolves small Schur complements to the accuracy of the
    elimination itself rather than through one catastrophic subtraction.
    """
    a = check_matrix(a)
    m, n = a.shape
    rows = check_index_set(rows, m, "row index set")
    cols = check_index_set(cols, n, "column index set")
    r = len(rows)
    if r != len(cols):
        raise ValueError("row and column index sets must have equal size")
    crows = np.setdiff1d(np.arange(m), rows)
    ccols = np.setdiff1d(np.arange(n), cols)
    work = a[np.ix_(np.concatenate([rows, crows]), np.concatenate([cols, ccols]))]
    work = np.array(work, dtype=float)
    for t in range(r):
        block = np.abs(work[t:r, t:r])
        i, j = np.unravel_index(np.argmax(block), block.shape)
        i += t
        j += t
        work[[t, i], :] = work[[i, t], :]
        work[:, [t, j]] = work[:, [j, t]]
        piv = work[t, t]
        if piv == 0.0:
            raise SingularMatrixError("selected block is singular")
        mult = work[t + 1:, t] / piv
        work[t + 1:, t + 1:] -= np.outer(mult, work[t, t + 1:])
        work[t + 1:, t] = 0.0
    return work[r:, r:].copy()
