"""Self-contained singular value oracle based on one-sided Jacobi rotations.

This module is the independent reference used to audit everything else in
the package (volumes, spectral norms, numerical ranks, bound certificates).
It deliberately avoids LAPACK so that the quantities being certified and
the oracle certifying them share no code path.
"""

from __future__ import annotations

import numpy as np

from .matrix import EPS_MACH, check_matrix

#: a column pair counts as orthogonal once |<ci,cj>| <= PAIR_TOL * |ci| * |cj|
PAIR_TOL = 1e-15

_MAX_SWEEPS = 100


def singular_values(a):
    """All ``min(m, n)`` singular values of ``a``, nonincreasing.

    One-sided Jacobi on the columns of the (tall) working copy: column pairs
    are rotated until every pairwise inner product is negligible relative to
    the product of the column norms, after which the column norms are the
    singular values.  Converges to high relative accuracy; deterministic for
    fixed input.
    """
    a = check_matrix(a)
    m, n = a.shape
    if m == 0 or n == 0:
        raise ValueError("singular values of an empty matrix are undefined")
    x = np.array(a.T if m < n else a, dtype=float)
    # exact power-of-two prescaling keeps the squared column norms away from
    # under/overflow for extreme input scales (division by 2**k is lossless)
    max_abs = np.abs(x).max()
    scale = 2.0 ** np.floor(np.log2(max_abs)) if max_abs > 0 else 1.0
    x /= scale
    ncols = x.shape[1]
    for _ in range(_MAX_SWEEPS):
        norms2 = np.einsum("ij,ij->j", x, x)
        rotated = 0
        for i in range(ncols - 1):
            for j in range(i + 1, ncols):
                aii = norms2[i]
                ajj = norms2[j]
                aij = x[:, i] @ x[:, j]
                if abs(aij) <= PAIR_TOL * np.sqrt(aii * ajj):
                    continue
                tau = (ajj - aii) / (2.0 * aij)
                if tau == 0.0:
                    t = 1.0
                elif abs(tau) < 1e150:
                    t = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                else:
                    t = 0.5 / tau  # tau^2 would overflow; same root to O(tau^-3)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                ci = x[:, i].copy()
                x[:, i] = c * ci - s * x[:, j]
                x[:, j] = s * ci + c * x[:, j]
                norms2[i] = x[:, i] @ x[:, i]
                norms2[j] = x[:, j] @ x[:, j]
                rotated += 1
        if rotated == 0:
            break
    else:
        raise ArithmeticError("Jacobi sweep limit reached without convergence")
    sv = scale * np.sqrt(np.einsum("ij,ij->j", x, x))
    sv.sort()
    return sv[::-1].copy()


def spectral_norm(a):
    """Largest singular value; 0 for an empty matrix."""
    a = check_matrix(a)
    if a.size == 0:
        return 0.0
    return float(singular_values(a)[0])


def volume(a):
    """Product of all ``min(m, n)`` singular values (0 if rank deficient)."""
    sv = singular_values(a)
    return float(np.prod(sv))


def numerical_rank(a):
    """Numerical rank: the largest s with sigma_s >= max(m, n) * eps * sigma_1.

    The zero matrix has rank 0 (the threshold test is vacuous when
    sigma_1 = 0).
    """
    a = check_matrix(a)
    if a.size == 0 or not np.any(a):
        return 0
    sv = singular_values(a)
    if sv[0] == 0.0:
        return 0
    threshold = max(a.shape) * EPS_MACH * sv[0]
    return int(np.count_nonzero(sv >= threshold))
