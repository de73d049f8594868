"""Post-hoc certificates for an elimination result.

Everything here is recomputed from the original matrix and the returned
index sets; nothing is trusted from the engine's internal tableau.  The
certificates check the termination guarantees

    ||A/A11||_C <= rho * beta,        ||A11^{-1}||_C <= rho / beta,

and the singular-value enclosure that a local max-volume block enjoys:

    sigma_r(A)  >=  sigma_min(A11)  >=  sigma_r(A) / (2 rho^2 r sqrt((m-r+1)(n-r+1)))
    sigma_{r+1}(A)  <=  ||A/A11||_2  <=  2 rho^2 (r+1) sqrt((m-r)(n-r)) sigma_{r+1}(A)

Inequalities are tested with a relative slack of 1e-8 plus an absolute
anchor of 1e-8 * sigma_1(A) on the singular-value checks: once both sides
of a comparison sit at the floating-point noise floor (~eps * sigma_1) the
mathematical guarantee still holds but recomputation noise can point either
way, and the anchor keeps such ties from raising false alarms while real
violations (orders of magnitude, from actual bugs) are still caught.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import svd
from .matrix import check_matrix, inverse, max_abs_norm, schur_complement

REL_SLACK = 1e-8

SIGMA_RATIO_BUCKETS = ((1e-1, 1e0), (1e-2, 1e-1), (1e-3, 1e-2))
PIVOT_RATIO_BUCKETS = ((1.00, 1.05), (1.05, 1.50), (1.5, 4.0), (4.0, 5.0))


@dataclass
class BoundCertificate:
    """Measured quantities against their guaranteed bounds."""

    schur_norm_c: float
    inv_norm_c: float | None
    rho_beta: float
    rho_over_beta: float
    sigma_min_a11: float | None = None
    sigma_r: float | None = None
    sigma_r_plus_1: float | None = None
    schur_norm_2: float | None = None
    lower_bound_factor: float | None = None
    upper_bound_factor: float | None = None
    passed: bool = False


@dataclass
class SvdComparison:
    """Rank and singular-value comparison between the elimination and the oracle."""

    rank_rrge: int
    rank_svd: int
    ratio_r: float | None
    ratio_r1: float | None
    sigma_ratio: float | None
    sigma_ratio_bucket: str
    pivot_ratio: float
    pivot_ratio_bucket: str


def lower_bound_factor(rho, r, m, n):
    """Guaranteed sigma_min(A11) / sigma_r(A) for a local (2 rho^2)-max block."""
    if r == 0:
        return None
    return 1.0 / (2.0 * rho * rho * r * math.sqrt((m - r + 1) * (n - r + 1)))


def upper_bound_factor(rho, r, m, n):
    """Guaranteed ||A/A11||_2 / sigma_{r+1}(A) ceiling for the same block."""
    return 2.0 * rho * rho * (r + 1) * math.sqrt((m - r) * (n - r))


def _leq(lhs, rhs, anchor=0.0):
    return lhs <= rhs * (1.0 + REL_SLACK) + REL_SLACK * anchor


def _check_result(a, result):
    a = check_matrix(a)
    m, n = a.shape
    r = result.rank
    if len(result.row_indices) != r or len(result.col_indices) != r:
        raise ValueError("result index sets do not match its rank")
    if r and (result.row_indices.max() >= m or result.col_indices.max() >= n):
        raise ValueError("result does not belong to this matrix")
    if result.schur.shape != (m - r, n - r):
        raise ValueError("result Schur complement has wrong shape")
    return a, m, n, r


def verify_betabound(a, result):
    """Certificate for the termination guarantees on the Chebyshev norms.

    Both norms are recomputed from scratch: the Schur complement by a fresh
    elimination of the selected pivots and the block inverse by a fully
    pivoted solve.
    """
    a, m, n, r = _check_result(a, result)
    rho_beta = result.rho * result.beta
    rho_over_beta = result.rho / result.beta if result.beta > 0 else math.inf
    if r > 0:
        schur = schur_complement(a, result.row_indices, result.col_indices)
        inv_norm = max_abs_norm(inverse(result.submatrix))
    else:
        schur = a
        inv_norm = None
    schur_norm = max_abs_norm(schur)
    ok = _leq(schur_norm, rho_beta)
    if inv_norm is not None:
        ok = ok and _leq(inv_norm, rho_over_beta)
    return BoundCertificate(
        schur_norm_c=schur_norm,
        inv_norm_c=inv_norm,
        rho_beta=rho_beta,
        rho_over_beta=rho_over_beta,
        passed=bool(ok),
    )


def verify_theorem_bounds(a, result):
    """Certificate for the singular-value enclosure of the selected block.

    Requires a result produced by the elimination (whose termination makes
    the block locally (2 rho^2)-maximal in volume).  For a full-rank result
    the upper pair is skipped since sigma_{r+1} = 0 by convention.
    """
    a, m, n, r = _check_result(a, result)
    cert = verify_betabound(a, result)
    sigma_a = svd.singular_values(a) if a.size else np.zeros(0)
    anchor = float(sigma_a[0]) if sigma_a.size else 0.0
    ok = cert.passed

    if r > 0:
        cert.sigma_r = float(sigma_a[r - 1])
        cert.sigma_min_a11 = float(svd.singular_values(result.submatrix)[-1])
        cert.lower_bound_factor = lower_bound_factor(result.rho, r, m, n)
        ok = ok and _leq(cert.sigma_min_a11, cert.sigma_r, anchor)
        ok = ok and _leq(cert.lower_bound_factor * cert.sigma_r,
                         cert.sigma_min_a11, anchor)
    if r < min(m, n):
        cert.sigma_r_plus_1 = float(sigma_a[r]) if sigma_a.size else 0.0
        if r > 0:
            schur = schur_complement(a, result.row_indices, result.col_indices)
        else:
            schur = a
        cert.schur_norm_2 = svd.spectral_norm(schur)
        cert.upper_bound_factor = upper_bound_factor(result.rho, r, m, n)
        ok = ok and _leq(cert.sigma_r_plus_1, cert.schur_norm_2, anchor)
        ok = ok and _leq(cert.schur_norm_2,
                         cert.upper_bound_factor * cert.sigma_r_plus_1, anchor)
    cert.passed = bool(ok)
    return cert


def sigma_ratio_bucket(value):
    """Table bucket label for sigma_r(A11) / sigma_r(A)."""
    if value is None:
        return ""
    for lo, hi in SIGMA_RATIO_BUCKETS:
        if lo < value <= hi:
            return f"({lo:g},{hi:g}]"
    return f"<=({SIGMA_RATIO_BUCKETS[-1][0]:g})" if value <= 1e-3 else ">1"


def pivot_ratio_bucket(value):
    """Table bucket label for pivots / rank."""
    for lo, hi in PIVOT_RATIO_BUCKETS:
        if lo <= value < hi:
            return f"[{lo:.2f},{hi:.2f})"
    return f">={PIVOT_RATIO_BUCKETS[-1][1]:.2f}" if value >= 5.0 else "<1.00"


def compare_with_svd(a, result):
    """Rank agreement data in the style of the SVD comparison experiment.

    ``ratio_r`` is sigma_r(A)/sigma_s(A) and ``ratio_r1`` is
    sigma_{r+1}(A)/sigma_{s+1}(A), where s is the oracle's numerical rank;
    the latter is undefined (None) when either rank is already full.  A
    doubly degenerate comparison (r = s = 0) counts as perfect agreement.
    """
    a, m, n, r = _check_result(a, result)
    s = svd.numerical_rank(a)
    d = min(m, n)
    sigma = svd.singular_values(a) if a.size and d else np.zeros(0)

    if r == 0 and s == 0:
        ratio_r = 1.0
        ratio_r1 = 1.0
        sigma_ratio = 1.0
    else:
        ratio_r = None
        if r > 0 and s > 0 and sigma[s - 1] > 0:
            ratio_r = float(sigma[r - 1] / sigma[s - 1])
        ratio_r1 = None
        if r < d and s < d and sigma[s] > 0:
            ratio_r1 = float(sigma[r] / sigma[s])
        if r > 0:
            sigma_r = float(sigma[r - 1])
            sigma_min = float(svd.singular_values(result.submatrix)[-1])
            sigma_ratio = sigma_min / sigma_r if sigma_r > 0 else None
        else:
            sigma_ratio = None

    pivot_ratio = result.pivot_count / r if r > 0 else (
        1.0 if result.pivot_count == 0 else math.inf)
    return SvdComparison(
        rank_rrge=r,
        rank_svd=s,
        ratio_r=ratio_r,
        ratio_r1=ratio_r1,
        sigma_ratio=sigma_ratio,
        sigma_ratio_bucket=sigma_ratio_bucket(sigma_ratio),
        pivot_ratio=pivot_ratio,
        pivot_ratio_bucket=pivot_ratio_bucket(pivot_ratio),
    )
