"""Rank-revealing Gaussian elimination on the augmented matrix [A | beta*I].

The engine maintains a simplicial tableau W = Abar_B^{-1} [A I] where Abar_B
is the current basis matrix with the identity columns *unscaled*; products
with beta and 1/beta are applied on the fly whenever an identity ("logical")
column is involved.  Columns of A are called structural.  Starting from the
all-logical basis, pivots exchange one basic column at a time until every
entry of the true ratio matrix is at most rho in magnitude, at which point
the structural basic columns and the rows not covered by logical basics
identify a square nonsingular submatrix with

    ||A / A11||_C <= rho * beta      and      ||A11^{-1}||_C <= rho / beta.

Pivot candidates are ranked in three priority tiers (shrink the block /
exchange at constant size / grow the block) so the basis prefers logical
columns, which is what keeps the elimination numerically tame.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix import EPS_MACH, check_matrix, max_abs_norm

#: relative floor under which a pivot counts as numerical noise
PIVOT_FLOOR_REL = 1e-12

#: tiers: 1 = logical column enters (block shrinks), 2 = same-size exchange,
#: 3 = structural column enters (block grows)
TIER_SHRINK, TIER_EXCHANGE, TIER_GROW = 1, 2, 3


class EliminationError(RuntimeError):
    """Base class for engine failures; carries the pivot log so far."""

    def __init__(self, message, pivot_log=()):
        super().__init__(message)
        self.pivot_log = list(pivot_log)


class NumericalBreakdownError(EliminationError):
    """The chosen pivot is below the numerical noise floor."""


class IterationLimitError(EliminationError):
    """Pivot count exceeded the cycling guard (floating-point cycling)."""


@dataclass(frozen=True)
class PivotRecord:
    row: int
    col: int
    magnitude: float  # true ratio-matrix magnitude, always > rho
    tier: int


@dataclass
class RankRevealResult:
    """Outcome of the elimination: the identified block and its certificate data."""

    rank: int
    row_indices: np.ndarray
    col_indices: np.ndarray
    submatrix: np.ndarray  # A restricted to row_indices x col_indices
    schur: np.ndarray      # Schur complement of the block in A, (m-r) x (n-r)
    pivot_count: int
    beta: float
    rho: float
    pivot_log: list = field(default_factory=list)
    flop_count: int = 0
    transposed: bool = False


class BasisState:
    """Mutable tableau state for one elimination run (single-threaded use)."""

    def __init__(self, a, rho, beta):
        a = check_matrix(a)
        if rho < 1.0:
            raise ValueError("rho must be >= 1")
        if not beta > 0.0:
            raise ValueError("beta must be positive")
        self.m, self.n = a.shape
        self.rho = float(rho)
        self.beta = float(beta)
        self.w = np.hstack([a, np.eye(self.m)])
        self.basic = np.arange(self.n, self.n + self.m)
        self.in_basis = np.zeros(self.n + self.m, dtype=bool)
        self.in_basis[self.n:] = True
        self.k = 0
        self.pivot_log = []
        self.pivot_floor = PIVOT_FLOOR_REL * max_abs_norm(a)
        self.flop_count = 0

    # -- scaling ---------------------------------------------------------

    def _scale(self, p, q):
        # stored tableau -> true ratio matrix: multiply by beta when a
        # structural basic row meets a logical column, by 1/beta in the
        # transposed situation, by 1 otherwise
        basic_logical = self.basic[p] >= self.n
        col_logical = q >= self.n
        if basic_logical and not col_logical:
            return 1.0 / self.beta
        if not basic_logical and col_logical:
            return self.beta
        return 1.0

    def read_scaled(self, p, q):
        """True ratio-matrix entry for tableau row ``p``, nonbasic column ``q``."""
        if self.in_basis[q]:
            raise ValueError(f"column {q} is basic")
        return float(self.w[p, q] * self._scale(p, q))

    # -- pivot selection -------------------------------------------------

    def _tier_blocks(self):
        logical_rows = np.flatnonzero(self.basic >= self.n)
        structural_rows = np.flatnonzero(self.basic < self.n)
        nonbasic_structural = np.flatnonzero(~self.in_basis[: self.n])
        nonbasic_logical = np.flatnonzero(~self.in_basis[self.n:]) + self.n
        return (
            (TIER_SHRINK, [(structural_rows, nonbasic_logical)], self.rho / self.beta),
            (TIER_EXCHANGE, [(structural_rows, nonbasic_structural),
                             (logical_rows, nonbasic_logical)], self.rho),
            (TIER_GROW, [(logical_rows, nonbasic_structural)], self.rho * self.beta),
        )

    def choose_pivot(self):
        """Best violating entry in the highest-priority nonempty tier.

        Returns ``(p, q, tier)`` or ``None`` when every true ratio-matrix
        entry is at most rho (termination).  Within a tier the stored entry
        of maximum magnitude wins, ties broken by smallest row then column.
        """
        for tier, blocks, threshold in self._tier_blocks():
            best = None
            for rows, cols in blocks:
                if rows.size == 0 or cols.size == 0:
                    continue
                block = np.abs(self.w[np.ix_(rows, cols)])
                value = block.max()
                if value <= threshold:
                    continue
                i, j = np.unravel_index(np.argmax(block), block.shape)
                cand = (value, rows[i], cols[j])
                if best is None or cand[0] > best[0] or (
                    cand[0] == best[0] and (cand[1], cand[2]) < (best[1], best[2])
                ):
                    best = cand
            if best is not None:
                return int(best[1]), int(best[2]), tier
        return None

    # -- pivoting --------------------------------------------------------

    def apply_pivot(self, p, q, tier=None):
        """Gauss-Jordan step: column ``q`` enters the basis in row ``p``."""
        if self.in_basis[q]:
            raise ValueError(f"column {q} is basic")
        pivot = self.w[p, q]
        if abs(pivot) < self.pivot_floor:
            raise NumericalBreakdownError(
                f"pivot {pivot:.3e} at ({p}, {q}) is below the noise floor "
                f"{self.pivot_floor:.3e}", self.pivot_log)
        magnitude = abs(self.read_scaled(p, q))
        self.w[p, :] /= pivot
        column = self.w[:, q].copy()
        column[p] = 0.0
        self.w -= np.outer(column, self.w[p, :])
        self.w[:, q] = 0.0
        self.w[p, q] = 1.0
        self.flop_count += 2 * self.w.size
        leaving = self.basic[p]
        self.in_basis[leaving] = False
        self.in_basis[q] = True
        self.basic[p] = q
        self.k += int(q < self.n) - int(leaving < self.n)
        if tier is None:
            tier = TIER_GROW if leaving >= self.n and q < self.n else (
                TIER_SHRINK if leaving < self.n and q >= self.n else TIER_EXCHANGE)
        self.pivot_log.append(PivotRecord(p, int(q), magnitude, tier))

    # -- extraction ------------------------------------------------------

    def result(self):
        """Read the identified block and Schur complement off the tableau."""
        col_indices = np.sort(self.basic[self.basic < self.n])
        logical_rows = np.sort(self.basic[self.basic >= self.n] - self.n)
        row_indices = np.setdiff1d(np.arange(self.m), logical_rows)
        nonbasic_structural = np.flatnonzero(~self.in_basis[: self.n])
        schur = np.zeros((logical_rows.size, nonbasic_structural.size))
        position = {int(c): p for p, c in enumerate(self.basic)}
        for out_row, i in enumerate(logical_rows):
            schur[out_row] = self.w[position[int(i) + self.n], nonbasic_structural]
        return row_indices, col_indices, schur


def default_beta(a):
    """Practical tolerance max(m, n) * eps_mach * ||A||_C; 0 only for A = 0."""
    a = check_matrix(a)
    if a.size == 0:
        return 0.0
    return max(a.shape) * EPS_MACH * max_abs_norm(a)


def iteration_cap(m, n):
    """Cycling guard: exact arithmetic terminates, so far more pivots than
    ever observed in practice signals floating-point cycling."""
    return 50 * min(m, n) + 100


def find_submatrix(a, rho=2.0, beta=None):
    """Locate a well-conditioned square submatrix revealing the numerical rank.

    Runs the tableau elimination on [A | beta*I] until no entry of the true
    ratio matrix exceeds ``rho``.  On return the selected block satisfies
    ``||A/A11||_C <= rho*beta`` and ``||A11^{-1}||_C <= rho/beta``, and its
    dimension is the revealed rank.  Matrices with more rows than columns
    are transposed internally; callers always see indices for ``a``.

    Parameters
    ----------
    a : array_like, shape (m, n)
        Real matrix with finite entries.
    rho : float, >= 1
        Pivot threshold.  Larger values pivot less and terminate sooner.
    beta : float, > 0
        Scale of the identity block.  Defaults to ``default_beta(a)``;
        explicitly pass a positive value for the zero matrix.

    Raises
    ------
    NumericalBreakdownError
        A selected pivot sits below the noise floor.
    IterationLimitError
        The cycling guard tripped.
    """
    a = check_matrix(a)
    if beta is None:
        beta = default_beta(a)
        if beta == 0.0:
            raise ValueError("beta must be positive (zero matrix: pass beta explicitly "
                             "or use rank_reveal)")
    m, n = a.shape
    transposed = m > n
    work = a.T.copy() if transposed else a
    state = BasisState(work, rho, beta)
    cap = iteration_cap(*work.shape) if min(m, n) else 0
    for _ in range(cap + 1):
        pivot = state.choose_pivot()
        if pivot is None:
            break
        if len(state.pivot_log) >= cap:
            raise IterationLimitError(
                f"no termination within {cap} pivots", state.pivot_log)
        state.apply_pivot(*pivot)
    row_indices, col_indices, schur = state.result()
    if transposed:
        row_indices, col_indices = col_indices, row_indices
        schur = schur.T.copy()
    return RankRevealResult(
        rank=int(col_indices.size),
        row_indices=row_indices,
        col_indices=col_indices,
        submatrix=a[np.ix_(row_indices, col_indices)].copy(),
        schur=schur,
        pivot_count=len(state.pivot_log),
        beta=float(beta),
        rho=float(rho),
        pivot_log=state.pivot_log,
        flop_count=state.flop_count,
        transposed=transposed,
    )


def rank_reveal(a, rho=2.0, beta=None):
    """Convenience front end: handles the zero matrix and the default beta.

    ``find_submatrix`` requires beta > 0; for A = 0 the default tolerance is
    zero and the answer is trivially rank 0, so that case is short-circuited
    here.
    """
    a = check_matrix(a)
    if beta is None:
        beta = default_beta(a)
    if beta == 0.0:
        m, n = a.shape
        empty = np.array([], dtype=int)
        return RankRevealResult(
            rank=0, row_indices=empty, col_indices=empty.copy(),
            submatrix=np.zeros((0, 0)), schur=a.copy(), pivot_count=0,
            beta=0.0, rho=float(rho), pivot_log=[], flop_count=0,
            transposed=False)
    return find_submatrix(a, rho, beta)
