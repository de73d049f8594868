"""Closed-form volume-change ratios for single row/column exchanges and the
exhaustive local / normal maximum-volume predicates built on top of them.

The ratio formulas express vol(modified block) / vol(block) through solves
with the block, so a candidate exchange can be scored without forming any
determinant.  The predicates enumerate every admissible single exchange and
are intended for small matrices (they are the ground truth the elimination
engine is audited against).
"""

from __future__ import annotations

import numpy as np

from . import svd
from .matrix import check_index_set, check_matrix, inverse, solve

#: an exchange only counts as a volume gain when ratio > rho * (1 + RATIO_SLACK);
#: guards against ties at exactly rho
RATIO_SLACK = 1e-12


def col_replace_ratio(block, j, b):
    """Volume ratio after replacing column ``j`` of a square block by ``b``.

    Equals the j-th entry of block^{-1} b in absolute value.
    """
    block = check_matrix(block)
    k = block.shape[0]
    if block.shape[1] != k:
        raise ValueError("block must be square")
    if not 0 <= j < k:
        raise IndexError("column index out of range")
    b = np.asarray(b, dtype=float).reshape(-1)
    if b.size != k:
        raise ValueError("replacement vector has wrong length")
    return float(abs(solve(block, b)[j]))


def remove_rowcol_ratio(bordered, i, j):
    """Volume ratio after deleting row ``i`` and column ``j`` of a square matrix.

    Equals |bordered^{-1}|_{j,i}.
    """
    bordered = check_matrix(bordered)
    k = bordered.shape[0]
    if bordered.shape[1] != k:
        raise ValueError("matrix must be square")
    if not (0 <= i < k and 0 <= j < k):
        raise IndexError("row/column index out of range")
    x = solve(bordered, np.eye(k)[:, i])
    return float(abs(x[j]))


def swap_rowcol_ratio(block, b, c, alpha, i, j):
    """Volume ratio for a combined row+column exchange through a border.

    The block is bordered by column ``b``, row ``c`` and corner ``alpha``;
    the ratio of vol(new block)/vol(block) after swapping the border column
    with column ``j`` and the border row with row ``i`` is

        | gamma * (block^{-1})_{j,i} + (block^{-1} b)_j (block^{-T} c)_i |

    with gamma = alpha - c^T block^{-1} b.  The formula covers both the
    singular and nonsingular bordered cases.
    """
    block = check_matrix(block)
    k = block.shape[0]
    if block.shape[1] != k:
        raise ValueError("block must be square")
    if not (0 <= i < k and 0 <= j < k):
        raise IndexError("row/column index out of range")
    b = np.asarray(b, dtype=float).reshape(-1)
    c = np.asarray(c, dtype=float).reshape(-1)
    if b.size != k or c.size != k:
        raise ValueError("border vectors have wrong length")
    inv_b = solve(block, b)
    inv_t_c = solve(block.T, c)
    inv_ji = solve(block, np.eye(k)[:, i])[j]
    gamma = float(alpha) - float(c @ inv_b)
    return float(abs(gamma * inv_ji + inv_b[j] * inv_t_c[i]))


def _exchange_data(a, rows, cols):
    a = check_matrix(a)
    m, n = a.shape
    rows = check_index_set(rows, m, "row index set")
    cols = check_index_set(cols, n, "column index set")
    if len(rows) != len(cols) or len(rows) == 0:
        raise ValueError("block must be square and nonempty")
    other_rows = np.setdiff1d(np.arange(m), rows)
    other_cols = np.setdiff1d(np.arange(n), cols)
    block = a[np.ix_(rows, cols)]
    return a, rows, cols, other_rows, other_cols, block


def is_local_max_volume(a, rows, cols, rho=1.0):
    """Whether the selected block has local rho-maximum volume in ``a``.

    True iff no single column exchange, row exchange, or combined
    row-and-column exchange with a bordering line increases the block's
    volume by more than a factor rho.  When the block spans all rows
    (columns), only the remaining pure exchanges are available.
    """
    if rho < 1.0:
        raise ValueError("rho must be >= 1")
    a, rows, cols, other_rows, other_cols, block = _exchange_data(a, rows, cols)
    limit = rho * (1.0 + RATIO_SLACK)

    x = None
    y = None
    if other_cols.size:
        # pure column exchanges: |block^{-1} a[rows, j']|, all candidates at once
        x = solve(block, a[np.ix_(rows, other_cols)])
        if np.abs(x).max() > limit:
            return False
    if other_rows.size:
        y = solve(block.T, a[np.ix_(other_rows, cols)].T)
        if np.abs(y).max() > limit:
            return False
    if other_rows.size and other_cols.size:
        # combined exchanges through every bordering (row, column) pair
        inv = inverse(block)
        gammas = a[np.ix_(other_rows, other_cols)] - a[np.ix_(other_rows, cols)] @ x
        for bi in range(other_rows.size):
            for bj in range(other_cols.size):
                ratios = np.abs(gammas[bi, bj] * inv + np.outer(x[:, bj], y[:, bi]))
                if ratios.max() > limit:
                    return False
    return True


def is_normal_max_volume(a, rows, cols, rho=1.0):
    """Whether the selected block has normal rho-maximum volume in ``a``.

    Two-stage test: (a) the chosen column subset must have local rho-maximum
    volume in ``a`` under single column exchanges, with rectangular volumes
    from the SVD oracle; (b) the block must have local rho-maximum volume
    inside those columns under single row exchanges.  Brute force; intended
    for small matrices.
    """
    if rho < 1.0:
        raise ValueError("rho must be >= 1")
    a, rows, cols, other_rows, other_cols, block = _exchange_data(a, rows, cols)
    limit = rho * (1.0 + RATIO_SLACK)

    base = svd.volume(a[:, cols])
    if base == 0.0:
        raise ValueError("selected column subset is rank deficient")
    for pos in range(cols.size):
        for cand in other_cols:
            trial = cols.copy()
            trial[pos] = cand
            if svd.volume(a[:, np.sort(trial)]) > limit * base:
                return False
    if other_rows.size:
        row_ratios = np.abs(solve(block.T, a[np.ix_(other_rows, cols)].T))
        if row_ratios.max() > limit:
            return False
    return True
