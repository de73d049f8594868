"""Scikit-learn style front end for the rank-revealing elimination."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .engine import default_beta, rank_reveal
from .matrix import check_matrix


class RankRevealingGE(TransformerMixin, BaseEstimator):
    """Numerical-rank estimator and column selector.

    Fitting runs the max-volume Gaussian elimination on the data matrix and
    exposes the revealed rank together with a maximal set of independent
    rows and columns.  As a transformer it reduces inputs to the selected
    well-conditioned column subset, so it drops into pipelines like any
    feature selector.

    Parameters
    ----------
    rho : float, default 2.0
        Pivot threshold (>= 1).  Smaller values work harder for marginally
        better-conditioned blocks.
    beta : float or None, default None
        Identity-block scale.  ``None`` uses the machine-precision based
        default ``max(m, n) * eps * max|X|``.

    Attributes
    ----------
    rank_ : int
        Revealed numerical rank.
    row_indices_, col_indices_ : ndarray of int
        Rows/columns of the selected square block, ascending.
    submatrix_ : ndarray
        The selected ``rank_ x rank_`` block of the fitted matrix.
    schur_ : ndarray
        Schur complement of the block; its entries are at most rho*beta in
        magnitude.
    pivot_count_ : int
    beta_ : float
        The scale actually used.

    Examples
    --------
    >>> import numpy as np
    >>> from rrge import RankRevealingGE
    >>> X = np.outer(np.arange(1.0, 5.0), np.ones(3))
    >>> est = RankRevealingGE().fit(X)
    >>> est.rank_
    1
    >>> est.transform(X).shape
    (4, 1)
    """

    def __init__(self, rho=2.0, beta=None):
        self.rho = rho
        self.beta = beta

    def fit(self, X, y=None):
        X = check_matrix(X, "X")
        result = rank_reveal(X, rho=self.rho, beta=self.beta)
        self.result_ = result
        self.rank_ = result.rank
        self.row_indices_ = result.row_indices
        self.col_indices_ = result.col_indices
        self.submatrix_ = result.submatrix
        self.schur_ = result.schur
        self.pivot_count_ = result.pivot_count
        self.beta_ = result.beta if result.beta > 0 else default_beta(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        """Keep only the selected independent columns of ``X``."""
        if not hasattr(self, "col_indices_"):
            raise NotFittedError("RankRevealingGE is not fitted yet")
        X = check_matrix(X, "X")
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return X[:, self.col_indices_]

    def get_support(self, indices=False):
        """Boolean mask (or indices) of the selected columns."""
        if not hasattr(self, "col_indices_"):
            raise NotFittedError("RankRevealingGE is not fitted yet")
        if indices:
            return self.col_indices_.copy()
        mask = np.zeros(self.n_features_in_, dtype=bool)
        mask[self.col_indices_] = True
        return mask
