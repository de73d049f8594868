"""Rank-revealing Gaussian elimination with max-volume pivoting.

The elimination runs on the augmented matrix [A | beta*I] and returns a
square nonsingular submatrix whose dimension is the numerical rank of A,
together with its Schur complement and machine-checkable certificates for
the bound guarantees.  A self-contained Jacobi SVD serves as the
independent verification oracle.
"""

from .bounds import (BoundCertificate, SvdComparison, compare_with_svd,
                     lower_bound_factor, upper_bound_factor, verify_betabound,
                     verify_theorem_bounds)
from .engine import (BasisState, EliminationError, IterationLimitError,
                     NumericalBreakdownError, PivotRecord, RankRevealResult,
                     default_beta, find_submatrix, rank_reveal)
from .estimator import RankRevealingGE
from .generators import (gen_example_local_not_normal,
                         gen_example_normal_not_local, gen_peters,
                         gen_random_rank_deficient, random_suite)
from .io import (MatrixMarketFormatError, MatrixMarketParseError, ReportRow,
                 read_matrix_market, write_csv_report)
from .lemmas import (col_replace_ratio, is_local_max_volume,
                     is_normal_max_volume, remove_rowcol_ratio,
                     swap_rowcol_ratio)
from .matrix import (EPS_MACH, SingularMatrixError, check_index_set,
                     check_matrix, det_bruteforce, max_abs_norm,
                     schur_complement, select)
from .svd import numerical_rank, singular_values, spectral_norm, volume

__version__ = "0.1.0"

__all__ = [
    "BasisState",
    "BoundCertificate",
    "EliminationError",
    "EPS_MACH",
    "IterationLimitError",
    "MatrixMarketFormatError",
    "MatrixMarketParseError",
    "NumericalBreakdownError",
    "PivotRecord",
    "RankRevealResult",
    "RankRevealingGE",
    "ReportRow",
    "SingularMatrixError",
    "SvdComparison",
    "check_index_set",
    "check_matrix",
    "col_replace_ratio",
    "compare_with_svd",
    "default_beta",
    "det_bruteforce",
    "find_submatrix",
    "gen_example_local_not_normal",
    "gen_example_normal_not_local",
    "gen_peters",
    "gen_random_rank_deficient",
    "is_local_max_volume",
    "is_normal_max_volume",
    "lower_bound_factor",
    "max_abs_norm",
    "numerical_rank",
    "random_suite",
    "rank_reveal",
    "read_matrix_market",
    "remove_rowcol_ratio",
    "schur_complement",
    "select",
    "singular_values",
    "spectral_norm",
    "swap_rowcol_ratio",
    "upper_bound_factor",
    "verify_betabound",
    "verify_theorem_bounds",
    "volume",
    "write_csv_report",
]
