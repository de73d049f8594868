"""Test-matrix generators: the classic complete-pivoting failure case, the
two counterexamples separating normal from local maximum volume, and a
seeded random rank-deficient family for desk-scale studies.
"""

from __future__ import annotations

import numpy as np

from .matrix import EPS_MACH


def gen_peters(m):
    """Unit upper-triangular matrix with -1 everywhere above the diagonal.

    Complete pivoting happily takes the diagonal as pivots and reports full
    rank, yet sigma_m decays like 2**-m (empirically sigma_m * 2**m ~= 3),
    so for moderately large m the numerical rank is m-1.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    a = np.eye(m)
    for i in range(m - 1):
        a[i, i + 1:] = -1.0
    return a


def gen_example_normal_not_local():
    """7x4 incidence matrix whose leading 3x3 block has normal but not local
    maximum volume.

    Every column has three ones and every column pair shares exactly one
    row, so any three columns have singular values (sqrt 5, sqrt 2, sqrt 2)
    and all column triples tie in volume; the block loses to a combined
    row+column exchange inside the leading 4x4 block.
    """
    return np.array([
        [1, 0, 0, 1],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
        [1, 1, 1, 0],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
    ], dtype=float)


def gen_example_local_not_normal(d=0.99):
    """4x3 matrix whose leading 2x2 block has local but not normal maximum
    volume, for 0 < d < 1."""
    if not 0.0 < d < 1.0:
        raise ValueError("d must lie strictly between 0 and 1")
    return np.array([
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [d, -1.0, -d],
        [-1.0, d, -d],
    ])


def gen_random_rank_deficient(m, n, r_true, gap, seed):
    """Random matrix with a controlled spectral cliff at rank ``r_true``.

    Built as U diag(s) V^T with seeded random orthogonal factors.  The head
    ``s_1..s_r`` is log-uniform in [1e-2, 1]; the tail starts a factor
    ``gap`` *below* the numerical-rank detection scale
    ``max(m, n) * eps * s_r`` and keeps falling by that scale each step, so
    the intended rank is unambiguous for any ``0 < gap < 1`` and the tail
    depth is still exercised.  Deterministic for fixed arguments.
    """
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    d = min(m, n)
    if not 1 <= r_true <= d:
        raise ValueError("r_true must lie in [1, min(m, n)]")
    if not 0.0 < gap < 1.0:
        raise ValueError("gap must lie strictly between 0 and 1")
    rng = np.random.default_rng(seed)
    u = np.linalg.qr(rng.standard_normal((m, m)))[0]
    v = np.linalg.qr(rng.standard_normal((n, n)))[0]
    sv = np.zeros(d)
    head = np.sort(np.exp(rng.uniform(np.log(1e-2), 0.0, r_true)))[::-1]
    sv[:r_true] = head
    scale = max(m, n) * EPS_MACH
    value = head[-1] * gap
    for i in range(r_true, d):
        value *= scale
        sv[i] = value
    return u[:, :d] @ (sv[:, None] * v.T[:d, :])


def example_block(name):
    """Canonical block (rows, cols) discussed for the two counterexamples."""
    if name == "example1":
        return np.arange(3), np.arange(3)
    if name == "example2":
        return np.arange(2), np.arange(2)
    raise ValueError(f"no canonical block for {name!r}")


def random_suite(trials, seed):
    """Seeded suite of (name, matrix) pairs for the verification batteries.

    Mixes dimensions 8..40, ranks from 0 (a few zero matrices) up to full,
    and spectral gaps 1e-8 / 1e-12.
    """
    rng = np.random.default_rng(seed)
    suite = []
    for t in range(trials):
        m = int(rng.integers(8, 41))
        n = int(rng.integers(8, 41))
        if t % 40 == 13:
            suite.append((f"zero-{m}x{n}-{t}", np.zeros((m, n))))
            continue
        r_true = int(rng.integers(1, min(m, n) + 1))
        gap = (1e-8, 1e-12)[t % 2]
        mat = gen_random_rank_deficient(m, n, r_true, gap, seed=10_000 * seed + t)
        suite.append((f"random-{m}x{n}-r{r_true}-g{gap:g}-{t}", mat))
    return suite
