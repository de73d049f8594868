import numpy as np
import pytest

from rrge import svd
from rrge.generators import gen_peters
from rrge.matrix import (SingularMatrixError, check_index_set, check_matrix,
                         det_bruteforce, inverse, lu_complete, max_abs_norm,
                         schur_complement, select, solve)


def test_check_matrix_rejects_non_finite():
    with pytest.raises(ValueError):
        check_matrix([[1.0, np.nan]])
    with pytest.raises(ValueError):
        check_matrix([[np.inf]])
    with pytest.raises(ValueError):
        check_matrix(np.ones(3))


def test_check_index_set():
    assert list(check_index_set([0, 2, 5], 6)) == [0, 2, 5]
    with pytest.raises(IndexError):
        check_index_set([0, 6], 6)
    with pytest.raises(ValueError):
        check_index_set([2, 2], 6)
    with pytest.raises(ValueError):
        check_index_set([3, 1], 6)


def test_max_abs_norm():
    assert max_abs_norm(np.zeros((3, 4))) == 0.0
    for m in (1, 5, 12):
        assert max_abs_norm(gen_peters(m)) == 1.0
    assert max_abs_norm([[0.5, -3.25], [2.0, 1.0]]) == 3.25


def test_select_identity_block():
    a = np.eye(3)
    np.testing.assert_array_equal(select(a, [0, 1], [0, 1]), np.eye(2))


def test_select_full_is_copy():
    a = np.arange(6.0).reshape(2, 3)
    b = select(a, [0, 1], [0, 1, 2])
    np.testing.assert_array_equal(a, b)
    b[0, 0] = 99.0
    assert a[0, 0] == 0.0


def test_select_peters_upper_right_block():
    # rows 0..2 x cols 1..3 of the 4x4 triangular pattern
    block = select(gen_peters(4), [0, 1, 2], [1, 2, 3])
    np.testing.assert_array_equal(
        block, [[-1, -1, -1], [1, -1, -1], [0, 1, -1]])


def test_select_out_of_range():
    with pytest.raises(IndexError):
        select(np.eye(3), [0, 3], [0])


def test_select_composition():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((8, 9))
    inner = select(select(a, [1, 3, 5, 7], [0, 2, 4, 8]), [0, 2], [1, 3])
    direct = select(a, [1, 5], [2, 8])
    np.testing.assert_array_equal(inner, direct)


def test_det_bruteforce_identity():
    for k in (1, 3, 6):
        assert det_bruteforce(np.eye(k)) == 1.0


def test_det_bruteforce_counterexample_blocks():
    d = 0.99
    det1 = det_bruteforce([[d, -1.0], [-1.0, d]])
    det2 = det_bruteforce([[d, -d], [-1.0, -d]])
    assert det1 == pytest.approx(-0.0199)
    assert det2 == pytest.approx(-1.9701)
    assert abs(det2) / abs(det1) == pytest.approx(99.0, rel=1e-12)


def test_det_bruteforce_errors():
    with pytest.raises(ValueError):
        det_bruteforce(np.ones((2, 3)))
    with pytest.raises(ValueError):
        det_bruteforce(np.eye(9))


def test_det_matches_fully_pivoted_elimination():
    rng = np.random.default_rng(11)
    for _ in range(100):
        k = int(rng.integers(1, 7))
        a = rng.standard_normal((k, k))
        lu, _, _, parity = lu_complete(a)
        pivot_product = parity * np.prod(np.diag(lu))
        want = det_bruteforce(a)
        assert pivot_product == pytest.approx(want, rel=1e-10, abs=1e-300)


def test_norm_inequality_chain():
    # ||A||_C <= ||A||_2 <= sqrt(mn) ||A||_C, spectral norm from the oracle
    rng = np.random.default_rng(7)
    for _ in range(200):
        m, n = rng.integers(1, 21, size=2)
        a = rng.standard_normal((int(m), int(n)))
        norm_c = max_abs_norm(a)
        norm_2 = svd.spectral_norm(a)
        assert norm_c <= norm_2 * (1 + 1e-12)
        assert norm_2 <= np.sqrt(m * n) * norm_c * (1 + 1e-12)


def test_solve_and_inverse():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((6, 6))
    b = rng.standard_normal(6)
    x = solve(a, b)
    np.testing.assert_allclose(a @ x, b, atol=1e-12)
    np.testing.assert_allclose(a @ inverse(a), np.eye(6), atol=1e-12)


def test_solve_singular_raises():
    a = np.ones((3, 3))
    with pytest.raises(SingularMatrixError):
        solve(a, np.ones(3))


def test_schur_complement_matches_formula():
    rng = np.random.default_rng(9)
    for _ in range(20):
        m, n = (int(v) for v in rng.integers(4, 10, size=2))
        a = rng.standard_normal((m, n))
        r = int(rng.integers(1, min(m, n)))
        rows = np.sort(rng.choice(m, r, replace=False))
        cols = np.sort(rng.choice(n, r, replace=False))
        block = a[np.ix_(rows, cols)]
        if svd.singular_values(block)[-1] < 1e-6:
            continue
        got = schur_complement(a, rows, cols)
        crows = np.setdiff1d(np.arange(m), rows)
        ccols = np.setdiff1d(np.arange(n), cols)
        naive = a[np.ix_(crows, ccols)] - a[np.ix_(crows, cols)] @ solve(
            block, a[np.ix_(rows, ccols)])
        np.testing.assert_allclose(got, naive, atol=1e-10 * max_abs_norm(a))


def test_schur_complement_zero_rank():
    a = np.arange(6.0).reshape(2, 3)
    got = schur_complement(a, [], [])
    np.testing.assert_array_equal(got, a)
