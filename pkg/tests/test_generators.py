import numpy as np
import pytest

from rrge.generators import (gen_example_local_not_normal,
                             gen_example_normal_not_local, gen_peters,
                             gen_random_rank_deficient, random_suite)
from rrge.svd import numerical_rank, singular_values, volume


def test_peters_small_sizes():
    np.testing.assert_array_equal(gen_peters(1), [[1.0]])
    np.testing.assert_array_equal(gen_peters(2), [[1, -1], [0, 1]])
    np.testing.assert_array_equal(gen_peters(4), [
        [1, -1, -1, -1],
        [0, 1, -1, -1],
        [0, 0, 1, -1],
        [0, 0, 0, 1]])


def test_peters_rejects_bad_size():
    with pytest.raises(ValueError):
        gen_peters(0)


def test_peters_smallest_singular_value_decay():
    # sigma_m * 2^m stays bounded by a small constant across sizes
    for m in (10, 20, 30, 40):
        sigma_m = singular_values(gen_peters(m))[-1]
        assert sigma_m * 2.0 ** m <= 4.0
        assert sigma_m * 2.0 ** m > 1.0


def test_incidence_example_layout():
    a = gen_example_normal_not_local()
    assert a.shape == (7, 4)
    np.testing.assert_array_equal(a[3], [1, 1, 1, 0])
    np.testing.assert_array_equal(a[:3, :3], np.eye(3))
    assert volume(a[:, [0, 1, 2]]) == pytest.approx(np.sqrt(20.0))
    # incidence structure: three ones per column, one shared row per pair
    assert np.all(a.sum(axis=0) == 3)
    gram = a.T @ a
    assert np.all(gram[~np.eye(4, dtype=bool)] == 1)


def test_second_example_layout():
    d = 0.99
    a = gen_example_local_not_normal(d)
    assert a.shape == (4, 3)
    assert a[2, 0] == d
    assert a[3, 2] == -d
    np.testing.assert_array_equal(a[:2, :2], np.eye(2))
    assert volume(a[:, [0, 1]]) == pytest.approx(2.2272, abs=5e-5)
    assert volume(a[:, [0, 2]]) == pytest.approx(2.4169, abs=5e-5)


def test_second_example_domain():
    for bad in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(ValueError):
            gen_example_local_not_normal(bad)


def test_random_rank_deficient_determinism():
    a = gen_random_rank_deficient(9, 14, 4, 1e-10, seed=99)
    b = gen_random_rank_deficient(9, 14, 4, 1e-10, seed=99)
    np.testing.assert_array_equal(a, b)


def test_random_rank_deficient_full_rank():
    a = gen_random_rank_deficient(8, 6, 6, 1e-8, seed=2)
    assert numerical_rank(a) == 6


def test_random_rank_deficient_detected_rank():
    a = gen_random_rank_deficient(20, 30, 7, 1e-12, seed=1)
    assert numerical_rank(a) == 7


def test_random_rank_deficient_validation():
    with pytest.raises(ValueError):
        gen_random_rank_deficient(0, 5, 1, 1e-8, seed=0)
    with pytest.raises(ValueError):
        gen_random_rank_deficient(5, 5, 6, 1e-8, seed=0)
    with pytest.raises(ValueError):
        gen_random_rank_deficient(5, 5, 2, 1.5, seed=0)


def test_random_suite_composition():
    suite = random_suite(80, seed=1)
    assert len(suite) == 80
    names = [name for name, _ in suite]
    assert len(set(names)) == 80
    zeros = [a for name, a in suite if name.startswith("zero")]
    assert len(zeros) == 2
    assert all(not np.any(a) for a in zeros)
    dims = np.array([a.shape for _, a in suite])
    assert dims.min() >= 8 and dims.max() <= 40
    # deterministic
    again = random_suite(80, seed=1)
    for (n1, a1), (n2, a2) in zip(suite, again):
        assert n1 == n2
        np.testing.assert_array_equal(a1, a2)
