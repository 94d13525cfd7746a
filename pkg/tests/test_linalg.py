import numpy as np
import pytest

from hirzcodes import linalg
from hirzcodes.errors import DimensionMismatch
from hirzcodes.gf import field_new, field_of_size


def _random_matrix(f, rng, shape):
    return rng.integers(0, f.q, size=shape).astype(np.int64)


def test_rank_of_singular_matrix_over_gf3():
    # det = 1*1 - 2*2 = -3 = 0 in GF(3): the rows are dependent (row2 = 2*row1)
    f = field_new(3, 1)
    r, rank, pivots = linalg.rref(f, [[1, 2], [2, 1]])
    cofactor = (1 * 1 - 2 * 2) % 3
    assert cofactor == 0
    assert rank == 1 and pivots == [0]
    assert np.array_equal(r[0], [1, 2])


def test_rref_is_idempotent_and_canonical():
    rng = np.random.default_rng(1)
    for q in (2, 3, 4, 5):
        f = field_of_size(q)
        for _ in range(10):
            a = _random_matrix(f, rng, (4, 6))
            r1, rank, _ = linalg.rref(f, a)
            r2, rank2, _ = linalg.rref(f, r1)
            assert rank == rank2
            assert np.array_equal(r1, r2)
            # scaling and permuting rows leaves the canonical basis unchanged
            perm = rng.permutation(4)
            scales = rng.integers(1, f.q, size=4).astype(np.int64)
            b = f.mul_arr(scales[:, None], a)[perm]
            assert np.array_equal(linalg.row_space(f, a), linalg.row_space(f, b))


def test_kernel_is_orthogonal_complement():
    rng = np.random.default_rng(2)
    for q in (2, 3, 4):
        f = field_of_size(q)
        a = _random_matrix(f, rng, (3, 7))
        ker = linalg.kernel_basis(f, a)
        _, rank, _ = linalg.rref(f, a)
        assert ker.shape[0] == 7 - rank
        prod = linalg.matmul(f, a, ker.T)
        assert not np.any(prod)
        # double dual recovers the row space
        assert np.array_equal(linalg.kernel_basis(f, ker), linalg.row_space(f, a))


def test_membership():
    f = field_new(3, 1)
    basis = linalg.row_space(f, [[1, 0, 2], [0, 1, 1]])
    assert linalg.in_row_space(f, basis, np.array([1, 1, 0]))  # sum of the rows
    assert not linalg.in_row_space(f, basis, np.array([0, 0, 1]))


def test_sum_intersection_dimension_identity():
    rng = np.random.default_rng(3)
    for q in (2, 3, 4):
        f = field_of_size(q)
        a = linalg.row_space(f, _random_matrix(f, rng, (3, 6)))
        b = linalg.row_space(f, _random_matrix(f, rng, (3, 6)))
        s = linalg.subspace_sum(f, a, b)
        i = linalg.subspace_intersection(f, a, b)
        assert a.shape[0] + b.shape[0] == s.shape[0] + i.shape[0]
        for row in i:
            assert linalg.in_row_space(f, a, row)
            assert linalg.in_row_space(f, b, row)


def test_matmul_matches_integer_arithmetic_mod_p():
    f = field_new(5, 1)
    rng = np.random.default_rng(4)
    a = _random_matrix(f, rng, (3, 4))
    b = _random_matrix(f, rng, (4, 2))
    assert np.array_equal(linalg.matmul(f, a, b), (a @ b) % 5)
    with pytest.raises(DimensionMismatch):
        linalg.matmul(f, a, a)


def test_tensor_flattening_convention():
    f = field_new(3, 1)
    u = np.array([1, 2, 0])  # X-part, length n1 = 3
    v = np.array([1, 1, 2])  # T-part, length n2 = 3
    w = linalg.tensor_product(f, u, v)
    n1 = 3
    for it in range(3):
        for ix in range(3):
            assert w[it * n1 + ix] == (v[it] * u[ix]) % 3


def test_tensor_code_and_check_product_duality():
    f = field_new(3, 1)
    c1 = linalg.row_space(f, [[1, 1, 1]])
    c2 = linalg.row_space(f, [[1, 0, 2], [0, 1, 2]])
    tensor = linalg.tensor_code(f, c1, c2)
    dual_of_tensor = linalg.kernel_basis(f, tensor)
    boxed = linalg.check_product(f, linalg.kernel_basis(f, c1), linalg.kernel_basis(f, c2))
    assert np.array_equal(linalg.row_space(f, dual_of_tensor), boxed)


def test_matrix_text_roundtrip():
    f = field_new(2, 2)
    a = np.array([[0, 1, 2], [3, 0, 1]], dtype=np.int64)
    text = linalg.matrix_to_text(f, a)
    q, back = linalg.matrix_from_text(text)
    assert q == 4 and np.array_equal(a, back)


def test_empty_matrix_handling():
    f = field_new(2, 1)
    e = linalg.as_matrix([], 5)
    assert e.shape == (0, 5)
    assert linalg.as_matrix(e).shape == (0, 5)
    r, rank, piv = linalg.rref(f, e)
    assert rank == 0 and piv == []
    assert linalg.kernel_basis(f, e).shape == (5, 5)
