"""Dense exact linear algebra over GF(q).

Matrices are numpy int64 arrays of element indices; a Field instance
carries the arithmetic.  Everything here is pure: inputs are never
mutated.

Flattening convention for tensor products, fixed once for the whole
package: a pure tensor of an X-part u (length n1) and a T-part v
(length n2) is the length n1*n2 vector w with

    w[iT * n1 + iX] = v[iT] * u[iX] .

Viewed as an n2 x n1 matrix, row iT carries the X-axis; the first matrix
row is the T-at-infinity slice of the evaluation grids downstream.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .gf import Field


def as_matrix(rows, ncols: int | None = None) -> np.ndarray:
    """Normalize to a 2-D int64 array; empty input needs ncols."""
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        if a.ndim == 2:
            return a
        if ncols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        return a.reshape(0, ncols)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def zero_matrix(nrows: int, ncols: int) -> np.ndarray:
    return np.zeros((nrows, ncols), dtype=np.int64)


def matmul(f: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product over GF(q)."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        col = a[:, k]
        if np.any(col):
            out = f.add_arr(out, f.mul_arr(col[:, None], b[k][None, :]))
    return out


def rref(f: Field, a: np.ndarray):
    """Reduced row-echelon form.

    Returns (R, rank, pivots); R preserves the row space and is the unique
    RREF, so subspace equality downstream is plain array equality.
    """
    r = as_matrix(a).copy()
    nrows, ncols = r.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            r[[row, pr]] = r[[pr, row]]
        r[row] = f.mul_arr(np.int64(f.inv(int(r[row, col]))), r[row])
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            factors = f.neg_arr(r[others, col])
            r[others] = f.add_arr(r[others], f.mul_arr(factors[:, None], r[row][None, :]))
        pivots.append(col)
        row += 1
    return r, row, pivots


def row_space(f: Field, a: np.ndarray) -> np.ndarray:
    """Canonical (RREF, zero rows dropped) basis of the row space."""
    r, rank, _ = rref(f, a)
    return r[:rank]


def kernel_basis(f: Field, a: np.ndarray) -> np.ndarray:
    """RREF basis of {x : A x^T = 0}; row count is ncols - rank."""
    a = as_matrix(a)
    ncols = a.shape[1]
    r, rank, pivots = rref(f, a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, c in enumerate(free):
        basis[i, c] = 1
        for row_i, pc in enumerate(pivots):
            basis[i, pc] = f.neg(int(r[row_i, c]))
    return row_space(f, basis) if len(free) else basis


def in_row_space(f: Field, basis_rref: np.ndarray, v: np.ndarray) -> bool:
    """Membership test against an RREF basis."""
    v = np.asarray(v, dtype=np.int64).copy()
    for row in basis_rref:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        piv = int(nz[0])
        if v[piv]:
            v = f.add_arr(v, f.mul_arr(np.int64(f.neg(int(v[piv]))), row))
    return not np.any(v)


def subspace_sum(f: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatch("summands live in different ambient spaces")
    return row_space(f, np.vstack([a, b]))


def subspace_intersection(f: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Computed as the dual of the sum of duals."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatch("operands live in different ambient spaces")
    duals = np.vstack([kernel_basis(f, a), kernel_basis(f, b)])
    return kernel_basis(f, duals)


def tensor_product(f: Field, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Pure tensor of X-part u and T-part v under the fixed flattening."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    return f.mul_arr(v[:, None], u[None, :]).ravel()


def tensor_code(f: Field, cx: np.ndarray, ct: np.ndarray) -> np.ndarray:
    """Basis {tensor(rowX, rowT)} in row-index lexicographic order."""
    cx = as_matrix(cx)
    ct = as_matrix(ct)
    rows = [tensor_product(f, rx, rt) for rx in cx for rt in ct]
    return as_matrix(rows, cx.shape[1] * ct.shape[1])


def check_product(f: Field, e: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Check-product basis: E (x) full + full (x) F, canonicalized."""
    e = as_matrix(e)
    g = as_matrix(g)
    n1, n2 = e.shape[1], g.shape[1]
    left = tensor_code(f, e, identity(n2))
    right = tensor_code(f, identity(n1), g)
    return subspace_sum(f, left, right)


# -- text serialization -------------------------------------------------------


def matrix_to_text(f: Field, a: np.ndarray) -> str:
    a = as_matrix(a)
    lines = [f"{f.q} {a.shape[0]} {a.shape[1]}"]
    lines += [" ".join(str(int(x)) for x in row) for row in a]
    return "\n".join(lines)


def matrix_from_text(text: str):
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    q, nrows, ncols = (int(x) for x in lines[0].split())
    rows = [[int(x) for x in ln.split()] for ln in lines[1 : 1 + nrows]]
    a = as_matrix(rows, ncols)
    if a.shape != (nrows, ncols):
        raise DimensionMismatch("matrix body does not match header")
    return q, a
