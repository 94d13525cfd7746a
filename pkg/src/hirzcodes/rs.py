"""Reed-Solomon, projective Reed-Solomon and affine Reed-Muller codes.

Clamped-parameter semantics live here: RS_q(k) is the zero code for
k <= 0 and the full space F_q^q for k >= q; PRS_q(k) is zero for k <= 0
and F_q^{q+1} for k >= q+1.  Callers (the surface-code constructors) can
therefore index freely with negative degrees.

All canonical bases use the field's element enumeration alpha_1..alpha_q
(ascending index, alpha_1 = 0), with the 0^0 = 1 power convention.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .codes import LinearCode
from .errors import HypothesisViolated
from .gf import Field


def alpha_power_vector(f: Field, d: int) -> np.ndarray:
    """alpha^{*d} = (alpha_1^d, ..., alpha_q^d)."""
    return f.pow_arr(f.element_order, d)


def rs_code(f: Field, k: int) -> LinearCode:
    """RS_q(k): rows alpha^{*d}, d in [0, min(k, q) - 1]; clamped."""
    if k <= 0:
        return LinearCode.zero(f, f.q)
    rows = [alpha_power_vector(f, d) for d in range(min(k, f.q))]
    return LinearCode(f, f.q, rows)


def prs_code(f: Field, k: int) -> LinearCode:
    """PRS_q(k): rows (0^{k-1-d}, alpha^{*d}), d in [0, k-1]; clamped."""
    q = f.q
    if k <= 0:
        return LinearCode.zero(f, q + 1)
    if k > q + 1:
        return LinearCode.full(f, q + 1)
    rows = []
    for d in range(k):
        row = np.empty(q + 1, dtype=np.int64)
        row[0] = f.pow_conv(0, k - 1 - d)
        row[1:] = alpha_power_vector(f, d)
        rows.append(row)
    return LinearCode(f, q + 1, rows)


def prs_intersection_identity(f: Field, k1: int, k2: int):
    """Both sides of PRS_q(k1) ^ PRS_q(k2) = (0, RS_q(k1 - 1))."""
    _check_prs_pair(f, k1, k2)
    lhs = prs_code(f, k1).intersection(prs_code(f, k2))
    rhs = _prepend_zero(rs_code(f, k1 - 1))
    return lhs, rhs


def prs_sum_identity(f: Field, k1: int, k2: int):
    """Both sides of PRS_q(k1) + PRS_q(k2) = <e_1> + (0, RS_q(k2))."""
    _check_prs_pair(f, k1, k2)
    lhs = prs_code(f, k1).sum(prs_code(f, k2))
    e1 = np.zeros(f.q + 1, dtype=np.int64)
    e1[0] = 1
    rhs = LinearCode(f, f.q + 1, [e1]).sum(_prepend_zero(rs_code(f, k2)))
    return lhs, rhs


def _check_prs_pair(f: Field, k1: int, k2: int):
    if not (1 <= k1 < k2 <= f.q):
        raise HypothesisViolated(f"need 1 <= k1 < k2 <= q, got k1={k1}, k2={k2}, q={f.q}")


def _prepend_zero(c: LinearCode) -> LinearCode:
    return c.extend_by_zero([0], c.n + 1)


def rm_code(f: Field, k: int) -> LinearCode:
    """Affine plane Reed-Muller code of degree k, length q^2."""
    if k < 0:
        raise HypothesisViolated("degree must be nonnegative")
    q = f.q
    rows = linalg.as_matrix([], q * q)
    for d in range(k + 1):
        x_part = alpha_power_vector(f, d).reshape(1, -1)
        t_part = rs_code(f, k - d + 1).gen
        rows = np.vstack([rows, linalg.tensor_code(f, x_part, t_part)])
    return LinearCode(f, q * q, rows)


def rm_min_distance(k: int, q: int) -> int:
    """Three-case closed form, with k = r(q-1) + s, 0 <= s < q-1."""
    if k < 0:
        raise HypothesisViolated("degree must be nonnegative")
    if k == 0:
        return q * q
    r, s = divmod(k, q - 1)
    if r == 0:
        return q * (q - s)
    if r == 1:
        return q - s
    return 1
