"""Evaluation codes on the rational ruled surfaces H_e.

A divisor class is written in the (S, F) basis as a pair (a, b); the
second generator pair (sigma, F) relates to it by

    (a_sigma, b_sigma)  <->  (a_sigma, b_sigma + e * a_sigma) .

Rational points form a (q+1) x (q+1) grid; the flat index is
iT * (q+1) + iX with axis index 0 the point at infinity (0, 1) and axis
index i >= 1 the affine point (1, alpha_i).  This matches the tensor
flattening of linalg (row iT carries the X-axis, the first row is the
T_1 = 0 fibre).

Every closed-form parameter function raises HypothesisViolated outside
its stated validity window; the rank/enumeration oracles in the codes
module remain available for any parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .codes import LinearCode
from .errors import HypothesisViolated, NegativeA
from .gf import Field
from .rs import alpha_power_vector, prs_code, rs_code


class Monomial(NamedTuple):
    """Exponents of X_1, X_2, T_1, T_2."""

    d1: int
    d2: int
    c1: int
    c2: int


@dataclass(frozen=True)
class HirzebruchParams:
    q: int
    e: int
    a: int
    b: int

    @classmethod
    def from_sigma_basis(cls, q: int, e: int, a_sigma: int, b_sigma: int) -> "HirzebruchParams":
        return cls(q, e, a_sigma, b_sigma + e * a_sigma)

    @property
    def sigma_basis(self):
        return self.a, self.b - self.e * self.a


def sf_from_sigma(a_sigma: int, b_sigma: int, e: int):
    """(sigma, F) coefficients to (S, F) coefficients."""
    return a_sigma, b_sigma + e * a_sigma


@dataclass(frozen=True)
class DerivedShape:
    """Saturation indices of the two evaluation morphisms."""

    s_tilde: int
    s_tilde_affine: int


def derived_shape(q: int, e: int, a: int, b: int) -> DerivedShape:
    if e < 1:
        raise HypothesisViolated("saturation indices need e >= 1")
    s_tilde = min((b - q) // e, a) if b >= q else -1
    s_tilde_affine = min((b + 1 - q) // e, a) if b + 1 >= q else -1
    return DerivedShape(s_tilde, s_tilde_affine)


# -- points and monomials -----------------------------------------------------


def axis_point(f: Field, i: int):
    """Representative of P^1(F_q) at axis index i: (0,1) at i = 0."""
    if i == 0:
        return 0, 1
    return 1, int(f.element_order[i - 1])


def enumerate_points(f: Field) -> np.ndarray:
    """The (q+1)^2 x 4 array of points (x1, x2, t1, t2), flat T-major."""
    q = f.q
    pts = np.empty(((q + 1) ** 2, 4), dtype=np.int64)
    for it in range(q + 1):
        t1, t2 = axis_point(f, it)
        for ix in range(q + 1):
            x1, x2 = axis_point(f, ix)
            pts[it * (q + 1) + ix] = (x1, x2, t1, t2)
    return pts


def monomial_basis(a: int, b: int, e: int) -> list[Monomial]:
    """All monomials with d1 + d2 = a and c1 + c2 = b - e*d2 >= 0."""
    if a < 0:
        raise NegativeA("need a >= 0")
    out = []
    for d1 in range(a + 1):
        d2 = a - d1
        deg = b - e * d2
        if deg < 0:
            continue
        for c2 in range(deg + 1):
            out.append(Monomial(d1, d2, deg - c2, c2))
    return out


def monomial_count(a: int, b: int, e: int) -> int:
    """dim L_*(aS + bF), i.e. lattice points of the parameter polygon."""
    if a < 0:
        raise NegativeA("need a >= 0")
    return sum(max(0, b - e * d2 + 1) for d2 in range(a + 1))


def evaluate_monomial(f: Field, mono: Monomial, point) -> int:
    x1, x2, t1, t2 = (int(c) for c in point)
    val = f.pow_conv(x1, mono.d1)
    val = f.mul(val, f.pow_conv(x2, mono.d2))
    val = f.mul(val, f.pow_conv(t1, mono.c1))
    return f.mul(val, f.pow_conv(t2, mono.c2))


def _evaluate_monomial_grid(f: Field, mono: Monomial, pts: np.ndarray) -> np.ndarray:
    val = f.pow_arr(pts[:, 0], mono.d1)
    val = f.mul_arr(val, f.pow_arr(pts[:, 1], mono.d2))
    val = f.mul_arr(val, f.pow_arr(pts[:, 2], mono.c1))
    return f.mul_arr(val, f.pow_arr(pts[:, 3], mono.c2))


# -- the codes, built two independent ways ------------------------------------


def code_projective(f: Field, e: int, a: int, b: int) -> LinearCode:
    """Image of the monomial basis under evaluation at the full grid."""
    pts = enumerate_points(f)
    basis = monomial_basis(a, b, e)
    rows = [_evaluate_monomial_grid(f, mono, pts) for mono in basis]
    return LinearCode(f, (f.q + 1) ** 2, rows)


def code_projective_explicit(f: Field, e: int, a: int, b: int) -> LinearCode:
    """Sum over d1 of <(0^{d1}, alpha^{*(a-d1)})> (x) PRS_q(b-ea+e*d1+1)."""
    if a < 0:
        raise NegativeA("need a >= 0")
    q = f.q
    n = (q + 1) ** 2
    acc = LinearCode.zero(f, n)
    for d1 in range(a + 1):
        xv = np.empty(q + 1, dtype=np.int64)
        xv[0] = f.pow_conv(0, d1)
        xv[1:] = alpha_power_vector(f, a - d1)
        t_side = prs_code(f, b - e * a + e * d1 + 1)
        if t_side.k == 0:
            continue
        rows = linalg.tensor_code(f, xv.reshape(1, -1), t_side.gen)
        acc = acc.sum(LinearCode(f, n, rows))
    return acc


def affine_keep_indices(q: int) -> list[int]:
    """Grid positions with iT >= 1 and iX >= 1, in affine flat order."""
    return [it * (q + 1) + ix for it in range(1, q + 1) for ix in range(1, q + 1)]


def code_affine(f: Field, e: int, a: int, b: int) -> LinearCode:
    """Puncturing of the projective code to the affine grid."""
    return code_projective(f, e, a, b).puncture(affine_keep_indices(f.q))


def code_affine_explicit(f: Field, e: int, a: int, b: int) -> LinearCode:
    """Sum over d of <alpha^{*d}> (x) RS_q(b - e*d + 1)."""
    if a < 0:
        raise NegativeA("need a >= 0")
    q = f.q
    acc = LinearCode.zero(f, q * q)
    for d in range(a + 1):
        t_side = rs_code(f, b - e * d + 1)
        if t_side.k == 0:
            continue
        xv = alpha_power_vector(f, d).reshape(1, -1)
        acc = acc.sum(LinearCode(f, q * q, linalg.tensor_code(f, xv, t_side.gen)))
    return acc


def _affine_or_zero(f: Field, e: int, a: int, b: int) -> LinearCode:
    """Affine code with empty-sum semantics for a < 0 (dual theorems)."""
    if a < 0:
        return LinearCode.zero(f, f.q * f.q)
    return code_affine_explicit(f, e, a, b)


def infinity_positions(q: int) -> list[int]:
    """Grid positions on the first row or first column (iT = 0 or iX = 0)."""
    return sorted(set(range(q + 1)) | {it * (q + 1) for it in range(q + 1)})


def extend_affine_code(code: LinearCode) -> LinearCode:
    """Zero-extend a length-q^2 code back to the (q+1)^2 grid."""
    q = code.field.q
    if code.n != q * q:
        raise HypothesisViolated(f"expected length q^2 = {q * q}, got {code.n}")
    return code.extend_by_zero(infinity_positions(q), (q + 1) ** 2)


def extend_affine(f: Field, e: int, a: int, b: int) -> LinearCode:
    return extend_affine_code(code_affine(f, e, a, b))


# -- closed-form parameters ---------------------------------------------------


def _check_projective_window(q: int, e: int, a: int, b: int):
    if e < 2:
        raise HypothesisViolated(f"closed form needs e >= 2, got e = {e}")
    if not 0 <= a <= q - 1:
        raise HypothesisViolated(f"closed form needs 0 <= a <= q-1, got a = {a}")
    if b - e * a < 0:
        raise HypothesisViolated(f"closed form needs b - ea >= 0, got {b - e * a}")


def _check_affine_window(q: int, e: int, a: int, b: int):
    if e < 1:
        raise HypothesisViolated(f"closed form needs e >= 1, got e = {e}")
    if not 0 <= a <= q - 1:
        raise HypothesisViolated(f"closed form needs 0 <= a <= q-1, got a = {a}")
    if b - e * a < 0:
        raise HypothesisViolated(f"closed form needs b - ea >= 0, got {b - e * a}")


def dim_formula(q: int, e: int, a: int, b: int) -> int:
    _check_projective_window(q, e, a, b)
    st = derived_shape(q, e, a, b).s_tilde
    return (st + 1) * (q + 1) + sum(b - e * d + 1 for d in range(st + 1, a + 1))


def min_distance_formula(q: int, e: int, a: int, b: int) -> int:
    _check_projective_window(q, e, a, b)
    if q > b:
        return (q + (1 if a == 0 else 0)) * (q - b + 1)
    if b - e * a < q <= b:
        return q - (b - q) // e
    return q - a + 1


def affine_dim_formula(q: int, e: int, a: int, b: int) -> int:
    _check_affine_window(q, e, a, b)
    st = derived_shape(q, e, a, b).s_tilde_affine
    return (st + 1) * q + sum(b - e * d + 1 for d in range(st + 1, a + 1))


def affine_min_distance_formula(q: int, e: int, a: int, b: int) -> int:
    _check_affine_window(q, e, a, b)
    if q - 1 > b:
        return q * (q - b)
    if b - e * a < q - 1 <= b:
        return q - (b - q + 1) // e
    return q - a


def kernel_dims(q: int, e: int, a: int, b: int):
    """Closed forms for the kernels of the two evaluation maps.

    Returns (dim ker ev on the full grid, dim ker ev on the affine grid,
    dim ker of the puncturing map, and the dual-dimension gap
    dim C^perp - dim C_affine^perp = 2q - s_tilde).
    """
    _check_projective_window(q, e, a, b)
    shape = derived_shape(q, e, a, b)
    st, sa = shape.s_tilde, shape.s_tilde_affine
    ker_ev_full = sum(b - e * d - q for d in range(st + 1))
    ker_ev_affine = sum(b - e * d + 1 - q for d in range(sa + 1))
    return ker_ev_full, ker_ev_affine, st + 1, 2 * q - st


def dual_distance_bounds(q: int, e: int, a: int, b: int):
    if not (1 <= a <= q - 1 and 0 <= b - e * a <= q - 1):
        raise HypothesisViolated("need 1 <= a <= q-1 and 0 <= b-ea <= q-1")
    return min(a, b - e * a) + 2, min(a, b) + 2


def affine_dual_distance_bounds(q: int, e: int, a: int, b: int):
    if not (1 <= a <= q - 2 and 0 <= b - e * a <= q - 2):
        raise HypothesisViolated("need 1 <= a <= q-2 and 0 <= b-ea <= q-2")
    return min(a, b - e * a) + 2, min(a, b) + 2


def ample_dual_distance(m: int, e: int, q: int) -> int:
    """Exact dual distance of the code of m times the ample class S + (e+1)F."""
    if not 0 <= m <= q - 1:
        raise HypothesisViolated("need 0 <= m <= q-1")
    return m + 2


def ample_code(f: Field, e: int, m: int) -> LinearCode:
    return code_projective(f, e, m, m * (e + 1))


# -- explicit duals -----------------------------------------------------------


def dual_affine_explicit(f: Field, e: int, a: int, b: int) -> LinearCode:
    """The affine dual as a sum of two affine codes (sigma-basis data)."""
    q = f.q
    if b - e * a < 0:
        raise HypothesisViolated("need b - ea >= 0")
    c1 = _affine_or_zero(f, e, *sf_from_sigma(q - 1, q - 2 - b, e))
    c2 = _affine_or_zero(f, e, *sf_from_sigma(q - 2 - a, q - 1, e))
    return c1.sum(c2)


def dual_projective_explicit(f: Field, e: int, a: int, b: int) -> LinearCode:
    """The full-grid dual as C1 + C2 + C3 (zero-extension, PRS block, v_d)."""
    q = f.q
    if a > q - 2:
        raise HypothesisViolated(f"explicit dual needs a <= q-2, got a = {a}")
    if b - e * a < 0:
        raise HypothesisViolated("need b - ea >= 0")
    n = (q + 1) ** 2
    c1 = extend_affine_code(_affine_or_zero(f, e, *sf_from_sigma(q - 1, q - 2 - b, e)))
    c2 = LinearCode(f, n, linalg.tensor_code(f, prs_code(f, q - a).gen, linalg.identity(q + 1)))
    st = derived_shape(q, e, a, b).s_tilde
    v_rows = []
    for d in range(st + 1, a + 1):
        # The exponent q-1-b+ed makes v_d orthogonal to every evaluated
        # monomial: against (d1,d2,c1,c2) with d2 = d the T-side dot is
        # 0^{c1} + sum_x x^{c2+(q-1)-(c1+c2)}, which vanishes for every
        # split of c1+c2 = b-ed; with d2 != d the X-side dot vanishes.
        exp = q - 1 - b + e * d
        if exp < 0:
            raise HypothesisViolated(f"v_d exponent q-1-b+ed = {exp} negative")
        xv = np.concatenate([[0], alpha_power_vector(f, q - 1 - d)]).astype(np.int64)
        tv = np.concatenate([[1], alpha_power_vector(f, exp)]).astype(np.int64)
        v_rows.append(linalg.tensor_product(f, xv, tv))
    c3 = LinearCode(f, n, linalg.as_matrix(v_rows, n))
    return c1.sum(c2).sum(c3)
