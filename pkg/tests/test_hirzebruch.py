import numpy as np
import pytest

from hirzcodes import hirzebruch as hz
from hirzcodes.codes import LinearCode
from hirzcodes.errors import HypothesisViolated, NegativeA
from hirzcodes.gf import field_of_size


def test_monomial_basis_example():
    basis = hz.monomial_basis(1, 1, 1)
    assert basis == [
        hz.Monomial(0, 1, 0, 0),
        hz.Monomial(1, 0, 1, 0),
        hz.Monomial(1, 0, 0, 1),
    ]
    assert hz.monomial_count(1, 1, 1) == 3


def test_monomial_count_matches_basis_size():
    for e in (0, 1, 2, 3):
        for a in range(4):
            for b in range(10):
                assert len(hz.monomial_basis(a, b, e)) == hz.monomial_count(a, b, e)
    with pytest.raises(NegativeA):
        hz.monomial_basis(-1, 2, 1)


def test_point_grid():
    f = field_of_size(3)
    pts = hz.enumerate_points(f)
    assert pts.shape == (16, 4)
    assert list(pts[0]) == [0, 1, 0, 1]  # both axes at infinity
    assert list(pts[1]) == [1, 0, 0, 1]  # x = alpha_1 = 0, T at infinity
    assert len({tuple(p) for p in pts}) == 16


def test_construction_equivalence_spot():
    for (q, e, a, b) in [(3, 1, 1, 2), (4, 2, 2, 5), (5, 3, 1, 4), (2, 0, 1, 1)]:
        f = field_of_size(q)
        assert hz.code_projective(f, e, a, b) == hz.code_projective_explicit(f, e, a, b)
        assert hz.code_affine(f, e, a, b) == hz.code_affine_explicit(f, e, a, b)


def test_affine_is_puncturing_of_projective():
    f = field_of_size(3)
    cp = hz.code_projective(f, 2, 1, 3)
    assert cp.puncture(hz.affine_keep_indices(3)) == hz.code_affine(f, 2, 1, 3)


def test_dimension_formulas():
    assert hz.dim_formula(4, 2, 3, 7) == 16
    assert hz.dim_formula(4, 2, 2, 5) == 11
    assert hz.affine_dim_formula(4, 2, 2, 5) == 10
    f = field_of_size(5)
    for (e, a, b) in [(2, 2, 5), (3, 1, 4), (2, 4, 10)]:
        assert hz.code_projective(f, e, a, b).k == hz.dim_formula(5, e, a, b)
        assert hz.code_affine(f, e, a, b).k == hz.affine_dim_formula(5, e, a, b)


def test_formula_windows():
    with pytest.raises(HypothesisViolated):
        hz.dim_formula(4, 1, 1, 2)  # projective closed form needs e >= 2
    with pytest.raises(HypothesisViolated):
        hz.dim_formula(4, 2, 4, 8)  # a > q-1
    with pytest.raises(HypothesisViolated):
        hz.dim_formula(4, 2, 1, 1)  # b - ea < 0
    with pytest.raises(HypothesisViolated):
        hz.affine_dim_formula(4, 0, 1, 1)  # affine form needs e >= 1
    assert hz.affine_dim_formula(4, 1, 1, 2) == 5


def test_distance_formulas_spot_values():
    f = field_of_size(4)
    assert hz.min_distance_formula(4, 2, 3, 7) == 3
    assert hz.code_projective(f, 2, 3, 7).min_distance() == 3
    # three regimes: q > b; b-ea < q <= b; q <= b-ea
    assert hz.min_distance_formula(4, 2, 0, 1) == 5 * 4
    assert hz.min_distance_formula(4, 2, 1, 3) == 4 * 2
    assert hz.min_distance_formula(4, 2, 1, 5) == 4 - 0
    assert hz.min_distance_formula(4, 2, 1, 6) == 4
    assert hz.affine_min_distance_formula(4, 2, 1, 2) == 4 * 2
    assert hz.affine_min_distance_formula(4, 2, 1, 4) == 4 - 0
    assert hz.affine_min_distance_formula(4, 2, 1, 6) == 3


def test_saturation_indices():
    s = hz.derived_shape(4, 2, 3, 7)
    assert s.s_tilde == 1 and s.s_tilde_affine == 2
    s = hz.derived_shape(4, 2, 1, 3)
    assert s.s_tilde == -1 and s.s_tilde_affine == 0
    with pytest.raises(HypothesisViolated):
        hz.derived_shape(4, 0, 1, 1)


def test_kernel_dims():
    # q=4, e=2, (3,7): ell = 8+6+4+2 = 20, dims 16 and 14
    f = field_of_size(4)
    kf, ka, kp, gap = hz.kernel_dims(4, 2, 3, 7)
    cp = hz.code_projective(f, 2, 3, 7)
    ca = hz.code_affine(f, 2, 3, 7)
    ell = hz.monomial_count(3, 7, 2)
    assert ell - kf == cp.k
    assert ell - ka == ca.k
    assert cp.k - ca.k == kp
    assert cp.dual().k - ca.dual().k == gap == 2 * 4 - 1


def test_sigma_basis_conversion():
    p = hz.HirzebruchParams.from_sigma_basis(4, 2, 1, 3)
    assert (p.a, p.b) == (1, 5)
    assert p.sigma_basis == (1, 3)
    assert hz.sf_from_sigma(2, 0, 3) == (2, 6)


def test_dual_affine_explicit_examples():
    # dim example: q=3, e=1, (1,2) has affine dual of dimension 16 - 5... oracle
    f = field_of_size(3)
    c = hz.code_affine(f, 1, 1, 2)
    d = hz.dual_affine_explicit(f, 1, 1, 2)
    assert d == c.dual()
    # all-ones code: the dual of C_A(0,0) is the stated sum
    z = hz.dual_affine_explicit(f, 1, 0, 0)
    assert z == hz.code_affine(f, 1, 0, 0).dual()
    # q=4, e=2, (3,7): affine dual of dimension 2
    f4 = field_of_size(4)
    d47 = hz.dual_affine_explicit(f4, 2, 3, 7)
    assert d47.k == 2 and d47 == hz.code_affine(f4, 2, 3, 7).dual()


def test_dual_projective_explicit():
    f = field_of_size(4)
    d = hz.dual_projective_explicit(f, 2, 2, 5)
    assert d.k == 25 - 11
    assert d == hz.code_projective(f, 2, 2, 5).dual()
    with pytest.raises(HypothesisViolated):
        hz.dual_projective_explicit(f, 2, 3, 7)  # needs a <= q-2
    with pytest.raises(HypothesisViolated):
        hz.dual_projective_explicit(f, 2, 1, 1)  # b - ea < 0


def test_dual_theorems_sweep_small():
    for q in (2, 3, 4):
        f = field_of_size(q)
        for e in (1, 2):
            for a in range(q):
                for bm in range(q + 1):
                    b = e * a + bm
                    ca = hz.code_affine(f, e, a, b)
                    assert hz.dual_affine_explicit(f, e, a, b) == ca.dual()
                    if a <= q - 2:
                        cp = hz.code_projective(f, e, a, b)
                        assert hz.dual_projective_explicit(f, e, a, b) == cp.dual()


def test_dual_distance_bounds_and_ample():
    assert hz.dual_distance_bounds(4, 2, 1, 3) == (3, 3)
    assert hz.dual_distance_bounds(4, 2, 2, 5) == (3, 4)
    with pytest.raises(HypothesisViolated):
        hz.dual_distance_bounds(4, 2, 0, 1)
    f = field_of_size(4)
    for m in range(4):
        d = hz.ample_code(f, 2, m).dual().min_distance()
        assert d == hz.ample_dual_distance(m, 2, 4) == m + 2
    with pytest.raises(HypothesisViolated):
        hz.ample_dual_distance(4, 2, 4)


def test_warm_duality_remark():
    # for b - ea <= 0 the affine code only depends on b, and duality flips b
    for q in (3, 4):
        f = field_of_size(q)
        for e in (1, 2):
            for b in range(0, (q - 1) * (1 + e)):
                a = -(-b // e) if b else 0
                bt = (q - 1) * (1 + e) - b - 1
                at = -(-bt // e) if bt else 0
                assert hz.code_affine(f, e, a, b).dual() == hz.code_affine(f, e, at, bt)


def test_monotonicity_affine():
    f = field_of_size(3)
    assert hz.code_affine(f, 1, 2, 3).contains(hz.code_affine(f, 1, 1, 2))
    # larger e means a smaller monomial set
    assert hz.code_affine(f, 1, 1, 2).contains(hz.code_affine(f, 2, 1, 2))


def test_extend_affine_vanishes_at_infinity():
    f = field_of_size(3)
    ext = hz.extend_affine(f, 1, 1, 2)
    inf = hz.infinity_positions(3)
    assert ext.n == 16
    assert not np.any(ext.gen[:, inf])
