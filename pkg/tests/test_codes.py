import numpy as np
import pytest

from hirzcodes import errors
from hirzcodes.codes import (
    LinearCode,
    coset_min_weight,
    min_weight_outside,
)
from hirzcodes.gf import field_new, field_of_size
from hirzcodes.rs import prs_code, rs_code


def test_canonical_equality():
    f = field_new(3, 1)
    c1 = LinearCode(f, 4, [[1, 0, 1, 2], [0, 1, 1, 1]])
    c2 = LinearCode(f, 4, [[1, 1, 2, 0], [0, 2, 2, 2], [1, 0, 1, 2]])
    assert c1 == c2 and hash(c1) == hash(c2)
    assert c1.k == 2 and c1.n == 4


def test_dual_involution_and_parity_check():
    f = field_new(2, 2)
    c = rs_code(f, 2)
    assert c.dual().dual() == c
    assert c.k + c.dual().k == c.n
    h = c.parity_check()
    from hirzcodes import linalg

    assert not np.any(linalg.matmul(f, c.gen, h.T))


def test_contains():
    f = field_new(5, 1)
    big = rs_code(f, 3)
    small = rs_code(f, 2)
    assert big.contains(small) and not small.contains(big)
    assert big.contains_word(np.array([1, 1, 1, 1, 1]))


def test_puncture_and_extend_roundtrip():
    f = field_new(3, 1)
    c = prs_code(f, 2)
    punctured = c.puncture([1, 2, 3])
    back = punctured.extend_by_zero([0], 4)
    assert punctured.n == 3
    assert back.n == 4 and all(row[0] == 0 for row in back.gen)
    with pytest.raises(errors.IndexOutOfRange):
        c.puncture([0, 0])
    with pytest.raises(errors.DimensionMismatch):
        punctured.extend_by_zero([0, 1], 4)


def test_schur_multiply_preserves_dimension():
    f = field_of_size(4)
    c = rs_code(f, 2)
    m = np.array([1, 2, 3, 1], dtype=np.int64)
    assert c.schur_multiply(m).k == c.k
    with pytest.raises(errors.DimensionMismatch):
        c.schur_multiply(np.array([1, 2]))


def test_min_distance_reed_solomon_is_mds():
    for q in (3, 4, 5):
        f = field_of_size(q)
        for k in range(1, q + 1):
            assert rs_code(f, k).min_distance() == q - k + 1
            assert prs_code(f, k).min_distance() == q + 1 - k + 1


def test_zero_code_has_no_distance():
    f = field_new(2, 1)
    with pytest.raises(errors.ZeroCode):
        LinearCode.zero(f, 3).min_distance()


def test_enumeration_and_bz_agree():
    f = field_of_size(4)
    code = prs_code(f, 3).dual()  # small enough for both engines
    from hirzcodes.codes import _bz_min_weight, _enumerate_min_weight

    d_enum = _enumerate_min_weight(code, None, 1 << 22)
    d_bz = _bz_min_weight(code, None, 1 << 22)
    assert d_enum == d_bz == code.min_distance()


def test_bz_on_larger_code_matches_enumeration():
    from hirzcodes import hirzebruch as hz

    f = field_of_size(4)
    code = hz.code_projective(f, 2, 3, 7).dual()  # n=25, k=9
    d_enum = code.min_distance(budget=1 << 22)  # 4^9 fits: enumeration path
    d_bz = code.min_distance(budget=100_000)  # forces Brouwer-Zimmermann
    assert d_enum == d_bz == 3


def test_weight_distribution():
    f = field_of_size(4)
    c = rs_code(f, 2)
    hist = c.weight_distribution()
    assert sum(hist.values()) == 4**2
    assert hist[0] == 1
    assert min(w for w in hist if w > 0) == c.min_distance()
    with pytest.raises(errors.BudgetExceeded):
        c.weight_distribution(budget=3)


def test_coset_min_weight_enumeration():
    f = field_of_size(4)
    c2 = rs_code(f, 3)
    c1 = rs_code(f, 1)
    # brute-force oracle over all words of c2 outside c1
    best = None
    from hirzcodes.codes import _codeword_chunks

    for words in _codeword_chunks(c2):
        for w in words:
            if not c1.contains_word(w):
                wt = int(np.count_nonzero(w))
                best = wt if best is None else min(best, wt)
    assert coset_min_weight(c2, c1) == best


def test_coset_min_weight_requires_nesting():
    f = field_of_size(4)
    with pytest.raises(errors.NotNested):
        coset_min_weight(rs_code(f, 2), rs_code(f, 3))
    with pytest.raises(errors.NotNested):
        coset_min_weight(rs_code(f, 2), rs_code(f, 2))


def test_coset_bz_path_matches_enumeration():
    from hirzcodes import hirzebruch as hz

    f = field_of_size(4)
    c2 = hz.code_projective(f, 2, 3, 7).dual()  # k = 9
    c1 = LinearCode(f, 25, c2.gen[:4])
    d_enum = coset_min_weight(c2, c1, budget=1 << 22)
    d_bz = coset_min_weight(c2, c1, budget=150_000)
    assert d_enum == d_bz


def test_min_weight_outside_without_nesting():
    f = field_of_size(3)
    a = rs_code(f, 2)
    b = LinearCode(f, 3, [[1, 1, 0]])
    assert not a.contains(b)
    # oracle: scan a's words not in b
    from hirzcodes.codes import _codeword_chunks

    best = min(
        int(np.count_nonzero(w))
        for words in _codeword_chunks(a)
        for w in words
        if not b.contains_word(w)
    )
    assert min_weight_outside(a, b) == best
    with pytest.raises(errors.NotNested):
        min_weight_outside(b, a.sum(b))


def test_budget_env_override(monkeypatch):
    from hirzcodes import codes

    monkeypatch.setenv("HIRZCODE_BUDGET", "12345")
    assert codes.default_budget() == 12345
    monkeypatch.delenv("HIRZCODE_BUDGET")
    assert codes.default_budget() == codes.DEFAULT_BUDGET
