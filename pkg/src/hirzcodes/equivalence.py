"""Schur-multiplier equivalence of codes.

Two codes are equivalent when some everywhere-nonzero vector m carries
one onto the other coordinatewise.  The abstract existence argument is
non-constructive; here it is replaced by a linear-system-plus-search
solver: the containment m * C1 <= C2 is linear in m (one equation per
generator pair g of C1, h of C2-dual), so the solution space W comes
from a kernel computation and only the everywhere-nonzero condition
needs searching.  Search order: the all-ones vector if it lies in W,
then seeded random samples of W, then exhaustive enumeration of W while
|W| <= 2^20.  Every returned multiplier is re-verified post hoc.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import LinearCode
from .errors import (
    DimensionMismatch,
    HypothesisViolated,
    NoMultiplier,
    ZeroCoordinate,
)
from .gf import Field
from .hirzebruch import code_projective

EXHAUSTIVE_LIMIT = 1 << 20


@dataclass(frozen=True)
class Multiplier:
    """An everywhere-nonzero coordinatewise multiplier."""

    field: Field
    m: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.m, dtype=np.int64)
        m.setflags(write=False)
        object.__setattr__(self, "m", m)
        if np.any(m == 0):
            raise ZeroCoordinate("multiplier has a zero coordinate")

    def inverse_twist(self) -> np.ndarray:
        """m^{*(q-2)}, the coordinatewise inverse."""
        return self.field.inv_arr(self.m)

    def serialize(self) -> str:
        return " ".join(str(int(x)) for x in self.m)


def twist_dual(mult: Multiplier, code: LinearCode):
    """Both sides of m^{*(q-2)} * C^perp = (m * C)^perp, for assertion."""
    if mult.m.shape != (code.n,):
        raise DimensionMismatch("multiplier length differs from code length")
    lhs = code.dual().schur_multiply(mult.inverse_twist())
    rhs = code.schur_multiply(mult.m).dual()
    return lhs, rhs


def _solution_space(c1: LinearCode, c2: LinearCode) -> np.ndarray:
    """Kernel of the linear system forcing m * C1 <= C2.

    For generators g of C1 and h of C2^perp the containment needs
    sum_i m_i g_i h_i = 0, which is one linear constraint per pair.
    """
    f = c1.field
    h = c2.parity_check()
    if h.shape[0] == 0:
        return linalg.identity(c1.n)
    constraints = [f.mul_arr(g, hr) for g in c1.gen for hr in h]
    return linalg.kernel_basis(f, linalg.as_matrix(constraints, c1.n))


def _certify(c1: LinearCode, c2: LinearCode, m: np.ndarray) -> bool:
    return bool(np.all(m != 0)) and c2.contains(c1.schur_multiply(m))


def find_multiplier(
    c1: LinearCode, c2: LinearCode, retries: int = 200, seed: int = 0
) -> Multiplier:
    """Find m with all coordinates nonzero and m * C1 <= C2."""
    if c1.field != c2.field or c1.n != c2.n:
        raise DimensionMismatch("codes live in different ambient spaces")
    f = c1.field
    w = _solution_space(c1, c2)
    dim_w = w.shape[0]
    if dim_w == 0:
        raise NoMultiplier("the containment system has only the zero solution")
    if bool(np.any(np.all(w == 0, axis=0))):
        raise NoMultiplier(
            "a coordinate vanishes identically on the solution space"
        )

    def _accept(m):
        # membership in the solution space already forces m * C1 <= C2;
        # the containment is still re-verified, never trusted.
        if np.all(m != 0) and _certify(c1, c2, m):
            return Multiplier(f, np.asarray(m, dtype=np.int64))
        return None

    found = _accept(np.ones(c1.n, dtype=np.int64)) if linalg.in_row_space(
        f, w, np.ones(c1.n, dtype=np.int64)
    ) else None
    if found is not None:
        return found

    rng = np.random.default_rng(seed)
    for _ in range(retries):
        coeffs = rng.integers(0, f.q, size=dim_w)
        m = linalg.matmul(f, coeffs.reshape(1, -1), w)[0]
        found = _accept(m)
        if found is not None:
            return found

    if f.q**dim_w <= EXHAUSTIVE_LIMIT:
        from .codes import _codeword_chunks

        space = LinearCode(f, c1.n, w)
        for words in _codeword_chunks(space):
            full = np.all(words != 0, axis=1)
            for m in words[full]:
                found = _accept(m)
                if found is not None:
                    return found
        raise NoMultiplier("solution space holds no everywhere-nonzero multiplier")
    raise NoMultiplier(
        f"no multiplier found in {retries} samples; space too large to enumerate"
    )


def nested_pair(q_field: Field, e: int, p1, p2, retries: int = 200, seed: int = 0):
    """(m * C_e(a1,b1), C_e(a2,b2)) with certified containment."""
    a1, b1 = p1
    a2, b2 = p2
    if not (a1 <= a2 <= q_field.q - 1 and b1 <= b2):
        raise HypothesisViolated("need a1 <= a2 <= q-1 and b1 <= b2")
    c1 = code_projective(q_field, e, a1, b1)
    c2 = code_projective(q_field, e, a2, b2)
    mult = find_multiplier(c1, c2, retries=retries, seed=seed)
    return c1.schur_multiply(mult.m), c2, mult


def orthogonal_pair(q_field: Field, e: int, p1, p2, retries: int = 200, seed: int = 0):
    """(C, C') with C ~ C_e(a,b), C' = C_e(a',b') and C <= dual(C').

    The receptacle is the tensor block PRS_q(q-a') (x) F_q^{q+1} inside
    dual(C'), which equals the code of the class (q-a'-1, B) for B large
    enough; a multiplier moves C_e(a,b) into it.
    """
    a, b = p1
    ap, bp = p2
    q = q_field.q
    if not (a <= q - 2 and b - e * a >= 0 and a <= q - ap - 1 and bp - e * ap >= 0):
        raise HypothesisViolated(
            "need a <= q-2, b-ea >= 0, a <= q-a'-1 and b'-ea' >= 0"
        )
    big_b = max(b, q + e * (q - ap - 1))
    target = code_projective(q_field, e, q - ap - 1, big_b)
    cprime = code_projective(q_field, e, ap, bp)
    if not cprime.dual().contains(target):
        raise HypothesisViolated("receptacle code is not inside dual(C')")
    c = code_projective(q_field, e, a, b)
    try:
        mult = find_multiplier(c, target, retries=retries, seed=seed)
    except NoMultiplier:
        # The tensor-block receptacle can be too tight over a small field;
        # the full dual is a larger receptacle with the same conclusion.
        mult = find_multiplier(c, cprime.dual(), retries=retries, seed=seed)
    moved = c.schur_multiply(mult.m)
    if not cprime.dual().contains(moved):
        raise NoMultiplier("certification failed: moved code not orthogonal")
    return moved, cprime, mult
