"""CSS quantum codes from nested pairs of the surface codes.

A nested pair C1 <= C2 yields a [[n, dim C2 - dim C1, d]]_q quantum code
with d = min of the two coset minimum weights d(C2 \\ C1) and
d(C1^perp \\ C2^perp).  The number of logical qudits is always computed
from actual dimensions; the closed forms of the construction theorems
are asserted against it, never trusted.  Distances are exact when the
coset engines finish within budget, otherwise only the theorem lower
bound is carried, explicitly marked.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .codes import LinearCode, coset_min_weight, default_budget
from .equivalence import find_multiplier, orthogonal_pair
from .errors import BudgetExceeded, HypothesisViolated, NotNested
from .gf import Field
from .hirzebruch import code_projective, derived_shape, dim_formula


@dataclass
class CssCode:
    c1: LinearCode
    c2: LinearCode
    n: int
    k: int
    d_lower: int
    d_exact: Optional[int] = None
    degenerate: Optional[bool] = None
    construction: str = "pair"
    params: dict = dc_field(default_factory=dict)
    multiplier_seed: Optional[int] = None

    def to_record(self) -> dict:
        rec = {
            "q": self.c1.field.q,
            "e": self.params.get("e"),
            "construction": self.construction,
            "params": {k: v for k, v in self.params.items() if k != "e"},
            "n": self.n,
            "k": self.k,
            "d_lower": self.d_lower,
        }
        if self.d_exact is not None:
            rec["d_exact"] = self.d_exact
        if self.degenerate is not None:
            rec["degenerate"] = self.degenerate
        if self.multiplier_seed is not None:
            rec["multiplier_seed"] = self.multiplier_seed
        return rec


def _coset_or_none(c2: LinearCode, c1: LinearCode, budget: int) -> Optional[int]:
    try:
        return coset_min_weight(c2, c1, budget)
    except BudgetExceeded:
        return None


def _dist_or_none(c: LinearCode, budget: int) -> Optional[int]:
    if c.k == 0:
        return None
    try:
        return c.min_distance(budget)
    except BudgetExceeded:
        return None


def css_from_pair(
    c1: LinearCode, c2: LinearCode, budget: int | None = None, d_lower: int = 1
) -> CssCode:
    if not c2.contains(c1):
        raise NotNested("CSS pair needs C1 contained in C2")
    budget = budget if budget is not None else default_budget()
    k = c2.k - c1.k
    d_exact = None
    degenerate = None
    if k > 0:
        dz = _coset_or_none(c2, c1, budget)
        dx = _coset_or_none(c1.dual(), c2.dual(), budget)
        if dz is not None and dx is not None:
            d_exact = min(dz, dx)
            d2 = _dist_or_none(c2, budget)
            d1p = _dist_or_none(c1.dual(), budget)
            if d2 is not None and d1p is not None:
                degenerate = d_exact > min(d2, d1p)
    return CssCode(c1, c2, c1.n, k, d_lower, d_exact, degenerate)


def _triangular_dim(e: int, a: int, b: int) -> int:
    """(a+1)(b+1) - e*a(a+1)/2, the unsaturated dimension count."""
    return sum(b - e * d + 1 for d in range(a + 1))


def css_injective(
    f: Field, e: int, p1, p2, budget: int | None = None, retries: int = 200, seed: int = 0
) -> CssCode:
    """CSS code from a nested pair with both evaluation maps injective."""
    a1, b1 = p1
    a2, b2 = p2
    q = f.q
    if not (0 <= a1 <= a2 <= q - 1 and 0 <= b1 <= b2 <= q - 1):
        raise HypothesisViolated("need 0 <= a1 <= a2 <= q-1 and 0 <= b1 <= b2 <= q-1")
    if not (0 <= b1 - e * a1 <= q - 1 and 0 <= b2 - e * a2 <= q - 1):
        raise HypothesisViolated("need b_i - e*a_i in [0, q-1]")
    c1 = code_projective(f, e, a1, b1)
    c2 = code_projective(f, e, a2, b2)
    mult = find_multiplier(c1, c2, retries=retries, seed=seed)
    d_lower = min(a1, b1 - e * a1) + 2
    css = css_from_pair(c1.schur_multiply(mult.m), c2, budget, d_lower)
    expected_k = _triangular_dim(e, a2, b2) - _triangular_dim(e, a1, b1)
    assert css.k == expected_k, f"dimension formula mismatch: {css.k} != {expected_k}"
    css.construction = "injective"
    css.params = {"e": e, "a1": a1, "b1": b1, "a2": a2, "b2": b2}
    css.multiplier_seed = seed
    return css


def css_max(
    f: Field, e: int, m: int, budget: int | None = None, retries: int = 200, seed: int = 0
) -> CssCode:
    """CSS code with the large ambient code C_e(q-1, e(q-m-1)+q-1)."""
    q = f.q
    if e < 2:
        raise HypothesisViolated("construction needs e >= 2")
    if not 0 <= m <= (e + 1) * (q - 1) // (2 * e + 1):
        raise HypothesisViolated(f"need 0 <= m <= floor((e+1)(q-1)/(2e+1)), got m = {m}")
    p1 = (m, (e + 1) * m)
    p2 = (q - 1, e * (q - m - 1) + q - 1)
    c1 = code_projective(f, e, *p1)
    c2 = code_projective(f, e, *p2)
    mult = find_multiplier(c1, c2, retries=retries, seed=seed)
    css = css_from_pair(c1.schur_multiply(mult.m), c2, budget, d_lower=m + 2)
    k1 = dim_formula(q, e, *p1)
    k2 = (q - m - 1) * (q + 1) + sum(q - e * j for j in range(m + 1))
    assert c2.k == k2 and css.k == k2 - k1, "dimension formulas mismatch"
    css.construction = "max"
    css.params = {"e": e, "m": m}
    css.multiplier_seed = seed
    return css


def css_injective_simplified(
    f: Field, e: int, m: int, budget: int | None = None, retries: int = 200, seed: int = 0
):
    """css_max restricted to the window where the small code is unsaturated.

    Returns (css, paper_k, computed_k).  The simple closed form
    q(q+1) - (e+1)m(m+1) disagrees with the dimension difference the
    construction actually produces (by 2(m+1) at small m); both values
    are reported and the computed one is authoritative.
    """
    q = f.q
    if e < 2:
        raise HypothesisViolated("construction needs e >= 2")
    if not 0 <= m <= (q - 1) // (e + 1):
        raise HypothesisViolated(f"need 0 <= m <= floor((q-1)/(e+1)), got m = {m}")
    assert derived_shape(q, e, m, (e + 1) * m).s_tilde == -1
    css = css_max(f, e, m, budget, retries, seed)
    css.construction = "simplified"
    css.params = {"e": e, "m": m}
    paper_k = q * (q + 1) - (e + 1) * m * (m + 1)
    return css, paper_k, css.k


def css_orthogonal(
    f: Field, e: int, p1, p2, budget: int | None = None, retries: int = 200, seed: int = 0
) -> CssCode:
    """CSS code from an orthogonal pair: (C, dual(C'))."""
    a1, b1 = p1
    a2, b2 = p2
    q = f.q
    moved, cprime, _mult = orthogonal_pair(f, e, p1, p2, retries=retries, seed=seed)
    if not (0 <= b1 - e * a1 <= q - 1 and 0 <= b2 - e * a2 <= q - 1):
        raise HypothesisViolated("need b_i - e*a_i in [0, q-1]")
    d_lower = min(a1, a2, b1 - e * a1, b2 - e * a2) + 2
    css = css_from_pair(moved, cprime.dual(), budget, d_lower)
    k1 = dim_formula(q, e, a1, b1) if e >= 2 else moved.k
    k2 = dim_formula(q, e, a2, b2) if e >= 2 else cprime.k
    assert css.k == (q + 1) ** 2 - k1 - k2, "orthogonal dimension mismatch"
    css.construction = "orthogonal"
    css.params = {"e": e, "a1": a1, "b1": b1, "a2": a2, "b2": b2}
    css.multiplier_seed = seed
    return css
