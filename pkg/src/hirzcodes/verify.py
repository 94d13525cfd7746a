"""Verification sweeps: every closed form against an independent oracle.

Each suite walks a parameter grid and emits one Row per checked
instance.  Status values:

* ``pass`` / ``fail`` -- the check ran and the oracle agreed / disagreed;
* ``skip``   -- an enumeration exceeded its budget (never a failure);
* ``absent`` -- a multiplier provably does not exist over this field
  (exhaustive search of the solution space); reported, not failed,
  because small fields genuinely lack some of the abstract-existence
  objects.

Row ordering is deterministic (grid order), so identical invocations
produce byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from dataclasses import asdict, dataclass

from . import hirzebruch as hz
from . import rs
from .codes import LinearCode, min_weight_outside
from .errors import BudgetExceeded, NoMultiplier
from .gf import field_of_size
from .linalg import check_product, tensor_code
from .equivalence import find_multiplier, twist_dual

CSV_COLUMNS = ["q", "e", "a", "b", "check", "expected", "actual", "status", "runtime_ms"]


@dataclass
class Row:
    q: int
    e: int
    a: int
    b: int
    check: str
    expected: str
    actual: str
    status: str
    runtime_ms: int


def _row(q, e, a, b, check, expected, actual, t0, status=None):
    if status is None:
        status = "pass" if expected == actual else "fail"
    return Row(
        q, e, a, b, check, str(expected), str(actual), status,
        int((time.time() - t0) * 1000),
    )


def _grid(q_list, e_list):
    for q in q_list:
        f = field_of_size(q)
        for e in e_list:
            for a in range(q):
                for bm in range(q + 1):
                    yield f, q, e, a, e * a + bm


def sweep_constructions(q_list=(2, 3, 4, 5), e_list=(0, 1, 2, 3)):
    rows = []
    for f, q, e, a, b in _grid(q_list, e_list):
        t0 = time.time()
        eq_p = hz.code_projective(f, e, a, b) == hz.code_projective_explicit(f, e, a, b)
        rows.append(_row(q, e, a, b, "projective_explicit_eq", True, eq_p, t0))
        t0 = time.time()
        eq_a = hz.code_affine(f, e, a, b) == hz.code_affine_explicit(f, e, a, b)
        rows.append(_row(q, e, a, b, "affine_explicit_eq", True, eq_a, t0))
    return rows


def sweep_formulas(q_list=(2, 3, 4, 5), e_list=(0, 1, 2, 3), budget=None):
    rows = []
    for f, q, e, a, b in _grid(q_list, e_list):
        cp = hz.code_projective(f, e, a, b)
        ca = hz.code_affine(f, e, a, b)
        if e >= 2:
            t0 = time.time()
            rows.append(_row(q, e, a, b, "dim_formula", hz.dim_formula(q, e, a, b), cp.k, t0))
            t0 = time.time()
            kf, ka, kp, gap = hz.kernel_dims(q, e, a, b)
            ell = hz.monomial_count(a, b, e)
            ok = (
                ell - kf == cp.k
                and ell - ka == ca.k
                and cp.k - ca.k == kp
                and cp.dual().k - ca.dual().k == gap
            )
            rows.append(_row(q, e, a, b, "kernel_dims", True, ok, t0))
        if e >= 1:
            t0 = time.time()
            rows.append(
                _row(q, e, a, b, "affine_dim_formula", hz.affine_dim_formula(q, e, a, b), ca.k, t0)
            )
        try:
            if e >= 2:
                t0 = time.time()
                d = cp.min_distance(budget)
                rows.append(
                    _row(q, e, a, b, "min_distance_formula", hz.min_distance_formula(q, e, a, b), d, t0)
                )
            if e >= 1:
                t0 = time.time()
                d = ca.min_distance(budget)
                rows.append(
                    _row(
                        q, e, a, b, "affine_min_distance_formula",
                        hz.affine_min_distance_formula(q, e, a, b), d, t0,
                    )
                )
        except BudgetExceeded:
            rows.append(_row(q, e, a, b, "min_distance_formula", "", "budget", t0, "skip"))
    return rows


def sweep_duals(q_list=(2, 3, 4, 5), e_list=(0, 1, 2, 3)):
    rows = []
    for f, q, e, a, b in _grid(q_list, e_list):
        if e < 1:
            continue
        t0 = time.time()
        ok = hz.dual_affine_explicit(f, e, a, b) == hz.code_affine(f, e, a, b).dual()
        rows.append(_row(q, e, a, b, "dual_affine_explicit", True, ok, t0))
        if a <= q - 2:
            t0 = time.time()
            ok = hz.dual_projective_explicit(f, e, a, b) == hz.code_projective(f, e, a, b).dual()
            rows.append(_row(q, e, a, b, "dual_projective_explicit", True, ok, t0))
    return rows


def sweep_dual_distance(q_list=(3, 4, 5), e_list=(2,), budget=None):
    rows = []
    for f, q, e, a, b in _grid(q_list, e_list):
        if not (1 <= a <= q - 1 and 0 <= b - e * a <= q - 1):
            continue
        t0 = time.time()
        lo, hi = hz.dual_distance_bounds(q, e, a, b)
        try:
            d = hz.code_projective(f, e, a, b).dual().min_distance(budget)
        except BudgetExceeded:
            rows.append(_row(q, e, a, b, "dual_distance_bounds", "", "budget", t0, "skip"))
            continue
        rows.append(_row(q, e, a, b, "dual_distance_bounds", True, lo <= d <= hi, t0))
    for q in q_list:
        f = field_of_size(q)
        for e in e_list:
            for m in range(q):
                t0 = time.time()
                try:
                    d = hz.ample_code(f, e, m).dual().min_distance(budget)
                except BudgetExceeded:
                    rows.append(_row(q, e, m, m * (e + 1), "ample_dual_distance", "", "budget", t0, "skip"))
                    continue
                rows.append(
                    _row(q, e, m, m * (e + 1), "ample_dual_distance", hz.ample_dual_distance(m, e, q), d, t0)
                )
    return rows


def sweep_prs(q_list=(2, 3, 4, 5)):
    rows = []
    for q in q_list:
        f = field_of_size(q)
        for k1 in range(1, q + 1):
            for k2 in range(k1 + 1, q + 1):
                t0 = time.time()
                li, ri = rs.prs_intersection_identity(f, k1, k2)
                ls, rss = rs.prs_sum_identity(f, k1, k2)
                rows.append(_row(q, 0, k1, k2, "prs_lemma", True, li == ri and ls == rss, t0))
    return rows


def sweep_rm(q_list=(2, 3, 4), budget=None):
    rows = []
    for q in q_list:
        f = field_of_size(q)
        for k in range(0, 2 * (q - 1) + 1):
            t0 = time.time()
            code = rs.rm_code(f, k)
            try:
                d = code.min_distance(budget)
            except BudgetExceeded:
                rows.append(_row(q, 0, k, 0, "rm_min_distance", "", "budget", t0, "skip"))
                continue
            rows.append(_row(q, 0, k, 0, "rm_min_distance", rs.rm_min_distance(k, q), d, t0))
    return rows


def sweep_warm(q_list=(3, 4), e_list=(1, 2)):
    rows = []
    for q in q_list:
        f = field_of_size(q)
        for e in e_list:
            for b in range(0, (q - 1) * (1 + e)):
                a = -(-b // e) if b else 0  # smallest a with b - ea <= 0
                bt = (q - 1) * (1 + e) - b - 1
                at = -(-bt // e) if bt else 0
                t0 = time.time()
                ok = hz.code_affine(f, e, a, b).dual() == hz.code_affine(f, e, at, bt)
                rows.append(_row(q, e, a, b, "warm_duality", True, ok, t0))
    return rows


def sweep_check_product(q_list=(2, 3, 4), budget=None):
    rows = []
    for q in q_list:
        f = field_of_size(q)
        for k1 in range(1, q):
            for k2 in range(1, q):
                c1 = rs.rs_code(f, k1)
                c2 = rs.rs_code(f, k2)
                t0 = time.time()
                tensor = LinearCode(f, q * q, tensor_code(f, c1.gen, c2.gen))
                boxed = LinearCode(
                    f, q * q, check_product(f, c1.dual().gen, c2.dual().gen)
                )
                ok = tensor.dual() == boxed
                rows.append(_row(q, 0, k1, k2, "tensor_dual_check_product", True, ok, t0))
                t0 = time.time()
                try:
                    d = tensor.dual().min_distance(budget)
                    expected = min(c1.dual().min_distance(budget), c2.dual().min_distance(budget))
                except BudgetExceeded:
                    rows.append(_row(q, 0, k1, k2, "check_product_distance", "", "budget", t0, "skip"))
                    continue
                rows.append(_row(q, 0, k1, k2, "check_product_distance", expected, d, t0))
    return rows


def sweep_multipliers(q_list=(3, 4, 5), e_list=(1, 2), seed=0):
    rows = []
    for q in q_list:
        f = field_of_size(q)
        for e in e_list:
            params = [(a, e * a + bm) for a in range(q) for bm in range(q)]
            for (a1, b1), (a2, b2) in itertools.product(params, params):
                if not (a1 <= a2 and b1 <= b2):
                    continue
                t0 = time.time()
                c1 = hz.code_projective(f, e, a1, b1)
                c2 = hz.code_projective(f, e, a2, b2)
                try:
                    mult = find_multiplier(c1, c2, seed=seed)
                except NoMultiplier:
                    rows.append(
                        _row(q, e, a1, b1, f"multiplier_into_{a2}_{b2}", "found", "absent", t0, "absent")
                    )
                    continue
                lhs, rhs = twist_dual(mult, c1)
                ok = c2.contains(c1.schur_multiply(mult.m)) and lhs == rhs
                rows.append(_row(q, e, a1, b1, f"multiplier_into_{a2}_{b2}", True, ok, t0))
    return rows


def sweep_css(q_list=(4,), e_list=(2,), seed=0, budget=None):
    from . import css as css_mod

    rows = []
    for q in q_list:
        f = field_of_size(q)
        for e in e_list:
            for m in range(0, (e + 1) * (q - 1) // (2 * e + 1) + 1):
                t0 = time.time()
                try:
                    code = css_mod.css_max(f, e, m, budget=budget, seed=seed)
                except NoMultiplier:
                    rows.append(_row(q, e, m, 0, "css_max", "built", "absent", t0, "absent"))
                    continue
                ok = code.k == code.c2.k - code.c1.k and (
                    code.d_exact is None or code.d_exact >= code.d_lower
                )
                rows.append(_row(q, e, m, 0, "css_max", True, ok, t0))
    return rows


def run_all(q_list=(2, 3, 4), e_list=(0, 1, 2, 3), seed=0, budget=None):
    q_small = tuple(q for q in q_list if q >= 3)
    rows = []
    rows += sweep_constructions(q_list, e_list)
    rows += sweep_formulas(q_list, e_list, budget)
    rows += sweep_duals(q_list, e_list)
    rows += sweep_dual_distance(q_small or (3,), (2,), budget)
    rows += sweep_prs(q_list)
    rows += sweep_rm(tuple(q for q in q_list if q <= 4), budget)
    rows += sweep_warm(tuple(q for q in q_small if q <= 4) or (3,), (1, 2))
    rows += sweep_check_product(tuple(q for q in q_list if q <= 4), budget)
    rows += sweep_multipliers(q_small or (3,), tuple(e for e in e_list if e in (1, 2)) or (1,), seed)
    rows += sweep_css(tuple(q for q in q_small if q >= 4) or (4,), (2,), seed, budget)
    return rows


def failures(rows):
    return [r for r in rows if r.status == "fail"]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(asdict(r))
    return buf.getvalue()


def rows_to_json(rows) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2)
