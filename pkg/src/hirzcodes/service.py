"""HTTP service exposing code construction, parameters, sweeps and CSS assembly.

The CLI talks to this app in-process through an ASGI transport, so the
same request/response contract serves both the command line and a
deployed instance.  Domain errors map to a structured payload
{"error": <exception class name>, "detail": <message>} with status 422,
which the CLI translates into its exit-code scheme.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field as PField

from . import css as css_mod
from . import hirzebruch as hz
from . import verify as verify_mod
from .errors import HirzcodesError, HypothesisViolated
from .gf import field_of_size
from .linalg import matrix_to_text


class CodeRequest(BaseModel):
    q: int = PField(ge=2)
    e: int = PField(ge=0)
    a: int = PField(ge=0)
    b: int = PField(ge=0)
    variant: Literal["projective", "affine", "dual-projective", "dual-affine"] = "projective"
    basis: Literal["SF", "sigma"] = "SF"


class CodeResponse(BaseModel):
    q: int
    n: int
    k: int
    matrix: str
    formula_k: Optional[int] = None
    formula_d: Optional[int] = None


class ParamsRequest(BaseModel):
    q: int = PField(ge=2)
    e: int = PField(ge=0)
    a: int = PField(ge=0)
    b: int = PField(ge=0)


class ParamsResponse(BaseModel):
    n_projective: int
    n_affine: int
    dim: Optional[int] = None
    min_distance: Optional[int] = None
    affine_dim: Optional[int] = None
    affine_min_distance: Optional[int] = None
    kernel_dims: Optional[list[int]] = None
    dual_distance_bounds: Optional[list[int]] = None


class CssRequest(BaseModel):
    q: int = PField(ge=2)
    e: int = PField(ge=0)
    construction: Literal["injective", "max", "simplified", "orthogonal"]
    m: Optional[int] = None
    a1: Optional[int] = None
    b1: Optional[int] = None
    a2: Optional[int] = None
    b2: Optional[int] = None
    seed: int = 0
    budget: Optional[int] = None


class VerifyRequest(BaseModel):
    q_list: list[int] = PField(default=[2, 3, 4])
    e_list: list[int] = PField(default=[0, 1, 2, 3])
    seed: int = 0
    budget: Optional[int] = None
    suites: Optional[list[str]] = None


def _build_code(req: CodeRequest):
    f = field_of_size(req.q)
    a, b = req.a, req.b
    if req.basis == "sigma":
        a, b = hz.sf_from_sigma(a, b, req.e)
    builders = {
        "projective": hz.code_projective,
        "affine": hz.code_affine,
        "dual-projective": hz.dual_projective_explicit,
        "dual-affine": hz.dual_affine_explicit,
    }
    code = builders[req.variant](f, req.e, a, b)
    fk = fd = None
    try:
        if req.variant == "projective":
            fk = hz.dim_formula(req.q, req.e, a, b)
            fd = hz.min_distance_formula(req.q, req.e, a, b)
        elif req.variant == "affine":
            fk = hz.affine_dim_formula(req.q, req.e, a, b)
            fd = hz.affine_min_distance_formula(req.q, req.e, a, b)
    except HypothesisViolated:
        pass
    return CodeResponse(
        q=req.q, n=code.n, k=code.k, matrix=matrix_to_text(f, code.gen),
        formula_k=fk, formula_d=fd,
    )


def _build_params(req: ParamsRequest) -> ParamsResponse:
    q, e, a, b = req.q, req.e, req.a, req.b
    resp = ParamsResponse(n_projective=(q + 1) ** 2, n_affine=q * q)
    try:
        resp.dim = hz.dim_formula(q, e, a, b)
        resp.min_distance = hz.min_distance_formula(q, e, a, b)
        resp.kernel_dims = list(hz.kernel_dims(q, e, a, b))
    except HypothesisViolated:
        pass
    try:
        resp.affine_dim = hz.affine_dim_formula(q, e, a, b)
        resp.affine_min_distance = hz.affine_min_distance_formula(q, e, a, b)
    except HypothesisViolated:
        pass
    try:
        resp.dual_distance_bounds = list(hz.dual_distance_bounds(q, e, a, b))
    except HypothesisViolated:
        pass
    return resp


def _build_css(req: CssRequest) -> dict:
    f = field_of_size(req.q)
    kw = dict(budget=req.budget, seed=req.seed)
    if req.construction == "max":
        code = css_mod.css_max(f, req.e, _need(req.m, "m"), **kw)
        return code.to_record()
    if req.construction == "simplified":
        code, paper_k, computed_k = css_mod.css_injective_simplified(
            f, req.e, _need(req.m, "m"), **kw
        )
        rec = code.to_record()
        rec["paper_k"] = paper_k
        rec["computed_k"] = computed_k
        return rec
    p1 = (_need(req.a1, "a1"), _need(req.b1, "b1"))
    p2 = (_need(req.a2, "a2"), _need(req.b2, "b2"))
    builder = css_mod.css_injective if req.construction == "injective" else css_mod.css_orthogonal
    return builder(f, req.e, p1, p2, **kw).to_record()


def _need(value, name):
    if value is None:
        raise HypothesisViolated(f"construction requires parameter {name}")
    return value


_SUITES = {
    "constructions": lambda req: verify_mod.sweep_constructions(req.q_list, req.e_list),
    "formulas": lambda req: verify_mod.sweep_formulas(req.q_list, req.e_list, req.budget),
    "duals": lambda req: verify_mod.sweep_duals(req.q_list, req.e_list),
    "dual_distance": lambda req: verify_mod.sweep_dual_distance(
        tuple(q for q in req.q_list if q >= 3) or (3,), (2,), req.budget
    ),
    "prs": lambda req: verify_mod.sweep_prs(req.q_list),
    "rm": lambda req: verify_mod.sweep_rm(tuple(q for q in req.q_list if q <= 4) or (2,), req.budget),
    "warm": lambda req: verify_mod.sweep_warm(
        tuple(q for q in req.q_list if q in (3, 4)) or (3,), (1, 2)
    ),
    "check_product": lambda req: verify_mod.sweep_check_product(
        tuple(q for q in req.q_list if q <= 4) or (2,), req.budget
    ),
    "multipliers": lambda req: verify_mod.sweep_multipliers(
        tuple(q for q in req.q_list if q >= 3) or (3,),
        tuple(e for e in req.e_list if e in (1, 2)) or (1,),
        req.seed,
    ),
    "css": lambda req: verify_mod.sweep_css(
        tuple(q for q in req.q_list if q >= 4) or (4,), (2,), req.seed, req.budget
    ),
}


def create_app() -> FastAPI:
    app = FastAPI(title="hirzcodes", version="0.1.0")

    @app.exception_handler(HirzcodesError)
    async def _domain_error(_request, exc: HirzcodesError):
        return JSONResponse(
            status_code=422,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/code", response_model=CodeResponse)
    def code(req: CodeRequest):
        return _build_code(req)

    @app.post("/params", response_model=ParamsResponse)
    def params(req: ParamsRequest):
        return _build_params(req)

    @app.post("/css")
    def css(req: CssRequest):
        return _build_css(req)

    @app.post("/verify")
    def verify(req: VerifyRequest):
        if req.suites:
            rows = []
            for name in req.suites:
                if name not in _SUITES:
                    raise HypothesisViolated(f"unknown suite {name!r}")
                rows.extend(_SUITES[name](req))
        else:
            rows = verify_mod.run_all(tuple(req.q_list), tuple(req.e_list), req.seed, req.budget)
        failed = verify_mod.failures(rows)
        return {
            "rows": [vars(r) for r in rows],
            "total": len(rows),
            "failed": len(failed),
            "skipped": sum(1 for r in rows if r.status == "skip"),
            "absent": sum(1 for r in rows if r.status == "absent"),
        }

    return app


app = create_app()
