"""HTTP service wrapping the evaluation pipeline.

Request handlers are plain functions over pydantic models so the CLI can
invoke them in-process; the FastAPI routes are thin wrappers.  All numeric
payload fields travel as decimal strings (fractions like "2/3" accepted on
input) so no precision is lost to binary floats in transit.
"""

from __future__ import annotations

import os
from typing import List, Optional

import mpmath as mp
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .errors import (ConvergenceError, DomainError, LerchStokesError,
                     PoleError, PrecisionError, TailError)
from .expansion import (ExpansionBreakdown, TruncationSchedule,
                        exp_improved_eval, poincare_expand)
from .mpcore import PrecisionContext, to_mpf
from .oracle import LerchParams, lerch_reference
from .stokes import (StokesSample, stokes_erf_approx, stokes_multiplier,
                     stokes_table)

DIGITS_ENV = "LERCH_DIGITS"


def default_digits() -> int:
    return int(os.environ.get(DIGITS_ENV, "50"))


class ParamsRequest(BaseModel):
    """Common (lam, a, s, precision) block; numbers as decimal strings or
    simple fractions."""

    lam: str = Field("1", description='lambda in (0,1], e.g. "2/3"')
    a_mod: str = Field(..., description="|a| > 0")
    theta_over_pi: str = Field("0", description="arg(a)/pi in (-1, 1)")
    s_re: str = "4"
    s_im: str = "0"
    digits: Optional[int] = None

    def context(self) -> PrecisionContext:
        return PrecisionContext(digits=self.digits or default_digits())

    def params(self, ctx: PrecisionContext) -> LerchParams:
        with ctx.workdps():
            s = mp.mpc(to_mpf(self.s_re, ctx), to_mpf(self.s_im, ctx))
        return LerchParams.from_polar(self.lam, self.a_mod,
                                      self.theta_over_pi, s, ctx)


class ScheduleModel(BaseModel):
    N: List[int]
    Nprime: List[int]

    def schedule(self) -> TruncationSchedule:
        return TruncationSchedule(tuple(self.N), tuple(self.Nprime))


class ValueResponse(BaseModel):
    re: str
    im: str
    digits: int


class EvalRequest(ParamsRequest):
    pass


class PoincareRequest(ParamsRequest):
    k_terms: int = 5


class PoincareResponse(BaseModel):
    partial: ValueResponse
    terms: List[ValueResponse]


class ImprovedRequest(ParamsRequest):
    schedule: Optional[ScheduleModel] = None
    breakdown: bool = False


class ImprovedResponse(BaseModel):
    total: ValueResponse
    schedule: ScheduleModel
    breakdown: Optional[dict] = None


class StokesRequest(ParamsRequest):
    n: int = 0
    schedule: Optional[ScheduleModel] = None


class StokesResponse(BaseModel):
    n: int
    theta_over_pi: str
    re_S: str
    im_S: str
    approx: float
    side: str


class TableRequest(ParamsRequest):
    n: int = 0
    theta_grid_over_pi: List[str] = Field(default_factory=list)
    schedule: Optional[ScheduleModel] = None


class TableRow(BaseModel):
    theta_over_pi: str
    re_S: Optional[str]
    im_S: Optional[str]
    approx: Optional[str]
    side: str
    n: int
    error: Optional[str] = None


class TableResponse(BaseModel):
    rows: List[TableRow]
    digits: int


def _value(x, ctx: PrecisionContext) -> ValueResponse:
    with ctx.workdps():
        return ValueResponse(re=mp.nstr(mp.re(x), ctx.digits),
                             im=mp.nstr(mp.im(x), ctx.digits),
                             digits=ctx.digits)


def _schedule_for(req, p: LerchParams, ctx: PrecisionContext,
                  min_m: int = 0) -> TruncationSchedule:
    if req.schedule is not None:
        return req.schedule.schedule()
    return TruncationSchedule.optimal(p, ctx, m_max=None if min_m == 0
                                      else max(min_m, 2))


def handle_eval(req: EvalRequest) -> ValueResponse:
    ctx = req.context()
    p = req.params(ctx)
    return _value(lerch_reference(p, ctx), ctx)


def handle_poincare(req: PoincareRequest) -> PoincareResponse:
    ctx = req.context()
    p = req.params(ctx)
    total, terms = poincare_expand(p, req.k_terms, ctx)
    return PoincareResponse(partial=_value(total, ctx),
                            terms=[_value(t, ctx) for t in terms])


def handle_improved(req: ImprovedRequest) -> ImprovedResponse:
    ctx = req.context()
    p = req.params(ctx)
    sch = _schedule_for(req, p, ctx)
    bd = exp_improved_eval(p, sch, ctx)
    return ImprovedResponse(
        total=_value(bd.total, ctx),
        schedule=ScheduleModel(N=list(sch.N), Nprime=list(sch.Nprime)),
        breakdown=bd.to_json_dict() if req.breakdown else None)


def handle_stokes(req: StokesRequest) -> StokesResponse:
    ctx = req.context()
    p = req.params(ctx)
    sch = _schedule_for(req, p, ctx, min_m=req.n)
    s_val = stokes_multiplier(req.n, p, sch, ctx)
    with ctx.workdps():
        theta = p.theta
        approx = stokes_erf_approx(req.n, theta, abs(p.a), p.lam)
        side = "upper" if theta > 0 else "lower"
        return StokesResponse(n=req.n,
                              theta_over_pi=mp.nstr(theta / mp.pi, 12),
                              re_S=mp.nstr(mp.re(s_val), ctx.digits),
                              im_S=mp.nstr(mp.im(s_val), ctx.digits),
                              approx=approx, side=side)


def handle_table(req: TableRequest) -> TableResponse:
    ctx = req.context()
    if not req.theta_grid_over_pi:
        return TableResponse(rows=[], digits=ctx.digits)
    template = req.params(ctx)
    sch = _schedule_for(req, template, ctx, min_m=req.n)
    with ctx.workdps():
        grid = [to_mpf(t, ctx) * mp.pi for t in req.theta_grid_over_pi]
    samples = stokes_table(req.n, template, grid, sch, ctx)
    rows = [TableRow(**s.row(ctx.digits)) for s in samples]
    return TableResponse(rows=rows, digits=ctx.digits)


app = FastAPI(title="lerchstokes",
              description="Lerch zeta evaluation, exponentially improved "
                          "expansions, and Stokes multiplier extraction")

_HTTP_BAD_REQUEST = (DomainError, PoleError)
_HTTP_UNPROCESSABLE = (PrecisionError, TailError, ConvergenceError)


def _run(handler, req):
    try:
        return handler(req)
    except _HTTP_BAD_REQUEST as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except _HTTP_UNPROCESSABLE as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok", "default_digits": default_digits()}


@app.post("/eval", response_model=ValueResponse)
def eval_endpoint(req: EvalRequest):
    return _run(handle_eval, req)


@app.post("/poincare", response_model=PoincareResponse)
def poincare_endpoint(req: PoincareRequest):
    return _run(handle_poincare, req)


@app.post("/improved", response_model=ImprovedResponse)
def improved_endpoint(req: ImprovedRequest):
    return _run(handle_improved, req)


@app.post("/stokes", response_model=StokesResponse)
def stokes_endpoint(req: StokesRequest):
    return _run(handle_stokes, req)


@app.post("/table", response_model=TableResponse)
def table_endpoint(req: TableRequest):
    return _run(handle_table, req)
