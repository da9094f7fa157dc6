"""FastAPI application exposing the lattice computations.

Domain errors map to HTTP 400 with kind "input", enumeration capacity
overruns to HTTP 413 with kind "capacity"; clients key their exit codes
off the kind, not the status.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import analytic, gts
from ..codes import LinearCode, construction_a
from ..dsp import is_stable, norm_hierarchy
from ..enumerate import theta_spectrum
from ..errors import CapacityError, DomainError
from ..exact import format_rational, parse_rational
from ..lattice import QuadraticLattice
from ..paper_repro import run_report
from ..registry import code_labels, get_code, get_lattice, lattice_labels
from . import schemas

app = FastAPI(title="latheta", version="0.1.0")


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError):
    return JSONResponse(
        status_code=400,
        content={"error": {"kind": "input", "message": str(exc)}},
    )


@app.exception_handler(CapacityError)
async def _capacity_error(request: Request, exc: CapacityError):
    return JSONResponse(
        status_code=413,
        content={"error": {"kind": "capacity", "message": str(exc)}},
    )


def _lattice(ref: schemas.LatticeRef) -> QuadraticLattice:
    if ref.label is not None:
        return get_lattice(ref.label)
    return QuadraticLattice.from_json(ref.lattice.model_dump())


def _code(ref: schemas.CodeRef) -> LinearCode:
    if ref.label is not None:
        return get_code(ref.label)
    return LinearCode.from_json(ref.code.model_dump())


@app.get("/registry")
def registry():
    return {"lattices": lattice_labels(), "codes": code_labels()}


@app.post("/theta")
def theta(req: schemas.ThetaRequest):
    lat = _lattice(req)
    spec = theta_spectrum(lat, parse_rational(req.bound))
    return {"label": lat.label, "dim": lat.dim, **spec.to_json()}


@app.post("/gts")
def gts_endpoint(req: schemas.GtsRequest):
    lat = _lattice(req)
    series = gts.generalized_theta(lat, req.r, req.m_max)
    return {"label": lat.label, "dim": lat.dim, **series.to_json()}


@app.post("/norms")
def norms(req: schemas.NormsRequest):
    lat = _lattice(req)
    h = norm_hierarchy(lat)
    return {"label": lat.label, "dim": lat.dim, **h.to_json()}


@app.post("/stable")
def stable(req: schemas.StableRequest):
    lat = _lattice(req)
    return {"label": lat.label, "dim": lat.dim, **is_stable(lat).to_json()}


@app.post("/ratio", response_model=schemas.RatioResponse)
def ratio(req: schemas.RatioRequest):
    lat = _lattice(req)
    if req.scan:
        points = analytic.ratio_scan(
            lat, req.tau_min, req.tau_max, req.points, tol=req.tol
        )
        return schemas.RatioResponse(
            dim=lat.dim,
            scan=[schemas.ScanPoint(tau=t, delta=d) for t, d in points],
        )
    if req.tau is None:
        raise DomainError("provide 'tau' for a point value or set 'scan'")
    return schemas.RatioResponse(
        dim=lat.dim, tau=req.tau,
        delta=analytic.ratio(lat, req.tau, tol=req.tol),
    )


@app.post("/symmetry", response_model=schemas.SymmetryResponse)
def symmetry(req: schemas.SymmetryRequest):
    lat = _lattice(req)
    res = analytic.symmetry_check(lat, req.tau0, req.taus, tol=req.tol)
    return schemas.SymmetryResponse(
        tau0=res["tau0"],
        max_deviation=res["max_deviation"],
        symmetric=res["symmetric"],
        pairs=[
            schemas.SymmetryPair(t=t, delta_up=a, delta_down=b, deviation=d)
            for t, a, b, d in res["pairs"]
        ],
    )


@app.post("/ghw", response_model=schemas.GhwResponse)
def ghw(req: schemas.GhwRequest):
    code = _code(req)
    if req.r is not None:
        return schemas.GhwResponse(
            label=code.label, k=code.k, r=req.r,
            value=code.generalized_hamming_weight(req.r),
        )
    return schemas.GhwResponse(
        label=code.label, k=code.k,
        hierarchy=list(code.weight_hierarchy().values),
    )


@app.post("/constructa", response_model=schemas.ConstructaResponse)
def constructa(req: schemas.ConstructaRequest):
    code = _code(req)
    lat = construction_a(code)
    return schemas.ConstructaResponse(
        lattice=schemas.LatticeJson(**lat.to_json()),
        volume_sq=format_rational(lat.volume_sq()),
    )


@app.post("/paper-repro")
def paper_repro(req: schemas.PaperReproRequest):
    return run_report(strict_gts_example3=req.strict_gts_example3)
