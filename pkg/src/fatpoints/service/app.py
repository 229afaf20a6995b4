"""FastAPI application wrapping the engine.

Every endpoint is a stateless wrapper: requests resolve to core objects,
domain errors map to 400 responses with the original message.
"""

from __future__ import annotations

from fastapi import FastAPI

from .. import catalog, configtype, conic, hilbert, represent, tables, zariski
from ..errors import FatPointsError
from ..geometry import PointSet, hilbert_oracle, identify_type, linear_system_dim
from ..lattice import DivisorClass
from ..negcompletion import complete
from .models import (CanonRequest, CanonResponse, CatalogResponse,
                     ConicRequest, ConicResponse, ConicTypesResponse,
                     ExtremalRequest, ExtremalResponse, HilbertRequest,
                     HilbertResponse, IdentifyResponse, OracleRequest,
                     OracleResponse, PointsPayload, RepresentResponse,
                     TableResponse, TypeListResponse, TypeRecord, TypeSpec,
                     UniformRequest, UniformResponse, ZariskiRequest,
                     ZariskiResponse)


def _resolve_type(spec: TypeSpec) -> configtype.ConfigurationType:
    if spec.index is not None:
        if spec.mode != "eight_points":
            raise FatPointsError("table indices refer to eight-point types")
        return configtype.builtin(spec.r, spec.index)
    if spec.notation is not None:
        t = configtype.parse_notation(spec.notation, spec.r)
        if spec.mode == "conic":
            t = configtype.validate(t.neg_classes, spec.r, mode="conic")
        return t
    classes = [DivisorClass.from_json(v) for v in spec.classes]
    return configtype.validate(classes, spec.r, mode=spec.mode)


def _type_record(t: configtype.ConfigurationType) -> TypeRecord:
    return TypeRecord(
        r=t.r, mode=t.mode,
        index=t.table_id[1] if t.table_id else None,
        notation=t.notation if t.r <= 8 else None,
        classes=[c.to_json() for c in t.sorted_classes],
        canonical_key=t.canonical_key.hex())


def _points(payload: PointsPayload) -> PointSet:
    return PointSet.from_json(payload.model_dump())


def create_app() -> FastAPI:
    app = FastAPI(title="fatpoints",
                  description="Configuration types of plane point sets and "
                              "Hilbert functions of fat point subschemes")

    @app.exception_handler(FatPointsError)
    async def _domain_error(request, exc):
        from fastapi.responses import JSONResponse
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health():
        from .. import __version__
        return {"status": "ok", "version": __version__}

    @app.get("/types/{r}", response_model=TypeListResponse)
    def list_types(r: int, line_classes_only: bool = False):
        ts = configtype.enumerate_types(r, line_classes_only=line_classes_only)
        return TypeListResponse(r=r, count=len(ts),
                                types=[_type_record(t) for t in ts])

    @app.get("/types/{r}/{index}", response_model=TypeRecord)
    def get_type(r: int, index: int):
        return _type_record(configtype.builtin(r, index))

    @app.post("/types/canon", response_model=CanonResponse)
    def canon(req: CanonRequest):
        t = _resolve_type(req.type)
        match = None
        if t.mode == "eight_points":
            match = configtype.lookup_by_key(t.canonical_key, t.r)
        return CanonResponse(
            canonical_key=t.canonical_key.hex(),
            matched_index=match.table_id[1] if match else None,
            notation=match.notation if match else None)

    @app.post("/hilbert", response_model=HilbertResponse)
    def hilbert_endpoint(req: HilbertRequest):
        t = _resolve_type(req.type)
        rep = hilbert.hilbert_function(t, req.mults, betti=req.betti)
        return HilbertResponse(
            r=t.r, index=t.table_id[1] if t.table_id else None,
            mults=list(rep.mults), degree=rep.degree,
            saturation=rep.saturation, values=list(rep.values),
            delta=list(rep.delta),
            betti_f0=rep.betti_f0, betti_f1=rep.betti_f1)

    @app.post("/zariski", response_model=ZariskiResponse)
    def zariski_endpoint(req: ZariskiRequest):
        t = _resolve_type(req.type)
        f = DivisorClass.from_json(req.class_vector)
        neg = complete(t)
        res = zariski.decompose(f, neg)
        return ZariskiResponse(
            input=f.to_json(), effective=res.effective, h0=res.h0,
            nef_part=res.nef_part.to_json() if res.nef_part else None,
            fixed_part=[(c.to_json(), k) for c, k in res.fixed_part],
            negative_classes=len(neg))

    @app.get("/conic/types/{r}", response_model=ConicTypesResponse)
    def conic_types(r: int):
        return ConicTypesResponse(
            r=r, cases=[c.to_json() for c in conic.enumerate_conic_types(r)])

    @app.post("/conic", response_model=ConicResponse)
    def conic_endpoint(req: ConicRequest):
        case = conic.ConicCase(req.case, req.r, req.a, req.b, req.eps)
        t = conic.conic_neg(case)
        rep = hilbert.hilbert_function(t, (req.m,) * req.r)
        closed = agrees = None
        if req.compare_closed_form:
            closed = list(conic.delta_h_closed_form(case, req.m))
            agrees = list(rep.delta) == closed
        return ConicResponse(
            case=case.to_json(),
            classes=[c.to_json() for c in t.sorted_classes],
            values=list(rep.values), delta=list(rep.delta),
            degree=rep.degree, closed_form=closed, agrees=agrees)

    @app.post("/identify", response_model=IdentifyResponse)
    def identify(payload: PointsPayload):
        pts = _points(payload)
        r, index, perm = identify_type(pts)
        t = configtype.builtin(r, index)
        return IdentifyResponse(r=r, index=index, notation=t.notation,
                                permutation=list(perm),
                                classes=[c.to_json() for c in t.sorted_classes])

    @app.post("/oracle", response_model=OracleResponse)
    def oracle(req: OracleRequest):
        pts = _points(req.points)
        if req.degree is not None:
            return OracleResponse(
                degree=req.degree,
                dimension=linear_system_dim(pts, req.mults, req.degree))
        rep = hilbert_oracle(pts, req.mults)
        return OracleResponse(values=list(rep.values), scheme_degree=rep.degree)

    @app.get("/represent/{r}/{index}", response_model=RepresentResponse)
    def represent_endpoint(r: int, index: int, show_torsion: bool = False):
        verdict = represent.representability(r, index)
        out = RepresentResponse(r=r, index=index, verdict=verdict.kind,
                                p=verdict.p, source=verdict.source)
        if show_torsion:
            try:
                group = represent.torsion(configtype.builtin(r, index))
                out.invariant_factors = list(group.invariant_factors)
                out.free_rank = group.free_rank
            except FatPointsError as exc:
                out.torsion_error = str(exc)
        return out

    @app.post("/extremal", response_model=ExtremalResponse)
    def extremal(req: ExtremalRequest):
        rep = hilbert.extremal_double(req.hz, req.r, req.m, mode=req.mode)
        return ExtremalResponse(
            target=list(rep.target), m=rep.m,
            matching_types=list(rep.matching),
            h_max=list(rep.h_max) if rep.h_max else None,
            max_types=list(rep.max_types),
            h_min=list(rep.h_min) if rep.h_min else None,
            min_types=list(rep.min_types),
            labels=rep.labels)

    @app.post("/uniform", response_model=UniformResponse)
    def uniform(req: UniformRequest):
        rep = hilbert.uniform_partition(req.r, req.max_mult)
        return UniformResponse(r=rep.r, max_mult=rep.max_mult,
                               groups=[list(g) for g in rep.groups],
                               separating_bound=rep.bound)

    @app.get("/tables/{n}", response_model=TableResponse)
    def table(n: int):
        text, ok = tables.reproduce(n)
        return TableResponse(table=n, text=text, matches_golden=ok)

    @app.get("/catalog/{r}", response_model=CatalogResponse)
    def catalog_endpoint(r: int, mode: str = "eight_points", bound: int | None = None):
        fam = catalog.negative_candidates(r, mode)
        classes = fam.square_at_most(bound) if bound is not None else fam.classes
        return CatalogResponse(r=r, mode=mode, count=len(classes),
                               classes=[c.to_json() for c in classes])

    return app
