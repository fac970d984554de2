"""One pure function per service operation: request model in, response
model out.  Domain violations surface as the library's ValueError
subclasses; the HTTP app and the CLI translate them uniformly."""

from __future__ import annotations

import math

from .. import aps, bridge, sta, transforms
from ..kernel import AlgebraMismatchError, gp, grade_involute, reverse
from . import models


def _require_algebra(doc: models.MvDoc, algebra: str, what: str) -> None:
    if doc.algebra != algebra:
        raise AlgebraMismatchError(f"{what} must be in the {algebra!r} algebra")


def _frame(observer: models.MvDoc | None, tol: float) -> sta.ObserverFrame:
    """Observer frame from an sta rotor document; defaults to the fiducial frame."""
    if observer is None:
        return sta.FIDUCIAL
    _require_algebra(observer, "sta", "observer rotor")
    return sta.ObserverFrame(sta.StaRotor(observer.to_mv(), tol))


def product(req: models.ProductRequest) -> models.ProductResponse:
    result = gp(req.lhs.to_mv(), req.rhs.to_mv())
    return models.ProductResponse(result=models.MvDoc.from_mv(result))


def conjugate(req: models.ConjRequest) -> models.ConjResponse:
    mv = req.subject.to_mv()
    defect = None
    if req.kind == "reverse":
        out = reverse(mv)
    elif req.kind == "bar":
        out = grade_involute(reverse(mv))
    elif req.subject.algebra == "aps":
        out = aps.dagger(mv)
    else:
        frame = _frame(req.observer, req.tol)
        defect = frame.rotor.defect if req.observer is not None else None
        out = sta.hermitian_conjugate(mv, frame)
    return models.ConjResponse(result=models.MvDoc.from_mv(out), observer_defect=defect)


def split(req: models.SplitRequest) -> models.SplitResponse:
    mv = req.subject.to_mv()
    if req.kind == "hermitian":
        _require_algebra(req.subject, "aps", "hermitian split subject")
        real, imag = aps.split_hermitian(mv)
        parts = {"real": models.MvDoc.from_mv(real), "imag": models.MvDoc.from_mv(imag)}
        return models.SplitResponse(kind=req.kind, parts=parts)
    if req.kind == "bar":
        _require_algebra(req.subject, "aps", "scalarlike/vectorlike split subject")
        s, v = aps.split_bar(mv)
        parts = {"scalarlike": models.MvDoc.from_mv(s), "vectorlike": models.MvDoc.from_mv(v)}
        return models.SplitResponse(kind=req.kind, parts=parts)
    _require_algebra(req.subject, "sta", "space-time split subject")
    frame = _frame(req.observer, req.tol)
    t, rel = sta.spacetime_split(mv, frame)
    return models.SplitResponse(
        kind=req.kind,
        parts={"relative": models.MvDoc.from_mv(rel)},
        time=t,
        observer_defect=frame.rotor.defect if req.observer is not None else None,
    )


def boost(req: models.BoostRequest) -> models.BoostResponse:
    if req.velocity is not None:
        rotor = aps.boost_rotor(req.velocity)
        speed = math.hypot(*req.velocity)
        rapidity = math.atanh(speed)
    else:
        rotor = aps.boost_rotor_rapidity(req.rapidity, req.direction)
        rapidity = abs(req.rapidity)
        speed = math.tanh(rapidity)
    return models.BoostResponse(
        rotor=models.MvDoc.from_mv(rotor.mv),
        gamma=math.cosh(rapidity),
        speed=speed,
        rapidity=rapidity,
    )


def rotor_exp(req: models.RotorExpRequest) -> models.RotorExpResponse:
    _require_algebra(req.generator, "aps", "rotor generator")
    w = aps.Biparavector.from_mv(req.generator.to_mv())
    rotor = aps.rotor_exp(w, req.tol)
    return models.RotorExpResponse(
        rotor=models.MvDoc.from_mv(rotor.mv), unimodularity_defect=rotor.defect
    )


def factor(req: models.FactorRequest) -> models.FactorResponse:
    _require_algebra(req.rotor, "aps", "rotor")
    rotor = aps.as_rotor(req.rotor.to_mv(), req.tol)
    b, r = aps.factor_boost_rotation(rotor)
    return models.FactorResponse(
        boost=models.MvDoc.from_mv(b.mv),
        rotation=models.MvDoc.from_mv(r.mv),
        unimodularity_defect=rotor.defect,
    )


def transform(req: models.TransformRequest) -> models.TransformResponse:
    _require_algebra(req.subject, "aps", "transform subject")
    _require_algebra(req.rotor, "aps", "rotor")
    rotor = aps.as_rotor(req.rotor.to_mv(), req.tol)
    mode = transforms.TransformMode(req.mode)
    if req.kind == "paravector":
        r = aps.Paravector.from_mv(req.subject.to_mv())
        out = transforms.transform_measurables(r, rotor, mode).as_mv()
    else:
        f = aps.Biparavector.from_mv(req.subject.to_mv())
        out = transforms.transform_field(f, rotor, mode).as_mv()
    return models.TransformResponse(
        result=models.MvDoc.from_mv(out), mode=req.mode, unimodularity_defect=rotor.defect
    )


def map_algebra(req: models.MapRequest) -> models.MapResponse:
    # one gate for both checks: observer-rotor unimodularity and even content
    frame = _frame(req.observer, req.tol)
    if req.direction == "aps-to-sta":
        _require_algebra(req.subject, "aps", "subject")
        out = bridge.aps_to_sta(req.subject.to_mv(), frame)
    else:
        _require_algebra(req.subject, "sta", "subject")
        out = bridge.sta_even_to_aps(req.subject.to_mv(), frame, req.tol)
    return models.MapResponse(
        result=models.MvDoc.from_mv(out),
        direction=req.direction,
        observer_defect=frame.rotor.defect if req.observer is not None else None,
    )


def field_split(req: models.FieldSplitRequest) -> models.FieldSplitResponse:
    _require_algebra(req.subject, "aps", "field")
    f = aps.Biparavector.from_mv(req.subject.to_mv())
    e, b = transforms.field_split(f)
    return models.FieldSplitResponse(electric=tuple(e), magnetic=tuple(b))
