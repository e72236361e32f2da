"""
JSON payloads: pydantic models plus conversion to and from engine objects.

Points are {"blob": "2'"}, {"seg": 1, "pos": -3} (a primed segment is written
"1'") or {"marker": 2}; arcs are two-element lists of points. Every loader
raises SchemaError with the offending location.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..common.app_config import get_output_config
from .arcsets import FinArcSet, SlotRect, SymArcSet, normalize
from .errors import ContractViolation, SchemaError
from .gon_model import AccLabel, Arc, Blob, ExtPoint, GonConfig, Marker, Model, Point, make_arc
from .ncp import (
    AltNcp, Decoration, HalfDecNcp, NcPartition,
    alt_element, hd_element, make_alt, make_hd,
)

# Initialize logger for this module
logger = logging.getLogger("schemas")

LabelValue = Union[int, str]


# --- Pydantic models ----------------------------------------------------------

class PointModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    blob: Optional[LabelValue] = None
    seg: Optional[LabelValue] = None
    pos: Optional[int] = None
    marker: Optional[LabelValue] = None

    @model_validator(mode="after")
    def one_form(self) -> "PointModel":
        forms = [self.blob is not None, self.seg is not None, self.marker is not None]
        if sum(forms) != 1:
            raise ValueError("exactly one of 'blob', 'seg', 'marker' is required")
        if (self.seg is not None) != (self.pos is not None):
            raise ValueError("'seg' and 'pos' go together")
        return self


class ArcModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ends: List[PointModel] = Field(min_length=2, max_length=2)


class AxisModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seg: LabelValue
    lo: Optional[int] = None
    hi: Optional[int] = None


class RectModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    first: AxisModel = Field(alias="I")
    second: AxisModel = Field(alias="J")


class SymArcSetModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: Model
    rects: List[RectModel] = []


class FinArcSetModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: Model = Model.BAR
    W: int = Field(ge=0)
    arcs: List[List[PointModel]] = []


class PartitionModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int = Field(ge=1)
    blocks: List[List[int]]


class DecoratedPartitionModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: str = Field(pattern="^(hd|alt)$")
    m: int = Field(ge=1)
    blocks: List[List[LabelValue]]
    decor: Dict[str, Dict[str, Any]]


class FailureModel(BaseModel):
    instance: str
    witness: str


class ReportModel(BaseModel):
    suite: str
    checked: int = Field(ge=0)
    failures: List[FailureModel] = []
    passed: bool
    details: Dict[str, Any] = {}


# --- Helpers ------------------------------------------------------------------

def _location(err: ValidationError) -> str:
    first = err.errors()[0]
    return "/".join(str(part) for part in first.get("loc", ())) or "<root>"


def _validate(model_cls, data: Any, where: str):
    try:
        return model_cls.model_validate(data)
    except ValidationError as e:
        raise SchemaError(f"Invalid {where}: {e.errors()[0]['msg']}", f"{where}/{_location(e)}") from e


def load_payload(text: str) -> Dict[str, Any]:
    """Parse JSON text, reporting line and column on failure."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"Malformed JSON: {e.msg}", f"line {e.lineno}, column {e.colno}") from e
    if not isinstance(data, dict):
        raise SchemaError("Top-level JSON value must be an object", "<root>")
    return data


def dumps(data: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(data, indent=get_output_config()["indent"], sort_keys=True, ensure_ascii=False)


def _label(value: LabelValue, where: str) -> AccLabel:
    try:
        return AccLabel.parse(value)
    except ContractViolation as e:
        raise SchemaError(str(e), where) from e


# --- Points and arcs ----------------------------------------------------------

def point_to_dict(tok: ExtPoint) -> Dict[str, Any]:
    if isinstance(tok, Blob):
        return {"blob": str(tok.label)}
    if isinstance(tok, Marker):
        return {"marker": str(tok.label)}
    seg = str(tok.segment) if tok.segment.primed else tok.segment.index
    return {"seg": seg, "pos": tok.pos}


def _point_from_model(pm: PointModel, where: str) -> ExtPoint:
    if pm.blob is not None:
        label = _label(pm.blob, where)
        if isinstance(pm.blob, int):
            label = AccLabel(label.index, True)
        try:
            return Blob(label)
        except ContractViolation as e:
            raise SchemaError(str(e), where) from e
    if pm.marker is not None:
        return Marker(_label(pm.marker, where))
    return Point(_label(pm.seg, where), pm.pos)


def point_from_dict(data: Any) -> ExtPoint:
    return _point_from_model(_validate(PointModel, data, "point"), "point")


def arc_to_list(arc: Arc) -> List[Dict[str, Any]]:
    return [point_to_dict(arc.x1), point_to_dict(arc.x2)]


def _arc_from_models(cfg: GonConfig, ends: List[PointModel], model: Model, where: str) -> Arc:
    u, v = (_point_from_model(pm, where) for pm in ends)
    try:
        return make_arc(cfg, u, v, model)
    except ContractViolation as e:
        raise SchemaError(str(e), where) from e


def arc_from_list(cfg: GonConfig, data: Any, model: Model) -> Arc:
    arc_model = _validate(ArcModel, {"ends": data}, "arc")
    return _arc_from_models(cfg, arc_model.ends, model, "arc")


# --- Arc sets -----------------------------------------------------------------

def _axis_to_dict(slot: int, lo: Optional[int], hi: Optional[int]) -> Dict[str, Any]:
    label = AccLabel.from_slot(slot)
    return {"seg": str(label) if label.primed else label.index, "lo": lo, "hi": hi}


def symset_to_dict(S: SymArcSet) -> Dict[str, Any]:
    return {
        "model": S.model.value,
        "rects": [{"I": _axis_to_dict(r.s1, r.lo1, r.hi1), "J": _axis_to_dict(r.s2, r.lo2, r.hi2)}
                  for r in S.rects],
    }


def symset_from_dict(cfg: GonConfig, data: Any) -> SymArcSet:
    sm = _validate(SymArcSetModel, data, "arcset")
    rects = []
    for n, rm in enumerate(sm.rects):
        where = f"arcset/rects/{n}"
        l1, l2 = _label(rm.first.seg, where), _label(rm.second.seg, where)
        for label in (l1, l2):
            if not 1 <= label.index <= cfg.m:
                raise SchemaError(f"Label {label} out of range for m={cfg.m}", where)
        first, second = (l1, rm.first), (l2, rm.second)
        if first[0].slot > second[0].slot:
            first, second = second, first
        rects.append(SlotRect(first[0].slot, first[1].lo, first[1].hi,
                              second[0].slot, second[1].lo, second[1].hi))
    return normalize(cfg, sm.model, rects)


def finset_to_dict(F: FinArcSet, model: Model = Model.BAR) -> Dict[str, Any]:
    return {"model": model.value, "W": F.W, "arcs": [arc_to_list(a) for a in F.sorted_arcs()]}


def finset_from_dict(cfg: GonConfig, data: Any) -> FinArcSet:
    fm = _validate(FinArcSetModel, data, "finset")
    arcs = frozenset(_arc_from_models(cfg, ends, fm.model, f"finset/arcs/{n}")
                     for n, ends in enumerate(fm.arcs))
    return FinArcSet(fm.W, arcs)


# --- Partitions ---------------------------------------------------------------

def partition_to_dict(P: NcPartition) -> Dict[str, Any]:
    return {"k": P.k, "blocks": [list(b) for b in P.blocks]}


def partition_from_dict(data: Any) -> NcPartition:
    pm = _validate(PartitionModel, data, "partition")
    try:
        return NcPartition.of(pm.k, pm.blocks)
    except ContractViolation as e:
        raise SchemaError(str(e), "partition/blocks") from e


def decoration_to_dict(cfg: GonConfig, index: int, x: Decoration) -> Dict[str, Any]:
    if x.is_marker:
        return {"marker": index}
    if x.is_accend:
        return {"accend": str(cfg.succ(AccLabel(index, False)))}
    return {"seg": index, "pos": x.pos}


def decorated_to_dict(cfg: GonConfig, datum: Union[HalfDecNcp, AltNcp]) -> Dict[str, Any]:
    kind = "hd" if isinstance(datum, HalfDecNcp) else "alt"
    return {
        "kind": kind,
        "m": cfg.m,
        "blocks": [[str(label) for label in block] for block in datum.block_labels()],
        "decor": {str(i): decoration_to_dict(cfg, i, x) for i, x in enumerate(datum.X, start=1)},
    }


def _decoration_from_dict(cfg: GonConfig, index: int, raw: Any) -> Decoration:
    where = f"decor/{index}"
    if not isinstance(raw, dict):
        raise SchemaError("Decoration must be an object", where)
    if set(raw) == {"accend"}:
        expected = cfg.succ(AccLabel(index, False))
        if _label(raw["accend"], where) != expected:
            raise SchemaError(f"x_{index} may only end at {expected}", where)
        return Decoration.accend()
    tok = _point_from_model(_validate(PointModel, raw, where), where)
    if isinstance(tok, Marker) and tok.label == AccLabel(index, False):
        return Decoration.marker()
    if isinstance(tok, Point) and tok.segment == AccLabel(index, False):
        return Decoration.reg(tok.pos)
    raise SchemaError(f"x_{index} must lie on segment {index}", where)


def decorated_from_dict(cfg: GonConfig, data: Any) -> Union[HalfDecNcp, AltNcp]:
    dm = _validate(DecoratedPartitionModel, data, "decorated")
    if dm.m != cfg.m:
        raise SchemaError(f"Payload is for m={dm.m}, engine runs m={cfg.m}", "decorated/m")
    hd = dm.kind == "hd"
    k = 2 * cfg.m if hd else cfg.m
    blocks = []
    for n, block in enumerate(dm.blocks):
        elements = []
        for entry in block:
            if isinstance(entry, int):
                elements.append(entry)
                continue
            label = _label(entry, f"decorated/blocks/{n}")
            try:
                elements.append(hd_element(label) if hd else alt_element(label))
            except ContractViolation as e:
                raise SchemaError(str(e), f"decorated/blocks/{n}") from e
        blocks.append(elements)
    if set(dm.decor) != {str(i) for i in range(1, cfg.m + 1)}:
        raise SchemaError(f"decor needs keys 1..{cfg.m}", "decorated/decor")
    X = [_decoration_from_dict(cfg, i, dm.decor[str(i)]) for i in range(1, cfg.m + 1)]
    try:
        P = NcPartition.of(k, blocks)
        return make_hd(cfg, P, X) if hd else make_alt(cfg, P, X)
    except ContractViolation as e:
        raise SchemaError(str(e), "decorated") from e
