"""
Morphisms between indecomposables: shift, Hom-hammocks, Hom dimensions,
irreducible morphisms, Ptolemy arcs and middle terms of extensions.

All Hom spaces are at most one dimensional, so a morphism is reported only
through its dimension.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import List, Optional

from ..common.app_config import get_lift_search_radius
from .errors import ContractViolation
from .gon_model import (
    Arc, Blob, GonConfig, Interval, Model, Point,
    crosses, lift_arc, offset, project_arc, shift_point, span, try_arc,
)

# Initialize logger for this module
logger = logging.getLogger("hom_model")


class HammockKind(str, Enum):
    HPLUS = "Hplus"
    HMINUS = "Hminus"
    IPLUS = "Iplus"
    IMINUS = "Iminus"


@dataclass(frozen=True)
class Rect:
    """First-endpoint domain I times second-endpoint domain J."""
    I: Interval
    J: Interval

    def contains(self, arc: Arc) -> bool:
        return self.I.contains(arc.x1) and self.J.contains(arc.x2)

    def __str__(self) -> str:
        return f"{self.I} × {self.J}"


# --- Shift --------------------------------------------------------------------

def shift_arc(cfg: GonConfig, a: Arc, n: int) -> Arc:
    """Σⁿ(a); blobs are fixed points."""
    return Arc(shift_point(a.x1, n), shift_point(a.x2, n), a.model)


# --- Hammocks -----------------------------------------------------------------

def _up(a: Arc) -> Interval:
    return span(a.x2, True, None, True)


def hammock(cfg: GonConfig, model: Model, kind: HammockKind, a: Arc) -> Rect:
    """Hom-hammock (Hplus/Hminus) or reverse hammock (Iplus/Iminus) of a.

    Cases are selected by which endpoints of `a` are blobs. In the doubled
    gon the reverse hammocks coincide with the forward ones.
    """
    if a.model != model:
        raise ContractViolation(f"Arc {a} does not live in model {model.value}")
    a1, a2 = a.x1, a.x2
    p_blob = isinstance(a1, Blob)
    q_blob = isinstance(a2, Blob)
    kind = HammockKind(kind)
    if model == Model.TWO_M and kind in (HammockKind.IPLUS, HammockKind.IMINUS):
        kind = HammockKind.HPLUS if kind == HammockKind.IPLUS else HammockKind.HMINUS

    if kind == HammockKind.HPLUS:
        if q_blob:
            return Rect(span(a1, True, a2, False), _up(a))
        return Rect(span(a1, True, offset(a2, -2), True), _up(a))

    if kind == HammockKind.HMINUS:
        first = span(None, True, a1, not p_blob)
        lo2 = a1 if p_blob else offset(a1, 2)
        return Rect(first, span(lo2, True, a2, not q_blob))

    if kind == HammockKind.IPLUS:
        if q_blob:
            second = span(a2, False, None, True)
            hi1 = a2
        else:
            second = _up(a)
            hi1 = offset(a2, -2)
        return Rect(span(a1, not p_blob, hi1, True), second)

    # IMINUS
    first = span(None, True, a1, True)
    if p_blob:
        return Rect(first, span(a1, False, a2, True))
    return Rect(first, span(offset(a1, 2), True, a2, True))


# --- Hom dimensions -----------------------------------------------------------

def hom_dim(cfg: GonConfig, model: Model, a: Arc, b: Arc) -> int:
    """dim Hom(a, b): 1 iff b lies in Hplus(a) ∪ Hminus(Σ²a)."""
    if a.model != model or b.model != model:
        raise ContractViolation("hom_dim arguments must share the model")
    if hammock(cfg, model, HammockKind.HPLUS, a).contains(b):
        return 1
    if hammock(cfg, model, HammockKind.HMINUS, shift_arc(cfg, a, 2)).contains(b):
        return 1
    return 0


def hom_dim_reverse(cfg: GonConfig, model: Model, a: Arc, b: Arc) -> int:
    """dim Hom(a, b) read from the target: a ∈ Iplus(Σ⁻²b) ∪ Iminus(b)."""
    if a.model != model or b.model != model:
        raise ContractViolation("hom_dim_reverse arguments must share the model")
    if hammock(cfg, model, HammockKind.IPLUS, shift_arc(cfg, b, -2)).contains(a):
        return 1
    if hammock(cfg, model, HammockKind.IMINUS, b).contains(a):
        return 1
    return 0


def incoming_rects(cfg: GonConfig, model: Model, b: Arc) -> List[Rect]:
    """Rectangles of all arcs x with Hom(x, b) != 0."""
    return [hammock(cfg, model, HammockKind.IPLUS, shift_arc(cfg, b, -2)),
            hammock(cfg, model, HammockKind.IMINUS, b)]


def outgoing_rects(cfg: GonConfig, model: Model, a: Arc) -> List[Rect]:
    """Rectangles of all arcs y with Hom(a, y) != 0."""
    return [hammock(cfg, model, HammockKind.HPLUS, a),
            hammock(cfg, model, HammockKind.HMINUS, shift_arc(cfg, a, 2))]


# --- Irreducible morphisms ----------------------------------------------------

def _moved(cfg: GonConfig, a: Arc, step: int) -> List[Arc]:
    p_blob = isinstance(a.x1, Blob)
    q_blob = isinstance(a.x2, Blob)
    candidates = []
    if step > 0:
        if not q_blob:
            candidates.append((a.x1, offset(a.x2, step)))
        if not p_blob:
            candidates.append((offset(a.x1, step), a.x2))
    else:
        if not p_blob:
            candidates.append((offset(a.x1, step), a.x2))
        if not q_blob:
            candidates.append((a.x1, offset(a.x2, step)))
    arcs = []
    for u, v in candidates:
        # a moving endpoint must stay on its side of the other one
        if u.key >= v.key:
            continue
        arc = try_arc(cfg, u, v, a.model)
        if arc is not None:
            arcs.append(arc)
    return arcs


def irreducible_targets(cfg: GonConfig, a: Arc) -> List[Arc]:
    """Arcs b with an irreducible morphism a → b."""
    return _moved(cfg, a, 1)


def irreducible_sources(cfg: GonConfig, a: Arc) -> List[Arc]:
    """Arcs c with an irreducible morphism c → a."""
    return _moved(cfg, a, -1)


def has_ar_triangle(cfg: GonConfig, a: Arc) -> bool:
    """Blob-blob arcs admit no irreducible morphisms at all."""
    return bool(irreducible_targets(cfg, a) or irreducible_sources(cfg, a))


# --- Extensions ---------------------------------------------------------------

def ext_related(cfg: GonConfig, model: Model, a: Arc, b: Arc) -> bool:
    if model == Model.TWO_M:
        return crosses(cfg, a, b)
    return bool(hom_dim(cfg, model, b, shift_arc(cfg, a, 1))
                or hom_dim(cfg, model, a, shift_arc(cfg, b, 1)))


def ptolemy_arcs(cfg: GonConfig, model: Model, a: Arc, b: Arc) -> List[Arc]:
    """Valid arcs joining an endpoint of a to an endpoint of b, other than a and b.

    Raises:
        ContractViolation: If a and b are not Ext-related
    """
    if not ext_related(cfg, model, a, b):
        raise ContractViolation(f"{a} and {b} are not Ext-related")
    found = set()
    for e1, e2 in product(a.endpoints(), b.endpoints()):
        if e1 == e2:
            continue
        arc = try_arc(cfg, e1, e2, model)
        if arc is not None and arc != a and arc != b:
            found.add(arc)
    return sorted(found, key=lambda arc: arc.sort_key)


def _crossing_middle(cfg: GonConfig, a: Arc, b: Arc) -> List[Arc]:
    a1, a2 = a.x1, a.x2
    b1, b2 = b.x1, b.x2
    if a1.key < b1.key < a2.key < b2.key:
        pairs = [(a1, b2), (b1, a2)]
    elif b1.key < a1.key < b2.key < a2.key:
        pairs = [(b1, a1), (b2, a2)]
    else:
        raise ContractViolation(f"{a} and {b} do not cross")
    terms = [try_arc(cfg, u, v, a.model) for u, v in pairs]
    return [t for t in terms if t is not None]


def _blob_lifts(cfg: GonConfig, b: Arc, radius: int) -> List[Arc]:
    blobs = [x for x in b.endpoints() if isinstance(x, Blob)]
    if not blobs:
        return [Arc(b.x1, b.x2, Model.TWO_M)]
    grid = list(product(range(-radius, radius + 1), repeat=len(blobs)))
    grid.sort(key=lambda ns: (sum(abs(n) for n in ns), ns))
    lifts = []
    for ns in grid:
        positions = iter(ns)
        ends = [Point(x.label, next(positions)) if isinstance(x, Blob) else x
                for x in b.endpoints()]
        arc = try_arc(cfg, ends[0], ends[1], Model.TWO_M)
        if arc is not None:
            lifts.append(arc)
    return lifts


def _multiset(arcs: List[Arc]):
    return sorted(arc.sort_key for arc in arcs)


def middle_term(cfg: GonConfig, model: Model, a: Arc, b: Arc,
                radius: Optional[int] = None) -> List[Arc]:
    """Middle term e of the non-split triangle a → e → b → Σa, as a sorted multiset.

    In the completed gon the triangle is computed in the doubled gon on a
    lift of the pair whose connecting morphism does not factor through D,
    then projected.

    Raises:
        ContractViolation: If Hom(b, Σa) vanishes or no admissible lift exists
    """
    if model == Model.TWO_M:
        if not crosses(cfg, a, b):
            raise ContractViolation(f"{a} and {b} do not cross")
        return sorted(_crossing_middle(cfg, a, b), key=lambda arc: arc.sort_key)

    if not hom_dim(cfg, model, b, shift_arc(cfg, a, 1)):
        raise ContractViolation(f"Hom({b}, Σ{a}) vanishes")
    if radius is None:
        radius = get_lift_search_radius()
    a_lift = lift_arc(cfg, a)
    split = _multiset([a, b])
    for b_lift in _blob_lifts(cfg, b, radius):
        if not crosses(cfg, a_lift, b_lift):
            continue
        projected = [project_arc(cfg, t) for t in _crossing_middle(cfg, a_lift, b_lift)]
        terms = sorted((t for t in projected if t is not None), key=lambda arc: arc.sort_key)
        if _multiset(terms) != split:
            logger.debug(f"Middle term of {a} → ? → {b} via lift {b_lift}: {len(terms)} summands")
            return terms
    raise ContractViolation(f"No lift of {b} realises the extension by {a}")
