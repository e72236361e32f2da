"""
Additive subcategories as exact unions of coordinate rectangles.

A SlotRect fixes the slots of both endpoints and an integer range for the
position of each (None = unbounded, blob axes are pinned to (0, 0)). A
same-slot SlotRect implicitly keeps only arcs with x2 >= x1 + 2. Normal forms
are canonical, so two sets are equal iff their rect tuples are equal.

The module also decides the (completed) precovering, preenveloping and
Ptolemy conditions on such unions, computes perpendicular categories and the
preimage/image along π.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from ..common.app_config import get_perp_margin
from .constraints import DifferenceSystem
from .errors import ContractViolation
from .gon_model import (
    Arc, AccLabel, Blob, GonConfig, Model, Point, SlotRange, W0, Z0, enumerate_window,
)
from .hom_model import Rect, incoming_rects, outgoing_rects

# Initialize logger for this module
logger = logging.getLogger("arcsets")

_NEG = float("-inf")
_POS = float("inf")


class SlotRect(NamedTuple):
    s1: int
    lo1: Optional[int]
    hi1: Optional[int]
    s2: int
    lo2: Optional[int]
    hi2: Optional[int]

    @property
    def slots(self) -> Tuple[int, int]:
        return (self.s1, self.s2)

    def axis(self, k: int) -> SlotRange:
        return (self.lo1, self.hi1) if k == 1 else (self.lo2, self.hi2)

    def contains(self, arc: Arc) -> bool:
        if (arc.x1.slot, arc.x2.slot) != (self.s1, self.s2):
            return False
        return _within(arc.x1.coord, self.lo1, self.hi1) and _within(arc.x2.coord, self.lo2, self.hi2)


@dataclass(frozen=True)
class SymArcSet:
    """Normalised rectangle union in one model."""
    model: Model
    rects: Tuple[SlotRect, ...] = ()

    def __len__(self) -> int:
        return len(self.rects)


@dataclass(frozen=True)
class FinArcSet:
    """Explicit arcs inside the window [-W, W]."""
    W: int
    arcs: FrozenSet[Arc]

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs, key=lambda arc: arc.sort_key)

    def __contains__(self, arc: Arc) -> bool:
        return arc in self.arcs

    def __len__(self) -> int:
        return len(self.arcs)


# --- Range helpers ------------------------------------------------------------

def _within(v: int, lo: Optional[int], hi: Optional[int]) -> bool:
    return (lo is None or lo <= v) and (hi is None or v <= hi)


def _lo_key(v: Optional[int]) -> float:
    return _NEG if v is None else v


def _hi_key(v: Optional[int]) -> float:
    return _POS if v is None else v


def _range_empty(lo: Optional[int], hi: Optional[int]) -> bool:
    return lo is not None and hi is not None and lo > hi


def _max_lo(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _min_hi(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def merge_ranges(ranges: Iterable[SlotRange]) -> Tuple[SlotRange, ...]:
    """Merge overlapping or adjacent integer ranges."""
    ordered = sorted(ranges, key=lambda r: (_lo_key(r[0]), _hi_key(r[1])))
    merged: List[List[Optional[int]]] = []
    for lo, hi in ordered:
        if merged:
            last = merged[-1]
            if last[1] is None:
                continue
            if lo is None or lo <= last[1] + 1:
                last[1] = None if hi is None else max(last[1], hi)
                continue
        merged.append([lo, hi])
    return tuple((lo, hi) for lo, hi in merged)


def range_covered(target: SlotRange, ranges: Iterable[SlotRange]) -> bool:
    lo, hi = target
    for c, d in merge_ranges(ranges):
        if _lo_key(c) <= _lo_key(lo) and _hi_key(hi) <= _hi_key(d):
            return True
    return False


def _regions(breakpoints: Sequence[int]) -> List[SlotRange]:
    if not breakpoints:
        return [(None, None)]
    bps = sorted(set(breakpoints))
    regions: List[SlotRange] = [(None, bps[0] - 1)]
    regions.extend((bps[k], bps[k + 1] - 1) for k in range(len(bps) - 1))
    regions.append((bps[-1], None))
    return regions


def _rect_nonempty(cfg: GonConfig, model: Model, r: SlotRect) -> bool:
    """Does r hold at least one valid arc?"""
    if _range_empty(r.lo1, r.hi1) or _range_empty(r.lo2, r.hi2):
        return False
    if r.s1 == r.s2:
        if cfg.is_blob_slot(r.s1, model):
            return False
        if r.lo1 is not None and r.hi2 is not None:
            return r.lo1 + 2 <= r.hi2
    return True


# --- Normalisation ------------------------------------------------------------

def _normalize_pair(cfg: GonConfig, model: Model, s1: int, s2: int,
                    rects: List[SlotRect]) -> List[SlotRect]:
    same = s1 == s2
    blob1 = cfg.is_blob_slot(s1, model)
    blob2 = cfg.is_blob_slot(s2, model)
    if blob1:
        regions: List[SlotRange] = [(0, 0)]
    else:
        bps = set()
        for r in rects:
            if r.lo1 is not None:
                bps.add(r.lo1)
            if r.hi1 is not None:
                bps.add(r.hi1 + 1)
            if same:
                if r.lo2 is not None:
                    bps.add(r.lo2 - 2)
                if r.hi2 is not None:
                    bps.add(r.hi2 - 1)
        regions = _regions(sorted(bps))

    pieces: List[Tuple[Optional[int], Optional[int], Tuple[SlotRange, ...]]] = []
    for lo, hi in regions:
        rep = lo if lo is not None else (hi if hi is not None else 0)
        ranges: List[SlotRange] = []
        for r in rects:
            if not blob1 and not _within(rep, r.lo1, r.hi1):
                continue
            if blob2:
                ranges.append((0, 0))
                continue
            c, d = r.lo2, r.hi2
            if same:
                if d is not None and d < rep + 2:
                    continue
                if c is None or c <= rep + 2:
                    c = None
            ranges.append((c, d))
        desc = merge_ranges(ranges)
        if not desc:
            continue
        if pieces and pieces[-1][2] == desc and pieces[-1][1] is not None and lo is not None \
                and pieces[-1][1] + 1 == lo:
            pieces[-1] = (pieces[-1][0], hi, desc)
        else:
            pieces.append((lo, hi, desc))

    return [SlotRect(s1, lo, hi, s2, c, d) for lo, hi, desc in pieces for c, d in desc]


def _coerce(cfg: GonConfig, model: Model, r: SlotRect) -> Optional[SlotRect]:
    if not (0 <= r.s1 <= r.s2 < cfg.n_slots):
        raise ContractViolation(f"Rect slots out of order or range: {r}")
    values = list(r)
    for slot, lo_i, hi_i in ((r.s1, 1, 2), (r.s2, 4, 5)):
        if cfg.is_blob_slot(slot, model):
            if not _within(0, values[lo_i], values[hi_i]):
                return None
            values[lo_i], values[hi_i] = 0, 0
    coerced = SlotRect(*values)
    if not _rect_nonempty(cfg, model, coerced):
        return None
    return coerced


def normalize(cfg: GonConfig, model: Model, rects: Iterable[SlotRect]) -> SymArcSet:
    """Canonical form of a rectangle union."""
    groups: Dict[Tuple[int, int], List[SlotRect]] = defaultdict(list)
    for r in rects:
        coerced = _coerce(cfg, model, SlotRect(*r))
        if coerced is not None:
            groups[coerced.slots].append(coerced)
    out: List[SlotRect] = []
    for key in sorted(groups):
        out.extend(_normalize_pair(cfg, model, key[0], key[1], groups[key]))
    return SymArcSet(model, tuple(out))


def empty_set(model: Model) -> SymArcSet:
    return SymArcSet(model, ())


def all_arcs(cfg: GonConfig, model: Model) -> SymArcSet:
    rects = []
    for s1 in cfg.slots():
        for s2 in range(s1, cfg.n_slots):
            rects.append(SlotRect(s1, None, None, s2, None, None))
    return normalize(cfg, model, rects)


def full_range(cfg: GonConfig, model: Model, slot: int) -> SlotRange:
    return (0, 0) if cfg.is_blob_slot(slot, model) else (None, None)


def square(cfg: GonConfig, model: Model, coords: Dict[int, SlotRange]) -> List[SlotRect]:
    """Rects of all arcs with both endpoints in the coordinate set `coords`."""
    slots = sorted(coords)
    rects = []
    for i, s1 in enumerate(slots):
        for s2 in slots[i:]:
            rects.append(SlotRect(s1, *coords[s1], s2, *coords[s2]))
    return rects


def rect_cells(cfg: GonConfig, model: Model, rect: Rect) -> List[SlotRect]:
    """SlotRects denoting the arcs of an interval rectangle."""
    cells = []
    for I in rect.I.pieces():
        for J in rect.J.pieces():
            for s1 in cfg.slots():
                r1 = I.slot_range(s1, cfg.is_blob_slot(s1, model))
                if r1 is None:
                    continue
                for s2 in range(s1, cfg.n_slots):
                    r2 = J.slot_range(s2, cfg.is_blob_slot(s2, model))
                    if r2 is None:
                        continue
                    cell = SlotRect(s1, r1[0], r1[1], s2, r2[0], r2[1])
                    if _rect_nonempty(cfg, model, cell):
                        cells.append(cell)
    return cells


def from_rects(cfg: GonConfig, model: Model, rects: Iterable[Rect]) -> SymArcSet:
    return normalize(cfg, model, [c for rect in rects for c in rect_cells(cfg, model, rect)])


def from_arcs(cfg: GonConfig, model: Model, arcs: Iterable[Arc]) -> SymArcSet:
    """Degenerate rects, one per arc."""
    return normalize(cfg, model, [
        SlotRect(a.x1.slot, a.x1.coord, a.x1.coord, a.x2.slot, a.x2.coord, a.x2.coord)
        for a in arcs
    ])


# --- Set algebra --------------------------------------------------------------

def _same_model(S: SymArcSet, T: SymArcSet) -> Model:
    if S.model != T.model:
        raise ContractViolation("Arc sets of different models")
    return S.model


def member(cfg: GonConfig, S: SymArcSet, a: Arc) -> bool:
    if a.model != S.model:
        raise ContractViolation(f"Arc {a} is not in model {S.model.value}")
    return any(r.contains(a) for r in S.rects)


def union(cfg: GonConfig, S: SymArcSet, T: SymArcSet) -> SymArcSet:
    return normalize(cfg, _same_model(S, T), S.rects + T.rects)


def _intersect_rects(a: SlotRect, b: SlotRect) -> Optional[SlotRect]:
    if a.slots != b.slots:
        return None
    lo1, hi1 = _max_lo(a.lo1, b.lo1), _min_hi(a.hi1, b.hi1)
    lo2, hi2 = _max_lo(a.lo2, b.lo2), _min_hi(a.hi2, b.hi2)
    if _range_empty(lo1, hi1) or _range_empty(lo2, hi2):
        return None
    return SlotRect(a.s1, lo1, hi1, a.s2, lo2, hi2)


def intersect(cfg: GonConfig, S: SymArcSet, T: SymArcSet) -> SymArcSet:
    model = _same_model(S, T)
    out = []
    for a in S.rects:
        for b in T.rects:
            r = _intersect_rects(a, b)
            if r is not None:
                out.append(r)
    return normalize(cfg, model, out)


def _subtract(p: SlotRect, b: SlotRect) -> List[SlotRect]:
    overlap = _intersect_rects(p, b)
    if overlap is None:
        return [p]
    pieces = []
    if b.lo1 is not None and (p.lo1 is None or p.lo1 < b.lo1):
        pieces.append(p._replace(hi1=b.lo1 - 1))
    if b.hi1 is not None and (p.hi1 is None or p.hi1 > b.hi1):
        pieces.append(p._replace(lo1=b.hi1 + 1))
    middle = p._replace(lo1=overlap.lo1, hi1=overlap.hi1)
    if b.lo2 is not None and (p.lo2 is None or p.lo2 < b.lo2):
        pieces.append(middle._replace(hi2=b.lo2 - 1))
    if b.hi2 is not None and (p.hi2 is None or p.hi2 > b.hi2):
        pieces.append(middle._replace(lo2=b.hi2 + 1))
    return pieces


def difference(cfg: GonConfig, S: SymArcSet, T: SymArcSet) -> SymArcSet:
    model = _same_model(S, T)
    out: List[SlotRect] = []
    for a in S.rects:
        pieces = [a]
        for b in T.rects:
            if b.slots != a.slots:
                continue
            pieces = [q for p in pieces for q in _subtract(p, b)]
            if not pieces:
                break
        out.extend(pieces)
    return normalize(cfg, model, out)


def complement(cfg: GonConfig, S: SymArcSet) -> SymArcSet:
    return difference(cfg, all_arcs(cfg, S.model), S)


def is_empty(S: SymArcSet) -> bool:
    return not S.rects


def is_subset(cfg: GonConfig, S: SymArcSet, T: SymArcSet) -> bool:
    return is_empty(difference(cfg, S, T))


def set_equals(cfg: GonConfig, S: SymArcSet, T: SymArcSet) -> bool:
    return S.model == T.model and S.rects == T.rects


def shift_set(cfg: GonConfig, S: SymArcSet, n: int) -> SymArcSet:
    """Σⁿ applied to every arc; blob axes stay put."""
    def move(slot: int, v: Optional[int]) -> Optional[int]:
        if v is None or cfg.is_blob_slot(slot, S.model):
            return v
        return v - n
    return normalize(cfg, S.model, [
        SlotRect(r.s1, move(r.s1, r.lo1), move(r.s1, r.hi1), r.s2, move(r.s2, r.lo2), move(r.s2, r.hi2))
        for r in S.rects
    ])


def truncate(cfg: GonConfig, S: SymArcSet, W: int) -> FinArcSet:
    arcs = frozenset(a for a in enumerate_window(cfg, W, S.model) if member(cfg, S, a))
    return FinArcSet(W, arcs)


def meets(cfg: GonConfig, model: Model, A: Iterable[SlotRect], B: Iterable[SlotRect]) -> bool:
    """Do the two rect collections share a valid arc?"""
    B = list(B)
    for a in A:
        for b in B:
            r = _intersect_rects(a, b)
            if r is not None and _rect_nonempty(cfg, model, r):
                return True
    return False


# --- Auxiliary categories and π -----------------------------------------------

def _primed(slot: int) -> bool:
    return slot % 2 == 0


def category_A(cfg: GonConfig) -> SymArcSet:
    coords = {s: ((None, Z0) if _primed(s) else (None, None)) for s in cfg.slots()}
    return normalize(cfg, Model.TWO_M, square(cfg, Model.TWO_M, coords))


def category_B(cfg: GonConfig) -> SymArcSet:
    coords = {s: ((W0, None) if _primed(s) else (None, None)) for s in cfg.slots()}
    return normalize(cfg, Model.TWO_M, square(cfg, Model.TWO_M, coords))


def _d_rects(cfg: GonConfig) -> List[SlotRect]:
    return [SlotRect(s, None, None, s, None, None) for s in cfg.slots() if _primed(s)]


def category_D(cfg: GonConfig) -> SymArcSet:
    return normalize(cfg, Model.TWO_M, _d_rects(cfg))


def preimage_bar(cfg: GonConfig, X: SymArcSet) -> SymArcSet:
    """π⁻¹X: blobs open up to whole primed segments, plus D."""
    if X.model != Model.BAR:
        raise ContractViolation("preimage_bar expects a set of the completed gon")
    rects = []
    for r in X.rects:
        lo1, hi1 = (None, None) if _primed(r.s1) else (r.lo1, r.hi1)
        lo2, hi2 = (None, None) if _primed(r.s2) else (r.lo2, r.hi2)
        rects.append(SlotRect(r.s1, lo1, hi1, r.s2, lo2, hi2))
    return normalize(cfg, Model.TWO_M, rects + _d_rects(cfg))


def image_2m(cfg: GonConfig, U: SymArcSet) -> SymArcSet:
    """πU for U ⊇ D.

    Raises:
        ContractViolation: If U does not contain D
    """
    if U.model != Model.TWO_M:
        raise ContractViolation("image_2m expects a set of the doubled gon")
    if not is_subset(cfg, category_D(cfg), U):
        raise ContractViolation("image_2m needs a subcategory containing D")
    rects = []
    for r in U.rects:
        if r.s1 == r.s2 and _primed(r.s1):
            continue
        lo1, hi1 = (0, 0) if _primed(r.s1) else (r.lo1, r.hi1)
        lo2, hi2 = (0, 0) if _primed(r.s2) else (r.lo2, r.hi2)
        rects.append(SlotRect(r.s1, lo1, hi1, r.s2, lo2, hi2))
    return normalize(cfg, Model.BAR, rects)


# --- Precovering and preenveloping conditions ----------------------------------

def _pair_rects(S: SymArcSet, a: int, b: int) -> List[SlotRect]:
    key = (min(a, b), max(a, b))
    return [r for r in S.rects if r.slots == key]


def _partner_ranges(S: SymArcSet, v_slot: int, other_slot: int,
                    other_ok, other_first_on_tie: bool = True) -> List[SlotRange]:
    """Ranges of v in v_slot for which a rect joins v to an `other_ok` range of other_slot."""
    ranges = []
    for r in _pair_rects(S, v_slot, other_slot):
        if v_slot < other_slot or (v_slot == other_slot and not other_first_on_tie):
            v_axis, o_axis = r.axis(1), r.axis(2)
        else:
            v_axis, o_axis = r.axis(2), r.axis(1)
        if other_ok(o_axis):
            ranges.append(v_axis)
    return ranges


def _unbounded_below(rng: SlotRange) -> bool:
    return rng[0] is None


def _unbounded_above(rng: SlotRange) -> bool:
    return rng[1] is None


def _any(_rng: SlotRange) -> bool:
    return True


def _has_pair(S: SymArcSet, a: int, b: int, a_ok, b_ok) -> bool:
    """Some rect on slots {a, b} (a != b) whose a-axis and b-axis pass the tests."""
    for r in _pair_rects(S, a, b):
        a_axis, b_axis = (r.axis(1), r.axis(2)) if a < b else (r.axis(2), r.axis(1))
        if a_ok(a_axis) and b_ok(b_axis):
            return True
    return False


def _blob_arc_in(cfg: GonConfig, X: SymArcSet, p: int, q: int) -> bool:
    return member(cfg, X, Arc(*sorted((Blob(AccLabel.from_slot(p)), Blob(AccLabel.from_slot(q))),
                                      key=lambda b: b.key), Model.BAR))


def check_pc_2m(cfg: GonConfig, U: SymArcSet) -> List[str]:
    """Violated precovering conditions of a subcategory of the doubled gon."""
    if U.model != Model.TWO_M:
        raise ContractViolation("check_pc_2m expects a set of the doubled gon")
    n = cfg.n_slots
    violated = set()
    for r in U.rects:
        p, q = r.s1, r.s2
        ps, qs = (p + 1) % n, (q + 1) % n
        inc1, inc2 = r.hi1 is None, r.hi2 is None
        dec1, dec2 = r.lo1 is None, r.lo2 is None
        if p != q and inc1 and inc2:
            if not _has_pair(U, ps, qs, _unbounded_below, _unbounded_below):
                violated.add("PC1")
        if p != qs and dec1 and inc2:
            if not _has_pair(U, p, qs, _unbounded_below, _unbounded_below):
                violated.add("PC2")
        if q != ps and p != q and inc1 and dec2:
            if not _has_pair(U, ps, q, _unbounded_below, _unbounded_below):
                violated.add("PC2'")
        if inc2:
            covered = _partner_ranges(U, p, qs, _unbounded_below)
            if not range_covered(r.axis(1), covered):
                violated.add("PC3")
        if p != q and inc1:
            covered = _partner_ranges(U, q, ps, _unbounded_below)
            if not range_covered(r.axis(2), covered):
                violated.add("PC3'")
    return sorted(violated)


def check_ovl_pc(cfg: GonConfig, X: SymArcSet) -> List[str]:
    """Violated completed precovering conditions."""
    if X.model != Model.BAR:
        raise ContractViolation("check_ovl_pc expects a set of the completed gon")
    n = cfg.n_slots
    violated = set()
    for r in X.rects:
        p, q = r.s1, r.s2
        ps, qs = (p + 1) % n, (q + 1) % n
        p_reg, q_reg = not _primed(p), not _primed(q)
        inc1 = p_reg and r.hi1 is None
        inc2 = q_reg and r.hi2 is None
        dec1 = p_reg and r.lo1 is None
        dec2 = q_reg and r.lo2 is None
        if p != q and inc1 and inc2:
            if not _blob_arc_in(cfg, X, ps, qs):
                violated.add("OPC1")
        if dec1 and inc2:
            if not _has_pair(X, p, qs, _unbounded_below, _any):
                violated.add("OPC2")
        if p != q and inc1 and dec2:
            if not _has_pair(X, ps, q, _any, _unbounded_below):
                violated.add("OPC2'")
        if inc2 and p != qs:
            covered = _partner_ranges(X, p, qs, _any)
            if not range_covered(r.axis(1), covered):
                violated.add("OPC3")
        if inc1 and p != q and q != ps:
            covered = _partner_ranges(X, q, ps, _any)
            if not range_covered(r.axis(2), covered):
                violated.add("OPC3'")
    return sorted(violated)


def check_ovl_pe(cfg: GonConfig, X: SymArcSet) -> List[str]:
    """Violated completed preenveloping conditions."""
    if X.model != Model.BAR:
        raise ContractViolation("check_ovl_pe expects a set of the completed gon")
    n = cfg.n_slots
    violated = set()
    for r in X.rects:
        p, q = r.s1, r.s2
        pm, qm = (p - 1) % n, (q - 1) % n
        p_reg, q_reg = not _primed(p), not _primed(q)
        inc1 = p_reg and r.hi1 is None
        inc2 = q_reg and r.hi2 is None
        dec1 = p_reg and r.lo1 is None
        dec2 = q_reg and r.lo2 is None
        if p != q and dec1 and dec2:
            if not _blob_arc_in(cfg, X, pm, qm):
                violated.add("OPE1")
        if p != q and inc1 and dec2:
            if not _has_pair(X, p, qm, _unbounded_above, _any):
                violated.add("OPE2")
        if dec1 and inc2:
            if not _has_pair(X, pm, q, _any, _unbounded_above):
                violated.add("OPE2'")
        if dec2 and p != q and p != qm:
            covered = _partner_ranges(X, p, qm, _any)
            if not range_covered(r.axis(1), covered):
                violated.add("OPE3")
        if dec1:
            covered = _partner_ranges(X, q, pm, _any)
            if not range_covered(r.axis(2), covered):
                violated.add("OPE3'")
    return sorted(violated)


def is_precovering(cfg: GonConfig, X: SymArcSet) -> bool:
    return not check_ovl_pc(cfg, X)


def is_preenveloping(cfg: GonConfig, X: SymArcSet) -> bool:
    return not check_ovl_pe(cfg, X)


# --- Ptolemy condition --------------------------------------------------------

_CHAIN = ("a1", "b1", "a2", "b2")
_CONNECTORS = (("a1", "b1"), ("b1", "a2"), ("a2", "b2"), ("a1", "b2"))


def _pt_system(ra: SlotRect, rb: SlotRect, u: str, v: str, rc: SlotRect,
               slots: Dict[str, int]) -> DifferenceSystem:
    system = DifferenceSystem()
    system.bounds("a1", ra.lo1, ra.hi1)
    system.bounds("a2", ra.lo2, ra.hi2)
    system.bounds("b1", rb.lo1, rb.hi1)
    system.bounds("b2", rb.lo2, rb.hi2)
    if ra.s1 == ra.s2:
        system.gap("a1", "a2", 2)
    if rb.s1 == rb.s2:
        system.gap("b1", "b2", 2)
    for earlier, later in zip(_CHAIN, _CHAIN[1:]):
        if slots[earlier] == slots[later]:
            system.gap(earlier, later, 1)
    system.lower(u, rc.lo1)
    system.upper(u, rc.hi1)
    system.lower(v, rc.lo2)
    system.upper(v, rc.hi2)
    if rc.s1 == rc.s2:
        system.gap(u, v, 2)
    return system


def find_pt_violation(cfg: GonConfig, U: SymArcSet) -> Optional[Tuple[Arc, Arc, Arc]]:
    """A crossing pair of U with a connector outside U, or None."""
    if U.model != Model.TWO_M:
        raise ContractViolation("find_pt_violation expects a set of the doubled gon")
    outside = complement(cfg, U)
    by_pair: Dict[Tuple[int, int], List[SlotRect]] = defaultdict(list)
    for r in outside.rects:
        by_pair[r.slots].append(r)
    if not by_pair:
        return None
    for ra in U.rects:
        for rb in U.rects:
            if not (ra.s1 <= rb.s1 <= ra.s2 <= rb.s2):
                continue
            slots = {"a1": ra.s1, "b1": rb.s1, "a2": ra.s2, "b2": rb.s2}
            for u, v in _CONNECTORS:
                for rc in by_pair.get((slots[u], slots[v]), ()):
                    solution = _pt_system(ra, rb, u, v, rc, slots).solve()
                    if solution is None:
                        continue
                    ends = {name: Point(AccLabel.from_slot(slots[name]), solution[name])
                            for name in _CHAIN}
                    witness = (Arc(ends["a1"], ends["a2"], Model.TWO_M),
                               Arc(ends["b1"], ends["b2"], Model.TWO_M),
                               Arc(ends[u], ends[v], Model.TWO_M))
                    logger.debug(f"Ptolemy violation: {witness[0]} × {witness[1]} misses {witness[2]}")
                    return witness
    return None


def check_pt_2m(cfg: GonConfig, U: SymArcSet) -> bool:
    """Ptolemy condition in the doubled gon: crossing pairs keep all connectors."""
    return find_pt_violation(cfg, U) is None


def check_ovl_pt(cfg: GonConfig, X: SymArcSet) -> bool:
    """Completed Ptolemy condition, decided on the preimage along π."""
    if X.model != Model.BAR:
        raise ContractViolation("check_ovl_pt expects a set of the completed gon")
    return check_pt_2m(cfg, preimage_bar(cfg, X))


# --- Perpendicular categories -------------------------------------------------

def hom_exists(cfg: GonConfig, X: SymArcSet, b: Arc) -> bool:
    """Is Hom(x, b) != 0 for some arc x of X?"""
    cells = [c for rect in incoming_rects(cfg, X.model, b) for c in rect_cells(cfg, X.model, rect)]
    return meets(cfg, X.model, X.rects, cells)


def hom_exists_to(cfg: GonConfig, a: Arc, Y: SymArcSet) -> bool:
    """Is Hom(a, y) != 0 for some arc y of Y?"""
    cells = [c for rect in outgoing_rects(cfg, Y.model, a) for c in rect_cells(cfg, Y.model, rect)]
    return meets(cfg, Y.model, Y.rects, cells)


def _endpoint(cfg: GonConfig, model: Model, slot: int, pos: int):
    label = AccLabel.from_slot(slot)
    if cfg.is_blob_slot(slot, model):
        return Blob(label)
    return Point(label, pos)


def _representative(cfg: GonConfig, model: Model, s1: int, I: SlotRange,
                    s2: int, J: SlotRange) -> Optional[Arc]:
    il, ih = I
    jl, jh = J
    if s1 != s2:
        i = il if il is not None else (ih if ih is not None else 0)
        j = jl if jl is not None else (jh if jh is not None else 0)
    else:
        if il is not None:
            i = il
        else:
            i = min(v for v in (ih, None if jh is None else jh - 2, 0) if v is not None)
        if jh is not None:
            j = jh
        else:
            j = max(i + 2, jl if jl is not None else i + 2)
        if j < i + 2 or (jl is not None and j < jl) or (ih is not None and i > ih):
            return None
    return Arc(_endpoint(cfg, model, s1, i), _endpoint(cfg, model, s2, j), model)


def perp(cfg: GonConfig, X: SymArcSet, side: str = "right", margin: Optional[int] = None) -> SymArcSet:
    """X⊥ (side="right") or ⊥X (side="left").

    Membership of an arc only depends on where its coordinates sit relative
    to the bounds of X, so it is evaluated once per cell of the breakpoint
    grid built from those bounds.
    """
    if side not in ("right", "left"):
        raise ContractViolation(f"side must be 'right' or 'left', got {side!r}")
    model = X.model
    if margin is None:
        margin = get_perp_margin()
    bps: Dict[int, set] = defaultdict(set)
    for r in X.rects:
        for slot, lo, hi in ((r.s1, r.lo1, r.hi1), (r.s2, r.lo2, r.hi2)):
            if cfg.is_blob_slot(slot, model):
                continue
            for v in (lo, hi):
                if v is not None:
                    bps[slot].update(v + k for k in range(-margin, margin + 1))

    def axis_regions(slot: int) -> List[SlotRange]:
        if cfg.is_blob_slot(slot, model):
            return [(0, 0)]
        return _regions(sorted(bps[slot]))

    test = incoming_rects if side == "right" else outgoing_rects
    kept: List[SlotRect] = []
    for s1 in cfg.slots():
        for s2 in range(s1, cfg.n_slots):
            if s1 == s2 and cfg.is_blob_slot(s1, model):
                continue
            for I in axis_regions(s1):
                for J in axis_regions(s2):
                    rep = _representative(cfg, model, s1, I, s2, J)
                    if rep is None:
                        continue
                    cells = [c for rect in test(cfg, model, rep) for c in rect_cells(cfg, model, rect)]
                    if not meets(cfg, model, X.rects, cells):
                        kept.append(SlotRect(s1, I[0], I[1], s2, J[0], J[1]))
    result = normalize(cfg, model, kept)
    logger.debug(f"perp({side}) of {len(X.rects)} rects: {len(result.rects)} rects")
    return result


# --- Torsion class predicates -------------------------------------------------

def is_torsion_class(cfg: GonConfig, X: SymArcSet) -> bool:
    return is_precovering(cfg, X) and check_ovl_pt(cfg, X)


def is_t_aisle(cfg: GonConfig, X: SymArcSet) -> bool:
    return is_torsion_class(cfg, X) and is_subset(cfg, shift_set(cfg, X, 1), X)


def is_cot_aisle(cfg: GonConfig, X: SymArcSet) -> bool:
    return is_torsion_class(cfg, X) and is_subset(cfg, shift_set(cfg, X, -1), X)
