"""
Classification layer: aisles and co-aisles of t-structures and co-t-structures
from their decorated non-crossing partitions and back, hearts and co-hearts,
boundedness, non-degeneracy, adjacency and thickness predicates, TTF triples
and the lattice operations.

Every set lives in the completed gon and is built as a union of squares, one
per block: the coordinates a block owns on each segment, squared.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

import networkx as nx

from .arcsets import (
    SymArcSet, intersect, is_cot_aisle, is_subset, is_t_aisle, normalize, perp,
    preimage_bar, set_equals, square,
)
from .errors import ContractViolation, InfgonError
from .gon_model import AccLabel, Arc, GonConfig, Model, SlotRange, blob, make_arc, reg
from .ncp import (
    AltNcp, Decoration, HalfDecNcp, NcPartition,
    alt_join, alt_meet, complement_alt, complement_hd, hd_join, hd_meet, kreweras, make_alt, make_hd, next_in_block, validate_alt, validate_hd,
)
from .schemas import decorated_to_dict, symset_to_dict

# Initialize logger for this module
logger = logging.getLogger("torsion")

Datum = Union[HalfDecNcp, AltNcp]
_SIDES = ("left", "right")


@dataclass(frozen=True)
class TorsionDescriptor:
    """A (co-)t-structure: its datum, both classes and the predicate flags."""
    kind: str
    datum: Datum
    aisle: SymArcSet
    coaisle: SymArcSet
    flags: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self, cfg: GonConfig) -> Dict:
        return {
            "kind": self.kind,
            "datum": decorated_to_dict(cfg, self.datum),
            "aisle": symset_to_dict(self.aisle),
            "coaisle": symset_to_dict(self.coaisle),
            "flags": dict(self.flags),
        }


def _check_side(side: str) -> None:
    if side not in _SIDES:
        raise ContractViolation(f"side must be 'left' or 'right', got {side!r}")


def _union_of_squares(cfg: GonConfig, blocks: List[Dict[int, SlotRange]]) -> SymArcSet:
    rects = []
    for coords in blocks:
        rects.extend(square(cfg, Model.BAR, coords))
    return normalize(cfg, Model.BAR, rects)


def _unprimed_slot(index: int) -> int:
    return AccLabel(index, False).slot


def _primed_slot(index: int) -> int:
    return AccLabel(index, True).slot


def _pred_index(cfg: GonConfig, index: int) -> int:
    return (index - 2) % cfg.m + 1


def _succ_index(cfg: GonConfig, index: int) -> int:
    return index % cfg.m + 1


# --- t-structures -------------------------------------------------------------

def _require_hd(cfg: GonConfig, hd: HalfDecNcp) -> None:
    if not validate_hd(cfg, hd.P, hd.X):
        raise ContractViolation(f"Invalid half-decorated partition {hd.P} for m={cfg.m}")


def t_aisle(cfg: GonConfig, hd: HalfDecNcp) -> SymArcSet:
    """Aisle of the t-structure classified by hd.

    Block B owns the blob of each primed label in B and the points of
    (p, x_p] for each unprimed p in B.
    """
    _require_hd(cfg, hd)
    blocks = []
    for block in hd.block_labels():
        coords: Dict[int, SlotRange] = {}
        for label in block:
            if label.primed:
                coords[label.slot] = (0, 0)
                continue
            x = hd.x(label.index)
            if x.is_reg:
                coords[label.slot] = (None, x.pos)
            elif x.is_accend:
                coords[label.slot] = (None, None)
        blocks.append(coords)
    return _union_of_squares(cfg, blocks)


def t_coaisle(cfg: GonConfig, hd: HalfDecNcp) -> SymArcSet:
    """Co-aisle from (Q, Y) = complement: [y_p, p+) per unprimed p of a Q-block."""
    _require_hd(cfg, hd)
    comp = complement_hd(cfg, hd)
    blocks = []
    for block in comp.block_labels():
        coords: Dict[int, SlotRange] = {}
        for label in block:
            if label.primed:
                coords[label.slot] = (0, 0)
                continue
            y = comp.x(label.index)
            if y.is_marker:
                coords[label.slot] = (None, None)
            elif y.is_reg:
                coords[label.slot] = (y.pos, None)
        blocks.append(coords)
    return _union_of_squares(cfg, blocks)


def t_heart(cfg: GonConfig, hd: HalfDecNcp) -> List[Arc]:
    _require_hd(cfg, hd)
    return [Arc(reg(i, x.pos - 2), reg(i, x.pos), Model.BAR)
            for i, x in enumerate(hd.X, start=1) if x.is_reg]


def _sup(values: List) -> Decoration:
    if not values:
        return Decoration.marker()
    if any(v is None for v in values):
        return Decoration.accend()
    return Decoration.reg(max(values))


def _inf(values: List) -> Decoration:
    if not values:
        return Decoration.accend()
    if any(v is None for v in values):
        return Decoration.marker()
    return Decoration.reg(min(values))


def _axis_values(X: SymArcSet, slot: int, bound: int) -> List:
    """lo (bound=0) or hi (bound=1) of every rect axis lying on `slot`.

    On a rect with both endpoints on one segment the first endpoint precedes
    the second, so only axis 1 bounds it below and only axis 2 above.
    """
    values = []
    for r in X.rects:
        if r.s1 == r.s2:
            if r.s1 == slot:
                values.append(r.axis(1 if bound == 0 else 2)[bound])
            continue
        for s, axis in ((r.s1, r.axis(1)), (r.s2, r.axis(2))):
            if s == slot:
                values.append(axis[bound])
    return values


def hd_from_aisle(cfg: GonConfig, X: SymArcSet, verify: bool = True) -> HalfDecNcp:
    """Half-decorated partition of a t-aisle.

    Blocks are the classes of "some arc joins segment p to segment q",
    computed on the preimage in the doubled gon; x_p is the supremum of the
    endpoints on segment p.

    Raises:
        ContractViolation: If X is not a t-aisle
    """
    if X.model != Model.BAR:
        raise ContractViolation("hd_from_aisle expects a set of the completed gon")
    if verify and not is_t_aisle(cfg, X):
        raise ContractViolation("Set is not the aisle of a t-structure")
    graph = nx.Graph()
    graph.add_nodes_from(range(1, 2 * cfg.m + 1))
    for r in preimage_bar(cfg, X).rects:
        if r.s1 != r.s2:
            graph.add_edge(r.s1 + 1, r.s2 + 1)
    P = NcPartition.of(2 * cfg.m, (sorted(c) for c in nx.connected_components(graph)))
    decor = [_sup(_axis_values(X, _unprimed_slot(i), 1)) for i in range(1, cfg.m + 1)]
    logger.debug(f"hd_from_aisle: P={P}, X={[str(x) for x in decor]}")
    return make_hd(cfg, P, decor)


# --- co-t-structures ----------------------------------------------------------

def _require_alt(cfg: GonConfig, alt: AltNcp) -> None:
    if not validate_alt(cfg, alt.P, alt.X):
        raise ContractViolation(f"Invalid alternating partition {alt.P} for m={cfg.m}")


def cot_aisle(cfg: GonConfig, alt: AltNcp) -> SymArcSet:
    """Aisle of the co-t-structure classified by alt.

    Block B owns, for each p' in B, the blob p' and the points of
    [x_{p-}, p') on the preceding unprimed segment.
    """
    _require_alt(cfg, alt)
    blocks = []
    for block in alt.P.blocks:
        coords: Dict[int, SlotRange] = {}
        for e in block:
            coords[_primed_slot(e)] = (0, 0)
            before = _pred_index(cfg, e)
            x = alt.x(before)
            if x.is_marker:
                coords[_unprimed_slot(before)] = (None, None)
            elif x.is_reg:
                coords[_unprimed_slot(before)] = (x.pos, None)
        blocks.append(coords)
    return _union_of_squares(cfg, blocks)


def cot_coaisle(cfg: GonConfig, alt: AltNcp) -> SymArcSet:
    """Co-aisle from (Q, Y): blob p' and (p', y_p] per p' of a Q-block."""
    _require_alt(cfg, alt)
    comp = complement_alt(cfg, alt)
    blocks = []
    for block in comp.P.blocks:
        coords: Dict[int, SlotRange] = {}
        for e in block:
            coords[_primed_slot(e)] = (0, 0)
            y = comp.x(e)
            if y.is_accend:
                coords[_unprimed_slot(e)] = (None, None)
            elif y.is_reg:
                coords[_unprimed_slot(e)] = (None, y.pos)
        blocks.append(coords)
    return _union_of_squares(cfg, blocks)


def cot_coheart(cfg: GonConfig, alt: AltNcp) -> List[Arc]:
    """Arcs |p, x_{q-}| with q the successor of p inside its block."""
    _require_alt(cfg, alt)
    arcs = []
    for block in alt.P.blocks:
        for e in block:
            q = next_in_block(alt.P, block, AccLabel(e, True))
            before = _pred_index(cfg, q.index)
            x = alt.x(before)
            if x.is_reg:
                arcs.append(make_arc(cfg, blob(e), reg(before, x.pos), Model.BAR))
    return sorted(set(arcs), key=lambda a: a.sort_key)


def alt_from_cot_aisle(cfg: GonConfig, X: SymArcSet, verify: bool = True) -> AltNcp:
    """Alternating partition of a co-t-aisle.

    Points of unprimed segment i belong to the block of (i+1)'; x_i is the
    infimum of the endpoints on segment i.

    Raises:
        ContractViolation: If X is not a co-t-aisle
    """
    if X.model != Model.BAR:
        raise ContractViolation("alt_from_cot_aisle expects a set of the completed gon")
    if verify and not is_cot_aisle(cfg, X):
        raise ContractViolation("Set is not the aisle of a co-t-structure")

    def owner(slot: int) -> int:
        label = AccLabel.from_slot(slot)
        return label.index if label.primed else _succ_index(cfg, label.index)

    graph = nx.Graph()
    graph.add_nodes_from(range(1, cfg.m + 1))
    for r in X.rects:
        graph.add_edge(owner(r.s1), owner(r.s2))
    P = NcPartition.of(cfg.m, (sorted(c) for c in nx.connected_components(graph)))
    decor = [_inf(_axis_values(X, _unprimed_slot(i), 0)) for i in range(1, cfg.m + 1)]
    logger.debug(f"alt_from_cot_aisle: P={P}, X={[str(x) for x in decor]}")
    return make_alt(cfg, P, decor)


# --- Boundedness and non-degeneracy -------------------------------------------

def _primed_elements_hd(cfg: GonConfig) -> List[int]:
    return [_primed_slot(i) + 1 for i in range(1, cfg.m + 1)]


def _primed_apart(P: NcPartition, elements: List[int]) -> bool:
    return all(len([e for e in block if e in elements]) <= 1 for block in P.blocks)


def t_bounded(cfg: GonConfig, hd: HalfDecNcp, side: str) -> bool:
    """Left: P is the single block; right: P is the finest partition."""
    _check_side(side)
    _require_hd(cfg, hd)
    k = 2 * cfg.m
    return hd.P == (NcPartition.coarsest(k) if side == "left" else NcPartition.finest(k))


def t_nondeg(cfg: GonConfig, hd: HalfDecNcp, side: str) -> bool:
    _check_side(side)
    _require_hd(cfg, hd)
    primed = _primed_elements_hd(cfg)
    if side == "left":
        return all(not x.is_accend for x in hd.X) and _primed_apart(hd.P, primed)
    return all(not x.is_marker for x in hd.X) and _primed_apart(kreweras(hd.P), primed)


def cot_bounded(cfg: GonConfig, alt: AltNcp, side: str) -> bool:
    _check_side(side)
    _require_alt(cfg, alt)
    if side == "left":
        return alt.P == NcPartition.coarsest(cfg.m) and all(not x.is_accend for x in alt.X)
    return alt.P == NcPartition.finest(cfg.m) and all(not x.is_marker for x in alt.X)


def cot_nondeg(cfg: GonConfig, alt: AltNcp, side: str) -> bool:
    """Left non-degenerate iff right bounded, and dually."""
    _check_side(side)
    return cot_bounded(cfg, alt, "right" if side == "left" else "left")


# --- Adjacency, thickness and TTF triples -------------------------------------

def cot_adjacent(cfg: GonConfig, alt: AltNcp, side: str) -> bool:
    """Does the co-t-structure have a left (right) adjacent t-structure?

    Right: x_p = p+ forces {p+} to be a block. Left: x_p = p forces p- and
    p+ into one block. For p in [m], p- = p' and p+ = (p+1)'.
    """
    _check_side(side)
    _require_alt(cfg, alt)
    for i, x in enumerate(alt.X, start=1):
        after = _succ_index(cfg, i)
        if side == "right" and x.is_accend and alt.P.block_of(after) != (after,):
            return False
        if side == "left" and x.is_marker and not alt.P.same_block(i, after):
            return False
    return True


def thick_classify(cfg: GonConfig, alt: AltNcp) -> Dict[str, bool]:
    _require_alt(cfg, alt)
    thick = all(x.is_marker or x.is_accend for x in alt.X)
    return {
        "precovering_thick": thick,
        "preenveloping_coaisle": thick,
        "functorially_finite": thick and cot_adjacent(cfg, alt, "left"),
    }


def ttf_triple(cfg: GonConfig, alt: AltNcp) -> Tuple[SymArcSet, SymArcSet, SymArcSet]:
    """(⊥X, X, X⊥) for a functorially finite thick aisle X.

    Both (⊥X, X) and (X, X⊥) are t-structures.

    Raises:
        ContractViolation: If the aisle is not functorially finite thick
    """
    if not thick_classify(cfg, alt)["functorially_finite"]:
        raise ContractViolation("TTF triples need a functorially finite thick subcategory")
    X = cot_aisle(cfg, alt)
    return perp(cfg, X, "left"), X, perp(cfg, X, "right")


# --- Descriptors --------------------------------------------------------------

def describe_t(cfg: GonConfig, hd: HalfDecNcp) -> TorsionDescriptor:
    flags = {
        "left_bounded": t_bounded(cfg, hd, "left"),
        "right_bounded": t_bounded(cfg, hd, "right"),
        "left_nondegenerate": t_nondeg(cfg, hd, "left"),
        "right_nondegenerate": t_nondeg(cfg, hd, "right"),
    }
    return TorsionDescriptor("t", hd, t_aisle(cfg, hd), t_coaisle(cfg, hd), flags)


def describe_cot(cfg: GonConfig, alt: AltNcp) -> TorsionDescriptor:
    flags = {
        "left_bounded": cot_bounded(cfg, alt, "left"),
        "right_bounded": cot_bounded(cfg, alt, "right"),
        "left_nondegenerate": cot_nondeg(cfg, alt, "left"),
        "right_nondegenerate": cot_nondeg(cfg, alt, "right"),
        "left_adjacent": cot_adjacent(cfg, alt, "left"),
        "right_adjacent": cot_adjacent(cfg, alt, "right"),
    }
    flags.update(thick_classify(cfg, alt))
    return TorsionDescriptor("cot", alt, cot_aisle(cfg, alt), cot_coaisle(cfg, alt), flags)


def aisle_leq(cfg: GonConfig, A: TorsionDescriptor, B: TorsionDescriptor) -> bool:
    if A.kind != B.kind:
        raise ContractViolation("Cannot compare a t-structure with a co-t-structure")
    return is_subset(cfg, A.aisle, B.aisle)


# --- Lattice operations -------------------------------------------------------

def _checked(cfg: GonConfig, result: TorsionDescriptor, which: str,
             S: SymArcSet, T: SymArcSet, verify: bool) -> TorsionDescriptor:
    if verify:
        got = result.aisle if which == "aisle" else result.coaisle
        if not set_equals(cfg, got, intersect(cfg, S, T)):
            raise InfgonError(f"{which} of the {result.kind} lattice operation is not the intersection")
    return result


def tt_meet(cfg: GonConfig, A: HalfDecNcp, B: HalfDecNcp, verify: bool = True) -> TorsionDescriptor:
    """Meet of t-structures: aisle(meet) = aisle(A) ∩ aisle(B)."""
    result = describe_t(cfg, hd_meet(cfg, A, B))
    return _checked(cfg, result, "aisle", t_aisle(cfg, A), t_aisle(cfg, B), verify)


def tt_join(cfg: GonConfig, A: HalfDecNcp, B: HalfDecNcp, verify: bool = True) -> TorsionDescriptor:
    """Join of t-structures: coaisle(join) = coaisle(A) ∩ coaisle(B)."""
    result = describe_t(cfg, hd_join(cfg, A, B))
    return _checked(cfg, result, "coaisle", t_coaisle(cfg, A), t_coaisle(cfg, B), verify)


def cot_meet(cfg: GonConfig, A: AltNcp, B: AltNcp, verify: bool = True) -> TorsionDescriptor:
    result = describe_cot(cfg, alt_meet(cfg, A, B))
    return _checked(cfg, result, "aisle", cot_aisle(cfg, A), cot_aisle(cfg, B), verify)


def cot_join(cfg: GonConfig, A: AltNcp, B: AltNcp, verify: bool = True) -> TorsionDescriptor:
    result = describe_cot(cfg, alt_join(cfg, A, B))
    return _checked(cfg, result, "coaisle", cot_coaisle(cfg, A), cot_coaisle(cfg, B), verify)


def describe(cfg: GonConfig, datum: Datum) -> TorsionDescriptor:
    if isinstance(datum, HalfDecNcp):
        return describe_t(cfg, datum)
    return describe_cot(cfg, datum)
