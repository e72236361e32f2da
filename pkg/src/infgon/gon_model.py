"""
Geometric ground of the engine.

Points of the doubled infinity-gon Z_2m and of the completed gon Z̄_m, the
total order on them, intervals, arcs, crossing and the projection π between
the two models.

Layout: accumulation tokens sit on the cyclic chain 1' < 1 < 2' < 2 < ... <
m' < m, and the segment labelled q occupies the open arc (q, q+). Every token
is reduced to a sortable key (slot, kind, pos) where slot = 2(i-1) for i' and
2(i-1)+1 for i, kind 0 is the accumulation token itself (marker or blob) and
kind 1 is a point of the segment.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple, Union

from .errors import ContractViolation

# Initialize logger for this module
logger = logging.getLogger("gon_model")

# Base points of the primed segments
Z0 = 0
W0 = Z0 - 1


class Model(str, Enum):
    """Which infinity-gon an arc lives on."""
    TWO_M = "2m"
    BAR = "bar"


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


# --- Labels and configuration -------------------------------------------------

@dataclass(frozen=True)
class AccLabel:
    """Accumulation label i or i'."""
    index: int
    primed: bool = False

    @property
    def slot(self) -> int:
        return 2 * (self.index - 1) + (0 if self.primed else 1)

    @classmethod
    def from_slot(cls, slot: int) -> "AccLabel":
        return cls(slot // 2 + 1, slot % 2 == 0)

    @classmethod
    def parse(cls, value: Union[int, str]) -> "AccLabel":
        """Parse 2, "2", "2'" or "2′" into a label."""
        if isinstance(value, bool):
            raise ContractViolation(f"Not a label: {value!r}")
        if isinstance(value, int):
            return cls(value, False)
        text = str(value).strip()
        primed = text.endswith("'") or text.endswith("′")
        digits = text.rstrip("'′")
        if not digits.isdigit():
            raise ContractViolation(f"Not a label: {value!r}")
        return cls(int(digits), primed)

    def __str__(self) -> str:
        return f"{self.index}'" if self.primed else str(self.index)


@dataclass(frozen=True)
class GonConfig:
    """Number m of unprimed accumulation points."""
    m: int

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ContractViolation(f"m must be a positive integer, got {self.m!r}")

    @property
    def n_slots(self) -> int:
        return 2 * self.m

    def labels(self) -> List[AccLabel]:
        """All 2m labels in chain order 1' < 1 < ... < m' < m."""
        return [AccLabel.from_slot(s) for s in range(self.n_slots)]

    def primed_labels(self) -> List[AccLabel]:
        return [AccLabel(i, True) for i in range(1, self.m + 1)]

    def unprimed_labels(self) -> List[AccLabel]:
        return [AccLabel(i, False) for i in range(1, self.m + 1)]

    def succ(self, label: AccLabel) -> AccLabel:
        self.check_label(label)
        return AccLabel.from_slot((label.slot + 1) % self.n_slots)

    def pred(self, label: AccLabel) -> AccLabel:
        self.check_label(label)
        return AccLabel.from_slot((label.slot - 1) % self.n_slots)

    def check_label(self, label: AccLabel) -> None:
        if not 1 <= label.index <= self.m:
            raise ContractViolation(f"Label {label} out of range for m={self.m}")

    def is_blob_slot(self, slot: int, model: Model) -> bool:
        """In the completed gon every primed segment is collapsed to a blob."""
        return model == Model.BAR and slot % 2 == 0

    def slots(self) -> range:
        return range(self.n_slots)


# --- Points -------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    """A point of segment `segment` at integer position `pos`.

    Points of unprimed segments are the regular points of both models; points
    of primed segments exist only in the doubled gon.
    """
    segment: AccLabel
    pos: int

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.segment.slot, 1, self.pos)

    @property
    def slot(self) -> int:
        return self.segment.slot

    @property
    def coord(self) -> int:
        return self.pos

    def __str__(self) -> str:
        return f"{self.segment}:{self.pos}"


@dataclass(frozen=True)
class Blob:
    """Accumulation point p' of the completed gon, a legal arc endpoint."""
    label: AccLabel

    def __post_init__(self):
        if not self.label.primed:
            raise ContractViolation(f"Blobs carry primed labels, got {self.label}")

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.label.slot, 0, 0)

    @property
    def slot(self) -> int:
        return self.label.slot

    @property
    def coord(self) -> int:
        return 0

    def __str__(self) -> str:
        return str(self.label)


@dataclass(frozen=True)
class Marker:
    """Bare accumulation token; an interval bound, never an arc endpoint."""
    label: AccLabel

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.label.slot, 0, 0)

    @property
    def slot(self) -> int:
        return self.label.slot

    def __str__(self) -> str:
        return f"[{self.label}]"


Endpoint = Union[Point, Blob]
ExtPoint = Union[Point, Blob, Marker]


def reg(index: int, pos: int) -> Point:
    """Regular point of unprimed segment `index`."""
    return Point(AccLabel(index, False), pos)


def seg_point(index: int, pos: int, primed: bool = False) -> Point:
    return Point(AccLabel(index, primed), pos)


def blob(index: int) -> Blob:
    return Blob(AccLabel(index, True))


def marker(index: int, primed: bool = False) -> Marker:
    return Marker(AccLabel(index, primed))


_BOTH = frozenset({Model.TWO_M, Model.BAR})


def token_models(tok: ExtPoint) -> FrozenSet[Model]:
    """Models whose token universe contains `tok`."""
    if isinstance(tok, Blob):
        return frozenset({Model.BAR})
    if isinstance(tok, Point):
        return frozenset({Model.TWO_M}) if tok.segment.primed else _BOTH
    if isinstance(tok, Marker):
        # a primed marker coincides with the blob in the completed gon
        return frozenset({Model.TWO_M}) if tok.label.primed else _BOTH
    raise ContractViolation(f"Not a gon token: {tok!r}")


def _label_of(tok: ExtPoint) -> AccLabel:
    return tok.segment if isinstance(tok, Point) else tok.label


def compare(cfg: GonConfig, a: ExtPoint, b: ExtPoint) -> Ordering:
    """Compare two tokens in the total order of their common model.

    Raises:
        ContractViolation: If the tokens belong to different models
    """
    cfg.check_label(_label_of(a))
    cfg.check_label(_label_of(b))
    if not token_models(a) & token_models(b):
        raise ContractViolation(f"Cannot compare {a} and {b}: tokens of different models")
    if a.key < b.key:
        return Ordering.LT
    if a.key > b.key:
        return Ordering.GT
    return Ordering.EQ


def offset(tok: ExtPoint, k: int) -> ExtPoint:
    """tok + k with accumulation tokens as fixed points."""
    if isinstance(tok, Point):
        return Point(tok.segment, tok.pos + k)
    return tok


def shift_point(tok: ExtPoint, n: int) -> ExtPoint:
    """Σⁿ on a single endpoint: decrement n times."""
    return offset(tok, -n)


# --- Arcs ---------------------------------------------------------------------

def _shape_ok(x1, x2, model: Model) -> bool:
    if not isinstance(x1, (Point, Blob)) or not isinstance(x2, (Point, Blob)):
        return False
    if model not in token_models(x1) or model not in token_models(x2):
        return False
    if not x1.key < x2.key:
        return False
    if isinstance(x1, Point) and isinstance(x2, Point) and x1.segment == x2.segment:
        return x2.pos >= x1.pos + 2
    return True


@dataclass(frozen=True)
class Arc:
    """Arc (x1, x2) with x1 < x2, tagged with its model."""
    x1: Endpoint
    x2: Endpoint
    model: Model

    def __post_init__(self):
        if not _shape_ok(self.x1, self.x2, self.model):
            raise ContractViolation(f"Invalid {self.model.value} arc ({self.x1}, {self.x2})")

    @property
    def sort_key(self):
        return (self.x1.key, self.x2.key)

    def endpoints(self) -> Tuple[Endpoint, Endpoint]:
        return (self.x1, self.x2)

    @property
    def slots(self) -> Tuple[int, int]:
        return (self.x1.slot, self.x2.slot)

    def blob_count(self) -> int:
        return sum(isinstance(x, Blob) for x in self.endpoints())

    def __str__(self) -> str:
        return f"({self.x1}, {self.x2})"


def is_valid_arc(cfg: GonConfig, x1, x2, model: Model) -> bool:
    try:
        cfg.check_label(_label_of(x1))
        cfg.check_label(_label_of(x2))
    except (ContractViolation, AttributeError):
        return False
    return _shape_ok(x1, x2, model)


def try_arc(cfg: GonConfig, u: Endpoint, v: Endpoint, model: Model) -> Optional[Arc]:
    """The arc joining u and v in either order, or None when invalid."""
    if u.key > v.key:
        u, v = v, u
    if not is_valid_arc(cfg, u, v, model):
        return None
    return Arc(u, v, model)


def make_arc(cfg: GonConfig, u: Endpoint, v: Endpoint, model: Model) -> Arc:
    arc = try_arc(cfg, u, v, model)
    if arc is None:
        raise ContractViolation(f"({u}, {v}) is not a valid {model.value} arc for m={cfg.m}")
    return arc


def crosses(cfg: GonConfig, a: Arc, b: Arc) -> bool:
    """Strict interleaving; arcs sharing an endpoint never cross."""
    if a.model != b.model:
        raise ContractViolation("Cannot test crossing across models")
    a1, a2 = a.x1.key, a.x2.key
    b1, b2 = b.x1.key, b.x2.key
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


# --- Projection π and lifting -------------------------------------------------

def project_point(tok: Endpoint) -> Endpoint:
    if isinstance(tok, Point) and tok.segment.primed:
        return Blob(tok.segment)
    return tok


def lift_point(tok: Endpoint) -> Endpoint:
    if isinstance(tok, Blob):
        return Point(tok.label, Z0)
    return tok


def project_arc(cfg: GonConfig, a: Arc) -> Optional[Arc]:
    """π on objects; None for arcs of D (both endpoints in one primed segment)."""
    if a.model != Model.TWO_M:
        raise ContractViolation("project_arc expects an arc of the doubled gon")
    u, v = project_point(a.x1), project_point(a.x2)
    if u == v:
        return None
    return Arc(u, v, Model.BAR)


def lift_arc(cfg: GonConfig, a: Arc) -> Arc:
    """Representative in category A: blobs go to the base point z⁰."""
    if a.model != Model.BAR:
        raise ContractViolation("lift_arc expects an arc of the completed gon")
    return Arc(lift_point(a.x1), lift_point(a.x2), Model.TWO_M)


def window_points(cfg: GonConfig, W: int, model: Model) -> List[Endpoint]:
    """All endpoints with positions in [-W, W], in token order."""
    points: List[Endpoint] = []
    for label in cfg.labels():
        if cfg.is_blob_slot(label.slot, model):
            points.append(Blob(label))
        else:
            points.extend(Point(label, n) for n in range(-W, W + 1))
    return points


def enumerate_window(cfg: GonConfig, W: int, model: Model) -> List[Arc]:
    """All valid arcs with positions in [-W, W], lexicographically sorted."""
    if W < 0:
        raise ContractViolation(f"Window must be non-negative, got {W}")
    arcs = [
        Arc(u, v, model)
        for u, v in combinations(window_points(cfg, W, model), 2)
        if _shape_ok(u, v, model)
    ]
    arcs.sort(key=lambda arc: arc.sort_key)
    logger.debug(f"Window m={cfg.m} W={W} {model.value}: {len(arcs)} arcs")
    return arcs


# --- Intervals ----------------------------------------------------------------

SlotRange = Tuple[Optional[int], Optional[int]]


@dataclass(frozen=True)
class Interval:
    """Interval of tokens; a None bound means the bottom (top) of the order.

    A bounded interval with lo > hi wraps: it denotes {z : z >= lo or z <= hi}
    (closedness as given).
    """
    lo: Optional[ExtPoint] = None
    lo_closed: bool = True
    hi: Optional[ExtPoint] = None
    hi_closed: bool = True
    empty: bool = False

    @property
    def wraps(self) -> bool:
        return (not self.empty and self.lo is not None and self.hi is not None
                and self.lo.key > self.hi.key)

    def _above_lo(self, key) -> bool:
        if self.lo is None:
            return True
        return key >= self.lo.key if self.lo_closed else key > self.lo.key

    def _below_hi(self, key) -> bool:
        if self.hi is None:
            return True
        return key <= self.hi.key if self.hi_closed else key < self.hi.key

    def contains(self, tok: ExtPoint) -> bool:
        if self.empty:
            return False
        if self.wraps:
            return self._above_lo(tok.key) or self._below_hi(tok.key)
        return self._above_lo(tok.key) and self._below_hi(tok.key)

    def pieces(self) -> List["Interval"]:
        """Linear pieces, at most two."""
        if self.empty:
            return []
        if self.wraps:
            return [Interval(self.lo, self.lo_closed, None, True),
                    Interval(None, True, self.hi, self.hi_closed)]
        return [self]

    def normalized(self) -> "Interval":
        if self.empty:
            return EMPTY
        if (self.lo is not None and self.hi is not None and self.lo.key == self.hi.key
                and not (self.lo_closed and self.hi_closed)):
            return EMPTY
        return self

    def slot_range(self, slot: int, blob_slot: bool) -> Optional[SlotRange]:
        """Coordinates of this (linear) interval inside one slot.

        Discrete slots give (lo, hi) with None for unbounded; a blob slot gives
        (0, 0) when the blob is included. None means no coordinate at all.
        """
        if self.empty:
            return None
        if self.wraps:
            raise ContractViolation("slot_range expects a linear piece")
        if blob_slot:
            key = (slot, 0, 0)
            return (0, 0) if self._above_lo(key) and self._below_hi(key) else None
        lo: Optional[int] = None
        hi: Optional[int] = None
        if self.lo is not None:
            ls, lk, lp = self.lo.key
            if ls > slot:
                return None
            if ls == slot and lk == 1:
                lo = lp if self.lo_closed else lp + 1
        if self.hi is not None:
            hs, hk, hp = self.hi.key
            if hs < slot:
                return None
            if hs == slot:
                if hk == 0:
                    return None
                hi = hp if self.hi_closed else hp - 1
        if lo is not None and hi is not None and lo > hi:
            return None
        return (lo, hi)

    def __str__(self) -> str:
        if self.empty:
            return "∅"
        left = "[" if self.lo_closed and self.lo is not None else "("
        right = "]" if self.hi_closed and self.hi is not None else ")"
        lo = "-∞" if self.lo is None else str(self.lo)
        hi = "∞" if self.hi is None else str(self.hi)
        return f"{left}{lo}, {hi}{right}"


EMPTY = Interval(empty=True)


def closed(lo: Optional[ExtPoint], hi: Optional[ExtPoint]) -> Interval:
    return Interval(lo, True, hi, True).normalized()


def span(lo: Optional[ExtPoint], lo_closed: bool, hi: Optional[ExtPoint], hi_closed: bool) -> Interval:
    return Interval(lo, lo_closed, hi, hi_closed).normalized()
