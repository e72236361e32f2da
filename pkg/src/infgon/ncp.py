"""
Non-crossing partitions, the Kreweras complement and the refinement lattice,
plus the decorated variants that classify (co-)t-structures.

Half-decorated partitions live on the 2m labels 1' < 1 < ... < m' < m
(element number = slot + 1); alternating partitions live on the m primed
labels (element number = index). Decorations x_p are indexed by the
unprimed labels p = 1..m.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import ContractViolation
from .gon_model import AccLabel, GonConfig

# Initialize logger for this module
logger = logging.getLogger("ncp")


# --- Plain non-crossing partitions --------------------------------------------

@dataclass(frozen=True)
class NcPartition:
    """Set partition of {1..k}; blocks sorted internally and by minimum."""
    k: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(set(b))) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise ContractViolation("Partition blocks must be non-empty")
        seen = [e for b in blocks for e in b]
        if sorted(seen) != list(range(1, self.k + 1)):
            raise ContractViolation(f"Blocks {blocks} do not partition [1..{self.k}]")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, k: int, blocks: Iterable[Iterable[int]]) -> "NcPartition":
        return cls(k, tuple(tuple(b) for b in blocks))

    @classmethod
    def finest(cls, k: int) -> "NcPartition":
        return cls(k, tuple((i,) for i in range(1, k + 1)))

    @classmethod
    def coarsest(cls, k: int) -> "NcPartition":
        return cls(k, (tuple(range(1, k + 1)),))

    def block_of(self, e: int) -> Tuple[int, ...]:
        for b in self.blocks:
            if e in b:
                return b
        raise ContractViolation(f"{e} is not in [1..{self.k}]")

    def same_block(self, a: int, b: int) -> bool:
        return b in self.block_of(a)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def _blocks_cross(a: Sequence[int], b: Sequence[int]) -> bool:
    for i1, i2 in combinations(sorted(a), 2):
        inside = [x for x in b if i1 < x < i2]
        if inside and len(inside) < len(b):
            return True
    return False


def _is_noncrossing_blocks(blocks: Sequence[Sequence[int]]) -> bool:
    return not any(_blocks_cross(a, b) for a, b in combinations(blocks, 2))


def is_noncrossing(P: NcPartition) -> bool:
    return _is_noncrossing_blocks(P.blocks)


def _nc_blocks(elems: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for r in range(len(rest) + 1):
        for chosen in combinations(range(len(rest)), r):
            block = (first,) + tuple(rest[i] for i in chosen)
            gaps = []
            prev = -1
            for i in chosen:
                gaps.append(rest[prev + 1:i])
                prev = i
            gaps.append(rest[prev + 1:])
            for parts in product(*[list(_nc_blocks(g)) for g in gaps]):
                yield [block] + [b for part in parts for b in part]


def enumerate_ncp(k: int) -> List[NcPartition]:
    """All non-crossing partitions of [k]: the block of 1 splits the rest into independent gaps."""
    if k < 1:
        raise ContractViolation(f"k must be positive, got {k}")
    partitions = [NcPartition(k, tuple(blocks)) for blocks in _nc_blocks(tuple(range(1, k + 1)))]
    partitions.sort(key=lambda P: P.blocks)
    logger.debug(f"enumerate_ncp({k}): {len(partitions)} partitions")
    return partitions


def _densify(fixed: List[Tuple[int, ...]], free: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Greedily merge `free` blocks while fixed ∪ free stays non-crossing."""
    free = [tuple(b) for b in free]
    changed = True
    while changed:
        changed = False
        for i, j in combinations(range(len(free)), 2):
            merged = tuple(sorted(free[i] + free[j]))
            candidate = [b for n, b in enumerate(free) if n not in (i, j)] + [merged]
            if _is_noncrossing_blocks(fixed + candidate):
                free = candidate
                changed = True
                break
    return free


def kreweras(P: NcPartition) -> NcPartition:
    """Kreweras complement; the complement's label i is the gap following element i."""
    if not is_noncrossing(P):
        raise ContractViolation(f"{P} is crossing")
    fixed = [tuple(2 * e - 1 for e in b) for b in P.blocks]
    gaps = _densify(fixed, [(2 * i,) for i in range(1, P.k + 1)])
    return NcPartition(P.k, tuple(tuple(e // 2 for e in b) for b in gaps))


def kreweras_inverse(Q: NcPartition) -> NcPartition:
    if not is_noncrossing(Q):
        raise ContractViolation(f"{Q} is crossing")
    fixed = [tuple(2 * e for e in b) for b in Q.blocks]
    elems = _densify(fixed, [(2 * i - 1,) for i in range(1, Q.k + 1)])
    return NcPartition(Q.k, tuple(tuple((e + 1) // 2 for e in b) for b in elems))


def _same_k(P: NcPartition, Q: NcPartition) -> None:
    if P.k != Q.k:
        raise ContractViolation(f"Partitions of different ground sets: {P.k} and {Q.k}")


def nc_leq(P: NcPartition, Q: NcPartition) -> bool:
    """Refinement order: every block of P lies in a block of Q."""
    _same_k(P, Q)
    return all(set(b) <= set(Q.block_of(b[0])) for b in P.blocks)


def nc_meet(P: NcPartition, Q: NcPartition) -> NcPartition:
    _same_k(P, Q)
    blocks = [tuple(sorted(set(a) & set(b))) for a in P.blocks for b in Q.blocks]
    return NcPartition(P.k, tuple(b for b in blocks if b))


def nc_join(P: NcPartition, Q: NcPartition) -> NcPartition:
    _same_k(P, Q)
    return kreweras_inverse(nc_meet(kreweras(P), kreweras(Q)))


# --- Decorations --------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Decoration:
    """x_p on the chain Marker(p) < Reg(p, n) < AccEnd(p+)."""
    rank: int
    pos: int = 0

    MARKER = 0
    REG = 1
    ACCEND = 2

    @classmethod
    def marker(cls) -> "Decoration":
        return cls(cls.MARKER)

    @classmethod
    def reg(cls, n: int) -> "Decoration":
        return cls(cls.REG, n)

    @classmethod
    def accend(cls) -> "Decoration":
        return cls(cls.ACCEND)

    @property
    def is_marker(self) -> bool:
        return self.rank == self.MARKER

    @property
    def is_reg(self) -> bool:
        return self.rank == self.REG

    @property
    def is_accend(self) -> bool:
        return self.rank == self.ACCEND

    def decrement(self) -> "Decoration":
        """x - 1; both chain ends are fixed points."""
        return Decoration.reg(self.pos - 1) if self.is_reg else self

    def __str__(self) -> str:
        if self.is_marker:
            return "marker"
        if self.is_accend:
            return "accend"
        return str(self.pos)


def decorations(positions: Iterable[int], marker: bool = True, accend: bool = True) -> List[Decoration]:
    out = [Decoration.marker()] if marker else []
    out.extend(Decoration.reg(n) for n in positions)
    if accend:
        out.append(Decoration.accend())
    return out


# --- Label bookkeeping --------------------------------------------------------

def hd_element(label: AccLabel) -> int:
    return label.slot + 1


def hd_label(element: int) -> AccLabel:
    return AccLabel.from_slot(element - 1)


def alt_element(label: AccLabel) -> int:
    if not label.primed:
        raise ContractViolation(f"Alternating partitions live on primed labels, got {label}")
    return label.index


def alt_label(element: int) -> AccLabel:
    return AccLabel(element, True)


@dataclass(frozen=True)
class HalfDecNcp:
    """Half-decorated partition: P on [m'] ∪ [m] and decorations x_1..x_m."""
    P: NcPartition
    X: Tuple[Decoration, ...]

    def x(self, index: int) -> Decoration:
        return self.X[index - 1]

    def block_labels(self) -> List[List[AccLabel]]:
        return [[hd_label(e) for e in b] for b in self.P.blocks]


@dataclass(frozen=True)
class AltNcp:
    """Alternating partition: P on [m'] and decorations x_1..x_m."""
    P: NcPartition
    X: Tuple[Decoration, ...]

    def x(self, index: int) -> Decoration:
        return self.X[index - 1]

    def block_labels(self) -> List[List[AccLabel]]:
        return [[alt_label(e) for e in b] for b in self.P.blocks]


# --- Validation ---------------------------------------------------------------

def allowed_hd(cfg: GonConfig, P: NcPartition, index: int) -> Tuple[bool, bool]:
    """(Marker allowed, AccEnd allowed) for x_index."""
    p = AccLabel(index, False)
    e, e_succ = hd_element(p), hd_element(cfg.succ(p))
    singleton = P.block_of(e) == (e,)
    return singleton, P.same_block(e, e_succ)


def validate_hd(cfg: GonConfig, P: NcPartition, X: Sequence[Decoration]) -> bool:
    if P.k != 2 * cfg.m or len(X) != cfg.m or not is_noncrossing(P):
        return False
    for index, x in enumerate(X, start=1):
        marker_ok, accend_ok = allowed_hd(cfg, P, index)
        if x.is_marker and not marker_ok:
            return False
        if x.is_accend and not accend_ok:
            return False
    return True


def validate_alt(cfg: GonConfig, P: NcPartition, X: Sequence[Decoration]) -> bool:
    return P.k == cfg.m and len(X) == cfg.m and is_noncrossing(P)


def make_hd(cfg: GonConfig, P: NcPartition, X: Sequence[Decoration]) -> HalfDecNcp:
    if not validate_hd(cfg, P, X):
        raise ContractViolation(f"({P}, {[str(x) for x in X]}) is not a half-decorated partition for m={cfg.m}")
    return HalfDecNcp(P, tuple(X))


def make_alt(cfg: GonConfig, P: NcPartition, X: Sequence[Decoration]) -> AltNcp:
    if not validate_alt(cfg, P, X):
        raise ContractViolation(f"({P}, {[str(x) for x in X]}) is not an alternating partition for m={cfg.m}")
    return AltNcp(P, tuple(X))


# --- Complements --------------------------------------------------------------

def complement_hd(cfg: GonConfig, hd: HalfDecNcp) -> HalfDecNcp:
    """(P^c, X - 1)."""
    return HalfDecNcp(kreweras(hd.P), tuple(x.decrement() for x in hd.X))


def complement_alt(cfg: GonConfig, alt: AltNcp) -> AltNcp:
    return AltNcp(kreweras(alt.P), tuple(x.decrement() for x in alt.X))


# --- Lattice operations -------------------------------------------------------

def _pointwise(X: Sequence[Decoration], Y: Sequence[Decoration], pick) -> Tuple[Decoration, ...]:
    if len(X) != len(Y):
        raise ContractViolation("Decoration tuples of different length")
    return tuple(pick(x, y) for x, y in zip(X, Y))


def hd_meet(cfg: GonConfig, A: HalfDecNcp, B: HalfDecNcp) -> HalfDecNcp:
    return HalfDecNcp(nc_meet(A.P, B.P), _pointwise(A.X, B.X, min))


def hd_join(cfg: GonConfig, A: HalfDecNcp, B: HalfDecNcp) -> HalfDecNcp:
    return HalfDecNcp(nc_join(A.P, B.P), _pointwise(A.X, B.X, max))


def alt_meet(cfg: GonConfig, A: AltNcp, B: AltNcp) -> AltNcp:
    return AltNcp(nc_meet(A.P, B.P), _pointwise(A.X, B.X, max))


def alt_join(cfg: GonConfig, A: AltNcp, B: AltNcp) -> AltNcp:
    return AltNcp(nc_join(A.P, B.P), _pointwise(A.X, B.X, min))


def hd_leq(A: HalfDecNcp, B: HalfDecNcp) -> bool:
    return nc_leq(A.P, B.P) and all(x <= y for x, y in zip(A.X, B.X))


def alt_leq(A: AltNcp, B: AltNcp) -> bool:
    return nc_leq(A.P, B.P) and all(y <= x for x, y in zip(A.X, B.X))


def next_in_block(P: NcPartition, B: Sequence[int], p: AccLabel) -> AccLabel:
    """p^{+_B}: next element of B after p in cyclic order; p itself for B = {p}."""
    e = alt_element(p)
    block = tuple(sorted(B))
    if block not in P.blocks or e not in block:
        raise ContractViolation(f"{p} is not in block {block} of {P}")
    later = [x for x in block if x > e]
    return alt_label(later[0] if later else block[0])


# --- Enumeration --------------------------------------------------------------

def enumerate_hd(cfg: GonConfig, positions: Iterable[int]) -> List[HalfDecNcp]:
    positions = list(positions)
    out = []
    for P in enumerate_ncp(2 * cfg.m):
        choices = []
        for index in range(1, cfg.m + 1):
            marker_ok, accend_ok = allowed_hd(cfg, P, index)
            choices.append(decorations(positions, marker=marker_ok, accend=accend_ok))
        out.extend(HalfDecNcp(P, X) for X in product(*choices))
    return out


def enumerate_alt(cfg: GonConfig, positions: Iterable[int]) -> List[AltNcp]:
    choices = decorations(list(positions))
    return [AltNcp(P, X) for P in enumerate_ncp(cfg.m) for X in product(choices, repeat=cfg.m)]
