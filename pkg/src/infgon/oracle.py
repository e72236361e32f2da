"""
Brute-force verification of the classification on finite windows.

Hom is recomputed here from the crossing/rotation description of the Hom
spaces, independently of the hammocks in hom_model, and every check walks
explicit window arcs. Iteration orders are fixed so reports are
reproducible.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..common.app_config import get_decoration_range, get_interior_margin, get_oracle_config
from .arcsets import (
    FinArcSet, SymArcSet, intersect, is_precovering, is_preenveloping, is_subset,
    is_t_aisle, is_cot_aisle, member, shift_set, truncate,
)
from .errors import ContractViolation, InfgonError
from .gon_model import Arc, Blob, GonConfig, Model, Point, blob, enumerate_window, reg
from .hom_model import ext_related, hom_dim, hom_dim_reverse, middle_term, shift_arc
from .ncp import (
    AltNcp, HalfDecNcp, NcPartition, Decoration,
    alt_join, alt_meet, enumerate_alt, enumerate_hd, enumerate_ncp, hd_join, hd_meet,
    kreweras, kreweras_inverse, nc_join, nc_leq, nc_meet, validate_alt, validate_hd,
)
from .schemas import ReportModel
from .torsion import (
    alt_from_cot_aisle, cot_adjacent, cot_aisle, cot_bounded, cot_coaisle, cot_coheart, cot_join,
    cot_meet, cot_nondeg, hd_from_aisle, t_aisle, t_bounded, t_coaisle, t_heart, t_nondeg,
    thick_classify, tt_join, tt_meet, ttf_triple,
)

# Initialize logger for this module
logger = logging.getLogger("oracle")


@dataclass
class Report:
    """Outcome of one suite: how many instances were checked and what failed."""
    suite: str
    checked: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance: str, witness: str) -> None:
        logger.debug(f"[{self.suite}] {instance}: {witness}")
        self.failures.append((instance, witness))

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failures.extend(other.failures)
        for key, value in other.details.items():
            if isinstance(value, int) and isinstance(self.details.get(key), int):
                self.details[key] += value
            else:
                self.details.setdefault(key, value)
        return self

    def to_dict(self) -> Dict[str, Any]:
        model = ReportModel(
            suite=self.suite,
            checked=self.checked,
            failures=[{"instance": i, "witness": w} for i, w in self.failures],
            passed=self.passed,
            details=self.details,
        )
        return model.model_dump()


def datum_name(datum) -> str:
    return f"{datum.P} X=({', '.join(str(x) for x in datum.X)})"


def _positions(decoration_range: Optional[Sequence[int]]) -> range:
    lo, hi = decoration_range if decoration_range is not None else get_decoration_range()
    return range(lo, hi + 1)


# --- Brute Hom ----------------------------------------------------------------

def _cyclic(z, w) -> Tuple[int, Tuple[int, int, int]]:
    """Position of w when walking anticlockwise from z."""
    return (0 if w.key >= z.key else 1, w.key)


def _other(arc: Arc, z):
    return arc.x2 if arc.x1 == z else arc.x1


def _crossing(a: Arc, b: Arc) -> bool:
    a1, a2 = a.x1.key, a.x2.key
    b1, b2 = b.x1.key, b.x2.key
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


def _clause(x: Arc, y: Arc) -> bool:
    """Hom(x, Σy) != 0: crossing, rotation about one shared blob, or two shared blobs."""
    if _crossing(x, y):
        return True
    shared = [z for z in x.endpoints() if z in y.endpoints() and isinstance(z, Blob)]
    if len(shared) == 2:
        return True
    if len(shared) == 1 and len(set(x.endpoints()) & set(y.endpoints())) == 1:
        z = shared[0]
        return _cyclic(z, _other(x, z)) < _cyclic(z, _other(y, z))
    return False


@lru_cache(maxsize=None)
def brute_hom(cfg: GonConfig, x: Arc, y: Arc) -> int:
    if x.model != y.model:
        raise ContractViolation("brute_hom arguments must share the model")
    return int(_clause(x, shift_arc(cfg, y, -1)))


def brute_hom_table(cfg: GonConfig, W: int, model: Model) -> Tuple[List[Arc], List[List[int]]]:
    """Window arcs and the 0/1 matrix of dim Hom(row, column)."""
    if W < 2:
        raise ContractViolation(f"brute_hom_table needs W >= 2, got {W}")
    arcs = enumerate_window(cfg, W, model)
    table = [[brute_hom(cfg, a, b) for b in arcs] for a in arcs]
    return arcs, table


def hom_discrepancies(cfg: GonConfig, W: int, model: Model) -> List[Tuple[Arc, Arc]]:
    """Window pairs on which the hammocks and the brute description disagree."""
    arcs, table = brute_hom_table(cfg, W, model)
    bad = []
    for i, a in enumerate(arcs):
        for j, b in enumerate(arcs):
            if hom_dim(cfg, model, a, b) != table[i][j]:
                bad.append((a, b))
    if bad:
        logger.warning(f"{len(bad)} Hom discrepancies for m={cfg.m}, W={W}, {model.value}")
    return bad


def brute_perp(cfg: GonConfig, X: FinArcSet, W: int, side: str = "right",
               model: Model = Model.BAR) -> FinArcSet:
    if side not in ("right", "left"):
        raise ContractViolation(f"side must be 'right' or 'left', got {side!r}")
    kept = []
    for t in enumerate_window(cfg, W, model):
        if side == "right":
            zero = all(brute_hom(cfg, x, t) == 0 for x in X.arcs)
        else:
            zero = all(brute_hom(cfg, t, x) == 0 for x in X.arcs)
        if zero:
            kept.append(t)
    return FinArcSet(W, frozenset(kept))


# --- Extension closure --------------------------------------------------------

def in_window(arc: Arc, W: int) -> bool:
    return all(abs(x.pos) <= W for x in arc.endpoints() if isinstance(x, Point))


def is_interior(arc: Arc, W: int, margin: int) -> bool:
    return in_window(arc, W - margin)


def _extensions(cfg: GonConfig, model: Model, a: Arc, b: Arc) -> List[Arc]:
    """Middle-term summands of the non-split extensions between a and b."""
    if not ext_related(cfg, model, a, b):
        return []
    out = []
    for first, last in ((a, b), (b, a)):
        if not hom_dim(cfg, model, last, shift_arc(cfg, first, 1)):
            continue
        try:
            out.extend(middle_term(cfg, model, first, last))
        except ContractViolation as e:
            logger.debug(f"No middle term for {first} → ? → {last}: {e}")
    return out


def ptolemy_closure(cfg: GonConfig, F: FinArcSet, W: int, model: Model = Model.BAR) -> FinArcSet:
    """Least superset of F inside the window closed under middle terms."""
    members = set(F.arcs)
    frontier = sorted(members, key=lambda a: a.sort_key)
    while frontier:
        current = sorted(members, key=lambda a: a.sort_key)
        added = []
        for a in frontier:
            for b in current:
                for t in _extensions(cfg, model, a, b):
                    if t not in members and in_window(t, W):
                        members.add(t)
                        added.append(t)
        frontier = added
    return FinArcSet(W, frozenset(members))


# --- Torsion pairs ------------------------------------------------------------

def _decomposes(cfg: GonConfig, model: Model, t: Arc, xs: List[Arc], ys: List[Arc]) -> bool:
    """Is there a triangle x → t → y → Σx with x in xs, y in ys?"""
    ends = set(t.endpoints())
    xs = [x for x in xs if ends & set(x.endpoints())]
    ys = [y for y in ys if ends & set(y.endpoints())]
    for x in xs:
        for y in ys:
            if not hom_dim(cfg, model, y, shift_arc(cfg, x, 1)):
                continue
            try:
                if middle_term(cfg, model, x, y) == [t]:
                    return True
            except ContractViolation:
                continue
    return False


def verify_torsion(cfg: GonConfig, X: SymArcSet, Y: SymArcSet, W: int,
                   margin: Optional[int] = None, name: str = "") -> Report:
    """Windowed check that (X, Y) is a torsion pair.

    Hom(X, Y) must vanish on every window pair. Each interior arc outside
    X ∪ Y must sit in a triangle x → t → y; arcs with no such triangle are
    certified instead by Y = X⊥ on the window with X precovering and
    extension closed.
    """
    if X.model != Y.model:
        raise ContractViolation("verify_torsion needs two sets of one model")
    model = X.model
    margin = get_interior_margin() if margin is None else margin
    report = Report("torsion", details={"hom_pairs": 0, "direct": 0, "certified": 0})
    arcs = enumerate_window(cfg, W, model)
    xs = [a for a in arcs if member(cfg, X, a)]
    ys = [a for a in arcs if member(cfg, Y, a)]

    for x in xs:
        for y in ys:
            report.details["hom_pairs"] += 1
            if brute_hom(cfg, x, y):
                report.fail(name, f"Hom({x}, {y}) != 0")
                return report

    certificate: Optional[bool] = None
    for t in arcs:
        if not is_interior(t, W, margin) or member(cfg, X, t) or member(cfg, Y, t):
            continue
        report.checked += 1
        if _decomposes(cfg, model, t, xs, ys):
            report.details["direct"] += 1
            continue
        if certificate is None:
            certificate = _certify(cfg, X, Y, W, margin, xs)
        if certificate:
            report.details["certified"] += 1
        else:
            report.fail(name, f"{t} has no decomposition")
    return report


def _certify(cfg: GonConfig, X: SymArcSet, Y: SymArcSet, W: int, margin: int, xs: List[Arc]) -> bool:
    model = X.model
    if model == Model.BAR and not is_precovering(cfg, X):
        return False
    F = FinArcSet(W, frozenset(xs))
    closure = ptolemy_closure(cfg, F, W, model)
    if any(is_interior(a, W, margin) for a in closure.arcs - F.arcs):
        return False
    right = brute_perp(cfg, F, W, "right", model)
    for t in enumerate_window(cfg, W, model):
        if is_interior(t, W, margin) and (t in right) != member(cfg, Y, t):
            return False
    return True


def _truncated(cfg: GonConfig, S: SymArcSet, W: int) -> List[Arc]:
    return truncate(cfg, S, W).sorted_arcs()


def check_heart(cfg: GonConfig, hd: HalfDecNcp, W: int) -> Optional[str]:
    expected = {a for a in t_heart(cfg, hd) if in_window(a, W)}
    windowed = set(_truncated(cfg, intersect(cfg, t_aisle(cfg, hd), shift_set(cfg, t_coaisle(cfg, hd), 1)), W))
    if expected != windowed:
        return f"heart {sorted(map(str, expected))} != window {sorted(map(str, windowed))}"
    return None


def check_coheart(cfg: GonConfig, alt: AltNcp, W: int) -> Optional[str]:
    expected = {a for a in cot_coheart(cfg, alt) if in_window(a, W)}
    windowed = set(_truncated(cfg, intersect(cfg, cot_aisle(cfg, alt), shift_set(cfg, cot_coaisle(cfg, alt), -1)), W))
    if expected != windowed:
        return f"coheart {sorted(map(str, expected))} != window {sorted(map(str, windowed))}"
    return None


def check_extension_closed(cfg: GonConfig, S: SymArcSet, W: int, margin: int) -> Optional[str]:
    F = truncate(cfg, S, W)
    extra = [a for a in ptolemy_closure(cfg, F, W, S.model).arcs - F.arcs if is_interior(a, W, margin)]
    if extra:
        return f"closure adds {sorted(map(str, extra))[:3]}"
    return None


def verify_structures(cfg: GonConfig, W: int, decoration_range: Optional[Sequence[int]] = None,
                      kinds: Iterable[str] = ("hd", "alt")) -> Report:
    """Torsion axioms, heart formulas and extension closure on every instance."""
    report = Report("torsion", details={"hom_pairs": 0, "direct": 0, "certified": 0})
    margin = get_interior_margin()
    positions = _positions(decoration_range)
    for kind in kinds:
        data = enumerate_hd(cfg, positions) if kind == "hd" else enumerate_alt(cfg, positions)
        for datum in data:
            name = f"{kind} {datum_name(datum)}"
            if kind == "hd":
                X, Y = t_aisle(cfg, datum), t_coaisle(cfg, datum)
                problem = check_heart(cfg, datum, W)
            else:
                X, Y = cot_aisle(cfg, datum), cot_coaisle(cfg, datum)
                problem = check_coheart(cfg, datum, W)
            report.merge(verify_torsion(cfg, X, Y, W, margin, name))
            if problem:
                report.fail(name, problem)
            for S in (X, Y):
                problem = check_extension_closed(cfg, S, W, margin)
                if problem:
                    report.fail(name, problem)
    logger.info(f"torsion suite m={cfg.m} W={W}: {report.checked} arcs, {len(report.failures)} failures")
    return report


def verify_ttf(cfg: GonConfig, alt: AltNcp, W: int) -> Report:
    """Both halves of a TTF triple are torsion pairs on the window."""
    U, X, Y = ttf_triple(cfg, alt)
    report = verify_torsion(cfg, U, X, W, name=f"(⊥X, X) of {datum_name(alt)}")
    report.merge(verify_torsion(cfg, X, Y, W, name=f"(X, X⊥) of {datum_name(alt)}"))
    report.suite = "ttf"
    return report


# --- Round trips --------------------------------------------------------------

def verify_roundtrip(cfg: GonConfig, decoration_range: Optional[Sequence[int]] = None,
                     axioms: bool = False) -> Report:
    """aisle → datum → aisle on every instance; `axioms` also runs the aisle tests."""
    report = Report("roundtrip")
    positions = _positions(decoration_range)
    for hd in enumerate_hd(cfg, positions):
        report.checked += 1
        X = t_aisle(cfg, hd)
        if axioms and not is_t_aisle(cfg, X):
            report.fail(f"hd {datum_name(hd)}", "aisle fails the t-aisle conditions")
            continue
        back = hd_from_aisle(cfg, X, verify=False)
        if back != hd:
            report.fail(f"hd {datum_name(hd)}", f"returned {datum_name(back)}")
    for alt in enumerate_alt(cfg, positions):
        report.checked += 1
        X = cot_aisle(cfg, alt)
        if axioms and not is_cot_aisle(cfg, X):
            report.fail(f"alt {datum_name(alt)}", "aisle fails the co-t-aisle conditions")
            continue
        back = alt_from_cot_aisle(cfg, X, verify=False)
        if back != alt:
            report.fail(f"alt {datum_name(alt)}", f"returned {datum_name(back)}")
    return report


# --- Lattices -----------------------------------------------------------------

def _rgs(k: int) -> List[List[int]]:
    """Restricted growth strings of length k."""
    out = [[0]]
    for _ in range(k - 1):
        out = [s + [v] for s in out for v in range(max(s) + 2)]
    return out


def _brute_noncrossing(blocks: Sequence[Sequence[int]]) -> bool:
    owner = {e: n for n, b in enumerate(blocks) for e in b}
    elems = sorted(owner)
    for a, b, c, d in ((a, b, c, d) for a in elems for b in elems if b > a
                       for c in elems if c > b for d in elems if d > c):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return False
    return True


def independent_ncps(k: int) -> List[NcPartition]:
    """Set partitions of [k] filtered by a direct crossing test."""
    found = []
    for s in _rgs(k):
        blocks = [[i + 1 for i, v in enumerate(s) if v == b] for b in range(max(s) + 1)]
        if _brute_noncrossing(blocks):
            found.append(NcPartition.of(k, blocks))
    return sorted(found, key=lambda P: P.blocks)


def catalan(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def verify_lattice(k: int, assoc_max: int = 4) -> Report:
    """Counts, Kreweras, bounds and lattice laws on all partitions of [j], j <= k."""
    report = Report("lattice")
    for j in range(1, k + 1):
        ncps = enumerate_ncp(j)
        if ncps != independent_ncps(j) or len(ncps) != catalan(j):
            report.fail(f"k={j}", f"{len(ncps)} partitions, expected {catalan(j)}")
            continue
        for P in ncps:
            report.checked += 1
            if kreweras_inverse(kreweras(P)) != P:
                report.fail(f"k={j} {P}", "kreweras_inverse does not undo kreweras")
        for P, Q in product(ncps, repeat=2):
            name = f"k={j} {P} {Q}"
            meet, join = nc_meet(P, Q), nc_join(P, Q)
            lower = [R for R in ncps if nc_leq(R, P) and nc_leq(R, Q)]
            upper = [R for R in ncps if nc_leq(P, R) and nc_leq(Q, R)]
            if meet not in lower or any(not nc_leq(R, meet) for R in lower):
                report.fail(name, f"meet {meet} is not the greatest lower bound")
            if join not in upper or any(not nc_leq(join, R) for R in upper):
                report.fail(name, f"join {join} is not the least upper bound")
            if nc_leq(P, Q) != nc_leq(kreweras(Q), kreweras(P)):
                report.fail(name, "kreweras does not reverse the order")
            if kreweras(join) != nc_meet(kreweras(P), kreweras(Q)):
                report.fail(name, "complement of the join is not the meet of complements")
            if nc_meet(P, nc_join(P, Q)) != P or nc_join(P, nc_meet(P, Q)) != P:
                report.fail(name, "absorption fails")
            if meet != nc_meet(Q, P) or join != nc_join(Q, P):
                report.fail(name, "not commutative")
        if j <= assoc_max:
            for P, Q, R in product(ncps, repeat=3):
                if nc_meet(nc_meet(P, Q), R) != nc_meet(P, nc_meet(Q, R)) \
                        or nc_join(nc_join(P, Q), R) != nc_join(P, nc_join(Q, R)):
                    report.fail(f"k={j} {P} {Q} {R}", "not associative")
    return report


def verify_decorated_lattice(cfg: GonConfig, decoration_range: Optional[Sequence[int]] = None) -> Report:
    """Meets and joins of decorated partitions are valid and match intersections."""
    report = Report("lattice")
    positions = _positions(decoration_range)
    hds = enumerate_hd(cfg, positions)
    for A, B in product(hds, repeat=2):
        report.checked += 1
        name = f"hd {datum_name(A)} | {datum_name(B)}"
        meet, join = hd_meet(cfg, A, B), hd_join(cfg, A, B)
        if not validate_hd(cfg, meet.P, meet.X) or not validate_hd(cfg, join.P, join.X):
            report.fail(name, "meet or join is not half-decorated")
            continue
        try:
            tt_meet(cfg, A, B)
            tt_join(cfg, A, B)
        except InfgonError as e:
            report.fail(name, str(e))
    alts = enumerate_alt(cfg, positions)
    for A, B in product(alts, repeat=2):
        report.checked += 1
        name = f"alt {datum_name(A)} | {datum_name(B)}"
        meet, join = alt_meet(cfg, A, B), alt_join(cfg, A, B)
        if not validate_alt(cfg, meet.P, meet.X) or not validate_alt(cfg, join.P, join.X):
            report.fail(name, "meet or join is not alternating")
            continue
        try:
            cot_meet(cfg, A, B)
            cot_join(cfg, A, B)
        except InfgonError as e:
            report.fail(name, str(e))
    return report


def _t_flags(cfg: GonConfig, hd: HalfDecNcp) -> Dict[str, bool]:
    return {f"{side}_{name}": test(cfg, hd, side)
            for side in ("left", "right") for name, test in (("bounded", t_bounded), ("nondegenerate", t_nondeg))}


def _cot_flags(cfg: GonConfig, alt: AltNcp) -> Dict[str, bool]:
    flags = {f"{side}_{name}": test(cfg, alt, side)
             for side in ("left", "right")
             for name, test in (("bounded", cot_bounded), ("nondegenerate", cot_nondeg), ("adjacent", cot_adjacent))}
    flags["functorially_finite"] = thick_classify(cfg, alt)["functorially_finite"]
    return flags


def verify_sublattices(cfg: GonConfig, decoration_range: Optional[Sequence[int]] = None) -> Report:
    """Classes of (co-)t-structures closed under meet and join.

    Non-degenerate t-structures are not such a class; the number of pairs
    leaving it is recorded under details. Bounded t-structures never occur,
    and bounded co-t-structures only for m = 1.
    """
    report = Report("sublattice", details={"nondegenerate_t_escapes": 0, "bounded_t": 0, "bounded_cot": 0})
    positions = _positions(decoration_range)
    hds = [(hd, _t_flags(cfg, hd)) for hd in enumerate_hd(cfg, positions)]
    report.details["bounded_t"] = sum(f["left_bounded"] and f["right_bounded"] for _, f in hds)
    if report.details["bounded_t"]:
        report.fail(f"m={cfg.m}", "found a bounded t-structure")
    nondeg = ("left_nondegenerate", "right_nondegenerate")
    for (A, fa), (B, fb) in product(hds, repeat=2):
        report.checked += 1
        meet, join = _t_flags(cfg, hd_meet(cfg, A, B)), _t_flags(cfg, hd_join(cfg, A, B))
        for flag in ("left_bounded", "right_bounded"):
            if fa[flag] and fb[flag] and not (meet[flag] and join[flag]):
                report.fail(f"hd {datum_name(A)} | {datum_name(B)}", f"{flag} not closed")
        if all(fa[f] and fb[f] for f in nondeg) and not all(meet[f] and join[f] for f in nondeg):
            report.details["nondegenerate_t_escapes"] += 1

    alts = [(alt, _cot_flags(cfg, alt)) for alt in enumerate_alt(cfg, positions)]
    report.details["bounded_cot"] = sum(f["left_bounded"] and f["right_bounded"] for _, f in alts)
    if cfg.m > 1 and report.details["bounded_cot"]:
        report.fail(f"m={cfg.m}", "found a bounded co-t-structure")
    for (A, fa), (B, fb) in product(alts, repeat=2):
        report.checked += 1
        meet, join = _cot_flags(cfg, alt_meet(cfg, A, B)), _cot_flags(cfg, alt_join(cfg, A, B))
        for flag in fa:
            if fa[flag] and fb[flag] and not (meet[flag] and join[flag]):
                report.fail(f"alt {datum_name(A)} | {datum_name(B)}", f"{flag} not closed")
    return report


# --- Precovering and thickness ------------------------------------------------

def verify_precovering(cfg: GonConfig, decoration_range: Optional[Sequence[int]] = None) -> Report:
    """Aisles pass the precovering conditions, co-aisles the preenveloping ones,
    and the thickness flags agree with the symbolic shift and envelope tests."""
    report = Report("precovering")
    positions = _positions(decoration_range)
    for hd in enumerate_hd(cfg, positions):
        report.checked += 1
        name = f"hd {datum_name(hd)}"
        if not is_precovering(cfg, t_aisle(cfg, hd)):
            report.fail(name, "aisle is not precovering")
        if not is_preenveloping(cfg, t_coaisle(cfg, hd)):
            report.fail(name, "coaisle is not preenveloping")
    for alt in enumerate_alt(cfg, positions):
        report.checked += 1
        name = f"alt {datum_name(alt)}"
        X, Y = cot_aisle(cfg, alt), cot_coaisle(cfg, alt)
        if not is_precovering(cfg, X):
            report.fail(name, "aisle is not precovering")
        if not is_preenveloping(cfg, Y):
            report.fail(name, "coaisle is not preenveloping")
        thick = thick_classify(cfg, alt)
        suspended = is_subset(cfg, shift_set(cfg, X, 1), X)
        if thick["precovering_thick"] != suspended:
            report.fail(name, f"thick flag {thick['precovering_thick']} but suspended={suspended}")
        if thick["functorially_finite"] != (suspended and is_preenveloping(cfg, X)):
            report.fail(name, "functorially finite flag disagrees with the envelope test")
    return report


# --- Counts -------------------------------------------------------------------

def count_structures(cfg: GonConfig, w: int) -> Dict[str, int]:
    """Counts with w regular positions per segment, by two independent enumerations."""
    positions = range(w)
    alt_count = len(enumerate_alt(cfg, positions))
    choices = [Decoration.marker()] + [Decoration.reg(n) for n in positions] + [Decoration.accend()]
    independent = sum(1 for P in independent_ncps(cfg.m) for _ in product(choices, repeat=cfg.m))
    thick_ff = sum(
        1 for P in independent_ncps(cfg.m)
        for X in product([Decoration.marker(), Decoration.accend()], repeat=cfg.m)
        if thick_classify(cfg, AltNcp(P, X))["functorially_finite"]
    )
    return {
        "m": cfg.m,
        "w": w,
        "hd": len(enumerate_hd(cfg, positions)),
        "alt": alt_count,
        "alt_independent": independent,
        "alt_expected": catalan(cfg.m) * (w + 2) ** cfg.m,
        "functorially_finite_thick": thick_ff,
    }


def verify_counts(cfg: GonConfig, max_w: int = 3) -> Report:
    report = Report("counts", details={"rows": []})
    for w in range(max_w + 1):
        row = count_structures(cfg, w)
        report.checked += 1
        report.details["rows"].append(row)
        if not row["alt"] == row["alt_independent"] == row["alt_expected"]:
            report.fail(f"m={cfg.m} w={w}", f"alt counts {row['alt']}/{row['alt_independent']}/{row['alt_expected']}")
    return report


# --- Hom suite ----------------------------------------------------------------

def verify_hom(cfg: GonConfig, W: int) -> Report:
    """Hammocks against the brute description, forward against reverse hammocks."""
    report = Report("hom")
    for model in (Model.TWO_M, Model.BAR):
        arcs = enumerate_window(cfg, W, model)
        report.checked += len(arcs) ** 2
        for a, b in hom_discrepancies(cfg, W, model):
            report.fail(f"{model.value}", f"Hom({a}, {b}): hammock {hom_dim(cfg, model, a, b)}")
        for a, b in product(arcs, repeat=2):
            if hom_dim(cfg, model, a, b) != hom_dim_reverse(cfg, model, a, b):
                report.fail(f"{model.value}", f"Hom({a}, {b}) differs between hammock readings")
    if cfg.m == 1:
        a = Arc(blob(1), reg(1, 0), Model.BAR)
        b = Arc(blob(1), reg(1, 4), Model.BAR)
        forward = brute_hom(cfg, a, shift_arc(cfg, b, 1))
        backward = brute_hom(cfg, b, shift_arc(cfg, a, 1))
        report.details["non_2cy_witness"] = [forward, backward]
        if (forward, backward) != (1, 0):
            report.fail("m=1", f"Hom((1',0), Σ(1',4)) = {forward}, Hom((1',4), Σ(1',0)) = {backward}")
    return report


# --- Suites -------------------------------------------------------------------

def run_suite(name: str, cfg: GonConfig, W: int) -> Report:
    """Run one named suite with the configured parameter ranges."""
    oracle_cfg = get_oracle_config()
    suites: Dict[str, Callable[[], Report]] = {
        "hom": lambda: verify_hom(cfg, W),
        "torsion": lambda: verify_structures(cfg, W),
        "roundtrip": lambda: verify_roundtrip(cfg, axioms=True),
        "lattice": lambda: verify_lattice(oracle_cfg["lattice_max_k"]).merge(
            verify_decorated_lattice(cfg, get_decoration_range(lattice=True))),
        "counts": lambda: verify_counts(cfg),
        "sublattice": lambda: verify_sublattices(cfg, get_decoration_range(lattice=True)),
        "precovering": lambda: verify_precovering(cfg, get_decoration_range(lattice=True)),
    }
    if name not in suites:
        raise ContractViolation(f"Unknown suite {name!r}; choose from {', '.join(sorted(suites))}")
    logger.info(f"Running suite {name} for m={cfg.m}, W={W}")
    report = suites[name]()
    report.suite = name
    logger.info(f"Suite {name}: checked {report.checked}, {len(report.failures)} failures")
    return report


SUITES = ("hom", "torsion", "roundtrip", "lattice", "counts", "sublattice", "precovering")
