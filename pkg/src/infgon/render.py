"""
Circle diagrams of arc sets.

Accumulation tokens are spaced evenly round the circle. Each segment fills
the open arc between its two ends, with integer positions squashed
monotonically into it; blobs are filled circles, markers are ticks and
arcs are chords.
"""

import logging
import math
from typing import Dict, Iterable, Optional, Tuple

import svgwrite

from ..common.app_config import get_render_config
from .arcsets import SymArcSet, truncate
from .gon_model import AccLabel, Arc, Blob, GonConfig, Model

# Initialize logger for this module
logger = logging.getLogger("render")

AISLE_COLOR = "#1f5fa8"
COAISLE_COLOR = "#c0392b"


class CircleLayout:
    """Maps gon tokens to coordinates on a circle of the configured size."""

    def __init__(self, cfg: GonConfig, model: Model, settings: Optional[Dict] = None):
        self.cfg = cfg
        self.model = model
        self.settings = settings or get_render_config()
        self.size = self.settings["size"]
        self.center = self.size / 2
        self.radius = self.size * self.settings["radius_ratio"]
        self.width = 2 * math.pi / cfg.n_slots

    def _angle(self, slot: int, fraction: float) -> float:
        # clockwise from the top
        return -math.pi / 2 + (slot + fraction) * self.width

    def _xy(self, angle: float, scale: float = 1.0) -> Tuple[float, float]:
        r = self.radius * scale
        return (round(self.center + r * math.cos(angle), 3), round(self.center + r * math.sin(angle), 3))

    def fraction(self, pos: int) -> float:
        return 0.5 + 0.45 * math.tanh(self.settings["squash"] * pos)

    def point(self, tok) -> Tuple[float, float]:
        if isinstance(tok, Blob):
            return self._xy(self._angle(tok.slot, 0.5))
        return self._xy(self._angle(tok.slot, self.fraction(tok.pos)))

    def boundary(self, slot: int, scale: float = 1.0) -> Tuple[float, float]:
        return self._xy(self._angle(slot, 0.0), scale)

    def label_at(self, slot: int) -> Tuple[float, float]:
        return self._xy(self._angle(slot, 0.5), 1.12)


def _chord(dwg: svgwrite.Drawing, layout: CircleLayout, arc: Arc, color: str):
    (x1, y1), (x2, y2) = layout.point(arc.x1), layout.point(arc.x2)
    c = layout.center
    # pull the chord halfway towards the centre
    qx, qy = (x1 + x2 + 2 * c) / 4, (y1 + y2 + 2 * c) / 4
    return dwg.path(d=f"M {x1},{y1} Q {round(qx, 3)},{round(qy, 3)} {x2},{y2}",
                    fill="none", stroke=color, stroke_width=1, stroke_opacity=0.6)


def draw(cfg: GonConfig, model: Model, layers: Iterable[Tuple[Iterable[Arc], str]],
         title: str = "") -> svgwrite.Drawing:
    """Build the drawing: circle, accumulation tokens, then one chord per arc."""
    layout = CircleLayout(cfg, model)
    size = layout.size
    dwg = svgwrite.Drawing(size=(f"{size}px", f"{size}px"), profile="full")
    dwg.add(dwg.rect(insert=(0, 0), size=(f"{size}px", f"{size}px"), fill="white"))
    dwg.add(dwg.circle(center=(layout.center, layout.center), r=layout.radius,
                       fill="none", stroke="black", stroke_width=1))

    chords = 0
    for arcs, color in layers:
        for arc in arcs:
            dwg.add(_chord(dwg, layout, arc, color))
            chords += 1

    blob_r = layout.settings["blob_radius"]
    for slot in cfg.slots():
        label = AccLabel.from_slot(slot)
        if cfg.is_blob_slot(slot, model):
            dwg.add(dwg.circle(center=layout.point(Blob(label)), r=blob_r, fill="black"))
        else:
            # markers: the two ends of the segment
            for end in (slot, slot + 1):
                dwg.add(dwg.line(start=layout.boundary(end, 0.96), end=layout.boundary(end, 1.04),
                                 stroke="black", stroke_width=2))
        dwg.add(dwg.text(str(label), insert=layout.label_at(slot), font_size="12px",
                         text_anchor="middle", font_family="sans-serif"))
    if title:
        dwg.add(dwg.text(title, insert=(size / 2, 16), font_size="13px",
                         text_anchor="middle", font_family="sans-serif"))
    logger.debug(f"Drew {chords} chords for m={cfg.m} ({model.value})")
    return dwg


def render_sets(cfg: GonConfig, W: int, aisle: SymArcSet, coaisle: Optional[SymArcSet] = None,
                title: str = "") -> str:
    """SVG text for the window truncations of an aisle and, optionally, its co-aisle."""
    layers = [(truncate(cfg, aisle, W).sorted_arcs(), AISLE_COLOR)]
    if coaisle is not None:
        layers.append((truncate(cfg, coaisle, W).sorted_arcs(), COAISLE_COLOR))
    return draw(cfg, aisle.model, layers, title).tostring()


def render_arcs(cfg: GonConfig, model: Model, arcs: Iterable[Arc], title: str = "") -> str:
    return draw(cfg, model, [(sorted(arcs, key=lambda a: a.sort_key), AISLE_COLOR)], title).tostring()
