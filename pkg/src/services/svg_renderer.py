"""
SVG Renderer
2-B yoklama izini çizer: dış yaklaşım P, doğrulanmış köşeler S_v, çağrı
numarasıyla etiketlenmiş teğet doğrular ve (varsa) gizli küme X.

Hesaplar kesin (Fraction); float sadece son biçimlendirmede kullanılır.
Aynı girdi her zaman bayt bayt aynı SVG'yi üretir.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.domain.errors import UnsupportedProblem
from src.domain.geometry import Point, convex_hull_2d
from src.domain.models import TraceFile

logger = logging.getLogger(__name__)

CANVAS = 480
MARGIN = 24
LABEL_OFFSET = Fraction(1, 10)

Box = Tuple[Fraction, Fraction, Fraction, Fraction]


def _fmt(value: Fraction) -> str:
    return f"{float(value):.3f}"


def _bounding_box(points: Sequence[Point]) -> Box:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin, Fraction(1))
    pad = span / 4
    # kare kutu, merkez korunur
    cx, cy = (xmin + xmax) / 2, (ymin + ymax) / 2
    half = span / 2 + pad
    return cx - half, cx + half, cy - half, cy + half


def clip_line(normal: Tuple[Fraction, Fraction], level: Fraction, box: Box) -> Optional[Tuple[Point, Point]]:
    """{x : normalᵀx = level} doğrusunun kutu içindeki parçası; kutuya hiç değmiyorsa None."""
    a, b = normal
    xmin, xmax, ymin, ymax = box
    hits = set()
    if b != 0:
        for x in (xmin, xmax):
            y = (level - a * x) / b
            if ymin <= y <= ymax:
                hits.add(Point.of(x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = (level - b * y) / a
            if xmin <= x <= xmax:
                hits.add(Point.of(x, y))
    if not hits:
        return None
    # tek kesişim: doğru kutuya yalnız bir köşede değiyor, sıfır uzunluklu parça
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


class TraceRenderer:
    """TraceFile → SVG metni."""

    def __init__(self, trace: TraceFile, hidden: Optional[Sequence[Point]] = None):
        if trace.dimension != 2:
            raise UnsupportedProblem(
                f"render sadece 2-B izleri destekler, gelen iz n = {trace.dimension} boyutlu"
            )
        self.trace = trace
        self.hidden = list(hidden or [])
        self.vertices = [Point(tuple(v)) for v in trace.vertices]
        self.outer = self._last_outer()
        self.box = _bounding_box(self._points_of_interest())
        xmin, xmax, _, _ = self.box
        self.scale = Fraction(CANVAS - 2 * MARGIN) / (xmax - xmin)

    def _last_outer(self) -> List[Point]:
        for record in reversed(self.trace.records):
            if record.outer_vertices:
                return [Point(tuple(p)) for p in record.outer_vertices]
        return []

    def _points_of_interest(self) -> List[Point]:
        points = list(self.vertices) + list(self.hidden)
        for record in self.trace.records:
            points.extend(Point(tuple(p)) for p in record.outer_vertices)
        if not points:
            points = [Point.of(0, 0)]
        return points

    def _to_canvas(self, p: Point) -> Tuple[str, str]:
        xmin, _, _, ymax = self.box
        x = MARGIN + (p[0] - xmin) * self.scale
        y = MARGIN + (ymax - p[1]) * self.scale
        return _fmt(x), _fmt(y)

    def _polygon(self, points: Sequence[Point], css_class: str) -> str:
        coords = " ".join(",".join(self._to_canvas(p)) for p in points)
        return f'<polygon class="{css_class}" points="{coords}"/>'

    def _probe_lines(self) -> List[str]:
        chunks = []
        for record in self.trace.records:
            normal = (record.direction[0], record.direction[1])
            segment = clip_line(normal, record.value, self.box)
            if segment is None:
                logger.debug(f"Çağrı #{record.index} doğrusu çizim alanı dışında, atlandı")
                continue
            p, q = segment
            x1, y1 = self._to_canvas(p)
            x2, y2 = self._to_canvas(q)
            chunks.append(
                f'<line class="probe" data-call="{record.index}" '
                f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'
            )
            label = p + (q - p).scaled(LABEL_OFFSET)
            lx, ly = self._to_canvas(label)
            chunks.append(f'<text class="call-index" x="{lx}" y="{ly}">{record.index}</text>')
        return chunks

    def render(self) -> str:
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
            f'viewBox="0 0 {CANVAS} {CANVAS}">',
            "<style>"
            ".hidden{fill:#e6e6e6;stroke:#9a9a9a;stroke-width:1}"
            ".outer{fill:none;stroke:#1f4e79;stroke-width:1.5;stroke-dasharray:6 3}"
            ".probe{stroke:#c0392b;stroke-width:1}"
            ".call-index{font:11px sans-serif;fill:#c0392b}"
            ".confirmed{fill:#1e8449}"
            "</style>",
            f'<rect width="{CANVAS}" height="{CANVAS}" fill="#ffffff"/>',
        ]
        if self.hidden:
            hull = convex_hull_2d(self.hidden).vertices
            parts.append(self._polygon(hull, "hidden"))
        if len(self.outer) >= 2:
            parts.append(self._polygon(self.outer, "outer"))
        parts.extend(self._probe_lines())
        for v in sorted(self.vertices):
            cx, cy = self._to_canvas(v)
            parts.append(f'<circle class="confirmed" cx="{cx}" cy="{cy}" r="4"/>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def render_trace_svg(trace: TraceFile, hidden: Optional[Sequence[Point]] = None) -> str:
    svg = TraceRenderer(trace, hidden).render()
    logger.info(f"🖼️ SVG: {len(trace.records)} çağrı çizildi")
    return svg
