"""SVG pictures of the half-plane tessellation.

Geometry stays exact (Fractions) through clipping; coordinates become
decimals only when written into the document.
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape

from .modular_group import GroupElement, Letter, format_word, iter_reduced_words, word_from_matrix
from .rationals import format_rational
from .tessellation import vertex_p2, vertex_p3

Point = Tuple[Fraction, Fraction]

DEFAULT_VIEWPORT = (Fraction(-4), Fraction(5), Fraction(1), Fraction(6))

SIDE_STYLES = {
    Letter.S: 'stroke="black" stroke-width="1" stroke-dasharray="6,4"',
    Letter.U: 'stroke="black" stroke-width="3"',
    Letter.U2: 'stroke="black" stroke-width="3" stroke-dasharray="1,5" stroke-linecap="round"',
    None: 'stroke="black" stroke-width="1"',
}


def _clip(polygon: Sequence[Point], viewport) -> List[Point]:
    """Sutherland-Hodgman clip of a convex polygon to the viewport rectangle."""
    xmin, xmax, ymin, ymax = viewport
    edges = [
        lambda p: p[0] - xmin,
        lambda p: xmax - p[0],
        lambda p: p[1] - ymin,
        lambda p: ymax - p[1],
    ]
    out = list(polygon)
    for inside in edges:
        if not out:
            break
        src, out = out, []
        for i, cur in enumerate(src):
            prev = src[i - 1]
            fc, fp = inside(cur), inside(prev)
            if fc >= 0:
                if fp < 0:
                    out.append(_cut(prev, cur, fp, fc))
                out.append(cur)
            elif fp >= 0:
                out.append(_cut(prev, cur, fp, fc))
    return out


def _cut(p: Point, q: Point, fp, fq) -> Point:
    t = fp / (fp - fq)
    return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def _area2(polygon: Sequence[Point]):
    return sum(p[0] * q[1] - q[0] * p[1] for p, q in zip(polygon, list(polygon[1:]) + list(polygon[:1])))


def _clip_segment(p: Point, q: Point, viewport):
    xmin, xmax, ymin, ymax = viewport
    t0, t1 = Fraction(0), Fraction(1)
    dx, dy = q[0] - p[0], q[1] - p[1]
    for den, num in ((-dx, p[0] - xmin), (dx, xmax - p[0]), (-dy, p[1] - ymin), (dy, ymax - p[1])):
        if den == 0:
            if num < 0:
                return None
            continue
        t = Fraction(num) / den
        if den < 0:
            t0 = max(t0, t)
        else:
            t1 = min(t1, t)
    if t0 >= t1:
        return None
    return ((p[0] + t0 * dx, p[1] + t0 * dy), (p[0] + t1 * dx, p[1] + t1 * dy))


def triangle_polygon(g: GroupElement, top) -> List[Point]:
    """Delta(g) cut off at height ``top`` (or just above its finite side)."""
    p2, p3 = vertex_p2(g), vertex_p3(g)
    da, dc = -g.a, g.c
    t = max(Fraction(0), Fraction(top) - min(p2.y, p3.y)) / dc + 1
    return [
        (p3.x, p3.y),
        (p2.x, p2.y),
        (p2.x + t * da, p2.y + t * dc),
        (p3.x + t * da, p3.y + t * dc),
    ]


def svg_render(viewport=DEFAULT_VIEWPORT, max_word_len: int = 4, scale: int = 60) -> str:
    """SVG document with every triangle of word length <= max_word_len meeting the viewport.

    Translations (Gamma_inf) are drawn as their strips below y = 1 whenever
    the viewport reaches there.  Each finite side is styled by the final
    letter of the label: dashed for S, solid thick for U, dotted for U2.
    """
    xmin, xmax, ymin, ymax = (Fraction(v) for v in viewport)
    if not (xmin < xmax and ymin < ymax):
        raise ValueError("degenerate viewport " + ",".join(format_rational(v) for v in (xmin, xmax, ymin, ymax)))
    vp = (xmin, xmax, ymin, ymax)
    width, height = (xmax - xmin) * scale, (ymax - ymin) * scale

    def xy(p: Point) -> Tuple[str, str]:
        return f"{float((p[0] - xmin) * scale):.3f}", f"{float((ymax - p[1]) * scale):.3f}"

    body = []

    def emit(word, polygon, side):
        clipped = _clip(polygon, vp)
        if len(clipped) < 3 or _area2(clipped) == 0:
            return
        path = "M " + " L ".join(",".join(xy(p)) for p in clipped) + " Z"
        label = format_word(word)
        body.append(f'<path class="triangle" data-word="{escape(label)}" d="{path}" '
                    f'fill="#f2f2f2" stroke="#999999" stroke-width="0.5"/>')
        seg = _clip_segment(side[0], side[1], vp)
        if seg is not None:
            style = SIDE_STYLES[word[-1] if word else None]
            (x1, y1), (x2, y2) = xy(seg[0]), xy(seg[1])
            body.append(f'<line class="side" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>')
        cx = sum(p[0] for p in clipped) / len(clipped)
        cy = sum(p[1] for p in clipped) / len(clipped)
        x, y = xy((cx, cy))
        body.append(f'<text x="{x}" y="{y}" font-size="11" text-anchor="middle">{escape(label)}</text>')

    for word, g in iter_reduced_words(max_word_len):
        if g.c == 0:
            continue
        p2, p3 = vertex_p2(g), vertex_p3(g)
        emit(word, triangle_polygon(g, ymax), ((p3.x, p3.y), (p2.x, p2.y)))

    if ymin < 1:
        one = Fraction(1)
        for n in range(-ceil(xmax), -floor(xmin)):
            g = GroupElement(1, n, 0, 1)
            left, right = Fraction(-n - 1), Fraction(-n)
            strip = [(left, ymin), (right, ymin), (right, one), (left, one)]
            emit(word_from_matrix(g), strip, ((left, one), (right, one)))

    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{float(width):.0f}" height="{float(height):.0f}" '
        f'viewBox="0 0 {float(width):.3f} {float(height):.3f}">\n'
        + "".join(line + "\n" for line in body)
        + "</svg>\n"
    )
