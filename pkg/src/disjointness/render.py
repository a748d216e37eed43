"""SVG drawings of planar datasets. Floats appear only in the drawing."""
from __future__ import annotations

from .certificate import Certificate
from .io import Dataset

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")


def _pieces(obj, kind: str, box):
    """Drawable pieces as lists of float point pairs, plus marker points (holes)."""
    if kind == "segment":
        return [(obj.a, obj.b)], []
    if kind in ("polyline", "two_segments"):
        return [(s.a, s.b) for s in obj.segments], []
    lo, hi = box
    a = (lo, obj.slope * lo + obj.intercept)
    b = (hi, obj.slope * hi + obj.intercept)
    return [(a, b)], [obj.hole]


def _bbox(ds: Dataset):
    pts = []
    for o in ds.objects:
        if ds.kind == "segment":
            pts += [o.a, o.b]
        elif ds.kind in ("polyline", "two_segments"):
            pts += [p for s in o.segments for p in (s.a, s.b)]
        else:
            pts.append(o.hole)
    xs = [float(p[0]) for p in pts] or [0.0]
    ys = [float(p[1]) for p in pts] or [0.0]
    return min(xs), max(xs), min(ys), max(ys)


def render_svg(ds: Dataset, cert: Certificate | None = None, size: int = 600) -> str:
    if ds.kind not in ("segment", "polyline", "two_segments", "punctured_line") or ds.dim != 2:
        raise ValueError("only planar datasets can be rendered")
    x0, x1, y0, y1 = _bbox(ds)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1.0)
    if ds.kind == "punctured_line":
        pad = max(pad, 0.5 * max(x1 - x0, 1.0))
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    if ds.kind == "punctured_line":
        ys = [float(o.slope) * x + float(o.intercept) for o in ds.objects for x in (x0, x1)]
        y0, y1 = min([y0] + ys), max([y1] + ys)
    scale = size / max(x1 - x0, y1 - y0)

    def tx(p):
        return round((float(p[0]) - x0) * scale, 2), round((y1 - float(p[1])) * scale, 2)

    w, h = round((x1 - x0) * scale), round((y1 - y0) * scale)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           f'<rect width="{w}" height="{h}" fill="white"/>']
    for v, obj in enumerate(ds.objects):
        col = PALETTE[cert.colors[v] % len(PALETTE)] if cert else "black"
        pieces, holes = _pieces(obj, ds.kind, (x0, x1))
        for a, b in pieces:
            (ax, ay), (bx, by) = tx(a), tx(b)
            out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="{col}" stroke-width="1.5"/>')
        for p in holes:
            cx, cy = tx(p)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="white" stroke="{col}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
