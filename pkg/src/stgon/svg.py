"""Deterministic SVG drawings of polygons, cores, diagonal-gons and root projections.

Every coordinate is written with four decimals and elements are emitted in a
fixed order, so equal inputs give byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hgon import HGon, build_cores, exceptional_rank, stability_level

LAYERS = ("edges", "diagonals", "cores", "punctures", "roots", "labels")

DEFAULT_PALETTE = {
    "edges": "#1f3b73",
    "diagonals": "#e07b00",
    "ice": "#2a8fd6",
    "fire": "#d6352a",
    "punctures": "#000000",
    "roots": "#5c5c5c",
    "labels": "#333333",
}


@dataclass
class RenderSpec:
    size: int = 512
    layers: tuple[str, ...] = ("edges", "diagonals", "cores", "punctures", "roots")
    palette: dict = field(default_factory=lambda: dict(DEFAULT_PALETTE))
    tiling: int = 0
    diagonal_level: int | None = None
    margin: float = 0.06

    def __post_init__(self):
        if self.size < 64:
            raise ValueError("canvas must be at least 64 pixels")
        if self.tiling < 0:
            raise ValueError("tiling repetition count must be non-negative")
        bad = [x for x in self.layers if x not in LAYERS]
        if bad:
            raise ValueError(f"unknown layers {bad}; choose from {LAYERS}")


def _f(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


class _Canvas:
    def __init__(self, points: np.ndarray, spec: RenderSpec, width: int | None = None,
                 offset: float = 0.0):
        pts = np.asarray(points, dtype=complex)
        lo_x, hi_x = pts.real.min(), pts.real.max()
        lo_y, hi_y = pts.imag.min(), pts.imag.max()
        span = max(hi_x - lo_x, hi_y - lo_y, 1e-12)
        usable = spec.size * (1 - 2 * spec.margin)
        self.k = usable / span
        self.cx = (lo_x + hi_x) / 2
        self.cy = (lo_y + hi_y) / 2
        self.half = spec.size / 2
        self.offset = offset

    def xy(self, z: complex) -> tuple[str, str]:
        x = self.offset + self.half + (z.real - self.cx) * self.k
        y = self.half - (z.imag - self.cy) * self.k
        return _f(x), _f(y)


def _line(c, a, b, color, width=1.5, dash=None):
    (x1, y1), (x2, y2) = c.xy(a), c.xy(b)
    d = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" '
            f'stroke-width="{width}"{d}/>')


def _polygon(c, pts, color, fill="none", opacity=None):
    coords = " ".join(",".join(c.xy(complex(p))) for p in pts)
    op = f' fill-opacity="{opacity}"' if opacity is not None else ""
    return f'<polygon points="{coords}" fill="{fill}"{op} stroke="{color}" stroke-width="1.2"/>'


def _circle(c, p, r, color):
    x, y = c.xy(complex(p))
    return f'<circle cx="{x}" cy="{y}" r="{_f(r)}" fill="{color}"/>'


def _panel(g: HGon, spec: RenderSpec, c: _Canvas, dots=None) -> list[str]:
    out = []
    pal = spec.palette
    h = g.h
    v = g.vertices
    if "diagonals" in spec.layers and h >= 4:
        s = spec.diagonal_level or stability_level(g.type) or 2
        s = max(2, min(s, h // 2))
        out.append('<g id="diagonals">')
        for j in range(h):
            out.append(_line(c, complex(v[j]), complex(v[(j + s) % h]), pal["diagonals"], 0.8, "4 3"))
        out.append("</g>")
    if "edges" in spec.layers:
        out.append('<g id="edges">')
        for j in range(h):
            out.append(_line(c, complex(v[j - 1]), complex(v[j]), pal["edges"], 2.0))
        out.append("</g>")
    if "cores" in spec.layers and exceptional_rank(g.type):
        cores = build_cores(g)
        out.append('<g id="cores">')
        out.append(_polygon(c, cores.ice_vertices, pal["ice"], pal["ice"], "0.15"))
        out.append(_polygon(c, cores.fire_vertices, pal["fire"], pal["fire"], "0.15"))
        out.append("</g>")
    if "punctures" in spec.layers and g.punctures is not None:
        out.append('<g id="punctures">')
        for p in g.punctures:
            out.append(_circle(c, p, 4.0, pal["punctures"]))
        out.append("</g>")
    if "roots" in spec.layers and dots is not None:
        out.append('<g id="roots">')
        for p in dots:
            out.append(_circle(c, p, 2.5, pal["roots"]))
        out.append("</g>")
    if "labels" in spec.layers:
        out.append('<g id="labels" font-size="11" font-family="sans-serif">')
        for j in range(h):
            x, y = c.xy(complex(v[j]) * 1.06)
            out.append(f'<text x="{x}" y="{y}" fill="{pal["labels"]}">V{j}</text>')
        out.append("</g>")
    return out


def _document(width: int, height: int, body: list[str], meta: str = "") -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">')
    parts = [head]
    if meta:
        parts.append(f"<metadata>{meta}</metadata>")
    parts.append(f'<rect width="{width}" height="{height}" fill="#ffffff"/>')
    parts.extend(body)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def tiling_vectors(g: HGon) -> tuple[complex, complex]:
    """Translation lattice for the E6 tiling: ``V_{-1} + V_0`` and ``V_1 + V_2``.

    For the centred regular 12-gon these join the centre to the centres of
    the neighbours across edges ``z_0`` and ``z_2`` (the edge-sharing
    dodecagon tiling); for other gons they are used as-is.
    """
    c = g.center
    return (g.V(-1) + g.V(0) - 2 * c, g.V(1) + g.V(2) - 2 * c)


def render(g: HGon, spec: RenderSpec | None = None, dots=None) -> str:
    """SVG text for one polygon, optionally overlaid with projection dots."""
    spec = spec or RenderSpec()
    meta = f"type={g.type}"
    if spec.tiling:
        if exceptional_rank(g.type) != 6 or g.type.family != "E":
            raise ValueError("tiling mode is only defined for E6 polygons")
        a, b = tiling_vectors(g)
        r = spec.tiling
        shifts = [k * a + l * b for k in range(-r, r + 1) for l in range(-r, r + 1)
                  if abs(k + l) <= r]
        pts = np.concatenate([g.vertices + s for s in shifts])
        c = _Canvas(pts, spec)
        body = []
        for s in shifts:
            body.append(f'<g class="tile">')
            body.extend(_panel(g.translate(s), spec, c))
            body.append("</g>")
        meta += f" tiling={r} lattice=({_f(a.real)},{_f(a.imag)}),({_f(b.real)},{_f(b.imag)})"
        return _document(spec.size, spec.size, body, meta)
    pts = [g.vertices]
    if g.punctures is not None:
        pts.append(np.array(g.punctures))
    if dots is not None and "roots" in spec.layers:
        pts.append(np.asarray(dots, dtype=complex))
    c = _Canvas(np.concatenate(pts), spec)
    return _document(spec.size, spec.size, _panel(g, spec, c, dots), meta)


def render_panels(polys: list[HGon], spec: RenderSpec | None = None) -> str:
    """Side-by-side panels on a common scale (e.g. the three D4 far-end hexagons)."""
    spec = spec or RenderSpec()
    body = []
    allpts = np.concatenate([p.vertices for p in polys])
    for k, g in enumerate(polys):
        pts = g.vertices if g.punctures is None else np.concatenate([g.vertices, g.punctures])
        c = _Canvas(pts, spec, offset=k * spec.size)
        span = max(np.ptp(allpts.real), np.ptp(allpts.imag), 1e-12)
        c.k = spec.size * (1 - 2 * spec.margin) / span
        body.append(f'<g id="panel{k}">')
        body.extend(_panel(g, spec, c))
        body.append("</g>")
    meta = "panels=" + ",".join(f"{p.type}:{p.far_end_choice}" for p in polys)
    return _document(spec.size * len(polys), spec.size, body, meta)
