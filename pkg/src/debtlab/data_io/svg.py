"""Minimal deterministic SVG charts from layer dicts.

A layer dict may contain ``lines`` ({label, xy, style}), ``polygons``
({label, xy}), ``points`` ({label, xy}), ``arrows`` ({from, to, label})
and ``bars`` ({label, value}); plus ``title``, ``xlabel``, ``ylabel``.
Bars are drawn on a categorical axis and cannot be mixed with xy layers.
"""

from __future__ import annotations

import math
from pathlib import Path
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 720, 460
MARGIN = dict(left=70, right=170, top=40, bottom=55)
PALETTE = ("#1f4e79", "#b22222", "#2e7d32", "#6a1b9a", "#ef6c00", "#00838f", "#5d4037")


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _nice_ticks(lo: float, hi: float, n: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-12 * step:
        ticks.append(round(t, 10))
        t += step
    return ticks


class _Frame:
    def __init__(self, xs, ys):
        self.x0, self.x1 = _pad(min(xs), max(xs))
        self.y0, self.y1 = _pad(min(ys), max(ys))
        self.pw = WIDTH - MARGIN["left"] - MARGIN["right"]
        self.ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def px(self, x: float) -> float:
        return MARGIN["left"] + (x - self.x0) / (self.x1 - self.x0) * self.pw

    def py(self, y: float) -> float:
        return MARGIN["top"] + (self.y1 - y) / (self.y1 - self.y0) * self.ph


def _pad(lo: float, hi: float) -> tuple[float, float]:
    if hi == lo:
        return lo - 1.0, hi + 1.0
    span = hi - lo
    return lo - 0.05 * span, hi + 0.05 * span


def _header(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
    ]


def _axes(fr: _Frame, xlabel: str, ylabel: str, xticks=True) -> list[str]:
    left, top = MARGIN["left"], MARGIN["top"]
    bottom = top + fr.ph
    out = [f'<rect x="{left}" y="{top}" width="{fr.pw}" height="{fr.ph}" fill="none" stroke="#444"/>']
    if xticks:
        for t in _nice_ticks(fr.x0, fr.x1):
            x = fr.px(t)
            out.append(f'<line x1="{_fmt(x)}" y1="{bottom}" x2="{_fmt(x)}" y2="{bottom + 4}" stroke="#444"/>')
            out.append(f'<text x="{_fmt(x)}" y="{bottom + 16}" text-anchor="middle">{t:g}</text>')
    for t in _nice_ticks(fr.y0, fr.y1):
        y = fr.py(t)
        out.append(f'<line x1="{left - 4}" y1="{_fmt(y)}" x2="{left}" y2="{_fmt(y)}" stroke="#444"/>')
        out.append(f'<text x="{left - 7}" y="{_fmt(y + 4)}" text-anchor="end">{t:g}</text>')
    out.append(f'<text x="{left + fr.pw / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(
        f'<text x="16" y="{top + fr.ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {top + fr.ph / 2:.1f})">{escape(ylabel)}</text>'
    )
    return out


def _legend(entries: list[tuple[str, str, str]]) -> list[str]:
    x = WIDTH - MARGIN["right"] + 12
    out = []
    for k, (label, color, kind) in enumerate(entries):
        y = MARGIN["top"] + 8 + 16 * k
        if kind == "line":
            out.append(f'<line x1="{x}" y1="{y}" x2="{x + 18}" y2="{y}" stroke="{color}" stroke-width="2"/>')
        else:
            out.append(f'<rect x="{x}" y="{y - 5}" width="18" height="10" fill="{color}" fill-opacity="0.35"/>')
        out.append(f'<text x="{x + 24}" y="{y + 4}">{escape(label)}</text>')
    return out


def _bars(layers: dict) -> str:
    bars = layers["bars"]
    vals = [float(b["value"]) for b in bars] + [0.0]
    fr = _Frame([0, len(bars)], vals)
    fr.x0, fr.x1 = 0.0, float(len(bars))
    out = _header(layers.get("title", ""))
    out += _axes(fr, layers.get("xlabel", ""), layers.get("ylabel", ""), xticks=False)
    zero = fr.py(0.0)
    for k, b in enumerate(bars):
        v = float(b["value"])
        x = fr.px(k + 0.15)
        w = fr.px(k + 0.85) - x
        y, h = (fr.py(v), zero - fr.py(v)) if v >= 0 else (zero, fr.py(v) - zero)
        color = PALETTE[k % len(PALETTE)]
        out.append(
            f'<rect class="bar" x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" height="{_fmt(h)}" fill="{color}">'
            f"<title>{escape(str(b['label']))}: {v:g}</title></rect>"
        )
        out.append(
            f'<text x="{_fmt(x + w / 2)}" y="{MARGIN["top"] + fr.ph + 16}" text-anchor="middle">'
            f"{escape(str(b['label']))}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_plot(layers: dict, path: str | Path | None = None) -> str:
    """Render ``layers`` to an SVG document; also write it when ``path`` is given."""
    if layers.get("bars"):
        if any(layers.get(k) for k in ("lines", "polygons", "points", "arrows")):
            raise ValueError("bars cannot be combined with xy layers")
        svg = _bars(layers)
    else:
        svg = _xy(layers)
    if path is not None:
        Path(path).write_text(svg, encoding="utf-8")
    return svg


def _xy(layers: dict) -> str:
    coords = []
    for key in ("lines", "polygons"):
        for item in layers.get(key, []):
            coords.extend(item["xy"])
    coords.extend(p["xy"] for p in layers.get("points", []))
    for a in layers.get("arrows", []):
        coords.extend([a["from"], a["to"]])
    if not coords:
        raise ValueError("nothing to plot")
    fr = _Frame([c[0] for c in coords], [c[1] for c in coords])

    out = _header(layers.get("title", ""))
    out.append(
        '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">'
        '<path d="M0,0 L8,4 L0,8 z" fill="#333"/></marker></defs>'
    )
    out += _axes(fr, layers.get("xlabel", ""), layers.get("ylabel", ""))
    legend = []

    for k, poly in enumerate(layers.get("polygons", [])):
        color = "#9e9e9e" if k == 0 else PALETTE[(k + 3) % len(PALETTE)]
        pts = " ".join(f"{_fmt(fr.px(x))},{_fmt(fr.py(y))}" for x, y in poly["xy"])
        out.append(f'<polygon points="{pts}" fill="{color}" fill-opacity="0.35" stroke="none"/>')
        legend.append((poly.get("label", ""), color, "fill"))

    for k, line in enumerate(layers.get("lines", [])):
        color = PALETTE[k % len(PALETTE)]
        dash = ' stroke-dasharray="6,4"' if line.get("style") == "dashed" else ""
        pts = " ".join(f"{_fmt(fr.px(x))},{_fmt(fr.py(y))}" for x, y in line["xy"])
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"{dash}/>')
        legend.append((line.get("label", ""), color, "line"))

    for a in layers.get("arrows", []):
        (x0, y0), (x1, y1) = a["from"], a["to"]
        out.append(
            f'<line x1="{_fmt(fr.px(x0))}" y1="{_fmt(fr.py(y0))}" x2="{_fmt(fr.px(x1))}" '
            f'y2="{_fmt(fr.py(y1))}" stroke="#333" stroke-width="1.2" marker-end="url(#head)"/>'
        )

    for p in layers.get("points", []):
        x, y = fr.px(p["xy"][0]), fr.py(p["xy"][1])
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#000"/>')
        out.append(f'<text x="{_fmt(x + 7)}" y="{_fmt(y - 6)}">{escape(str(p.get("label", "")))}</text>')

    out += _legend(legend)
    out.append("</svg>")
    return "\n".join(out) + "\n"
