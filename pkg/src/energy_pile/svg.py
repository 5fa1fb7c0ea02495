"""
Minimal self-contained SVG line charts.

Output is plain SVG 1.1 text with fixed viewport and fixed number
formatting, so the same data always produces the same bytes.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence
from xml.sax.saxutils import escape

import numpy as np

PANEL_W = 300.0
PANEL_H = 360.0
MARGIN_L = 70.0
MARGIN_R = 20.0
MARGIN_T = 50.0
MARGIN_B = 55.0
LEGEND_H = 24.0


@dataclass
class Series:
    label: str
    x: Sequence[float]
    y: Sequence[float]
    color: str = "#000000"
    dash: Optional[str] = None
    width: float = 1.5


@dataclass
class Panel:
    title: str
    xlabel: str
    ylabel: str
    series: list = field(default_factory=list)
    invert_y: bool = False
    log_x: bool = False
    hlines: tuple = ()  # horizontal reference lines (y values)


def _num(v: float) -> str:
    return f"{v:.2f}"


def _label(v: float) -> str:
    if v == 0:
        return "0"
    return f"{v:.6g}"


def nice_ticks(lo: float, hi: float, target: int = 5) -> list:
    """Round tick positions covering [lo, hi]."""
    if not (math.isfinite(lo) and math.isfinite(hi)):
        return []
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for m in (1.0, 2.0, 2.5, 5.0, 10.0):
        step = m * mag
        if step >= raw:
            break
    start = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def _range(values):
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        return 0.0, 1.0
    lo, hi = float(finite.min()), float(finite.max())
    if hi - lo <= 1e-300 or hi - lo <= 1e-12 * max(abs(lo), abs(hi)):
        pad = abs(lo) * 0.1 if lo != 0 else 1.0
        return lo - pad, hi + pad
    return lo, hi


class _Axes:
    def __init__(self, panel: Panel, left: float, top: float):
        self.panel = panel
        self.left, self.top = left, top
        xs = np.concatenate([np.asarray(s.x, float) for s in panel.series] or [np.zeros(1)])
        ys = np.concatenate([np.asarray(s.y, float) for s in panel.series] or [np.zeros(1)])
        if panel.log_x:
            xs = np.log10(xs[xs > 0]) if np.any(xs > 0) else np.zeros(1)
        self.xlo, self.xhi = _range(xs)
        ys = np.concatenate([ys, np.asarray(panel.hlines, float)])
        self.ylo, self.yhi = _range(ys)
        if not panel.log_x:
            ticks = nice_ticks(self.xlo, self.xhi)
            self.xlo, self.xhi = min(self.xlo, ticks[0]), max(self.xhi, ticks[-1])
        ticks = nice_ticks(self.ylo, self.yhi)
        self.ylo, self.yhi = min(self.ylo, ticks[0]), max(self.yhi, ticks[-1])

    def px(self, x):
        x = np.asarray(x, float)
        if self.panel.log_x:
            with np.errstate(divide="ignore", invalid="ignore"):
                x = np.where(x > 0, np.log10(np.where(x > 0, x, 1.0)), np.nan)
        return self.left + (x - self.xlo) / (self.xhi - self.xlo) * PANEL_W

    def py(self, y):
        frac = (np.asarray(y, float) - self.ylo) / (self.yhi - self.ylo)
        if self.panel.invert_y:
            return self.top + frac * PANEL_H
        return self.top + PANEL_H - frac * PANEL_H

    def render(self) -> list:
        p = self.panel
        out = []
        l, t, r, b = self.left, self.top, self.left + PANEL_W, self.top + PANEL_H
        out.append(f'<rect x="{_num(l)}" y="{_num(t)}" width="{_num(PANEL_W)}" height="{_num(PANEL_H)}" '
                   'fill="none" stroke="#000000" stroke-width="1"/>')
        # ticks
        if p.log_x:
            xticks = [10.0**k for k in range(math.ceil(self.xlo - 1e-9), math.floor(self.xhi + 1e-9) + 1)]
        else:
            xticks = nice_ticks(self.xlo, self.xhi)
        for v in xticks:
            X = float(self.px(v))
            out.append(f'<line x1="{_num(X)}" y1="{_num(b)}" x2="{_num(X)}" y2="{_num(b + 5)}" stroke="#000000"/>')
            out.append(f'<line x1="{_num(X)}" y1="{_num(t)}" x2="{_num(X)}" y2="{_num(b)}" stroke="#dddddd"/>')
            out.append(f'<text x="{_num(X)}" y="{_num(b + 18)}" font-size="11" text-anchor="middle">{_label(v)}</text>')
        for v in nice_ticks(self.ylo, self.yhi):
            Y = float(self.py(v))
            out.append(f'<line x1="{_num(l - 5)}" y1="{_num(Y)}" x2="{_num(l)}" y2="{_num(Y)}" stroke="#000000"/>')
            out.append(f'<line x1="{_num(l)}" y1="{_num(Y)}" x2="{_num(r)}" y2="{_num(Y)}" stroke="#dddddd"/>')
            out.append(f'<text x="{_num(l - 8)}" y="{_num(Y + 4)}" font-size="11" text-anchor="end">{_label(v)}</text>')
        # zero line for signed data
        if not p.log_x and self.xlo < 0 < self.xhi:
            X = float(self.px(0.0))
            out.append(f'<line x1="{_num(X)}" y1="{_num(t)}" x2="{_num(X)}" y2="{_num(b)}" stroke="#888888"/>')
        for v in p.hlines:
            Y = float(self.py(v))
            out.append(f'<line x1="{_num(l)}" y1="{_num(Y)}" x2="{_num(r)}" y2="{_num(Y)}" '
                       'stroke="#888888" stroke-dasharray="2,3"/>')
        # data
        for s in p.series:
            X, Y = self.px(s.x), self.py(s.y)
            ok = np.isfinite(X) & np.isfinite(Y)
            style = f'fill="none" stroke="{s.color}" stroke-width="{s.width}"'
            if s.dash:
                style += f' stroke-dasharray="{s.dash}"'
            for run in _runs(ok):
                pts = " ".join(f"{_num(X[i])},{_num(Y[i])}" for i in run)
                out.append(f'<polyline points="{pts}" {style}/>')
        # labels
        out.append(f'<text x="{_num((l + r) / 2)}" y="{_num(t - 12)}" font-size="13" '
                   f'text-anchor="middle">{escape(p.title)}</text>')
        out.append(f'<text x="{_num((l + r) / 2)}" y="{_num(b + 38)}" font-size="12" '
                   f'text-anchor="middle">{escape(p.xlabel)}</text>')
        cy = (t + b) / 2
        out.append(f'<text x="{_num(l - 50)}" y="{_num(cy)}" font-size="12" text-anchor="middle" '
                   f'transform="rotate(-90 {_num(l - 50)} {_num(cy)})">{escape(p.ylabel)}</text>')
        return out


def _runs(mask):
    """Index runs of consecutive True values (gaps split polylines)."""
    runs, cur = [], []
    for i, ok in enumerate(mask):
        if ok:
            cur.append(i)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return [r for r in runs if len(r) >= 2]


def render(panels: Sequence[Panel], title: str = "") -> str:
    """Render panels side by side into one SVG document with a shared legend."""
    n = len(panels)
    width = n * (MARGIN_L + PANEL_W + MARGIN_R)
    height = MARGIN_T + PANEL_H + MARGIN_B + LEGEND_H + (20.0 if title else 0.0)
    top = MARGIN_T + (20.0 if title else 0.0)
    body = []
    if title:
        body.append(f'<text x="{_num(width / 2)}" y="22.00" font-size="15" text-anchor="middle">{escape(title)}</text>')
    for k, panel in enumerate(panels):
        left = k * (MARGIN_L + PANEL_W + MARGIN_R) + MARGIN_L
        body.extend(_Axes(panel, left, top).render())
    # legend from the first panel's series
    seen, x = set(), MARGIN_L
    y = top + PANEL_H + MARGIN_B + 12
    for panel in panels:
        for s in panel.series:
            if s.label in seen:
                continue
            seen.add(s.label)
            dash = f' stroke-dasharray="{s.dash}"' if s.dash else ""
            body.append(f'<line x1="{_num(x)}" y1="{_num(y)}" x2="{_num(x + 30)}" y2="{_num(y)}" '
                        f'stroke="{s.color}" stroke-width="{s.width}"{dash}/>')
            body.append(f'<text x="{_num(x + 36)}" y="{_num(y + 4)}" font-size="12">{escape(s.label)}</text>')
            x += 50 + 7 * len(s.label)
    head = (
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}" font-family="sans-serif">\n'
        f'<rect x="0" y="0" width="{_num(width)}" height="{_num(height)}" fill="#ffffff"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"
