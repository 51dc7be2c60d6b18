"""Minimal SVG 1.1 scatter plot of polynomial roots in the complex plane."""

from __future__ import annotations

from typing import Sequence

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def root_plot(series: Sequence[tuple[str, Sequence[complex]]], width: int = 640,
              height: int = 480, title: str = "roots") -> str:
    """One marker colour per series; the dashed line is Re(t) = -1/2."""
    pts = [z for _, zs in series for z in zs]
    xs = [z.real for z in pts] + [-1.0, 0.0]
    ys = [z.imag for z in pts] + [-0.5, 0.5]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    # symmetric frame around Re = -1/2 so the mirror line sits in the middle
    half = max(x1 + 0.5, -0.5 - x0) * 1.1
    x0, x1 = -0.5 - half, -0.5 + half
    pad = (y1 - y0) * 0.1 or 0.5
    y0, y1 = y0 - pad, y1 + pad
    m = 40

    def sx(x):
        return m + (x - x0) / (x1 - x0) * (width - 2 * m)

    def sy(y):
        return height - m - (y - y0) / (y1 - y0) * (height - 2 * m)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
        f'<title>{title}</title>',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{_fmt(sx(x0))}" y1="{_fmt(sy(0))}" x2="{_fmt(sx(x1))}" y2="{_fmt(sy(0))}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{_fmt(sx(-0.5))}" y1="{_fmt(sy(y0))}" x2="{_fmt(sx(-0.5))}" y2="{_fmt(sy(y1))}" '
        'stroke="gray" stroke-width="1" stroke-dasharray="6,4"/>',
        f'<text x="{_fmt(sx(-0.5) + 4)}" y="{m - 8}" font-size="12" fill="gray">Re = -1/2</text>',
    ]
    for tick in (-1.0, 0.0):
        out.append(
            f'<line x1="{_fmt(sx(tick))}" y1="{_fmt(sy(0) - 4)}" x2="{_fmt(sx(tick))}" '
            f'y2="{_fmt(sy(0) + 4)}" stroke="black"/>'
        )
        out.append(f'<text x="{_fmt(sx(tick) - 6)}" y="{_fmt(sy(0) + 16)}" font-size="11">'
                   f'{int(tick)}</text>')
    for k, (label, zs) in enumerate(series):
        color = PALETTE[k % len(PALETTE)]
        for z in zs:
            out.append(f'<circle cx="{_fmt(sx(z.real))}" cy="{_fmt(sy(z.imag))}" r="3" '
                       f'fill="{color}" data-re="{float(z.real)!r}" data-im="{float(z.imag)!r}"/>')
        out.append(f'<text x="{width - m - 90}" y="{m + 14 * k}" font-size="11" '
                   f'fill="{color}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
