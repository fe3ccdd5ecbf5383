"""Static SVG rendering of persistence summaries.

The SVG is assembled directly from strings with fixed-precision
coordinates, so a given input always produces byte-identical output.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .homology import GraphPersistence

_WIDTH = 880
_HEIGHT = 420
_PANEL = dict(width=380, height=300, top=70)
_CURVE_COLORS = ("#1f77b4", "#d62728")
_ITEM_COLOR = "#9aa5b1"
_BAND_OPACITY = "0.30"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _staircase(xs: np.ndarray, ys: np.ndarray) -> list[tuple[float, float]]:
    pts = [(xs[0], ys[0])]
    for i in range(1, len(xs)):
        pts.append((xs[i], ys[i - 1]))
        pts.append((xs[i], ys[i]))
    return pts


def _polyline(pts, color: str, width: float, extra: str = "") -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
    return (
        f'<polyline points="{coords}" fill="none" stroke="{color}" '
        f'stroke-width="{width}"{extra}/>'
    )


def _polygon(pts, color: str) -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
    return (
        f'<polygon points="{coords}" fill="{color}" '
        f'fill-opacity="{_BAND_OPACITY}" stroke="none"/>'
    )


def _panel_svg(
    x0: float,
    series: list[np.ndarray],
    title: str,
    color: str,
    band: bool,
) -> list[str]:
    w, h, top = _PANEL["width"], _PANEL["height"], _PANEL["top"]
    parts = [
        f'<text x="{_fmt(x0 + w / 2)}" y="{top - 18}" text-anchor="middle" '
        f'font-size="13">{escape(title)}</text>',
        f'<rect x="{_fmt(x0)}" y="{top}" width="{w}" height="{h}" '
        f'fill="none" stroke="#444444" stroke-width="1"/>',
    ]
    length = series[0].size if series else 0
    if length == 0:
        parts.append(
            f'<text x="{_fmt(x0 + w / 2)}" y="{top + h / 2}" '
            f'text-anchor="middle" font-size="12" fill="#777777">(empty)</text>'
        )
        return parts

    stack = np.stack(series)
    mean = stack.mean(axis=0)
    std = stack.std(axis=0)
    lo = float(min(stack.min(), (mean - std).min() if band else stack.min()))
    hi = float(max(stack.max(), (mean + std).max() if band else stack.max()))
    if hi <= lo:
        lo, hi = lo - 0.5, hi + 0.5
    pad = 0.05 * (hi - lo)
    lo, hi = lo - pad, hi + pad

    xs = (
        x0 + w / 2 * np.ones(1)
        if length == 1
        else x0 + (np.arange(length) / (length - 1)) * w
    )

    def to_y(vals: np.ndarray) -> np.ndarray:
        return top + h - (vals - lo) / (hi - lo) * h

    if band and len(series) > 1:
        upper = _staircase(xs, to_y(mean + std))
        lower = _staircase(xs, to_y(mean - std))
        parts.append(_polygon(upper + lower[::-1], color))
    for vals in series:
        parts.append(_polyline(_staircase(xs, to_y(vals)), _ITEM_COLOR, 1.0))
    if band and len(series) > 1:
        parts.append(_polyline(_staircase(xs, to_y(mean)), color, 2.5))
    elif len(series) == 1:
        parts.append(_polyline(_staircase(xs, to_y(series[0])), color, 1.5))

    axis_font = 'font-size="10" fill="#555555"'
    parts.append(
        f'<text x="{_fmt(x0 - 6)}" y="{top + h}" text-anchor="end" '
        f"{axis_font}>{lo:.3g}</text>"
    )
    parts.append(
        f'<text x="{_fmt(x0 - 6)}" y="{top + 10}" text-anchor="end" '
        f"{axis_font}>{hi:.3g}</text>"
    )
    parts.append(
        f'<text x="{_fmt(x0)}" y="{top + h + 14}" text-anchor="middle" '
        f"{axis_font}>1</text>"
    )
    parts.append(
        f'<text x="{_fmt(x0 + w)}" y="{top + h + 14}" text-anchor="middle" '
        f"{axis_font}>{length}</text>"
    )
    return parts


def render_persistence_svg(
    items: list[GraphPersistence], band: bool = False, title: str = ""
) -> str:
    """Step curves of sorted births and deaths, one panel per component.

    With band=True and several inputs, shades mean +/- one per-index
    standard deviation around the barycenter curve.
    """
    if not items:
        raise ValueError("need at least one persistence summary")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}" '
        f'font-family="monospace">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="#ffffff"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_WIDTH // 2}" y="24" text-anchor="middle" '
            f'font-size="15">{escape(title)}</text>'
        )
    parts.extend(
        _panel_svg(
            50.0, [it.births for it in items], "sorted births",
            _CURVE_COLORS[0], band,
        )
    )
    parts.extend(
        _panel_svg(
            480.0, [it.deaths for it in items], "sorted deaths",
            _CURVE_COLORS[1], band,
        )
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
