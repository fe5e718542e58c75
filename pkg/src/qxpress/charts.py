"""Deterministic SVG charts over comparison tables.

The SVG is assembled by hand: same tables in, byte-identical markup out, no
timestamps or generated ids. Four chart kinds cover the comparisons that
matter here: per-algorithm grouped bars, per-language mean bars, mean-vs-mean
scatter plots, and a radar profile of normalized means.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from qxpress.errors import ChartError
from qxpress.report import ComparisonTable

WIDTH = 720
HEIGHT = 440
MARGIN_LEFT = 70
MARGIN_RIGHT = 30
MARGIN_TOP = 50
MARGIN_BOTTOM = 70

PALETTE = {
    "cirq": "#4c78a8",
    "qiskit": "#f58518",
    "qmod": "#54a24b",
    "qrisp": "#e45756",
    "qsharp": "#72b7b2",
    "quapl": "#b279a2",
}
_FALLBACK_COLORS = ("#9d755d", "#bab0ac", "#eeca3b", "#86bcb6", "#d37295", "#8cd17d")


@dataclass(frozen=True)
class ChartSpec:
    """What to draw: a kind plus the metric ids it consumes."""

    kind: str  # grouped-bar | mean-bar | scatter | radar
    name: str
    title: str
    x_metric: str = ""
    y_metric: str = ""
    metrics: tuple[str, ...] = ()


def default_chart_specs() -> tuple[ChartSpec, ...]:
    return (
        ChartSpec("grouped-bar", "loc_by_algorithm", "Lines of code by algorithm", x_metric="loc"),
        ChartSpec("grouped-bar", "cc_by_algorithm", "Cyclomatic complexity by algorithm", x_metric="cc"),
        ChartSpec("mean-bar", "loc_means", "Mean lines of code per language", x_metric="loc"),
        ChartSpec("mean-bar", "cc_means", "Mean cyclomatic complexity per language", x_metric="cc"),
        ChartSpec("mean-bar", "effort_means", "Mean Halstead effort per language", x_metric="effort"),
        ChartSpec("scatter", "scatter_loc_cc", "LOC vs cyclomatic complexity", x_metric="loc", y_metric="cc"),
        ChartSpec("scatter", "scatter_loc_effort", "LOC vs Halstead effort", x_metric="loc", y_metric="effort"),
        ChartSpec("scatter", "scatter_cc_effort", "Cyclomatic complexity vs Halstead effort", x_metric="cc", y_metric="effort"),
        ChartSpec("scatter", "scatter_volume_effort", "Halstead volume vs effort", x_metric="volume", y_metric="effort"),
        ChartSpec("scatter", "scatter_difficulty_effort", "Halstead difficulty vs effort", x_metric="difficulty", y_metric="effort"),
        ChartSpec("scatter", "scatter_loc_vocabulary", "LOC vs Halstead vocabulary", x_metric="loc", y_metric="vocabulary"),
        ChartSpec(
            "radar", "metrics_radar", "Normalized metric profile per language",
            metrics=("loc", "cc", "vocabulary", "volume", "difficulty", "effort"),
        ),
    )


def render_chart(spec: ChartSpec, tables: dict[str, ComparisonTable]) -> str:
    """Render one chart to SVG text."""
    if spec.kind == "grouped-bar":
        return _grouped_bar(spec, _table(tables, spec.x_metric))
    if spec.kind == "mean-bar":
        return _mean_bar(spec, _table(tables, spec.x_metric))
    if spec.kind == "scatter":
        return _scatter(spec, _table(tables, spec.x_metric), _table(tables, spec.y_metric))
    if spec.kind == "radar":
        return _radar(spec, [_table(tables, m) for m in spec.metrics])
    raise ChartError(f"unknown chart kind {spec.kind!r}")


def _table(tables: dict[str, ComparisonTable], metric_id: str) -> ComparisonTable:
    try:
        return tables[metric_id]
    except KeyError:
        raise ChartError(
            f"chart needs metric {metric_id!r}, but the run only has: "
            f"{', '.join(sorted(tables))}"
        ) from None


def color_for(language: str, index: int) -> str:
    return PALETTE.get(language, _FALLBACK_COLORS[index % len(_FALLBACK_COLORS)])


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _svg(elements: list[str], caption: str, title: str) -> str:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="24" text-anchor="middle" font-size="16">{escape(title)}</text>',
    ]
    parts.extend(elements)
    if caption:
        parts.append(
            f'<text x="{WIDTH / 2:.2f}" y="{HEIGHT - 10}" text-anchor="middle" '
            f'font-size="11" fill="#555555">{escape(caption)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _legend(languages: tuple[str, ...], y: float) -> list[str]:
    elements = []
    slot = (WIDTH - MARGIN_LEFT - MARGIN_RIGHT) / max(1, len(languages))
    for i, language in enumerate(languages):
        x = MARGIN_LEFT + i * slot
        elements.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="10" height="10" fill="{color_for(language, i)}"/>'
        )
        elements.append(
            f'<text x="{x + 14:.2f}" y="{y + 9:.2f}" font-size="11">{escape(language)}</text>'
        )
    return elements


def _y_axis(max_value: float) -> tuple[list[str], float]:
    """Horizontal gridlines with labels; returns elements and the scale max."""
    top = max_value if max_value > 0 else 1.0
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    elements = []
    for step in range(5):
        frac = step / 4
        y = HEIGHT - MARGIN_BOTTOM - frac * plot_h
        value = top * frac
        elements.append(
            f'<line x1="{MARGIN_LEFT}" y1="{y:.2f}" x2="{WIDTH - MARGIN_RIGHT}" y2="{y:.2f}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        elements.append(
            f'<text x="{MARGIN_LEFT - 6}" y="{y + 4:.2f}" text-anchor="end" font-size="10">'
            f"{_fmt(value)}</text>"
        )
    return elements, top


def _grouped_bar(spec: ChartSpec, table: ComparisonTable) -> str:
    values = [
        v for v in (table.cell(l, a) for l in table.languages for a in table.algorithms)
        if v is not None
    ]
    elements, top = _y_axis(max(values, default=0.0))
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    groups = max(1, len(table.algorithms))
    group_w = plot_w / groups
    bar_w = group_w * 0.8 / max(1, len(table.languages))
    for gi, algorithm in enumerate(table.algorithms):
        gx = MARGIN_LEFT + gi * group_w
        for li, language in enumerate(table.languages):
            value = table.cell(language, algorithm)
            if value is None:
                continue
            h = plot_h * (value / top)
            x = gx + group_w * 0.1 + li * bar_w
            y = HEIGHT - MARGIN_BOTTOM - h
            elements.append(
                f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar_w:.2f}" height="{h:.2f}" '
                f'fill="{color_for(language, li)}"/>'
            )
        elements.append(
            f'<text x="{gx + group_w / 2:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 16}" '
            f'text-anchor="middle" font-size="11">{escape(algorithm)}</text>'
        )
    elements.extend(_legend(table.languages, HEIGHT - MARGIN_BOTTOM + 28))
    return _svg(elements, f"metric: {table.metric_id}", spec.title)


def _mean_bar(spec: ChartSpec, table: ComparisonTable) -> str:
    pairs = [
        (language, table.means[language])
        for language in table.languages
        if table.means.get(language) is not None
    ]
    elements, top = _y_axis(max((v for _, v in pairs), default=0.0))
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    slot = plot_w / max(1, len(pairs))
    for i, (language, value) in enumerate(pairs):
        h = plot_h * (value / top)
        x = MARGIN_LEFT + i * slot + slot * 0.15
        y = HEIGHT - MARGIN_BOTTOM - h
        elements.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{slot * 0.7:.2f}" height="{h:.2f}" '
            f'fill="{color_for(language, i)}"/>'
        )
        elements.append(
            f'<text x="{MARGIN_LEFT + i * slot + slot / 2:.2f}" y="{y - 5:.2f}" '
            f'text-anchor="middle" font-size="10">{_fmt(value)}</text>'
        )
        elements.append(
            f'<text x="{MARGIN_LEFT + i * slot + slot / 2:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 16}" '
            f'text-anchor="middle" font-size="11">{escape(language)}</text>'
        )
    caption = f"mean {table.metric_id} over: {', '.join(table.algorithms)}"
    return _svg(elements, caption, spec.title)


def _scatter(spec: ChartSpec, x_table: ComparisonTable, y_table: ComparisonTable) -> str:
    points = []
    for i, language in enumerate(x_table.languages):
        x_mean = x_table.means.get(language)
        y_mean = y_table.means.get(language)
        if x_mean is None or y_mean is None:
            continue
        points.append((language, x_mean, y_mean, i))
    xs = [p[1] for p in points]
    ys = [p[2] for p in points]
    x_lo, x_hi = (min(xs, default=0.0), max(xs, default=1.0))
    y_lo, y_hi = (min(ys, default=0.0), max(ys, default=1.0))
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0
    # a 10% breathing margin keeps labels inside the frame
    x_lo, x_hi = x_lo - 0.1 * x_span, x_hi + 0.1 * x_span
    y_lo, y_hi = y_lo - 0.1 * y_span, y_hi + 0.1 * y_span
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(value: float) -> float:
        return MARGIN_LEFT + plot_w * (value - x_lo) / (x_hi - x_lo)

    def sy(value: float) -> float:
        return HEIGHT - MARGIN_BOTTOM - plot_h * (value - y_lo) / (y_hi - y_lo)

    elements = [
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#999999"/>'
    ]
    for frac in (0.0, 0.5, 1.0):
        xv = x_lo + frac * (x_hi - x_lo)
        yv = y_lo + frac * (y_hi - y_lo)
        elements.append(
            f'<text x="{sx(xv):.2f}" y="{HEIGHT - MARGIN_BOTTOM + 16}" text-anchor="middle" '
            f'font-size="10">{_fmt(xv)}</text>'
        )
        elements.append(
            f'<text x="{MARGIN_LEFT - 6}" y="{sy(yv) + 4:.2f}" text-anchor="end" '
            f'font-size="10">{_fmt(yv)}</text>'
        )
    for language, x_mean, y_mean, i in points:
        elements.append(
            f'<circle cx="{sx(x_mean):.2f}" cy="{sy(y_mean):.2f}" r="5" '
            f'fill="{color_for(language, i)}"/>'
        )
        elements.append(
            f'<text x="{sx(x_mean) + 8:.2f}" y="{sy(y_mean) + 4:.2f}" font-size="11">'
            f"{escape(language)}</text>"
        )
    elements.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 34}" '
        f'text-anchor="middle" font-size="11">mean {escape(x_table.metric_id)}</text>'
    )
    elements.append(
        f'<text x="16" y="{MARGIN_TOP + plot_h / 2:.2f}" font-size="11" '
        f'transform="rotate(-90 16 {MARGIN_TOP + plot_h / 2:.2f})" text-anchor="middle">'
        f"mean {escape(y_table.metric_id)}</text>"
    )
    return _svg(elements, "per-language means over the shared algorithm set", spec.title)


def _radar(spec: ChartSpec, tables: list[ComparisonTable]) -> str:
    languages = tables[0].languages if tables else ()
    cx, cy = WIDTH / 2, (HEIGHT - 30) / 2 + 10
    radius = (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) / 2
    axes = len(tables)
    elements: list[str] = []

    def point(axis: int, fraction: float) -> tuple[float, float]:
        angle = -math.pi / 2 + 2 * math.pi * axis / max(1, axes)
        return (cx + radius * fraction * math.cos(angle), cy + radius * fraction * math.sin(angle))

    for ring in (0.25, 0.5, 0.75, 1.0):
        ring_points = " ".join(
            f"{x:.2f},{y:.2f}" for x, y in (point(a, ring) for a in range(axes))
        )
        elements.append(
            f'<polygon points="{ring_points}" fill="none" stroke="#dddddd" stroke-width="1"/>'
        )
    # per-metric max over languages; a metric whose values are all zero (or
    # missing) stays at the center
    maxima: list[float] = []
    for table in tables:
        values = [v for v in (table.means.get(l) for l in languages) if v is not None]
        maxima.append(max(values, default=0.0))
    for axis, table in enumerate(tables):
        x, y = point(axis, 1.12)
        elements.append(
            f'<line x1="{cx:.2f}" y1="{cy:.2f}" '
            f'x2="{point(axis, 1.0)[0]:.2f}" y2="{point(axis, 1.0)[1]:.2f}" '
            f'stroke="#bbbbbb" stroke-width="1"/>'
        )
        elements.append(
            f'<text x="{x:.2f}" y="{y:.2f}" text-anchor="middle" font-size="11">'
            f"{escape(table.metric_id)}</text>"
        )
    for i, language in enumerate(languages):
        coords = []
        for axis, table in enumerate(tables):
            mean = table.means.get(language)
            fraction = 0.0 if mean is None or maxima[axis] <= 0 else mean / maxima[axis]
            coords.append(point(axis, fraction))
        polygon = " ".join(f"{x:.2f},{y:.2f}" for x, y in coords)
        color = color_for(language, i)
        elements.append(
            f'<polygon points="{polygon}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    elements.extend(_legend(languages, HEIGHT - 44))
    caption = "each axis normalized by the per-metric maximum across languages"
    return _svg(elements, caption, spec.title)
