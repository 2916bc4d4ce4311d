"""
Standalone SVG charts: a function line chart and a box plot

Both are built as ElementTree documents, so output is well-formed XML with a
single svg root carrying width, height and viewBox.
"""
import logging
import math
import xml.etree.ElementTree as ET
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import get_settings
from ..core.errors import DomainError, UsageError
from ..schemas.calculus import FunctionTable
from ..schemas.charts import BoxPlotSpec
from ..schemas.stats import FiveNumberSummary

logger = logging.getLogger(__name__)

SVG_NAMESPACE = "http://www.w3.org/2000/svg"
TICKS = 5
FONT = {"font-family": "sans-serif", "font-size": "11"}


def _coord(value: float) -> str:
    return f"{value:.2f}"


def _tick_label(value: float) -> str:
    return f"{value:.4g}"


def padded_range(low: float, high: float, fraction: float = 0.05) -> Tuple[float, float]:
    """Widen [low, high] by a fraction of its span; a point becomes a unit interval"""
    if not (math.isfinite(low) and math.isfinite(high)):
        raise UsageError("cannot chart non-finite values")
    if high == low:
        return low - 0.5, high + 0.5
    pad = (high - low) * fraction
    return low - pad, high + pad


class SvgCanvas:
    """A plotting area inside a margin, mapping data coordinates to pixels"""

    def __init__(self, width: int, height: int, margin: int, title: str = ""):
        self.width = width
        self.height = height
        self.margin = margin
        self.root = ET.Element("svg", {
            "xmlns": SVG_NAMESPACE,
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        })
        ET.SubElement(self.root, "rect", {
            "x": "0", "y": "0", "width": str(width), "height": str(height), "fill": "white",
        })
        if title:
            self.text(width / 2, margin / 2, title, anchor="middle", cls="title")

    @property
    def left(self) -> float:
        return float(self.margin)

    @property
    def right(self) -> float:
        return float(self.width - self.margin / 2)

    @property
    def top(self) -> float:
        return float(self.margin)

    @property
    def bottom(self) -> float:
        return float(self.height - self.margin)

    def text(self, x: float, y: float, content: str, anchor: str = "start", cls: str = "") -> ET.Element:
        attrs = {"x": _coord(x), "y": _coord(y), "text-anchor": anchor, **FONT}
        if cls:
            attrs["class"] = cls
        node = ET.SubElement(self.root, "text", attrs)
        node.text = content
        return node

    def line(self, x1: float, y1: float, x2: float, y2: float, cls: str, stroke: str = "black") -> ET.Element:
        return ET.SubElement(self.root, "line", {
            "class": cls,
            "x1": _coord(x1), "y1": _coord(y1), "x2": _coord(x2), "y2": _coord(y2),
            "stroke": stroke, "stroke-width": "1",
        })

    def axes(self) -> None:
        self.line(self.left, self.bottom, self.right, self.bottom, "x-axis")
        self.line(self.left, self.top, self.left, self.bottom, "y-axis")

    def y_ticks(self, low: float, high: float, to_pixel) -> None:
        for value in np.linspace(low, high, TICKS):
            py = to_pixel(float(value))
            self.line(self.left - 4, py, self.left, py, "tick")
            self.text(self.left - 6, py + 4, _tick_label(float(value)), anchor="end", cls="tick-label")

    def to_string(self) -> str:
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(self.root, encoding="unicode") + "\n"


def _segments(table: FunctionTable) -> List[List[Tuple[float, float]]]:
    """Runs of consecutive defined points; an undefined row ends a run"""
    segments: List[List[Tuple[float, float]]] = [[]]
    for row in table.rows:
        if row.defined and math.isfinite(row.y):
            segments[-1].append((row.x, row.y))
        elif segments[-1]:
            segments.append([])
    return [s for s in segments if s]


def line_chart(table: FunctionTable, title: str = "",
               x_label: str = "x", y_label: str = "y",
               width: Optional[int] = None, height: Optional[int] = None) -> str:
    """
    Line chart of a tabulated function

    Raises:
        DomainError: no defined point to draw
    """
    settings = get_settings()
    canvas = SvgCanvas(width or settings.svg_width, height or settings.svg_height, settings.svg_margin, title)
    segments = _segments(table)
    if not segments:
        raise DomainError("function is undefined at every tabulated point; nothing to plot")

    xs = [row.x for row in table.rows]
    ys = [y for segment in segments for _, y in segment]
    x_low, x_high = xs[0], xs[-1]
    if x_low == x_high:
        x_low, x_high = padded_range(x_low, x_high)
    y_low, y_high = padded_range(min(ys), max(ys))

    def px(x: float) -> float:
        return canvas.left + (x - x_low) / (x_high - x_low) * (canvas.right - canvas.left)

    def py(y: float) -> float:
        return canvas.bottom - (y - y_low) / (y_high - y_low) * (canvas.bottom - canvas.top)

    canvas.axes()
    canvas.y_ticks(y_low, y_high, py)
    for value in np.linspace(x_low, x_high, TICKS):
        canvas.line(px(float(value)), canvas.bottom, px(float(value)), canvas.bottom + 4, "tick")
        canvas.text(px(float(value)), canvas.bottom + 16, _tick_label(float(value)), anchor="middle", cls="tick-label")
    canvas.text((canvas.left + canvas.right) / 2, canvas.height - 8, x_label, anchor="middle", cls="axis-label")
    label = canvas.text(14, (canvas.top + canvas.bottom) / 2, y_label, anchor="middle", cls="axis-label")
    label.set("transform", f"rotate(-90 14 {_coord((canvas.top + canvas.bottom) / 2)})")

    for segment in segments:
        if len(segment) == 1:
            x, y = segment[0]
            ET.SubElement(canvas.root, "circle", {
                "class": "point", "cx": _coord(px(x)), "cy": _coord(py(y)), "r": "2", "fill": "steelblue",
            })
            continue
        ET.SubElement(canvas.root, "polyline", {
            "class": "series",
            "fill": "none",
            "stroke": "steelblue",
            "stroke-width": "1.5",
            "points": " ".join(f"{_coord(px(x))},{_coord(py(y))}" for x, y in segment),
        })
    logger.debug(f"Line chart with {len(segments)} segment(s) over {len(table.rows)} rows")
    return canvas.to_string()


def box_plot_spec(summaries: Sequence[FiveNumberSummary], title: str = "",
                  width: Optional[int] = None, height: Optional[int] = None) -> BoxPlotSpec:
    """Lay out one box per group on an axis padded around every whisker"""
    settings = get_settings()
    low = min(s.min for s in summaries)
    high = max(s.max for s in summaries)
    return BoxPlotSpec(
        groups=list(summaries),
        width=width or settings.svg_width,
        height=height or settings.svg_height,
        axis_range=padded_range(low, high),
        title=title,
    )


def box_plot(spec: BoxPlotSpec) -> str:
    """Box-and-whisker chart: whiskers at min and max, box from q1 to q3, median line"""
    canvas = SvgCanvas(spec.width, spec.height, get_settings().svg_margin, spec.title)
    low, high = spec.axis_range

    def py(y: float) -> float:
        return canvas.bottom - (y - low) / (high - low) * (canvas.bottom - canvas.top)

    canvas.axes()
    canvas.y_ticks(low, high, py)
    slot = (canvas.right - canvas.left) / len(spec.groups)
    box_width = slot * 0.5
    for i, summary in enumerate(spec.groups):
        centre = canvas.left + slot * (i + 0.5)
        group = ET.SubElement(canvas.root, "g", {"class": "box", "data-label": summary.label})
        ET.SubElement(group, "line", {
            "class": "whisker",
            "x1": _coord(centre), "y1": _coord(py(summary.min)),
            "x2": _coord(centre), "y2": _coord(py(summary.q1)),
            "stroke": "black",
        })
        ET.SubElement(group, "line", {
            "class": "whisker",
            "x1": _coord(centre), "y1": _coord(py(summary.q3)),
            "x2": _coord(centre), "y2": _coord(py(summary.max)),
            "stroke": "black",
        })
        for cls, value in (("whisker-cap min", summary.min), ("whisker-cap max", summary.max)):
            ET.SubElement(group, "line", {
                "class": cls,
                "x1": _coord(centre - box_width / 4), "y1": _coord(py(value)),
                "x2": _coord(centre + box_width / 4), "y2": _coord(py(value)),
                "stroke": "black",
            })
        ET.SubElement(group, "rect", {
            "class": "iqr",
            "x": _coord(centre - box_width / 2),
            "y": _coord(py(summary.q3)),
            "width": _coord(box_width),
            "height": _coord(py(summary.q1) - py(summary.q3)),
            "fill": "lightsteelblue",
            "stroke": "black",
        })
        ET.SubElement(group, "line", {
            "class": "median",
            "x1": _coord(centre - box_width / 2), "y1": _coord(py(summary.median)),
            "x2": _coord(centre + box_width / 2), "y2": _coord(py(summary.median)),
            "stroke": "black", "stroke-width": "2",
        })
        canvas.text(centre, canvas.bottom + 16, summary.label, anchor="middle", cls="group-label")
    logger.debug(f"Box plot with {len(spec.groups)} group(s) on axis {spec.axis_range}")
    return canvas.to_string()
