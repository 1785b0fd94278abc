"""Deterministic SVG rendering of exact figures.

Every coordinate goes through the same fixed pipeline: a 64-bit certified
enclosure of the exact value, its dyadic midpoint as an exact fraction, an
exact affine world-to-screen transform, and a fixed-point decimal with
three fractional digits.  No floats are involved anywhere, so the output
is byte-identical across runs and platforms.  No external assets or fonts
are referenced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .catalog import RuleOutput
from .exactreal import ConstructibleReal, DomainError, to_decimal
from .geom import Circle, Figure, Point, Segment, Square

__all__ = ["RenderOptions", "render_rule_output", "to_svg"]

_MARK_RADIUS = Fraction(3)


@dataclass(frozen=True)
class RenderOptions:
    """Canvas geometry and layer toggles for :func:`to_svg`."""

    width: int = 800
    height: int = 800
    margin: Fraction = Fraction(1, 10)
    label_digits: int = 6
    show_grid: bool = False
    show_labels: bool = False
    show_witness_points: bool = True

    def __post_init__(self) -> None:
        if min(self.width, self.height) < 100:
            raise DomainError("canvas must be at least 100 px on each side")
        margin = Fraction(self.margin)
        if not 0 <= margin < Fraction(2, 5):
            raise DomainError("margin fraction must lie in [0, 0.4)")
        object.__setattr__(self, "margin", margin)
        if self.label_digits < 1:
            raise DomainError("label_digits must be positive")


def _approx(value: ConstructibleReal) -> Fraction:
    lo, hi = value._interval_raw(64)
    return (lo.as_fraction() + hi.as_fraction()) / 2


def _bounds(figure: Figure) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    if isinstance(figure, Point):
        x, y = _approx(figure.x), _approx(figure.y)
        return x, x, y, y
    if isinstance(figure, Segment):
        ax, ay = _approx(figure.a.x), _approx(figure.a.y)
        bx, by = _approx(figure.b.x), _approx(figure.b.y)
        return min(ax, bx), max(ax, bx), min(ay, by), max(ay, by)
    if isinstance(figure, Square):
        cx, cy = _approx(figure.center.x), _approx(figure.center.y)
        h = _approx(figure.half_side)
        return cx - h, cx + h, cy - h, cy + h
    cx, cy = _approx(figure.center.x), _approx(figure.center.y)
    r = _approx(figure.radius)
    return cx - r, cx + r, cy - r, cy + r


def _fmt(value: Fraction) -> str:
    """Fixed-point decimal, three fractional digits, half away from zero."""
    scaled = abs(value) * 1000
    units = (scaled + Fraction(1, 2)).__floor__()
    text = f"{units // 1000}.{units % 1000:03d}"
    return "-" + text if value < 0 and units else text


class _Transform:
    def __init__(self, figures: Sequence[Figure], options: RenderOptions):
        boxes = [_bounds(f) for f in figures]
        self.xmin = min(b[0] for b in boxes)
        xmax = max(b[1] for b in boxes)
        self.ymin = min(b[2] for b in boxes)
        ymax = max(b[3] for b in boxes)
        span_x = xmax - self.xmin
        span_y = ymax - self.ymin
        usable_x = Fraction(options.width) * (1 - 2 * options.margin)
        usable_y = Fraction(options.height) * (1 - 2 * options.margin)
        scales = []
        if span_x > 0:
            scales.append(usable_x / span_x)
        if span_y > 0:
            scales.append(usable_y / span_y)
        self.scale = min(scales) if scales else Fraction(1)
        self.ox = (Fraction(options.width) - self.scale * span_x) / 2
        self.oy = (Fraction(options.height) - self.scale * span_y) / 2
        self.height = Fraction(options.height)
        self.span_x, self.span_y = span_x, span_y

    def x(self, world: Fraction) -> Fraction:
        return self.ox + self.scale * (world - self.xmin)

    def y(self, world: Fraction) -> Fraction:
        # SVG y grows downward
        return self.height - self.oy - self.scale * (world - self.ymin)

    def point(self, p: Point) -> tuple[Fraction, Fraction]:
        return self.x(_approx(p.x)), self.y(_approx(p.y))


def _grid_lines(t: _Transform, options: RenderOptions) -> list[str]:
    span = max(t.span_x, t.span_y, Fraction(1))
    step = Fraction(1)
    while span / step > 20:
        step *= 10
    while span / step < 2:
        step /= 10
    lines = []
    k = (t.xmin / step).__ceil__()
    while k * step <= t.xmin + t.span_x:
        x = _fmt(t.x(k * step))
        lines.append(
            f'<line class="grid" x1="{x}" y1="0" x2="{x}" '
            f'y2="{options.height}" stroke="#dddddd" stroke-width="1"/>'
        )
        k += 1
    k = (t.ymin / step).__ceil__()
    while k * step <= t.ymin + t.span_y:
        y = _fmt(t.y(k * step))
        lines.append(
            f'<line class="grid" x1="0" y1="{y}" x2="{options.width}" '
            f'y2="{y}" stroke="#dddddd" stroke-width="1"/>'
        )
        k += 1
    return lines


def _emit_figure(
    figure: Figure, t: _Transform, options: RenderOptions, label: Optional[str]
) -> list[str]:
    parts: list[str] = []
    if isinstance(figure, Square):
        x = t.x(_approx(figure.center.x) - _approx(figure.half_side))
        y = t.y(_approx(figure.center.y) + _approx(figure.half_side))
        side = t.scale * 2 * _approx(figure.half_side)
        parts.append(
            f'<rect class="square" x="{_fmt(x)}" y="{_fmt(y)}" '
            f'width="{_fmt(side)}" height="{_fmt(side)}" '
            f'fill="none" stroke="#1f3a5f" stroke-width="1.5"/>'
        )
        anchor = (x, y)
    elif isinstance(figure, Circle):
        cx, cy = t.point(figure.center)
        r = t.scale * _approx(figure.radius)
        parts.append(
            f'<circle class="circle" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(r)}" fill="none" stroke="#a23b3b" stroke-width="1.5"/>'
        )
        anchor = (cx - r, cy - r)
    elif isinstance(figure, Segment):
        x1, y1 = t.point(figure.a)
        x2, y2 = t.point(figure.b)
        parts.append(
            f'<line class="segment" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#6b6b6b" stroke-width="1"/>'
        )
        anchor = (x1, y1)
    else:
        cx, cy = t.point(figure)
        parts.append(
            f'<circle class="mark" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(_MARK_RADIUS)}" fill="#a23b3b" stroke="none"/>'
        )
        anchor = (cx + 5, cy - 5)
        if label is None and options.show_labels:
            digits = options.label_digits
            label = (
                f"({to_decimal(figure.x, digits)}, "
                f"{to_decimal(figure.y, digits)})"
            )
    if label is not None:
        lx, ly = anchor
        parts.append(
            f'<text class="label" x="{_fmt(lx)}" y="{_fmt(ly)}" '
            f'font-size="12">{_escape(label)}</text>'
        )
    return parts


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )


def to_svg(
    figures: Sequence[Figure],
    options: RenderOptions = RenderOptions(),
    labels: Optional[Sequence[Optional[str]]] = None,
) -> str:
    """Render figures to an SVG 1.1 document with byte-deterministic output."""
    figures = list(figures)
    if not figures:
        raise DomainError("nothing to render: the figure list is empty")
    if labels is not None and len(labels) != len(figures):
        raise DomainError("labels must match figures one to one")
    t = _Transform(figures, options)
    body: list[str] = []
    if options.show_grid:
        body.extend(_grid_lines(t, options))
    for index, figure in enumerate(figures):
        label = labels[index] if labels is not None else None
        body.extend(_emit_figure(figure, t, options, label))
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{options.width}" height="{options.height}" '
        f'viewBox="0 0 {options.width} {options.height}">\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def render_rule_output(
    out: RuleOutput, options: RenderOptions = RenderOptions()
) -> str:
    """Render a rule's figures, with witness marks when toggled on."""
    figures: list[Figure] = list(out.figures)
    if options.show_witness_points and out.witness_points is not None:
        figures.extend(out.witness_points)
    return to_svg(figures, options)
