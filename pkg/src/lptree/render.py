"""Deterministic ASCII and standalone SVG drawings of tree nodes."""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi as PI, sin, tan

from .errors import UnknownFormat
from .family import Family
from .patterns import LinkPattern, linearize
from .tree import Node

__all__ = ["RenderSpec", "FORMATS", "render"]

FORMATS = ("ascii-arc", "svg-chord", "svg-arc")
_ALIASES = {"ascii": "ascii-arc"}


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii-arc"
    size: int = 240  # svg canvas edge / arc-diagram height hint, in px
    gap: int = 0  # cut used by the arc forms of a link pattern
    labels: bool = True

    def __post_init__(self):
        fmt = _ALIASES.get(self.format, self.format)
        if fmt not in FORMATS:
            raise UnknownFormat(f"unknown render format {self.format!r}")
        object.__setattr__(self, "format", fmt)


def _f(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _ascii_lp(pi: LinkPattern, gap: int) -> str:
    diagram = linearize(pi, gap)
    size = len(pi)
    step = max(3, len(str(size - 1)) + 1)
    width = (size - 1) * step + len(str(diagram.order[-1]))
    height = max(diagram.depth) + 2
    grid = [[" "] * width for _ in range(height)]
    for (p, q), d in zip(diagram.arcs, diagram.depth):
        a, b = p * step, q * step
        grid[d][a] = grid[d][b] = "+"
        for c in range(a + 1, b):
            grid[d][c] = "-"
        for r in range(d + 1, height):
            grid[r][a] = grid[r][b] = "|"
    labels = [" "] * width
    for p, lab in enumerate(diagram.order):
        for k, ch in enumerate(str(lab)):
            labels[p * step + k] = ch
    rows = ["".join(r).rstrip() for r in grid] + ["".join(labels).rstrip()]
    return "\n".join(rows) + "\n"


def _ascii_dyck(d: str) -> str:
    heights = [0]
    for s in d:
        heights.append(heights[-1] + (1 if s == "U" else -1))
    top = max(heights)
    grid = [[" "] * len(d) for _ in range(top)]
    for i, s in enumerate(d):
        if s == "U":
            grid[top - 1 - heights[i]][i] = "/"
        else:
            grid[top - heights[i]][i] = "\\"
    return "\n".join("".join(r).rstrip() for r in grid) + "\n"


def _ascii_perm(sigma) -> str:
    n = len(sigma)
    rows = []
    for v in range(n, 0, -1):
        rows.append(" ".join("*" if x == v else "." for x in sigma))
    rows.append(" ".join(map(str, sigma)))
    return "\n".join(rows) + "\n"


def _svg_chord(pi: LinkPattern, spec: RenderSpec) -> str:
    size = len(pi)
    edge = float(spec.size)
    c = edge / 2
    r = edge * 0.38

    def point(k, radius=r):
        theta = 2 * PI * k / size
        return c + radius * cos(theta), c - radius * sin(theta)

    body = [f'<circle cx="{_f(c)}" cy="{_f(c)}" r="{_f(r)}" fill="none" stroke="#888"/>']
    for a, b in pi.pairs():
        (x1, y1), (x2, y2) = point(a), point(b)
        delta = 2 * PI * min(b - a, size - (b - a)) / size
        if abs(delta - PI) < 1e-9:
            d = f"M {_f(x1)} {_f(y1)} L {_f(x2)} {_f(y2)}"
        else:
            # circle orthogonal to the boundary through both points
            rad = r * tan(delta / 2)
            mid = 2 * PI * (a + b) / (2 * size)
            if b - a > size // 2:
                mid += PI
            dist = r / cos(delta / 2)
            cx, cy = c + dist * cos(mid), c - dist * sin(mid)
            cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx)
            sweep = 1 if cross > 0 else 0
            d = f"M {_f(x1)} {_f(y1)} A {_f(rad)} {_f(rad)} 0 0 {sweep} {_f(x2)} {_f(y2)}"
        body.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="2"/>')
    for k in range(size):
        x, y = point(k)
        body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="2.5" fill="black"/>')
        if spec.labels:
            lx, ly = point(k, r + 14)
            body.append(
                f'<text x="{_f(lx)}" y="{_f(ly)}" font-size="11" '
                f'text-anchor="middle" dominant-baseline="middle">{k}</text>'
            )
    return _svg(edge, edge, body)


def _svg_arc(pi: LinkPattern, spec: RenderSpec) -> str:
    diagram = linearize(pi, spec.gap)
    size = len(pi)
    step = 30.0
    width = step * (size + 1)
    height = max(float(spec.size) / 2, step * (size / 2 + 1.5))
    base = height - 20
    x = lambda p: step * (p + 1)
    body = [f'<line x1="{_f(step / 2)}" y1="{_f(base)}" x2="{_f(width - step / 2)}" y2="{_f(base)}" stroke="#888"/>']
    for (p, q), dep in zip(diagram.arcs, diagram.depth):
        rad = (x(q) - x(p)) / 2
        colour = "red" if dep == 0 else "black"
        body.append(
            f'<path d="M {_f(x(p))} {_f(base)} A {_f(rad)} {_f(rad)} 0 0 1 {_f(x(q))} {_f(base)}" '
            f'fill="none" stroke="{colour}" stroke-width="2"/>'
        )
    for p, lab in enumerate(diagram.order):
        body.append(f'<circle cx="{_f(x(p))}" cy="{_f(base)}" r="2.5" fill="black"/>')
        if spec.labels:
            body.append(
                f'<text x="{_f(x(p))}" y="{_f(base + 14)}" font-size="11" text-anchor="middle">{lab}</text>'
            )
    return _svg(width, height, body)


def _svg_dyck(d: str, spec: RenderSpec) -> str:
    step = 20.0
    heights = [0]
    for s in d:
        heights.append(heights[-1] + (1 if s == "U" else -1))
    width = step * (len(d) + 2)
    height = step * (max(heights) + 2)
    pts = " ".join(f"{_f(step * (i + 1))},{_f(height - step * (h + 1))}" for i, h in enumerate(heights))
    body = [f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>']
    return _svg(width, height, body)


def render(node: Node, spec: RenderSpec | str = RenderSpec()) -> str:
    if isinstance(spec, str):
        spec = RenderSpec(spec)
    fam = node.family
    if fam is Family.LP:
        if spec.format == "ascii-arc":
            return _ascii_lp(node, spec.gap)
        if spec.format == "svg-chord":
            return _svg_chord(node, spec)
        return _svg_arc(node, spec)
    if fam is Family.DYCK:
        if spec.format == "ascii-arc":
            return _ascii_dyck(node)
        if spec.format == "svg-arc":
            return _svg_dyck(node, spec)
    if fam is Family.PERM and spec.format == "ascii-arc":
        return _ascii_perm(node)
    raise UnknownFormat(f"format {spec.format!r} is not available for {fam}")
