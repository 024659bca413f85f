"""Minimal deterministic SVG emitter for the diagram plots.

Only the handful of primitives the plots need.  Output is byte-for-byte
reproducible: fixed header, fixed float formatting, no timestamps or
generated ids.  Data coordinates live in [0, 1]^2.
"""

from __future__ import annotations

from .errors import ValidationError

_HEADER = '<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">'

_FONT = 'font-family="Helvetica,Arial,sans-serif"'


def _fmt(v: float) -> str:
    # two decimals is below a pixel; keeps files small and diffs stable
    return f"{v:.2f}"


class Canvas:
    """Fixed-axes plot surface mapping [0,1]^2 data space to pixels."""

    def __init__(self, width: int = 640, height: int = 520, margin: int = 56,
                 title: str | None = None):
        if width <= 2 * margin or height <= 2 * margin:
            raise ValidationError("canvas smaller than its margins")
        self.width = width
        self.height = height
        self.margin = margin
        self._parts: list[str] = []
        if title:
            self._parts.append(f"<title>{_escape(title)}</title>")
        self._parts.append(
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>')

    def px(self, x: float, y: float) -> tuple[float, float]:
        gx = self.width - 2 * self.margin
        gy = self.height - 2 * self.margin
        return self.margin + x * gx, self.height - self.margin - y * gy

    def line(self, x1: float, y1: float, x2: float, y2: float, *,
             stroke: str = "#333333", width: float = 1.0,
             dash: str | None = None):
        a = self.px(x1, y1)
        b = self.px(x2, y2)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self._parts.append(
            f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" '
            f'y2="{_fmt(b[1])}" stroke="{stroke}" stroke-width="{width:g}"{extra}/>')

    def polyline(self, xs, ys, *, stroke: str = "#1f6f8b", width: float = 1.5,
                 dash: str | None = None):
        pts = " ".join(f"{_fmt(px)},{_fmt(py)}"
                       for px, py in (self.px(x, y) for x, y in zip(xs, ys)))
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self._parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width:g}"{extra}/>')

    def band(self, xs, y_lo, y_hi, *, fill: str = "#9ecae1", opacity: float = 0.55):
        """Filled region between two curves sharing the x samples."""
        fwd = [self.px(x, y) for x, y in zip(xs, y_lo)]
        back = [self.px(x, y) for x, y in zip(reversed(list(xs)), reversed(list(y_hi)))]
        pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in fwd + back)
        self._parts.append(
            f'<polygon points="{pts}" fill="{fill}" fill-opacity="{opacity:g}" stroke="none"/>')

    def dot(self, x: float, y: float, *, r: float = 2.0, fill: str = "#d1495b",
            opacity: float = 0.8):
        px, py = self.px(x, y)
        self._parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{r:g}" fill="{fill}" '
            f'fill-opacity="{opacity:g}"/>')

    def text(self, x: float, y: float, s: str, *, size: int = 12,
             anchor: str = "middle", dx: float = 0.0, dy: float = 0.0,
             color: str = "#222222"):
        px, py = self.px(x, y)
        self._parts.append(
            f'<text x="{_fmt(px + dx)}" y="{_fmt(py + dy)}" {_FONT} '
            f'font-size="{size}" text-anchor="{anchor}" fill="{color}">{_escape(s)}</text>')

    def axes(self, xlabel: str = "x", ylabel: str = "y",
             ticks=(0.0, 0.25, 0.5, 0.75, 1.0)):
        self.line(0, 0, 1, 0, stroke="#000000", width=1.2)
        self.line(0, 0, 0, 1, stroke="#000000", width=1.2)
        for t in ticks:
            a = self.px(t, 0)
            b = self.px(0, t)
            self._parts.append(
                f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(a[0])}" '
                f'y2="{_fmt(a[1] + 5)}" stroke="#000000" stroke-width="1"/>')
            self._parts.append(
                f'<line x1="{_fmt(b[0])}" y1="{_fmt(b[1])}" x2="{_fmt(b[0] - 5)}" '
                f'y2="{_fmt(b[1])}" stroke="#000000" stroke-width="1"/>')
            self.text(t, 0, f"{t:g}", size=11, dy=18)
            self.text(0, t, f"{t:g}", size=11, anchor="end", dx=-8, dy=4)
        self.text(0.5, 0, xlabel, size=13, dy=34)
        py = self.px(0, 0.5)
        self._parts.append(
            f'<text x="{_fmt(py[0] - 38)}" y="{_fmt(py[1])}" {_FONT} font-size="13" '
            f'text-anchor="middle" fill="#222222" '
            f'transform="rotate(-90 {_fmt(py[0] - 38)} {_fmt(py[1])})">{_escape(ylabel)}</text>')

    def legend(self, entries, *, x: float = 0.04, y: float = 0.96):
        """entries: sequence of (label, color, kind) with kind in {line, dash, dot, fill}."""
        px, py = self.px(x, y)
        for i, (label, color, kind) in enumerate(entries):
            cy = py + 18 * i
            if kind == "dot":
                self._parts.append(
                    f'<circle cx="{_fmt(px + 9)}" cy="{_fmt(cy - 4)}" r="3" fill="{color}"/>')
            elif kind == "fill":
                self._parts.append(
                    f'<rect x="{_fmt(px)}" y="{_fmt(cy - 10)}" width="18" height="10" '
                    f'fill="{color}" fill-opacity="0.55"/>')
            else:
                dash = ' stroke-dasharray="6,4"' if kind == "dash" else ""
                self._parts.append(
                    f'<line x1="{_fmt(px)}" y1="{_fmt(cy - 4)}" x2="{_fmt(px + 18)}" '
                    f'y2="{_fmt(cy - 4)}" stroke="{color}" stroke-width="2"{dash}/>')
            self._parts.append(
                f'<text x="{_fmt(px + 24)}" y="{_fmt(cy)}" {_FONT} font-size="12" '
                f'fill="#222222">{_escape(label)}</text>')

    def to_svg(self) -> str:
        head = _HEADER.format(w=self.width, h=self.height)
        return "\n".join([head, *self._parts, "</svg>"]) + "\n"

    def write(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_svg())


def _escape(s: str) -> str:
    return (s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            .replace('"', "&quot;"))
