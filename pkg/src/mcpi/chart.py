"""Static SVG chart of overall performance intervals.

Pure string assembly: identical inputs produce byte-identical output, so
charts can be diffed and cached.
"""

from __future__ import annotations

from .interval import MCPIResult

MARGIN_LEFT = 150
MARGIN_RIGHT = 60
MARGIN_TOP = 44
MARGIN_BOTTOM = 16
ROW_HEIGHT = 20
BAR_HEIGHT = 9
BAR_COLOR = "#4878a8"
POINT_RADIUS = 3.5


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            .replace('"', "&quot;"))


def render_interval_chart(results: list[MCPIResult], title: str = "", width: int = 640) -> str:
    """Horizontal interval bar per alternative on a 0-100 axis, rank order.

    A zero-width interval is drawn as a point marker. The star count of each
    rating is annotated after the bar.
    """
    rows = sorted(results, key=lambda r: r.rank)
    height = MARGIN_TOP + ROW_HEIGHT * len(rows) + MARGIN_BOTTOM
    plot_w = width - MARGIN_LEFT - MARGIN_RIGHT

    def sx(pct: float) -> float:
        return MARGIN_LEFT + plot_w * pct / 100.0

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">\n',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>\n',
    ]
    if title:
        out.append(
            f'<text x="{width / 2:.1f}" y="16" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13" font-weight="bold">'
            f"{_esc(title)}</text>\n"
        )

    # 0-100 axis with gridlines every 20
    axis_y = MARGIN_TOP - 8
    bottom = height - MARGIN_BOTTOM
    for tick in range(0, 101, 20):
        x = sx(tick)
        out.append(
            f'<line x1="{x:.1f}" y1="{axis_y}" x2="{x:.1f}" y2="{bottom}" '
            f'stroke="#dddddd" stroke-width="1"/>\n'
        )
        out.append(
            f'<text x="{x:.1f}" y="{axis_y - 4}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="9" fill="#555555">{tick}</text>\n'
        )

    for i, r in enumerate(rows):
        y = MARGIN_TOP + i * ROW_HEIGHT
        cy = y + ROW_HEIGHT / 2.0
        lo, hi = 100.0 * r.overall.lower, 100.0 * r.overall.upper
        out.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{cy + 3:.1f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{_esc(r.alternative)}</text>\n'
        )
        if hi > lo:
            out.append(
                f'<rect class="bar" x="{sx(lo):.2f}" y="{cy - BAR_HEIGHT / 2:.2f}" '
                f'width="{sx(hi) - sx(lo):.2f}" height="{BAR_HEIGHT}" '
                f'fill="{BAR_COLOR}" rx="2"/>\n'
            )
        else:
            out.append(
                f'<circle class="bar" cx="{sx(lo):.2f}" cy="{cy:.2f}" '
                f'r="{POINT_RADIUS}" fill="{BAR_COLOR}"/>\n'
            )
        stars = "★" * (r.rating.stars if r.rating else 0)
        out.append(
            f'<text x="{sx(hi) + 6:.2f}" y="{cy + 3:.1f}" font-family="sans-serif" '
            f'font-size="9" fill="#b8860b">{stars}</text>\n'
        )

    out.append("</svg>\n")
    return "".join(out)
