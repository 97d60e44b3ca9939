"""SVG and ASCII pictures of lattice paths."""

from __future__ import annotations

from .words import Word, prefix_path

UNIT = 24
MARGIN = 1


def render_svg(w: Word, title: str | None = None) -> str:
    path = prefix_path(w)
    xs = [x for x, _ in path]
    ys = [y for _, y in path]
    x0, x1 = min(xs + [0]) - MARGIN, max(xs + [0]) + MARGIN
    y0, y1 = min(ys + [0]) - MARGIN, max(ys + [0]) + MARGIN
    width, height = (x1 - x0) * UNIT, (y1 - y0) * UNIT

    def px(x, y):
        return (x - x0) * UNIT, (y1 - y) * UNIT

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" '
        'style="fill:#1f4e9c"/></marker></defs>',
    ]
    if title:
        parts.append(f"<title>{title}</title>")
    for x in range(x0, x1 + 1):
        a, b = px(x, y0), px(x, y1)
        parts.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" style="stroke:#ddd;stroke-width:1"/>')
    for y in range(y0, y1 + 1):
        a, b = px(x0, y), px(x1, y)
        parts.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" style="stroke:#ddd;stroke-width:1"/>')
    # axes
    a, b = px(x0, 0), px(x1, 0)
    parts.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" style="stroke:#888;stroke-width:1.5"/>')
    a, b = px(0, y0), px(0, y1)
    parts.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" style="stroke:#888;stroke-width:1.5"/>')
    for (xa, ya), (xb, yb) in zip(path, path[1:]):
        a, b = px(xa, ya), px(xb, yb)
        parts.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                     f'style="stroke:#1f4e9c;stroke-width:2" marker-end="url(#arrow)"/>')
    sx, sy = px(*path[0])
    parts.append(f'<circle cx="{sx}" cy="{sy}" r="4" style="fill:#c0392b"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_ascii(w: Word) -> str:
    """Lattice points of the path: 'o' start, '@' end, '*' visited, '.' empty."""
    path = prefix_path(w)
    xs = [x for x, _ in path] + [0]
    ys = [y for _, y in path] + [0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    grid = [["." for _ in range(x0, x1 + 1)] for _ in range(y0, y1 + 1)]
    for x, y in path:
        grid[y1 - y][x - x0] = "*"
    ex, ey = path[-1]
    grid[y1 - ey][ex - x0] = "@"
    grid[y1 - path[0][1]][path[0][0] - x0] = "o"
    return "\n".join(" ".join(row) for row in grid) + "\n"
