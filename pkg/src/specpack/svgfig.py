"""SVG rendering of packed planar domains.

Components are drawn to scale (disk radius sqrt(area/pi), rectangles with
their true aspect), sorted by decreasing area and laid out left to right on a
common centerline with 0.05 gaps.  The layout is presentational only; the
geometric claim is the per-component scale.
"""

import math

GAP = 0.05
MARGIN = 0.1
STROKE = 0.01


def _fmt(x):
    return f"{x:.6f}"


def _extent(shape, volume):
    # (width, height) of the drawn component
    if shape.kind == "disk":
        r = math.sqrt(volume / math.pi)
        return 2.0 * r, 2.0 * r
    if shape.kind == "rectangle":
        a, b = shape.sides
        s = math.sqrt(volume / (a * b))
        return a * s, b * s
    raise ValueError(f"cannot draw 3D shape {shape.kind!r}")


def packing_svg(domain, annotation):
    """Render a PackedDomain as a standalone SVG document."""
    comps = sorted(
        domain.components, key=lambda c: -c.volume
    )
    extents = [_extent(c.shape, c.volume) for c in comps]
    width = sum(w for w, _ in extents) + GAP * (len(comps) - 1)
    height = max(h for _, h in extents)

    parts = []
    x = 0.0
    for c, (w, h) in zip(comps, extents):
        if c.shape.kind == "disk":
            r = 0.5 * w
            parts.append(
                f'<circle cx="{_fmt(x + r)}" cy="0.000000" r="{_fmt(r)}" '
                f'fill="none" stroke="black" stroke-width="{_fmt(STROKE)}"/>'
            )
        else:
            parts.append(
                f'<rect x="{_fmt(x)}" y="{_fmt(-0.5 * h)}" width="{_fmt(w)}" '
                f'height="{_fmt(h)}" fill="none" stroke="black" '
                f'stroke-width="{_fmt(STROKE)}"/>'
            )
        x += w + GAP

    text_y = -0.5 * height - 0.08
    parts.append(
        f'<text x="0.000000" y="{_fmt(text_y)}" font-size="0.12" '
        f'font-family="monospace">{annotation}</text>'
    )

    vb_x = -MARGIN
    vb_y = -0.5 * height - MARGIN - 0.2
    vb_w = width + 2 * MARGIN
    vb_h = height + 2 * MARGIN + 0.2
    body = "\n  ".join(parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(vb_x)} {_fmt(vb_y)} {_fmt(vb_w)} {_fmt(vb_h)}">\n'
        f"  {body}\n</svg>\n"
    )
