"""Static pictures of a region: SVG cells or a binary PGM raster."""

from __future__ import annotations

from .regions import RegionSet, region_bounds

DEFAULT_RENDER_CAP = 12


def to_svg(region: RegionSet, cell_px: int = 10) -> str:
    if cell_px <= 0:
        raise ValueError("cell_px must be positive")
    r = region_bounds(region.query)
    side = (2 * r + 1) * cell_px
    kind, level = region.query.kind.value, region.query.level
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f"<title>{kind}_{level}: {len(region)} points</title>",
        f'<rect width="{side}" height="{side}" fill="white"/>',
        '<g fill="black" stroke="none">',
    ]
    for p in sorted(region.elements):
        # Imaginary axis points up.
        x = (p.re + r) * cell_px
        y = (r - p.im) * cell_px
        out.append(f'<rect class="cell" x="{x}" y="{y}" width="{cell_px}" height="{cell_px}"/>')
    out.append("</g>")
    c = r * cell_px + cell_px / 2
    out.append(f'<circle class="origin" cx="{c:g}" cy="{c:g}" r="{max(cell_px / 4, 1):g}" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_pgm(region: RegionSet) -> bytes:
    """Binary (P5) raster over the bounding square; members are white."""
    r = region_bounds(region.query)
    side = 2 * r + 1
    pixels = bytearray(side * side)
    for p in region.elements:
        pixels[(r - p.im) * side + (p.re + r)] = 255
    return f"P5\n{side} {side}\n255\n".encode("ascii") + bytes(pixels)
