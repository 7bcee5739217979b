"""Deterministic SVG drawings of planar slices of lattice and cube sets."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .cubes import CubeSet
from .errors import RenderError
from .lattice import LatticeSet

UNIT = 24
MARGIN = 12
FILL = "#9db4d6"
STROKE = "#1f2d3d"


def _num(x: Fraction) -> str:
    # Exact fractions rendered with a fixed number of decimals keep output byte-stable.
    text = f"{float(x):.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _squares(value, plane, slice_values):
    if isinstance(value, LatticeSet):
        rows, denom = value.points, 1
    elif isinstance(value, CubeSet):
        rows, denom = value.corners, value.denom
    else:
        raise RenderError(f"cannot render {type(value).__name__}")
    i, j = plane
    out = set()
    for r in rows:
        keep = True
        for k, c in slice_values.items():
            lo = Fraction(r[k], denom)
            # Half-open slabs so a slice on a shared face picks one side.
            if not (lo <= c < lo + 1):
                keep = False
                break
        if keep:
            x = Fraction(r[i], denom)
            y = Fraction(r[j], denom) if j is not None else Fraction(0)
            out.add((x, y))
    return sorted(out)


def _check(value, plane, slice_values):
    dim = value.dim
    if dim == 1:
        if plane not in (None, (0,), (0, None)):
            raise RenderError("one-dimensional sets render along axis 0 only")
        plane = (0, None)
    else:
        if plane is None:
            plane = (0, 1)
        plane = tuple(plane)
        if len(plane) != 2 or plane[0] == plane[1] or not all(0 <= p < dim for p in plane):
            raise RenderError(f"plane must be two distinct axes below {dim}, got {plane}")
    clean = {}
    for k, c in (slice_values or {}).items():
        k = int(k)
        if not 0 <= k < dim or k in plane:
            raise RenderError(f"slice axis {k} is outside the set or inside the drawing plane")
        clean[k] = Fraction(c)
    return plane, clean


def render_svg(
    value,
    plane: Sequence[int] | None = None,
    slice: Mapping[int, object] | None = None,
    path=None,
) -> str:
    """Draw one unit square per cell or cube meeting the slice.

    Axes outside ``plane`` that are not fixed by ``slice`` are projected.
    The y axis points up.  Returns the SVG text and writes it to ``path``
    when given.
    """
    plane, slice_values = _check(value, plane, slice)
    squares = _squares(value, plane, slice_values)
    if squares:
        xmin = min(x for x, _ in squares)
        xmax = max(x for x, _ in squares) + 1
        ymin = min(y for _, y in squares)
        ymax = max(y for _, y in squares) + 1
    else:
        xmin = ymin = Fraction(0)
        xmax = ymax = Fraction(0)
    width = (xmax - xmin) * UNIT + 2 * MARGIN
    height = (ymax - ymin) * UNIT + 2 * MARGIN
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
        f'<g fill="{FILL}" stroke="{STROKE}" stroke-width="1">',
    ]
    for x, y in squares:
        px = (x - xmin) * UNIT + MARGIN
        py = (ymax - y - 1) * UNIT + MARGIN
        lines.append(f'<rect x="{_num(px)}" y="{_num(py)}" width="{UNIT}" height="{UNIT}"/>')
    lines += ["</g>", "</svg>"]
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
