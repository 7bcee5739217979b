"""Plain-text set files.

Every file starts with a header naming the kind, a format version and the
shape, followed by one row per element::

    latset 1 <dim>
    cubeset 1 <dim> <denom>
    ratset 1 <dim>
    bridgespec 1 <vdim> <sdim>

Rows are whitespace-separated integers (``p/q`` rationals for ``ratset``).
Blank lines and ``#`` comments are ignored.  Saved rows are in canonical
order, so ``loads(dumps(x)) == x``.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .bridges import BridgeSpec
from .cubes import CubeSet
from .errors import DimensionError, OverlapError, ParseError, ValidationError
from .lattice import LatticeSet

FORMAT_VERSION = 1


class RationalSet(tuple):
    """Ordered list of rational vectors read from a ``ratset`` file."""

    def __new__(cls, dim: int, rows=()):
        obj = super().__new__(cls, (tuple(Fraction(x) for x in r) for r in rows))
        obj.dim = dim
        return obj


def _int_row(tokens, arity, lineno):
    if len(tokens) != arity:
        raise ParseError(f"expected {arity} values, got {len(tokens)}", lineno)
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"non-integer value in {' '.join(tokens)!r}", lineno) from None


def _header_ints(tokens, count, lineno):
    if len(tokens) != count:
        raise ParseError(f"header for {tokens[0]!r} needs {count - 1} fields", lineno)
    try:
        values = [int(t) for t in tokens[1:]]
    except ValueError:
        raise ParseError("header fields must be integers", lineno) from None
    if values[0] != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {values[0]}", lineno)
    if any(v < 1 for v in values[1:]):
        raise ParseError("header sizes must be positive", lineno)
    return values[1:]


def loads(text: str):
    """Parse set-file text into a LatticeSet, CubeSet, RationalSet or BridgeSpec."""
    lines = [
        (i, raw.split("#", 1)[0].split())
        for i, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise ParseError("empty file", 1)
    lineno, header = lines[0]
    kind = header[0]
    body = lines[1:]

    def unique(rows):
        seen = {}
        for i, r in rows:
            if r in seen:
                raise ValidationError(f"line {i}: duplicate row (first seen on line {seen[r]})")
            seen[r] = i
        return [r for _, r in rows]

    if kind == "latset":
        (dim,) = _header_ints(header, 3, lineno)
        rows = unique([(i, _int_row(t, dim, i)) for i, t in body])
        return LatticeSet(dim, tuple(rows))
    if kind == "cubeset":
        dim, denom = _header_ints(header, 4, lineno)
        rows = unique([(i, _int_row(t, dim, i)) for i, t in body])
        try:
            return CubeSet(dim, denom, tuple(rows))
        except OverlapError as exc:
            raise ValidationError(str(exc)) from None
    if kind == "ratset":
        (dim,) = _header_ints(header, 3, lineno)
        rows = []
        for i, toks in body:
            if len(toks) != dim:
                raise ParseError(f"expected {dim} values, got {len(toks)}", i)
            try:
                rows.append((i, tuple(Fraction(t) for t in toks)))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational in {' '.join(toks)!r}", i) from None
        return RationalSet(dim, unique(rows))
    if kind == "bridgespec":
        vdim, sdim = _header_ints(header, 4, lineno)
        rows = [_int_row(t, vdim + sdim, i) for i, t in body]
        if not rows:
            raise ParseError("a bridge spec needs at least one row", lineno)
        try:
            return BridgeSpec.from_offsets(rows, vdim)
        except (DimensionError, ValueError) as exc:
            raise ValidationError(str(exc)) from None
    raise ParseError(f"unknown set kind {kind!r}", lineno)


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dumps(value) -> str:
    if isinstance(value, LatticeSet):
        head = f"latset {FORMAT_VERSION} {value.dim}"
        rows = value.points
    elif isinstance(value, CubeSet):
        head = f"cubeset {FORMAT_VERSION} {value.dim} {value.denom}"
        rows = value.corners
    elif isinstance(value, BridgeSpec):
        head = f"bridgespec {FORMAT_VERSION} {value.vdim} {value.sdim}"
        rows = value.offsets
    elif isinstance(value, RationalSet):
        lines = [f"ratset {FORMAT_VERSION} {value.dim}"]
        lines += [" ".join(_fmt_rational(x) for x in r) for r in value]
        return "\n".join(lines) + "\n"
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return "\n".join([head] + [" ".join(str(x) for x in r) for r in rows]) + "\n"


def load(path):
    return loads(Path(path).read_text())


def save(value, path) -> None:
    Path(path).write_text(dumps(value))
