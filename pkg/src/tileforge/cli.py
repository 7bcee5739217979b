"""Command-line front end: ``tileforge <subcommand> ...``.

Exit status is 0 on success, 1 for domain outcomes such as "no tiling"
or a failed verification, and 2 for usage and input errors.  Results go
to stdout (or ``-o``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import bridges, cubes, io, lattice, render, spectral, torus
from .cubes import CubeSet, RationalVector
from .errors import (
    InvalidArgument,
    ParseError,
    RenderError,
    RoundLimitError,
    TileforgeError,
    ValidationError,
)
from .lattice import LatticeSet
from .search import BudgetExhausted, NotFound
from .torus import FiniteAbelianGroup

USAGE_ERRORS = (ParseError, ValidationError, RenderError, InvalidArgument)


class DomainFailure(Exception):
    """A well-formed request whose answer is negative."""


def _emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_lattice(path) -> LatticeSet:
    value = io.load(path)
    if not isinstance(value, LatticeSet):
        raise ValidationError(f"{path}: expected a latset file")
    return value


def _load_cubes(path) -> CubeSet:
    value = io.load(path)
    if isinstance(value, LatticeSet):
        return CubeSet.from_lattice(value)
    if not isinstance(value, CubeSet):
        raise ValidationError(f"{path}: expected a cubeset or latset file")
    return value


def _group(text) -> FiniteAbelianGroup:
    return FiniteAbelianGroup.parse(text)


def _plane(text):
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise RenderError(f"bad plane {text!r}, expected i,j") from None
    return parts


def _slice(text):
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        key, sep, val = item.partition("=")
        try:
            out[int(key)] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise RenderError(f"bad slice entry {item!r}, expected k=c") from None
        if not sep:
            raise RenderError(f"bad slice entry {item!r}, expected k=c")
    return out


def _search_outcome(result, what):
    if isinstance(result, NotFound):
        raise DomainFailure(f"no {what} exists (search exhausted after {result.nodes} nodes)")
    if isinstance(result, BudgetExhausted):
        raise DomainFailure(f"budget of {result.budget} nodes exhausted before deciding {what}")
    return result


def _verdict(ok: bool, output) -> None:
    _emit("true\n" if ok else "false\n", output)
    if not ok:
        raise DomainFailure("verification failed")


def cmd_components(args):
    value = io.load(args.file)
    if isinstance(value, CubeSet):
        parts = cubes.interior_components(value)
    elif isinstance(value, LatticeSet):
        parts = lattice.connected_components(value, args.mode)
    else:
        raise ValidationError(f"{args.file}: expected a latset or cubeset file")
    text = f"# components {len(parts)}\n" + "".join(io.dumps(p) for p in parts)
    _emit(text, args.output)


def cmd_bridge(args):
    f_prime, spec = bridges.folded_bridge(_load_lattice(args.file))
    if args.spec_out:
        io.save(spec, args.spec_out)
    print(f"path length n={len(spec.v) // 2}, |F'|={len(f_prime)}", file=sys.stderr)
    _emit(io.dumps(f_prime), args.output)


def cmd_gproduct(args):
    spec = io.load(args.spec)
    if not isinstance(spec, bridges.BridgeSpec):
        raise ValidationError(f"{args.spec}: expected a bridgespec file")
    _emit(io.dumps(bridges.generalized_product(_load_lattice(args.file), spec)), args.output)


def cmd_snake(args):
    if args.n < 1:
        raise InvalidArgument("snake length must be positive")
    _emit(io.dumps(LatticeSet(2, tuple(bridges.snake_sequence(args.n)))), args.output)


def cmd_tile(args):
    f = _load_lattice(args.file)
    g = _group(args.group)
    if args.verify:
        _verdict(torus.verify_tiling(f, _load_lattice(args.verify), g), args.output)
        return
    witness = _search_outcome(torus.find_tiling(f, g, args.budget), "tiling")
    _emit(io.dumps(witness.translates), args.output)


def cmd_periods(args):
    g = _group(args.group)
    sub = torus.tiling_periods(_load_lattice(args.file), g)
    gens = LatticeSet(g.dim, tuple(sub.generators))
    _emit(f"# stabilizer order {sub.order}\n" + io.dumps(gens), args.output)


def cmd_zeros(args):
    _emit(io.dumps(spectral.zero_set(_load_lattice(args.file), _group(args.group))), args.output)


def cmd_spectrum(args):
    result = spectral.find_spectrum(_load_lattice(args.file), _group(args.group), args.budget)
    witness = _search_outcome(result, "spectrum")
    _emit(io.dumps(witness.frequencies), args.output)


def cmd_orthocheck(args):
    ok = spectral.verify_orthogonal_set(
        _load_lattice(args.file), _group(args.group), _load_lattice(args.freqs)
    )
    _verdict(ok, args.output)


def cmd_prodspec(args):
    lam = spectral.product_spectrum(_load_lattice(args.first), _load_lattice(args.second))
    _emit(io.dumps(lam), args.output)


def cmd_cosetfilter(args):
    pts = io.load(args.file)
    if not isinstance(pts, io.RationalSet):
        raise ValidationError(f"{args.file}: expected a ratset file")
    u = RationalVector.parse(args.u)
    kept = spectral.coset_filter(pts, u.fractions, args.n)
    _emit(io.dumps(io.RationalSet(pts.dim, kept)), args.output)


def cmd_stack(args):
    omega = _load_cubes(args.file)
    result = cubes.stacking(omega, RationalVector.parse(args.v), args.copies)
    _emit(io.dumps(result), args.output)


def cmd_rbridge(args):
    result = cubes.real_folded_bridge(_load_cubes(args.file), k_override=args.k)
    _emit(io.dumps(result), args.output)


def _fmt(x):
    return "-" if x is None else f"{x:.6f}"


def cmd_spiral(args):
    omega = _load_cubes(args.file)
    try:
        result, log = cubes.spiral_bridge(omega, args.max_rounds, widen=not args.no_widen)
    except RoundLimitError as exc:
        _write_log(exc.log)
        raise
    _write_log(log)
    if args.output:
        io.save(result, args.output)


def _write_log(log):
    rows = ["round\tdim\tD\tn\tm\tD_after\tcomponents"]
    for r in log:
        rows.append(
            f"{r.round}\t{r.dim}\t{_fmt(r.distance)}\t{r.n}\t{r.copies}\t"
            f"{_fmt(r.distance_after)}\t{r.components_after}"
        )
    sys.stdout.write("\n".join(rows) + "\n")


def cmd_volume(args):
    value = io.load(args.file)
    if isinstance(value, CubeSet):
        vol = cubes.volume(value)
    elif isinstance(value, LatticeSet):
        vol = len(value)
    else:
        raise ValidationError(f"{args.file}: expected a latset or cubeset file")
    _emit(f"{vol}\n", args.output)


def cmd_tolattice(args):
    _emit(io.dumps(cubes.to_lattice(_load_cubes(args.file))), args.output)


def cmd_render(args):
    value = io.load(args.file)
    if not isinstance(value, (LatticeSet, CubeSet)):
        raise ValidationError(f"{args.file}: expected a latset or cubeset file")
    plane = _plane(args.plane) if args.plane else None
    text = render.render_svg(value, plane, _slice(args.slice))
    _emit(text, args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tileforge",
        description="Folded bridges, stacking and exact tiling/spectrality checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", help="write the result here instead of stdout")
        return p

    def budget(p):
        p.add_argument(
            "--budget", type=int, default=None,
            help="search node limit (default 1000000, or TILEFORGE_BUDGET_DEFAULT)",
        )

    p = add("components", cmd_components, "connected components of a latset or cubeset")
    p.add_argument("file")
    p.add_argument("--mode", choices=(lattice.MOORE, lattice.AXIS), default=lattice.MOORE)

    p = add("bridge", cmd_bridge, "discrete folded bridge of a latset")
    p.add_argument("file")
    p.add_argument("--spec-out", help="also save the bridge offsets as a bridgespec file")

    p = add("gproduct", cmd_gproduct, "generalized product (F x {0}^k) + X")
    p.add_argument("file")
    p.add_argument("spec", help="bridgespec file")

    p = add("snake", cmd_snake, "snake sequence of length 2n as a latset")
    p.add_argument("n", type=int)

    p = add("tile", cmd_tile, "find or verify a tiling of a finite group")
    p.add_argument("file")
    p.add_argument("--group", required=True, help="moduli, e.g. 6x4x2")
    p.add_argument("--verify", metavar="TRANSLATES", help="check this translate set instead of searching")
    budget(p)

    p = add("periods", cmd_periods, "stabilizer subgroup of a translate set")
    p.add_argument("file")
    p.add_argument("--group", required=True)

    p = add("zeros", cmd_zeros, "exact Fourier zero set")
    p.add_argument("file")
    p.add_argument("--group", required=True)

    p = add("spectrum", cmd_spectrum, "search for a spectrum containing 0")
    p.add_argument("file")
    p.add_argument("--group", required=True)
    budget(p)

    p = add("orthocheck", cmd_orthocheck, "check that frequencies are mutually orthogonal")
    p.add_argument("file")
    p.add_argument("freqs")
    p.add_argument("--group", required=True)

    p = add("prodspec", cmd_prodspec, "product of two spectra")
    p.add_argument("first")
    p.add_argument("second")

    p = add("cosetfilter", cmd_cosetfilter, "drop points whose differences hit the stacking zero cosets")
    p.add_argument("file", help="ratset file")
    p.add_argument("--u", required=True, help='stacking direction, e.g. "1/2,1"')
    p.add_argument("--n", type=int, required=True, help="number of stacked copies")

    p = add("stack", cmd_stack, "stacking of a cube set")
    p.add_argument("file")
    p.add_argument("--v", required=True, help='shift, e.g. "1/2,0"')
    p.add_argument("--copies", type=int, required=True)

    p = add("rbridge", cmd_rbridge, "folded bridge of a cube set")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None, help="fixed step count instead of the smallest valid one")

    p = add("spiral", cmd_spiral, "spiral bridge; prints the round log as TSV")
    p.add_argument("file")
    p.add_argument("--max-rounds", type=int, default=64)
    p.add_argument("--no-widen", action="store_true", help="never raise n for axis-aligned integer gaps")

    p = add("volume", cmd_volume, "number of unit cubes (or points)")
    p.add_argument("file")

    p = add("tolattice", cmd_tolattice, "grid cells covered by a cube set")
    p.add_argument("file")

    p = add("render", cmd_render, "SVG drawing of a planar slice")
    p.add_argument("file")
    p.add_argument("--plane", help="two axes, e.g. 0,1")
    p.add_argument("--slice", help='fixed coordinates, e.g. "2=0,3=1/2"')
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except DomainFailure as exc:
        print(f"tileforge: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        print(f"tileforge: {exc}", file=sys.stderr)
        return 2
    except TileforgeError as exc:
        print(f"tileforge: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"tileforge: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
