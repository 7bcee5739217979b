import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tileforge import cli, io
from tileforge.bridges import folded_bridge, snake_sequence
from tileforge.cubes import CubeSet, spiral_bridge
from tileforge.errors import ParseError, RenderError, ValidationError
from tileforge.lattice import LatticeSet
from tileforge.render import render_svg


def test_loads_examples():
    assert io.loads("latset 1 1\n0\n3\n") == LatticeSet.of(0, 3)
    with pytest.raises(ParseError) as exc:
        io.loads("latset 1 1\n0 1\n")
    assert exc.value.line == 2 and str(exc.value).startswith("line 2")


def test_loads_comments_and_errors():
    text = "# header comment\ncubeset 1 2 2\n0 0  # first\n\n2 0\n"
    assert io.loads(text) == CubeSet(2, 2, ((0, 0), (2, 0)))
    with pytest.raises(ValidationError):
        io.loads("latset 1 1\n0\n0\n")
    with pytest.raises(ValidationError):
        io.loads("cubeset 1 1 2\n0\n1\n")
    with pytest.raises(ParseError):
        io.loads("widgets 1 1\n")
    with pytest.raises(ParseError):
        io.loads("latset 2 1\n")
    with pytest.raises(ParseError):
        io.loads("")


def test_spiral_output_round_trip(tmp_path):
    result, _ = spiral_bridge(CubeSet(1, 1, ((0,), (3,))))
    io.save(result, tmp_path / "s.cubes")
    assert io.load(tmp_path / "s.cubes") == result


def test_bridgespec_and_ratset_round_trip():
    _, spec = folded_bridge(LatticeSet.of(0, 3))
    assert io.loads(io.dumps(spec)) == spec
    rs = io.RationalSet(2, [(Fraction(1, 2), 3), (0, Fraction(-2, 3))])
    back = io.loads(io.dumps(rs))
    assert list(back) == list(rs) and back.dim == 2


@given(
    st.integers(1, 4).flatmap(
        lambda d: st.lists(st.tuples(*[st.integers(-50, 50)] * d), max_size=15, unique=True).map(
            lambda rows: LatticeSet(d, tuple(rows))
        )
    )
)
def test_latset_round_trip(f):
    assert io.loads(io.dumps(f)) == f


@given(
    st.integers(1, 3).flatmap(
        lambda d: st.lists(st.tuples(*[st.integers(-8, 8)] * d), max_size=12, unique=True).map(
            lambda rows: (d, rows)
        )
    ),
    st.integers(1, 5),
)
def test_cubeset_round_trip(case, denom):
    d, rows = case
    c = CubeSet(d, denom, tuple(tuple(denom * x for x in r) for r in rows))
    assert io.loads(io.dumps(c)) == c


def test_render_examples():
    snake = LatticeSet(2, tuple(snake_sequence(4)))
    svg = render_svg(snake)
    assert svg.count("<rect") == 8
    ys = {line.split('y="')[1].split('"')[0] for line in svg.splitlines() if "<rect" in line}
    assert len(ys) == 2
    assert render_svg(snake) == svg
    empty = render_svg(LatticeSet(2, ()))
    assert "<svg" in empty and "<rect" not in empty
    cube = CubeSet(3, 2, ((0, 0, 0), (2, 0, 2)))
    assert render_svg(cube, (0, 1), {2: 0}).count("<rect") == 1
    assert render_svg(cube, (0, 1)).count("<rect") == 2
    with pytest.raises(RenderError):
        render_svg(snake, (0, 0))
    with pytest.raises(RenderError):
        render_svg(cube, (0, 1), {1: 0})


def run(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "tileforge", *map(str, args)],
        capture_output=True, text=True, cwd=cwd,
    )


@pytest.fixture
def files(tmp_path):
    paths = {
        "f03": "latset 1 1\n0\n3\n",
        "f013": "latset 1 1\n0\n1\n3\n",
        "f0123": "latset 1 1\n0\n1\n2\n3\n",
        "f01": "latset 1 1\n0\n1\n",
        "a012": "latset 1 1\n0\n1\n2\n",
        "lam": "latset 1 1\n0\n2\n4\n6\n",
        "sig": "latset 1 1\n0\n1\n",
        "c03": "cubeset 1 1 1\n0\n3\n",
        "diag": "cubeset 1 2 1\n0 0\n1 1\n",
        "rat": "ratset 1 1\n0\n1/2\n1\n",
        "bad": "latset 1 1\n0 1\n",
    }
    out = {}
    for k, text in paths.items():
        p = tmp_path / k
        p.write_text(text)
        out[k] = p
    return out


def test_cli_outputs(files, tmp_path):
    r = run("components", files["f03"])
    assert r.returncode == 0 and r.stdout.startswith("# components 2")
    r = run("bridge", files["f03"], "--spec-out", tmp_path / "spec")
    assert r.returncode == 0 and len(io.loads(r.stdout)) == 16
    r = run("gproduct", files["f03"], tmp_path / "spec")
    assert r.returncode == 0 and len(io.loads(r.stdout)) == 16
    r = run("snake", 3)
    assert io.loads(r.stdout).points == tuple(sorted(snake_sequence(3)))
    r = run("tile", files["f03"], "--group", "6")
    assert r.returncode == 0 and len(io.loads(r.stdout)) == 3
    r = run("tile", files["f03"], "--group", "6", "--verify", files["a012"])
    assert (r.returncode, r.stdout) == (0, "true\n")
    r = run("tile", files["f01"], "--group", "4", "--verify", files["f01"])
    assert (r.returncode, r.stdout) == (1, "false\n")
    r = run("tile", files["f013"], "--group", "6")
    assert r.returncode == 1 and "no tiling" in r.stderr
    r = run("tile", files["f013"], "--group", "12", "--budget", "1")
    assert r.returncode == 1 and "budget" in r.stderr
    r = run("periods", files["f03"], "--group", "6")
    assert r.returncode == 0 and "order 2" in r.stdout
    r = run("zeros", files["f0123"], "--group", "8")
    assert io.loads(r.stdout) == LatticeSet.of(2, 4, 6)
    r = run("spectrum", files["f0123"], "--group", "8")
    assert io.loads(r.stdout) == LatticeSet.of(0, 2, 4, 6)
    r = run("spectrum", files["f013"], "--group", "6")
    assert r.returncode == 1
    r = run("orthocheck", files["f0123"], files["lam"], "--group", "8")
    assert (r.returncode, r.stdout) == (0, "true\n")
    r = run("prodspec", files["lam"], files["sig"])
    assert len(io.loads(r.stdout)) == 8
    r = run("cosetfilter", files["rat"], "--u", "1", "--n", "2")
    assert list(io.loads(r.stdout)) == [(0,), (1,)]
    r = run("stack", files["c03"], "--v", "1/2", "--copies", "2")
    assert io.loads(r.stdout) == CubeSet(2, 2, ((0, 0), (1, 2), (6, 0), (7, 2)))
    r = run("rbridge", files["c03"])
    out = io.loads(r.stdout)
    assert len(out.corners) == 20
    r = run("spiral", files["diag"], "-o", tmp_path / "sp")
    lines = r.stdout.splitlines()
    assert lines[0].split("\t") == ["round", "dim", "D", "n", "m", "D_after", "components"]
    assert lines[1].split("\t")[3:5] == ["2", "2"] and lines[1].endswith("\t1")
    assert io.load(tmp_path / "sp").dim == 3
    r = run("volume", files["c03"])
    assert r.stdout == "2\n"
    r = run("tolattice", files["c03"])
    assert io.loads(r.stdout) == LatticeSet.of(0, 3)
    r = run("render", files["diag"], "--plane", "0,1")
    assert r.returncode == 0 and r.stdout.count("<rect") == 2


def test_cli_usage_errors(files):
    assert run("components", files["bad"]).returncode == 2
    assert "line 2" in run("components", files["bad"]).stderr
    assert run("render", files["diag"], "--plane", "0,0").returncode == 2
    assert run("snake", 0).returncode == 2
    assert run("tile", files["f03"]).returncode == 2
    assert run("zeros", files["f03"], "--group", "6", "-o", "/nonexistent/x").returncode == 2
    assert run("tile", files["f03"], "--group", "3").returncode == 1


def test_cli_main_in_process(files, capsys):
    assert cli.main(["volume", str(files["f03"])]) == 0
    assert capsys.readouterr().out == "2\n"
