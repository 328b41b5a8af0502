"""Command-line frontend.

Results go to stdout with deterministic ordering; progress and warnings go
to stderr. Vertices are written as integer bitmasks 0 .. 2^n - 1 with bit
j-1 holding coordinate x_j.
"""

from __future__ import annotations

import json
import sys
import time

import click
import numpy as np

from . import geometry, heights, jacobian, morse, wire
from .hypercube import is_bipartition_white, vertices


def _progress(msg: str) -> None:
    click.echo(msg, err=True)


@click.group()
def main():
    """Height functions on rainbow-colored hypercubes and their curve images."""


@main.command("enumerate")
@click.argument("n", type=int)
@click.option("--count-only", is_flag=True, help="Print only the count.")
@click.option("--out", type=click.Path(writable=True), help="Dump heights as JSONL.")
@click.option("--force", is_flag=True, help="Allow the recorded n=6 count.")
def cmd_enumerate(n, count_only, out, force):
    """Count (and optionally dump) all height functions on H^N."""
    if n < 1 or n > 6:
        raise click.ClickException(f"n={n} is unsupported (need 1 <= n <= 6)")
    if n == 6:
        if not force:
            raise click.ClickException(
                "n=6 has 33,433,683,534 heights; enumeration refused "
                "(pass --force to print the recorded count)"
            )
        _progress("n=6 count is recorded, not enumerated")
        click.echo(heights.N6_HEIGHT_COUNT)
        return
    _progress(f"enumerating heights of H^{n}")
    H = heights.enumerate_heights(n)
    click.echo(len(H))
    if out and not count_only:
        with open(out, "w") as fh:
            for row in H:
                fh.write(json.dumps({"n": n, "values": row.tolist()}) + "\n")
        _progress(f"wrote {len(H)} heights to {out}")


@main.command("census")
@click.option("--curve", "k", type=click.IntRange(1, 5), default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def cmd_census(k, fmt):
    """Histogram of the curve-K image Z-coordinate over all heights of H^5."""
    _progress(f"computing census for curve {k}")
    hist = jacobian.census(k)
    bins = [(a, hist.get(a, 0)) for a in range(-8, 9)]
    if fmt == "csv":
        click.echo("a,count")
        for a, c in bins:
            click.echo(f"{a},{c}")
    else:
        click.echo(json.dumps({"k": k, "bins": [{"a": a, "count": c} for a, c in bins]}))


def _height_from_pins(spec: str) -> heights.Height:
    n = 5
    if spec in ("fully-extended", "fully_extended"):
        return heights.fully_extended(n)
    if spec.startswith("all-white@") or spec.startswith("all-black@"):
        want_white = spec.startswith("all-white@")
        level = int(spec.split("@", 1)[1])
        pins = {
            v: level
            for v in vertices(n)
            if is_bipartition_white(v) == want_white
        }
        return heights.from_pins(n, pins)
    pins = {}
    for part in spec.split(","):
        v, val = part.split("@")
        pins[int(v)] = int(val)
    return heights.from_pins(n, pins)


@main.command("image")
@click.option("--height", "height_file", type=click.Path(exists=True))
@click.option("--pins", "pin_spec", type=str)
def cmd_image(height_file, pin_spec):
    """Divisor and five curve images of a height on H^5."""
    if bool(height_file) == bool(pin_spec):
        raise click.ClickException("give exactly one of --height or --pins")
    if height_file:
        with open(height_file) as fh:
            h = wire.height_from_json(json.load(fh))
    else:
        try:
            h = _height_from_pins(pin_spec)
        except ValueError as exc:
            raise click.ClickException(str(exc))
    if h.n != 5:
        raise click.ClickException("images are defined on H^5")
    d = morse.divisor(h)
    out = {
        "height": wire.height_json(h),
        "divisor": wire.divisor_json(d),
        "image": wire.image_json(jacobian.height_image(h)),
    }
    click.echo(json.dumps(out))


@main.command("classes")
@click.option("--n", type=click.IntRange(1, 5), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def cmd_classes(n, fmt):
    """Partition the heights of H^N into equivalence classes."""
    if n == 5:
        _progress("n=5 partitions 395,094 heights; this takes a few minutes")
    labels = heights.comb_classes(n)
    sizes = sorted(heights.class_sizes(labels))
    if fmt == "csv":
        click.echo("class_size")
        for s in sizes:
            click.echo(str(s))
    else:
        click.echo(json.dumps({"n": n, "classes": len(sizes), "sizes": sizes}))


@main.command("gamma")
@click.option("--n", type=click.IntRange(1, 5), required=True)
@click.option("--reduced", is_flag=True, help="Collapse to equivalence classes.")
@click.option(
    "--format", "fmt", type=click.Choice(["json", "csv", "dot"]), default="json"
)
def cmd_gamma(n, reduced, fmt):
    """Export the lowering digraph on heights (or on classes) of H^N."""
    if reduced:
        labels, edge_set = heights.reduced_lowering_edges(n)
        nodes = int(labels.max()) + 1
        edges = sorted(edge_set)
    else:
        src, _, dst = heights.lowering_edges(n)
        nodes = len(heights.enumerate_heights(n))
        edges = sorted(zip(src.tolist(), dst.tolist()))
    if fmt == "dot":
        click.echo("digraph gamma {")
        for a, b in edges:
            click.echo(f"  {a} -> {b};")
        click.echo("}")
    elif fmt == "csv":
        click.echo("src,dst")
        for a, b in edges:
            click.echo(f"{a},{b}")
    else:
        click.echo(json.dumps({"n": n, "nodes": nodes, "edges": [list(e) for e in edges]}))


_SUITES = ("counts", "morse", "steps", "theorem", "geometry", "equivariance", "all")


def _run_suite(name: str) -> dict:
    if name == "counts":
        got = [heights.count_heights(n) for n in range(1, 6)]
        ok = got == [2, 6, 38, 990, 395094]
        cols = [heights.count_three_colorings(n) for n in range(1, 5)]
        ok = ok and cols == [3 * g for g in got[:4]]
        return {"ok": ok, "height_counts": got, "coloring_counts": cols}
    if name == "morse":
        H = heights.enumerate_heights(5)
        degs = morse.degree_array(H, 5)
        ok = bool(np.all(degs == 8))
        return {"ok": ok, "heights": len(H), "degree": 8}
    if name == "steps":
        checked = jacobian.check_step_law()
        return {"ok": True, "moves_checked": checked}
    if name == "theorem":
        A, _, _ = jacobian.check_main_theorem()
        hi = int(np.sum(A[:, 0] == 8))
        lo = int(np.sum(A[:, 0] == -8))
        return {
            "ok": hi == 24 and lo == 24,
            "max_abs_a": int(np.abs(A).max()),
            "a_plus8": hi,
            "a_minus8": lo,
        }
    if name == "geometry":
        passed, total, failures = geometry.cross_validate()
        worst = 0.0
        from .hypercube import faces

        for k in range(1, 6):
            for v in range(32):
                worst = max(
                    worst, geometry.curve_residual(k, geometry.nu(k, geometry.embedding(v)))
                )
            for f in faces(5):
                worst = max(
                    worst,
                    geometry.curve_residual(k, geometry.nu(k, geometry.face_center(f))),
                )
        return {
            "ok": passed == total and worst < 1e-9,
            "cross_validate": f"{passed}/{total}",
            "worst_residual": worst,
            "failures": [repr(f) for f in failures],
        }
    if name == "equivariance":
        rotations = jacobian.check_rotation_equivariance()
        shifts = jacobian.check_shift_equivariance()
        return {"ok": True, "rotations": rotations, "shift_pairs": shifts}
    raise ValueError(name)


@main.command("verify")
@click.option("--suite", type=click.Choice(_SUITES), default="all", show_default=True)
def cmd_verify(suite):
    """Run verification suites; nonzero exit on any failure."""
    names = _SUITES[:-1] if suite == "all" else (suite,)
    report = {}
    ok = True
    for name in names:
        _progress(f"running suite {name}")
        t0 = time.time()
        try:
            result = _run_suite(name)
        except AssertionError as exc:
            result = {"ok": False, "error": str(exc)}
        result["seconds"] = round(time.time() - t0, 2)
        report[name] = result
        ok = ok and result["ok"]
    click.echo(json.dumps(report))
    if not ok:
        sys.exit(1)


@main.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", type=str, default="127.0.0.1", show_default=True)
def cmd_serve(port, host):
    """Run the JSON session service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
