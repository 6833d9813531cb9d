"""Command-line surface: pack, verify, bounds, gen, batch."""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from . import bounds as bounds_mod
from .audit import validate
from .classification import table_csv
from .containers import (PackResult, pack_rect_online, pack_square_online,
                         table_for)
from .genseq import GenSpec, generate
from .geometry import EPS
from .svg import render_svg

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_REJECTED = 2


def _read_radii(stream) -> list[float]:
    text = stream.read()
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            radii = json.loads(text)
        except json.JSONDecodeError as exc:
            raise click.ClickException(f"malformed JSON input: {exc}")
        if not isinstance(radii, list):
            raise click.ClickException("JSON input must be an array of radii")
        return [float(r) for r in radii]
    radii = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            radii.append(float(line))
        except ValueError:
            raise click.ClickException(
                f"malformed radius on line {lineno}: {line!r}")
    return radii


def _dump_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


@click.group()
def main():
    """Online circle packing into squares and rectangles."""


@main.command("pack")
@click.option("--container", type=click.Choice(["square", "rect"]),
              required=True)
@click.option("--b", "aspect", type=float, default=None,
              help="Rectangle aspect (rect container only, b >= 1).")
@click.option("--mode", type=click.Choice(["general", "no-tiny"]),
              default="general", show_default=True,
              help="Square packing mode.")
@click.option("--input", "input_path", type=click.Path(exists=True,
              dir_okay=False), default=None,
              help="Radii, one per line or a JSON array; default stdin.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False),
              default=None, help="Write the packing result JSON here.")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False),
              default=None, help="Write an SVG rendering here.")
@click.option("--eps", type=float, default=EPS, show_default=True,
              envvar="CIRCLEPACK_EPS")
def pack_cmd(container, aspect, mode, input_path, json_path, svg_path, eps):
    """Pack a radius sequence online; exit 0 if all packed, 2 on rejection."""
    mode = mode.replace("-", "_")
    if container == "rect":
        if aspect is None or aspect < 1:
            raise click.ClickException("rect container requires --b >= 1")
    elif aspect is not None:
        raise click.ClickException("--b only applies to the rect container")
    if input_path is not None:
        with open(input_path) as f:
            radii = _read_radii(f)
    else:
        radii = _read_radii(sys.stdin)
    try:
        if container == "rect":
            result = pack_rect_online(aspect, radii, eps=eps)
        else:
            result = pack_square_online(mode, radii, eps=eps)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    payload = _dump_json(result.to_json_dict())
    if json_path:
        with open(json_path, "w") as f:
            f.write(payload)
    else:
        click.echo(payload, nl=False)
    if svg_path:
        with open(svg_path, "w") as f:
            f.write(render_svg(result))
    sys.exit(EXIT_OK if result.status == "all_packed" else EXIT_REJECTED)


@main.command("verify")
@click.argument("result_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--eps", type=float, default=None, envvar="CIRCLEPACK_EPS",
              help="Override the tolerance recorded in the result.")
def verify_cmd(result_path, eps):
    """Audit a packing result JSON; exit 0 if valid, 1 otherwise."""
    with open(result_path) as f:
        try:
            result = PackResult.from_json_dict(json.load(f))
        except (json.JSONDecodeError, KeyError) as exc:
            raise click.ClickException(f"unreadable result file: {exc}")
    report = validate(result, eps=eps)
    click.echo(_dump_json(report.to_json_dict()), nl=False)
    sys.exit(EXIT_OK if report.valid else EXIT_INPUT_ERROR)


@main.command("bounds")
@click.option("--delta", "delta_q", type=float, default=None,
              help="Evaluate the dense-block density floor at q.")
@click.option("--rect", "rect_b", type=float, default=None,
              help="Guaranteed packable area for the 1 x b rectangle.")
@click.option("--square-mode", type=click.Choice(["general", "no-tiny"]),
              default=None, help="Guaranteed packable area for the square.")
@click.option("--table", "show_table", is_flag=True,
              help="Dump the class table as CSV (base width 1).")
@click.option("--width", type=float, default=1.0, show_default=True,
              help="Base lane width for --table.")
def bounds_cmd(delta_q, rect_b, square_mode, show_table, width):
    """Evaluate density bounds and guarantees."""
    did = False
    try:
        if delta_q is not None:
            click.echo(repr(bounds_mod.delta(delta_q)))
            did = True
        if rect_b is not None:
            click.echo(repr(bounds_mod.guarantee_rect(rect_b)))
            did = True
        if square_mode is not None:
            click.echo(repr(bounds_mod.guarantee_square(
                square_mode.replace("-", "_"))))
            did = True
        if show_table:
            mode = None
            click.echo(table_csv(table_for("rect", mode, width)
                                 if width == 1.0 else
                                 table_for("square", "general", width)),
                       nl=False)
            did = True
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if not did:
        raise click.ClickException(
            "nothing to do: pass --delta, --rect, --square-mode, or --table")


@main.command("gen")
@click.option("--kind", type=click.Choice(list(
    ("greedy_adversary", "uniform", "single_worstcase", "class_boundary"))),
    required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--threshold", type=float, default=0.350389, show_default=True)
@click.option("--rmin", type=float, default=0.001, show_default=True)
@click.option("--rmax", type=float, default=0.5, show_default=True)
@click.option("--count", type=int, default=100, show_default=True,
              help="Number of draws (uniform kind).")
def gen_cmd(kind, seed, threshold, rmin, rmax, count):
    """Emit a radius sequence, one radius per line."""
    try:
        spec = GenSpec(kind=kind, seed=seed, threshold=threshold,
                       r_min=rmin, r_max=rmax, count=count)
        radii = generate(spec)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    for r in radii:
        click.echo(repr(r))


@main.command("batch")
@click.option("--container", type=click.Choice(["square", "rect"]),
              required=True)
@click.option("--b", "aspect", type=float, default=None)
@click.option("--mode", type=click.Choice(["general", "no-tiny"]),
              default="general", show_default=True)
@click.option("--kind", type=click.Choice(["greedy_adversary", "uniform"]),
              default="greedy_adversary", show_default=True)
@click.option("--seeds", default="0:10", show_default=True,
              help="Seed range start:stop (stop exclusive).")
@click.option("--threshold", type=float, default=None,
              help="Area budget; defaults to the container guarantee.")
@click.option("--rmin", type=float, default=0.001, show_default=True)
@click.option("--rmax", type=float, default=0.5, show_default=True)
@click.option("--eps", type=float, default=EPS, envvar="CIRCLEPACK_EPS")
def batch_cmd(container, aspect, mode, kind, seeds, threshold, rmin, rmax,
              eps):
    """Run many seeded generator sequences; one summary JSON line per run."""
    mode = mode.replace("-", "_")
    try:
        start, stop = (int(s) for s in seeds.split(":"))
    except ValueError:
        raise click.ClickException(f"bad --seeds range {seeds!r}")
    if container == "rect" and (aspect is None or aspect < 1):
        raise click.ClickException("rect container requires --b >= 1")
    if threshold is None:
        threshold = (bounds_mod.guarantee_rect(aspect) if container == "rect"
                     else bounds_mod.guarantee_square(mode))
    failures = 0
    for seed in range(start, stop):
        spec = GenSpec(kind=kind, seed=seed, threshold=threshold,
                       r_min=rmin, r_max=rmax)
        radii = generate(spec)
        if container == "rect":
            result = pack_rect_online(aspect, radii, eps=eps)
        else:
            result = pack_square_online(mode, radii, eps=eps)
        summary = {
            "seed": seed,
            "n": len(radii),
            "status": result.status,
            "packed_area": result.total_packed_area,
        }
        if result.status != "all_packed":
            summary["rejected_index"] = result.rejected_index
            failures += 1
        click.echo(json.dumps(summary))
    sys.exit(EXIT_OK if failures == 0 else EXIT_REJECTED)


if __name__ == "__main__":
    main()
