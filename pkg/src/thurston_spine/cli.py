"""Command line front end: ``thurston-spine <command> --help``.

Data goes to stdout (or ``--out``), diagnostics to stderr.  Exit codes:
0 success, 1 verification failures, 2 usage errors, 3 runtime errors.
"""

import csv
import io
import json
import math
import sys

import click
import numpy as np

from . import domain, solvers, spine, verify
from .errors import SpineError
from .geometry import dual_coords, length_report

GENUS_CAP = 10**6
SIG = 15

EXIT_FAIL = 1
EXIT_RUNTIME = 3


def _num(x):
    """Round to 15 significant digits; the shortest repr of the result round-trips."""
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if not math.isfinite(x) else float(f"{x:.{SIG}g}") + 0.0  # no "-0"
    return x


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return _num(obj)


def dumps_json(obj):
    return json.dumps(_clean(obj), indent=2, allow_nan=False) + "\n"


def _cell(x):
    x = _num(x)
    if isinstance(x, float):
        return f"{x:.{SIG}g}"
    return "" if x is None else str(x)


def dumps_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def _emit(ctx, text):
    out = ctx.obj.get("out")
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _runtime(exc):
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_RUNTIME)


def _usage(msg):
    raise click.UsageError(msg)


genus_opt = click.option("--genus", "-g", type=click.IntRange(2, GENUS_CAP), required=True,
                         help="Genus g, 2 <= g <= 10^6.")
format_opt = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
                          show_default=True)
out_opt = click.option("--out", type=click.Path(dir_okay=False), default=None,
                       help="Write to FILE instead of stdout.")


def _common(f):
    f = format_opt(f)
    f = out_opt(f)
    return f


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Systole spine numerics for genus g surfaces with a rotation of order g+1."""


@main.command()
@genus_opt
@_common
@click.pass_context
def constants(ctx, genus, fmt, out):
    """Genus constants c0, c1, c_half and the triple point."""
    ctx.obj = {"out": out}
    try:
        gc = solvers.genus_constants(genus)
        tp = spine.triple_point(genus)
    except (SpineError, ValueError) as exc:
        _runtime(exc)
    rec = {"genus": genus, "c0": gc.c0, "c1": gc.c1, "c_half": gc.c_half,
           "c_M": tp.c_M, "u_M": tp.u_M}
    if fmt == "json":
        _emit(ctx, dumps_json(rec))
    else:
        _emit(ctx, dumps_csv(list(rec), [list(rec.values())]))


@main.command()
@genus_opt
@click.option("--c", "c", type=float, required=True, help="Half cuff length.")
@click.option("--t", "t", type=float, default=None, help="Twist.")
@click.option("--u", "u", type=float, default=None, help="Slope t/c.")
@_common
@click.pass_context
def lengths(ctx, genus, c, t, u, fmt, out):
    """Four curve lengths and the dual coordinates at one point."""
    ctx.obj = {"out": out}
    if (t is None) == (u is None):
        _usage("give exactly one of --t and --u")
    if t is None:
        t = u * c
    try:
        rep = length_report(genus, c, t)
        d = dual_coords(genus, c, t)
    except (SpineError, ValueError) as exc:
        _runtime(exc)
    rec = {"genus": genus, "c": c, "t": t, "u": t / c, **rep.as_dict(),
           "s": d.s, "c_alpha": d.c_alpha, "t_alpha": d.t_alpha, "s_alpha": d.s_alpha}
    if fmt == "json":
        _emit(ctx, dumps_json(rec))
    else:
        _emit(ctx, dumps_csv(list(rec), [list(rec.values())]))


TRACE_COLS = ["c", "u", "t", "l_alpha", "l_beta", "l_gamma", "l_delta"]


@main.command()
@genus_opt
@click.option("--arc", "arc", type=click.Choice([k.value for k in spine.ArcKind]), required=True)
@click.option("--samples", "-n", type=click.IntRange(min=2), default=64, show_default=True)
@click.option("--c-hi", type=float, default=None, help="Stop before c_M.")
@_common
@click.pass_context
def trace(ctx, genus, arc, samples, c_hi, fmt, out):
    """Sample a spine arc from its start to the triple point."""
    ctx.obj = {"out": out}
    try:
        a = spine.trace_arc(genus, arc, c_hi=c_hi, n_samples=samples)
        rows = []
        for p in a.samples:
            L = length_report(genus, p.c, p.t)
            rows.append([p.c, p.u, p.t, L.alpha, L.beta, L.gamma, L.delta])
    except (SpineError, ValueError) as exc:
        _runtime(exc)
    if fmt == "json":
        _emit(ctx, dumps_json([dict(zip(TRACE_COLS, r)) for r in rows]))
    else:
        _emit(ctx, dumps_csv(TRACE_COLS, rows))


def _xy(c, t):
    p = domain.minsky_embed(c, t)
    return p.x, p.y


@main.command("domain")
@genus_opt
@click.option("--samples", "-n", type=click.IntRange(min=2), default=200, show_default=True)
@click.option("--c-min", type=float, default=0.05, show_default=True)
@click.option("--c-max", type=float, default=10.0, show_default=True)
@_common
@click.pass_context
def domain_cmd(ctx, genus, samples, c_min, c_max, fmt, out):
    """Boundary geodesics of F and the spine arcs in the upper half-plane.

    ``L_j`` and the spine are sampled in ``c``; ``L_alpha_j`` is sampled in
    ``c_alpha`` over the same range.
    """
    ctx.obj = {"out": out}
    if not c_min < c_max:
        _usage("--c-min must be below --c-max")
    try:
        polys = domain.domain_picture(genus, samples, (c_min, c_max))
    except (SpineError, ValueError) as exc:
        _runtime(exc)
    if fmt == "json":
        rec = {"genus": genus, "polylines": [
            {"name": p["name"], "kind": p["kind"],
             "points": [{"c": c, "t": t, "x": x, "y": y} for c, t, x, y in p["points"]]}
            for p in polys]}
        _emit(ctx, dumps_json(rec))
    else:
        rows = [[p["name"], p["kind"], i, *pt] for p in polys for i, pt in enumerate(p["points"])]
        _emit(ctx, dumps_csv(["name", "kind", "index", "c", "t", "x", "y"], rows))


def _parse_base(text):
    try:
        c, t = (float(x) for x in text.split(","))
    except ValueError:
        _usage(f"--base must be 'c,t', got {text!r}")
    return c, t


@main.command()
@genus_opt
@click.option("--word", "-w", required=True, help="Comma-separated letters from A,a,G,g,R,F.")
@click.option("--base", default=None, help="Start point 'c,t'; defaults to the triple point.")
@_common
@click.pass_context
def orbit(ctx, genus, word, base, fmt, out):
    """Apply a word to a point, then reduce the image back into F0."""
    ctx.obj = {"out": out}
    try:
        w = domain.MCGWord.parse(word)
    except ValueError as exc:
        _usage(str(exc))
    try:
        if base is None:
            tp = spine.triple_point(genus)
            c, t = tp.c_M, tp.t_M
        else:
            c, t = _parse_base(base)
        (cf, tf), traj = domain.apply_word(genus, w, c, t)
        cr, tr, rw = domain.reduce_to_F0(genus, cf, tf)
        pts = [(a, b, *_xy(a, b)) for a, b in traj]
        red_xy = _xy(cr, tr)
    except (SpineError, ValueError) as exc:
        _runtime(exc)
    letters = [""] + [x.value for x in w]
    if fmt == "json":
        rec = {"genus": genus, "word": str(w),
               "trajectory": [{"step": i, "letter": letters[i], "c": a, "t": b, "x": x, "y": y}
                              for i, (a, b, x, y) in enumerate(pts)],
               "final": {"c": cf, "t": tf},
               "reduced": {"c": cr, "t": tr, "x": red_xy[0], "y": red_xy[1], "word": str(rw)}}
        _emit(ctx, dumps_json(rec))
    else:
        rows = [[i, letters[i], *p] for i, p in enumerate(pts)]
        rows.append(["reduced", str(rw), cr, tr, *red_xy])
        _emit(ctx, dumps_csv(["step", "letter", "c", "t", "x", "y"], rows))


@main.command("verify")
@click.option("--genus", "-g", "genera", type=click.IntRange(2, GENUS_CAP), multiple=True,
              help="Repeatable; defaults to 2, 3 and 5.")
@click.option("--grid", type=click.IntRange(min=8), default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--claim", "claim_id", default=None, help="Run a single claim.")
@_common
@click.pass_context
def verify_cmd(ctx, genera, grid, seed, claim_id, fmt, out):
    """Numerically check every registered claim; exit 1 if any fails."""
    ctx.obj = {"out": out}
    cfg = verify.VerifyConfig(genus_list=tuple(genera) or (2, 3, 5), grid_n=grid, seed=seed)
    if claim_id is not None and claim_id not in verify.claim_ids():
        _usage(f"unknown claim {claim_id!r}; known: {', '.join(verify.claim_ids())}")
    try:
        results = verify.run_claim(claim_id, cfg) if claim_id else verify.run_all(cfg)
    except Exception as exc:  # infrastructure failure, not a failed claim
        _runtime(exc)
    summ = verify.summary(results)
    if fmt == "json":
        _emit(ctx, dumps_json({"claims": [r.to_dict() for r in results], "summary": summ}))
    else:
        cols = ["claim_id", "genus", "passed", "status", "worst_residual", "witness", "details"]
        rows = [[r.claim_id, r.genus, r.passed, r.status, r.worst_residual,
                 "" if r.witness is None else " ".join(_cell(x) for x in r.witness), r.details]
                for r in results]
        _emit(ctx, dumps_csv(cols, rows))
    for r in results:
        if not r.passed:
            click.echo(f"FAILED {r.claim_id} g={r.genus}: {r.details}", err=True)
    sys.exit(0 if summ["failed"] == 0 else EXIT_FAIL)


if __name__ == "__main__":
    main()
