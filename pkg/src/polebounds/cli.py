"""Command-line front-end: bound evaluation, the comparison table, verification runs.

Subcommands
-----------
* ``bounds``    -- evaluate one bound at one pole location.
* ``table``     -- the four-bound comparison table over a list of poles.
* ``verify``    -- empirical length-ratio checks for the built-in families.
* ``arc``       -- arc-vs-geodesic check for a polyline instance from a file.
* ``harmonic``  -- harmonic-measure queries, optionally with the Monte Carlo oracle.

Output is ``text``, ``json`` or ``csv`` (flag ``--format``, default from the
``POLEBOUNDS_FORMAT`` environment variable). Exit codes: 0 success, 1 a
verification failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from . import arcs, bounds, harmonic, lengths
from .errors import PoleBoundsError

FORMAT_ENV_VAR = "POLEBOUNDS_FORMAT"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    """Effective settings for one invocation."""

    fmt: str = "text"
    seed: int = harmonic.DEFAULT_SEED
    tol: float = lengths.DEFAULT_LENGTH_TOL
    a1_value: float = arcs.DEFAULT_ANALYTIC_CONSTANT


def parse_complex(text: str) -> complex:
    """Accept ``RE,IM`` or any Python complex literal such as ``1+2j``."""
    if "," in text:
        re_s, im_s = text.split(",", 1)
        return complex(float(re_s), float(im_s))
    return complex(text.replace(" ", ""))


def parse_grid(text: str) -> list[float]:
    """Parse ``start:stop:step`` into an inclusive list of values."""
    try:
        start, stop, step = (float(v) for v in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}: use start:stop:step") from exc
    if step <= 0 or stop < start:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}: need start <= stop, step > 0")
    values = []
    k = 0
    while True:
        v = start + k * step
        if v > stop + 1e-12:
            break
        values.append(round(v, 12))
        k += 1
    return values


def _fmt_cell(v) -> str:
    if v is None:
        return "---"
    if isinstance(v, float):
        return f"{bounds.round_half_up(v):.3f}"
    return str(v)


def emit(records: list[dict], fmt: str, out) -> None:
    """Write a list of flat records in the requested format."""
    if fmt == "json":
        out.write(json.dumps(records, sort_keys=True))
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = list(records[0].keys())
        writer.writerow(keys)
        for rec in records:
            writer.writerow(["" if rec[k] is None else rec[k] for k in keys])
        out.write(buf.getvalue())
    else:
        for rec in records:
            out.write("  ".join(f"{k}={_fmt_text_value(v)}" for k, v in rec.items()))
            out.write("\n")


def _fmt_text_value(v) -> str:
    if v is None:
        return "---"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _bound_record(res: bounds.BoundResult) -> dict:
    return {
        "p": res.p,
        "kind": res.kind,
        "value": res.value,
        "q_star": res.q_star,
        "evaluations": res.evaluations,
        "bracket_lo": None if res.bracket is None else res.bracket[0],
        "bracket_hi": None if res.bracket is None else res.bracket[1],
    }


def cmd_bounds(args, cfg: RunConfig, out) -> int:
    if args.kind == "lb":
        res = bounds.BoundResult(p=args.p, kind="lower", value=bounds.lower_bound(args.p))
    elif args.kind == "closed":
        res = bounds.BoundResult(p=args.p, kind="closed", value=bounds.closed_form_bound(args.p))
    else:
        res = bounds.minimize_over_q(args.p, args.kind)
    emit([_bound_record(res)], cfg.fmt, out)
    return EXIT_OK


def cmd_table(args, cfg: RunConfig, out) -> int:
    p_list = args.p if args.p else list(bounds.DEFAULT_TABLE_P)
    rows = bounds.table_rows(p_list)
    if cfg.fmt == "text":
        header = ("p", "lower", "angle_min", "closed_form", "measure_min")
        widths = (6, 10, 12, 12, 12)
        out.write("".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for r in rows:
            cells = (f"{r.p:g}", _fmt_cell(r.lower), _fmt_cell(r.angle_min),
                     _fmt_cell(r.closed_form), _fmt_cell(r.measure_min))
            out.write("".join(c.rjust(w) for c, w in zip(cells, widths)) + "\n")
    else:
        records = [
            {
                "p": r.p,
                "lower": bounds.round_half_up(r.lower),
                "angle_min": None if r.angle_min is None else bounds.round_half_up(r.angle_min),
                "closed_form": bounds.round_half_up(r.closed_form),
                "measure_min": bounds.round_half_up(r.measure_min),
            }
            for r in rows
        ]
        emit(records, cfg.fmt, out)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    family = lengths.FAMILIES[args.family]
    p_values = args.grid if args.grid else [args.p]
    records = []
    all_passed = True
    for p in p_values:
        rep = lengths.verify_inequality(family(p), p, cfg.tol)
        all_passed &= rep.passed
        records.append(
            {
                "family": rep.function_id,
                "p": rep.p,
                "length_i1": rep.length_i1,
                "length_tminus": rep.length_tminus,
                "ratio": rep.ratio,
                "bound": rep.bound.value,
                "passed": rep.passed,
            }
        )
    emit(records, cfg.fmt, out)
    return EXIT_OK if all_passed else EXIT_VERIFICATION_FAILED


def cmd_arc(args, cfg: RunConfig, out) -> int:
    pole, arc = arcs.load_polyline_instance(args.file)
    z1, z2 = arc.endpoints
    inst = arcs.normalize_to_axis(pole, z1, z2, arc)
    f = lengths.FAMILIES[args.family](inst.s)
    rep = arcs.verify_arc_inequality(f, inst.arc, cfg.tol, cfg.a1_value)
    emit(
        [
            {
                "family": rep.function_id,
                "pole_re": inst.s.real,
                "pole_im": inst.s.imag,
                "branch": rep.branch,
                "constant": rep.constant,
                "tau": rep.tau,
                "length_geodesic": rep.length_geodesic,
                "length_arc": rep.length_arc,
                "ratio": rep.ratio,
                "passed": rep.passed,
            }
        ],
        cfg.fmt,
        out,
    )
    return EXIT_OK if rep.passed else EXIT_VERIFICATION_FAILED


def cmd_harmonic(args, cfg: RunConfig, out) -> int:
    z = args.z
    value = harmonic.hm_omega1(z, args.a, args.b, args.p)
    rec = {
        "z_re": z.real,
        "z_im": z.imag,
        "a": args.a,
        "b": args.b,
        "p": args.p,
        "value": value,
    }
    if z.real == 0.0 and args.a <= z.imag <= args.b:
        rec["sandwich_lo"] = harmonic.arccot(harmonic.measure_cot_bound(args.p, args.b / args.a)) / math.pi
        rec["sandwich_hi"] = 0.5
    if args.wos:
        est = harmonic.wos_harmonic_measure(
            z, args.a, args.b, args.p, n_walks=args.wos, eps=args.eps, seed=cfg.seed
        )
        rec["wos_mean"] = est.mean
        rec["wos_stderr"] = est.stderr
        rec["wos_used"] = est.n_used
        rec["wos_capped"] = est.n_capped
    emit([rec], cfg.fmt, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polebounds",
        description="Length-distortion bounds for univalent disk maps with a pole.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("text", "json", "csv"),
            default=os.environ.get(FORMAT_ENV_VAR, "text"),
            help=f"output format (default from ${FORMAT_ENV_VAR}, else text)",
        )

    p_bounds = sub.add_parser("bounds", help="evaluate one bound at one pole location")
    p_bounds.add_argument("--p", type=float, required=True)
    p_bounds.add_argument(
        "--kind", choices=("lb", "angle", "closed", "measure", "limit"), required=True
    )
    add_format(p_bounds)
    p_bounds.set_defaults(func=cmd_bounds)

    p_table = sub.add_parser("table", help="four-bound comparison table")
    p_table.add_argument("--p", type=float, nargs="*", default=None)
    add_format(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="length-ratio checks for a built-in family")
    p_verify.add_argument("--family", choices=sorted(lengths.FAMILIES), required=True)
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=float)
    group.add_argument("--grid", type=parse_grid, help="pole grid as start:stop:step")
    p_verify.add_argument("--tol", type=float, default=lengths.DEFAULT_LENGTH_TOL)
    add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_arc = sub.add_parser("arc", help="arc-vs-geodesic check for a polyline file")
    p_arc.add_argument("--file", required=True)
    p_arc.add_argument("--family", choices=sorted(lengths.FAMILIES), required=True)
    p_arc.add_argument(
        "--a1-value",
        type=float,
        default=arcs.DEFAULT_ANALYTIC_CONSTANT,
        help="analytic-case constant for the outside branch",
    )
    p_arc.add_argument("--tol", type=float, default=lengths.DEFAULT_LENGTH_TOL)
    add_format(p_arc)
    p_arc.set_defaults(func=cmd_arc)

    p_hm = sub.add_parser("harmonic", help="harmonic-measure query in Omega1")
    p_hm.add_argument("--z", type=parse_complex, required=True, help="point as RE,IM or 1+2j")
    p_hm.add_argument("--a", type=float, required=True)
    p_hm.add_argument("--b", type=float, required=True)
    p_hm.add_argument("--p", type=float, required=True)
    p_hm.add_argument("--wos", type=int, default=0, help="add a Monte Carlo estimate with N walks")
    p_hm.add_argument("--eps", type=float, default=harmonic.DEFAULT_WOS_EPS)
    p_hm.add_argument("--seed", type=int, default=harmonic.DEFAULT_SEED)
    add_format(p_hm)
    p_hm.set_defaults(func=cmd_harmonic)

    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    cfg = RunConfig(
        fmt=getattr(args, "format", "text"),
        seed=getattr(args, "seed", harmonic.DEFAULT_SEED),
        tol=getattr(args, "tol", lengths.DEFAULT_LENGTH_TOL),
        a1_value=getattr(args, "a1_value", arcs.DEFAULT_ANALYTIC_CONSTANT),
    )
    try:
        return args.func(args, cfg, out)
    except PoleBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
