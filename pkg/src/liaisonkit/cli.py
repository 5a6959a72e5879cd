"""Command-line interface.

Subcommands: ``surface show``, ``divisor eval``, ``biliaison chain``,
``glicci``, ``experiment run``.  Exit codes: 0 success / all values
match, 1 mismatch or search failure, 2 invalid invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import InvalidInvocationError, LiaisonkitError
from .lattice import DivisorClass
from .surfaces import get_surface, lines_on, conic_classes, surface_ids
from .curves import CurveRecord, RaoTag
from .liaison import SearchFailure, ascending_chain_search
from .glicci import GlicciFailure, glicci_chain
from .experiments import divisor_eval, experiment_ids, run_experiment

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2


def parse_coeffs(text: str) -> tuple[int, ...]:
    """Parse ``5;3,1,1,1,1`` or ``5,3,1^4`` or ``0;0^9,-1`` into a tuple.
    A caret expands repeats: ``1^4`` is four ones."""
    text = text.strip().replace("(", "").replace(")", "")
    text = text.replace(";", ",")
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "^" in part:
            val, count = part.split("^")
            out.extend([int(val)] * int(count))
        else:
            out.append(int(part))
    if not out:
        raise InvalidInvocationError(f"empty coefficient list {text!r}")
    return tuple(out)


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
        return
    width = max((len(k) for k in data), default=0)
    for key, value in data.items():
        print(f"{key:<{width}}  {value}")


def _cmd_surface_show(args) -> int:
    s = get_surface(args.id, args.catalog)
    data = {
        "id": s.id,
        "ambient": s.ambient,
        "basis": s.basis,
        "blown_points": s.blown_points,
        "H": str(s.H),
        "K": str(s.K),
        "degree": s.degree,
        "sectional_genus": s.sectional_genus,
        "family_dim": s.family_dim,
        "notes": list(s.special_position_notes),
    }
    if s.basis == "blownup_plane":
        lcs = lines_on(s)
        data["lines"] = [f"{c} [{f}]" for c, f in lcs.pairs()]
        data["line_count"] = len(lcs)
        data["conics"] = [str(c) for c in conic_classes(s)]
    _emit(data, args.format)
    return EXIT_OK


def _cmd_divisor_eval(args) -> int:
    coeffs = parse_coeffs(args.coeffs)
    _emit(divisor_eval(args.surface, coeffs, args.catalog), args.format)
    return EXIT_OK


def _cmd_biliaison_chain(args) -> int:
    d, g = (int(x) for x in args.target.split(","))
    surfaces = args.surfaces.split(",") if args.surfaces else None
    starts = None
    if args.start:
        sid, _, coeffs = args.start.partition(":")
        starts = [
            CurveRecord.on_surface(
                sid, DivisorClass.blownup(parse_coeffs(coeffs)), rao=RaoTag.simple_k(0)
            )
        ]
    result = ascending_chain_search(
        (d, g),
        surfaces=surfaces,
        ascending_only=not args.any_direction,
        max_steps=args.max_steps,
        starts=starts,
        workers=args.workers,
    )
    if isinstance(result, SearchFailure):
        _emit(
            {
                "found": False,
                "explored": result.explored,
                "frontier_sizes": list(result.frontier_sizes),
                "bounds": result.bounds,
            },
            args.format,
        )
        return EXIT_MISMATCH
    data = {
        "found": True,
        "steps": result.liaison_steps,
        "rao_shift": result.net_rao_shift,
        "chain": result.describe(),
    }
    _emit(data, args.format)
    return EXIT_OK


def _cmd_glicci(args) -> int:
    mode = "descending_only" if args.mode == "descending" else "full"
    chain = glicci_chain(
        args.points,
        ambient=args.ambient.upper(),
        mode=mode,
        max_intermediate=args.max_intermediate,
        surface_degree=args.surface_degree,
        workers=args.workers,
    )
    if isinstance(chain, GlicciFailure):
        _emit(
            {"found": False, "explored": chain.explored, "bounds": chain.bounds},
            args.format,
        )
        return EXIT_MISMATCH
    chain.validate()
    data = {
        "found": True,
        "points": args.points,
        "counts": list(chain.counts),
        "states": [list(s.entries) for s in chain.states],
        "links": [list(w.entries) for w in chain.links],
        "link_masses": [w.mass for w in chain.links],
        "monotone_descending": chain.monotone_descending,
        "max_intermediate_degree": chain.max_intermediate_degree,
        "intermediates_exceed_start": chain.exceeds_start,
    }
    _emit(data, args.format)
    return EXIT_OK


def _render_report(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True)
    lines = [f"== {report.experiment_id} ({report.anchor}) =="]
    keys = sorted(set(report.computed) | set(report.references))
    width = max(len(k) for k in keys)
    for key in keys:
        computed = report.computed.get(key, "-")
        ref = report.references.get(key)
        if ref is None:
            lines.append(f"  {key:<{width}}  {computed}")
            continue
        status = {True: "ok", False: "MISMATCH", None: "display"}[
            report.matches.get(key)
        ]
        note = f"  ({ref.note})" if ref.note else ""
        lines.append(
            f"  {key:<{width}}  {computed}  [{ref.provenance}: {ref.value}]"
            f" {status}{note}"
        )
    verdict = "ALL MATCH" if report.all_match else "MISMATCHES PRESENT"
    lines.append(f"  -- {verdict} in {report.runtime_seconds}s")
    return "\n".join(lines)


def _cmd_experiment_run(args) -> int:
    ids = list(experiment_ids()) if args.id == "all" else [args.id]
    surfaces = args.surfaces.split(",") if args.surfaces is not None else None
    if args.surfaces == "":
        raise InvalidInvocationError("empty surface set")

    def run(eid):
        return run_experiment(eid, surfaces=surfaces)

    if args.jobs > 1 and len(ids) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run, ids))
    else:
        reports = [run(eid) for eid in ids]
    ok = True
    for report in reports:  # buffered: one experiment at a time, in order
        print(_render_report(report, args.format))
        ok = ok and report.all_match
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liaisonkit",
        description="Exact divisor-class, liaison-chain and Hilbert-function computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_surface = sub.add_parser("surface", help="surface catalog")
    surface_sub = p_surface.add_subparsers(dest="subcommand", required=True)
    p_show = surface_sub.add_parser("show", help="show one catalog surface")
    p_show.add_argument("id", help=f"one of: {', '.join(surface_ids())}")
    p_show.add_argument("--format", choices=("table", "json"), default="table")
    p_show.add_argument("--catalog", default=None, help="alternate catalog file")
    p_show.set_defaults(func=_cmd_surface_show)

    p_divisor = sub.add_parser("divisor", help="divisor class calculator")
    divisor_sub = p_divisor.add_subparsers(dest="subcommand", required=True)
    p_eval = divisor_sub.add_parser("eval", help="degree/genus/profile of a class")
    p_eval.add_argument("surface")
    p_eval.add_argument("coeffs", help="e.g. '5;3,1^4' or '6,2'")
    p_eval.add_argument("--format", choices=("table", "json"), default="table")
    p_eval.add_argument("--catalog", default=None)
    p_eval.set_defaults(func=_cmd_divisor_eval)

    p_bil = sub.add_parser("biliaison", help="liaison chain search")
    bil_sub = p_bil.add_subparsers(dest="subcommand", required=True)
    p_chain = bil_sub.add_parser("chain", help="search a chain to a target (d,g)")
    p_chain.add_argument("--target", required=True, help="degree,genus")
    p_chain.add_argument("--ascending-only", action="store_true", default=True)
    p_chain.add_argument(
        "--any-direction",
        action="store_true",
        help="allow descending biliaisons and Gorenstein links",
    )
    p_chain.add_argument("--max-steps", type=int, default=8)
    p_chain.add_argument("--surfaces", default=None, help="comma-separated ids")
    p_chain.add_argument("--start", default=None, help="seed as surface:coeffs")
    p_chain.add_argument("--workers", type=int, default=1)
    p_chain.add_argument("--format", choices=("table", "json"), default="table")
    p_chain.set_defaults(func=_cmd_biliaison_chain)

    p_glicci = sub.add_parser("glicci", help="point-configuration link chains")
    p_glicci.add_argument("--points", type=int, required=True)
    p_glicci.add_argument("--ambient", choices=("p2", "p3"), default="p3")
    p_glicci.add_argument("--mode", choices=("full", "descending"), default="full")
    p_glicci.add_argument("--max-intermediate", type=int, default=None)
    p_glicci.add_argument("--surface-degree", type=int, default=None)
    p_glicci.add_argument("--workers", type=int, default=1)
    p_glicci.add_argument("--format", choices=("table", "json"), default="table")
    p_glicci.set_defaults(func=_cmd_glicci)

    p_exp = sub.add_parser("experiment", help="scripted reproductions")
    exp_sub = p_exp.add_subparsers(dest="subcommand", required=True)
    p_run = exp_sub.add_parser("run", help="run one experiment or 'all'")
    p_run.add_argument("id", help=f"'all' or one of: {', '.join(experiment_ids())}")
    p_run.add_argument("--format", choices=("table", "json"), default="table")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--surfaces", default=None)
    p_run.set_defaults(func=_cmd_experiment_run)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInvocationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except LiaisonkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
