"""Command-line front end.

Weights are always entered in fundamental-weight coordinates, as a
comma-separated list with one integer per node, e.g. ``--weight 0,1,0``.
Results go to standard output (or ``--out``); diagnostics go to standard
error.  Exit codes: 0 success / all cases passed, 1 sweep failures,
2 usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bwb import bwb_cohomology, weyl_dim
from .parabolic import (
    UnsupportedPairError,
    h0_twisted_cotangent,
    macaulay_exceptions,
    parabolic_data,
    sigma,
)
from .rootsys import ConfigError, Weight, root_system
from .verify import Report, check_lemma_studiopesi, check_theorem_lungo, emit_report

__all__ = ["main", "run"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcoh",
        description=(
            "Exact root-system and Borel-Weil-Bott computations on "
            "Picard-rank-one homogeneous varieties. Weights are given in "
            "fundamental-weight coordinates (comma-separated integers)."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair(p: argparse.ArgumentParser, node: bool = False) -> None:
        p.add_argument("family", help="family letter A-G")
        p.add_argument("rank", type=int, help="rank of the root system")
        if node:
            p.add_argument("--node", type=int, required=True, help="marked node r (1-based)")

    p = sub.add_parser("info", help="root-system summary: counts and Cartan matrix")
    add_pair(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("parabolic", help="parabolic data at a node: partition, dim Y, k(Y)")
    add_pair(p, node=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("bwb", help="cohomology table of the irreducible bundle for a weight")
    add_pair(p)
    p.add_argument(
        "--weight",
        required=True,
        help="fundamental-weight coordinates, e.g. 0,1,0; write --weight=-1,0 for a leading negative",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("dim", help="Weyl dimension of a dominant weight")
    add_pair(p)
    p.add_argument(
        "--weight",
        required=True,
        help="fundamental-weight coordinates, e.g. 0,1,0; write --weight=-1,0 for a leading negative",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("h0-cotangent", help="sections of the twisted cotangent bundle on G/P")
    add_pair(p, node=True)
    p.add_argument("--twist", type=int, required=True, help="twist a >= 1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("sigma", help="socle degree sigma = (N+1)d - 2k(Y)")
    add_pair(p, node=True)
    p.add_argument("--degree", type=int, required=True, help="hypersurface degree d >= 3")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("macaulay", help="duality-pairing exception lookup for (d, a)")
    add_pair(p, node=True)
    p.add_argument("--degree", type=int, required=True, help="hypersurface degree d")
    p.add_argument("--twist", type=int, required=True, help="twist a")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run a verification sweep and emit a report")
    p.add_argument("--sweep", choices=("lungo", "studiopesi"), required=True)
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument(
        "--twist",
        type=int,
        action="append",
        help="twist for the studiopesi sweep; repeatable (default 1 2 3)",
    )
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    return parser


def _parse_weight(text: str, rank: int) -> Weight:
    try:
        coords = tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise ValueError(f"--weight expects comma-separated integers, got {text!r}")
    if len(coords) != rank:
        raise ValueError(f"--weight needs {rank} coordinates, got {len(coords)}")
    return Weight(coords)


def _emit(payload: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _json_text(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_info(args: argparse.Namespace) -> int:
    rs = root_system(args.family, args.rank)
    name = f"{rs.lie_type.family.value}{rs.rank}"
    if args.format == "json":
        payload = _json_text(
            {
                "family": rs.lie_type.family.value,
                "rank": rs.rank,
                "positive_roots": len(rs.positive_roots),
                "cartan": [list(row) for row in rs.cartan],
            }
        )
    else:
        lines = [
            f"type {name}",
            f"rank {rs.rank}",
            f"positive roots {len(rs.positive_roots)}",
            "Cartan matrix:",
        ]
        lines += ["  " + " ".join(f"{v:2d}" for v in row) for row in rs.cartan]
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0


def _cmd_parabolic(args: argparse.Namespace) -> int:
    rs = root_system(args.family, args.rank)
    pd = parabolic_data(rs, args.node)
    if args.format == "json":
        payload = _json_text(pd.to_json_dict())
    else:
        name = f"{rs.lie_type.family.value}{rs.rank}"
        counts = " ".join(f"{i}:{len(pd.levels[i])}" for i in sorted(pd.levels))
        lines = [
            f"pair ({name}, node {pd.node})",
            f"dim Y {pd.dim_y}",
            f"Fano index {pd.fano_index}",
            f"levels {counts}",
        ]
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0


def _cmd_bwb(args: argparse.Namespace) -> int:
    rs = root_system(args.family, args.rank)
    w = _parse_weight(args.weight, rs.rank)
    table = bwb_cohomology(rs, w)
    if args.format == "json":
        payload = _json_text(table.to_json_dict())
    elif table.vanishes:
        payload = "all cohomology vanishes\n"
    else:
        payload = (
            f"degree {table.degree}\n"
            f"dominant weight {table.dominant_weight.fw_coords}\n"
            f"dim {table.dimension}\n"
        )
    _emit(payload, args.out)
    return 0


def _cmd_dim(args: argparse.Namespace) -> int:
    rs = root_system(args.family, args.rank)
    w = _parse_weight(args.weight, rs.rank)
    value = weyl_dim(rs, w)
    payload = _json_text({"dim": str(value)}) if args.format == "json" else f"{value}\n"
    _emit(payload, args.out)
    return 0


def _cmd_h0(args: argparse.Namespace) -> int:
    rs = root_system(args.family, args.rank)
    pd = parabolic_data(rs, args.node)
    total, pieces = h0_twisted_cotangent(pd, args.twist)
    if args.format == "json":
        payload = _json_text(
            {
                "family": rs.lie_type.family.value,
                "rank": rs.rank,
                "node": args.node,
                "twist": args.twist,
                "total": str(total),
                "pieces": [
                    {
                        "level": level,
                        "fw_coords": list(mu.fw_coords) if mu is not None else None,
                        "dim": str(dim),
                    }
                    for level, mu, dim in pieces
                ],
            }
        )
    else:
        name = f"{rs.lie_type.family.value}{rs.rank}"
        lines = [
            f"pair ({name}, node {args.node}), twist {args.twist}",
            f"total {total}",
            "breakdown " + " + ".join(str(dim) for _, _, dim in pieces),
        ]
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0


def _cmd_sigma(args: argparse.Namespace) -> int:
    rs = root_system(args.family, args.rank)
    pd = parabolic_data(rs, args.node)
    value = sigma(pd, args.degree)
    if args.format == "json":
        payload = _json_text(
            {"dim_y": pd.dim_y, "k": pd.fano_index, "degree": args.degree, "sigma": value}
        )
    else:
        payload = f"sigma {value}\n"
    _emit(payload, args.out)
    return 0


def _cmd_macaulay(args: argparse.Namespace) -> int:
    rs = root_system(args.family, args.rank)
    pd = parabolic_data(rs, args.node)
    status = macaulay_exceptions(pd, args.degree, args.twist)
    if args.format == "json":
        payload = _json_text({"degree": args.degree, "twist": args.twist, "status": status.value})
    else:
        payload = f"{status.value}\n"
    _emit(payload, args.out)
    return 0


def _render_report_text(report: Report) -> str:
    s = report.summary
    params = " ".join(f"{k}={v}" for k, v in report.params.items())
    lines = [
        f"sweep {report.sweep} ({params})",
        f"total {s['total']}  passed {s['passed']}  failed {s['failed']}",
    ]
    for c in report.cases:
        if not c.passed:
            notes = "; ".join(c.annotations)
            lines.append(
                f"FAIL {c.family}{c.rank} node {c.node} twist {c.twist}: "
                f"h0 {c.h0}, dim Y {c.dim_y} ({notes})"
            )
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.sweep == "lungo":
        if args.twist:
            raise ValueError("--twist applies to the studiopesi sweep only")
        report = check_theorem_lungo(args.max_rank, jobs=args.jobs)
    else:
        twists = tuple(args.twist) if args.twist else (1, 2, 3)
        report = check_lemma_studiopesi(args.max_rank, twists, jobs=args.jobs)
    if args.format == "text":
        payload = _render_report_text(report)
        _emit(payload, args.out)
    else:
        data = emit_report(report, args.format)
        if args.out is None:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        else:
            with open(args.out, "wb") as fh:
                fh.write(data)
    return 0 if report.all_passed else 1


_HANDLERS = {
    "info": _cmd_info,
    "parabolic": _cmd_parabolic,
    "bwb": _cmd_bwb,
    "dim": _cmd_dim,
    "h0-cotangent": _cmd_h0,
    "sigma": _cmd_sigma,
    "macaulay": _cmd_macaulay,
    "verify": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return _HANDLERS[args.command](args)
    except (ConfigError, UnsupportedPairError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
