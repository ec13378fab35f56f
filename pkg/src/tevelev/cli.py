"""Command-line front end: ``tevelev {tev,table,paths,verify}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from tevelev.closed_form import tev_closed
from tevelev.coefficients import Expansion, expand
from tevelev.core import TevParams
from tevelev.lattice_paths import (
    EnumerationGuardError,
    count_paths_by_index,
    enumerate_paths,
    path_stats,
    tev_via_paths,
)
from tevelev.recursion import tev_recursive
from tevelev.verify import METHODS, GridSpec, cross_check


class UsageError(Exception):
    pass


def compute_tev(g: int, ell: int, r: int, method: str = "auto") -> int:
    if g < 0:
        raise UsageError(f"--g must be >= 0, got {g}")
    if r < 1:
        raise UsageError(f"--r must be >= 1, got {r}")
    p = TevParams(g, ell, r)
    if method == "recursion":
        return tev_recursive(p)
    if method == "paths":
        if ell > 0:
            raise UsageError("--method paths requires --ell <= 0")
        if g < p.gfloor:
            return 0
        return tev_via_paths(p)
    return tev_closed(p)


def table_cells(
    ell_min: int, ell_max: int, r_max: int, source: str = "formula"
) -> list[Expansion]:
    if ell_max > 0:
        raise UsageError("--ell-max must be <= 0")
    if ell_min > ell_max:
        raise UsageError("--ell-min must not exceed --ell-max")
    if r_max < 1:
        raise UsageError("--r-max must be >= 1")
    cells = []
    # rows run from ell = -1 downwards, matching the usual table layout
    for ell in range(ell_max, ell_min - 1, -1):
        for r in range(1, r_max + 1):
            if source == "paths":
                cells.append(Expansion(ell, r, count_paths_by_index(ell, r)))
            else:
                cells.append(expand(ell, r))
    return cells


def render_table(cells: Sequence[Expansion], fmt: str) -> str:
    if fmt == "json":
        records = [
            {
                "ell": c.ell,
                "r": c.r,
                "coefficients": {str(s): str(v) for s, v in sorted(c.coeffs.items())},
                "expansion": c.pretty(),
            }
            for c in cells
        ]
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["ell", "r", "s", "coefficient"])
        for c in cells:
            for s, v in sorted(c.coeffs.items()):
                writer.writerow([c.ell, c.r, s, v])
        return buf.getvalue()
    return "".join(f"T[{c.ell},{c.r}] = {c.pretty()}\n" for c in cells)


def parse_pretty_table(text: str) -> dict[tuple[int, int], dict[int, int]]:
    """Inverse of the pretty renderer; used to round-trip table output."""
    out = {}
    for line in text.splitlines():
        head, _, body = line.partition(" = ")
        ell, r = (int(x) for x in head[2:-1].split(","))
        coeffs = {}
        if body != "0":
            for term in body.split(" + "):
                c, _, s = term.partition("E")
                coeffs[int(s)] = int(c) if c else 1
        out[(ell, r)] = coeffs
    return out


def render_paths(ell: int, r: int, fmt: str) -> str:
    paths = enumerate_paths(ell, r)
    rows = []
    for p in paths:
        st = path_stats(p)
        rows.append({"steps": p.steps, "index": st.index, "returns": st.returns})
    hist = count_paths_by_index(ell, r)
    if fmt == "json":
        payload = {
            "ell": ell,
            "r": r,
            "count": len(rows),
            "paths": rows,
            "histogram": {str(s): n for s, n in sorted(hist.items())},
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["steps", "index", "returns"])
        for row in rows:
            writer.writerow([row["steps"], row["index"], row["returns"]])
        return buf.getvalue()
    lines = [f'"{row["steps"]}" index={row["index"]} returns={row["returns"]}' for row in rows]
    lines.append(f"paths: {len(rows)}")
    lines.append("histogram: " + " ".join(f"{s}:{n}" for s, n in sorted(hist.items())))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tevelev", description="Exact Tevelev degrees and their path expansions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tev = sub.add_parser("tev", help="print one Tevelev degree")
    p_tev.add_argument("--g", type=int, required=True)
    p_tev.add_argument("--ell", type=int, required=True)
    p_tev.add_argument("--r", type=int, required=True)
    p_tev.add_argument(
        "--method", choices=["recursion", "closed", "paths", "auto"], default="auto"
    )
    p_tev.add_argument("--out")

    p_table = sub.add_parser("table", help="E_s expansions of T[ell,r] for ell <= 0")
    p_table.add_argument("--ell-min", type=int, default=-5)
    p_table.add_argument("--ell-max", type=int, default=-1)
    p_table.add_argument("--r-max", type=int, default=5)
    p_table.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")
    p_table.add_argument(
        "--source",
        choices=["formula", "paths"],
        default="formula",
        help="closed coefficient formulas or brute-force path enumeration",
    )
    p_table.add_argument("--out")

    p_paths = sub.add_parser("paths", help="list the paths from (0,1) to (ell,r)")
    p_paths.add_argument("--ell", type=int, required=True)
    p_paths.add_argument("--r", type=int, required=True)
    p_paths.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")
    p_paths.add_argument("--out")

    p_verify = sub.add_parser("verify", help="cross-check all routes over a grid")
    p_verify.add_argument("--g-max", type=int, default=12)
    p_verify.add_argument("--ell-min", type=int, default=-4)
    p_verify.add_argument("--ell-max", type=int, default=4)
    p_verify.add_argument("--r-max", type=int, default=5)
    p_verify.add_argument("--methods", default=",".join(METHODS))
    p_verify.add_argument("--identity-bound", type=int, default=4)
    p_verify.add_argument(
        "--inject-fault",
        action="store_true",
        help="perturb the closed route to confirm the harness catches it",
    )
    p_verify.add_argument("--out")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tev":
            _emit(f"{compute_tev(args.g, args.ell, args.r, args.method)}\n", args.out)
        elif args.command == "table":
            cells = table_cells(args.ell_min, args.ell_max, args.r_max, args.source)
            _emit(render_table(cells, args.format), args.out)
        elif args.command == "paths":
            if args.ell > 0 or args.r < 1:
                raise UsageError("paths need --ell <= 0 and --r >= 1")
            _emit(render_paths(args.ell, args.r, args.format), args.out)
        else:
            try:
                spec = GridSpec(
                    g_max=args.g_max,
                    ell_min=args.ell_min,
                    ell_max=args.ell_max,
                    r_max=args.r_max,
                    methods=tuple(m.strip() for m in args.methods.split(",") if m.strip()),
                    identity_bound=args.identity_bound,
                    inject_fault=args.inject_fault,
                )
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            report = cross_check(spec)
            _emit(report.to_json() + "\n", args.out)
            return 0 if report.ok else 1
    except (UsageError, EnumerationGuardError) as exc:
        print(f"tevelev: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
