"""Command-line entry point: ``ghcodes <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import codes as codes_mod
from .codes import curve_for, duality_sweep, gh_code
from .distance import DEFAULT_BUDGET, code_distance, default_threads, example39_table, section5_table
from .field import FieldContext, FieldError
from .linalg import format_matrix
from .semigroup import NumericalSemigroup, SemigroupError, gh_semigroup, telescopic_trace
from .verify import DEFAULT_SEED, run_checks


class UsageError(Exception):
    pass


def _table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    cells = [header] + [["" if v is None else str(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in cells)


def _kv(pairs: list[tuple[str, object]], fmt: str) -> str:
    if fmt == "csv":
        return _table([k for k, _ in pairs], [[v for _, v in pairs]], "csv")
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in pairs)


def _field(args) -> FieldContext | None:
    if args.modulus is None:
        return None
    try:
        return FieldContext(args.r, args.modulus)
    except FieldError as exc:
        raise UsageError(str(exc)) from exc


# subcommands


def cmd_curve(args) -> str:
    C = curve_for(args.r, _field(args))
    out = _kv(
        [
            ("r", C.r),
            ("modulus", C.field.modulus),
            ("genus", C.genus),
            ("points", len(C.points)),
            ("rational_places", len(C.points) + 1),
            ("N/g", f"{(len(C.points) + 1) / C.genus:.4f}" if C.genus else "inf"),
        ],
        args.format,
    )
    if args.points:
        fmt = (lambda v: f"{v:#x}") if args.hex else str
        out += _table(["alpha", "beta"], [[fmt(p.alpha), fmt(p.beta)] for p in C.points], "csv")
    return out


def cmd_semigroup(args) -> str:
    if args.generators:
        seq = [int(x) for x in args.generators.split(",")]
        S = NumericalSemigroup(seq)
    else:
        S = gh_semigroup(args.r)
        seq = list(S.generators)
    out = _kv(
        [
            ("generators", " ".join(map(str, seq))),
            ("conductor", S.conductor),
            ("genus", S.genus),
            ("gaps", " ".join(map(str, S.gaps))),
            ("symmetric", S.is_symmetric),
        ],
        args.format,
    )
    tele, stages = telescopic_trace(seq)
    out += f"telescopic: {tele}\n" if args.format == "text" else ""
    out += _table(
        ["stage", "d", "scaled", "in_previous"],
        [[st.index, st.d, " ".join(map(str, st.scaled)), st.ok] for st in stages],
        args.format,
    )
    top = args.max_s or max(2 * S.conductor, 16)
    rows = [[s, S.rho(s), S.nu(s), S.feng_rao(s), S.goppa_omega(s)] for s in range(1, top + 1)]
    out += _table(["s", "rho_s", "nu_s", "delta_FR", "delta_Gamma"], rows, args.format)
    return out


def cmd_basis(args) -> str:
    C = curve_for(args.r, _field(args))
    basis = C.lbasis(args.s)
    return _table(["order", "i", "j", "k"], [[m.order, m.i, m.j, m.k] for m in basis], args.format)


def cmd_code(args) -> str:
    F = _field(args)
    if args.dual_sweep:
        res = duality_sweep(args.r, F)
        rows = [[c.l, c.dual_l, c.orthogonal, c.rank_sum, c.kernel_matches, "PASS" if c.ok else "FAIL"] for c in res]
        args._failed = not all(c.ok for c in res)
        return _table(["l", "dual_l", "orthogonal", "rank_sum", "kernel_matches", "result"], rows, args.format)
    if args.s is None:
        raise UsageError("code needs --s (or --dual-sweep)")
    code = gh_code(args.r, args.s, F)
    rep = code.report()
    return format_matrix(code.generator, hex=args.hex) + _kv(list(rep.as_dict().items()), args.format)


def cmd_distance(args) -> str:
    res = code_distance(
        args.r,
        args.s,
        exact=not args.bounds_only,
        budget=None if args.force else args.budget,
        early_exit=not args.no_early_exit,
        threads=args.threads,
        field=_field(args),
    )
    return _kv(list(res.as_dict().items()), args.format)


def cmd_tables(args) -> str:
    if args.which == "example39":
        rows = [[row.s, row.delta_fr, row.delta_gamma, row.annotation] for row in example39_table()]
        return _table(["s", "delta_FR", "delta_Gamma", "annotation"], rows, args.format)
    max_k = 11 if args.force else 8
    rows = []
    for row in section5_table(max_exact_k=max_k, early_exit=not args.no_early_exit, threads=args.threads):
        d = row.d if row.d is not None else f">={row.result.lower_bound}"
        rows.append([row.k, row.d_rec, d, row.s, row.annotation])
    return _table(["k", "d_rec", "d", "s", "annotation"], rows, args.format)


def cmd_verify(args) -> str:
    lines = []
    failed = False
    for check in run_checks(args.r, seed=args.seed, threads=args.threads):
        failed |= not check.ok
        lines.append(f"{'PASS' if check.ok else 'FAIL'}  {check.name}: {check.detail}")
    args._failed = failed
    return "\n".join(lines) + "\n"


def _budget(text: str) -> int:
    """Plain integer or 'base^exp'."""
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=None, help="extension degree (default 3 or from --config)")
    common.add_argument("--modulus", type=lambda x: int(x, 0), default=None, help="irreducible modulus bitmask")
    common.add_argument("--config", type=Path, default=None, help="JSON file with keys 'r' and 'modulus'")
    common.add_argument("--format", choices=("text", "csv"), default=None, help="text (default) or csv; tables default to csv")
    common.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")

    threads = argparse.ArgumentParser(add_help=False)
    threads.add_argument("--threads", type=int, default=None, help=f"worker threads (default ${'{'}GHCODES_THREADS{'}'} or 1)")

    p = argparse.ArgumentParser(prog="ghcodes", description="Generalized Hermitian codes over GF(2^r).")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("curve", parents=[common], help="genus, point count, point list")
    sp.add_argument("--points", action="store_true", help="append the affine points as alpha,beta CSV")
    sp.add_argument("--hex", action="store_true")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("semigroup", parents=[common], help="semigroup data and delta tables")
    sp.add_argument("--generators", default=None, help="comma-separated generators (default: the curve's)")
    sp.add_argument("--max-s", type=int, default=None)
    sp.set_defaults(func=cmd_semigroup)

    sp = sub.add_parser("basis", parents=[common], help="monomial basis of L(sQ)")
    sp.add_argument("--s", type=int, required=True)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("code", parents=[common], help="generator matrix and code report")
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--dual-sweep", action="store_true")
    sp.add_argument("--hex", action="store_true")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("distance", parents=[common, threads], help="minimum distance of GH_s")
    sp.add_argument("--s", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exhaustive search (default)")
    mode.add_argument("--bounds-only", action="store_true")
    sp.add_argument("--force", action="store_true", help="ignore the message budget")
    sp.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET)
    sp.add_argument("--no-early-exit", action="store_true", help="scan everything even once the bound is met")
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("tables", parents=[common, threads], help="reproduce the r=3 reference tables")
    sp.add_argument("--which", choices=("section5", "example39"), required=True)
    sp.add_argument("--force", action="store_true", help="exact distances for k up to 11")
    sp.add_argument("--no-early-exit", action="store_true")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("verify", parents=[common, threads], help="run the invariant suite")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.set_defaults(func=cmd_verify)
    return p


def _apply_config(args) -> None:
    cfg = {}
    if args.config is not None:
        try:
            cfg = json.loads(args.config.read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    if args.r is None:
        args.r = int(cfg.get("r", 3))
    if args.modulus is None and cfg.get("modulus") is not None:
        args.modulus = int(cfg["modulus"])
    if args.r < 2:
        raise UsageError("--r must be >= 2")
    if getattr(args, "threads", None) is None and hasattr(args, "threads"):
        args.threads = default_threads()


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args._failed = False
    if args.format is None:
        args.format = "csv" if args.func is cmd_tables else "text"
    try:
        _apply_config(args)
        text = args.func(args)
    except (UsageError, FieldError, SemigroupError, codes_mod.CodeError) as exc:
        print(f"ghcodes: error: {exc}", file=sys.stderr)
        return 2
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 1 if args._failed else 0


def main() -> None:
    sys.exit(run())
