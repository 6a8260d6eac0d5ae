"""``qhh`` command line: dimension tables, sl2 decompositions, brackets, verification.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path as FsPath

from qhh import tables
from qhh.bracket import bracket_q
from qhh.checks import oracle_suite, properties_suite
from qhh.cochains import coboundary, cochain_space, cohomology
from qhh.errors import BudgetExceeded, PathError, QuiverError
from qhh.notation import format_cochain, parse_cochain
from qhh.quiver import Quiver, default_budget, one_loop, parse_quiver, two_loops
from qhh.sl2 import loop_ids, multiplicity_table

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

BUILTIN_QUIVERS = {"one-loop": one_loop, "two-loops": two_loops}


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    quiver: Quiver
    command: str
    degrees: tuple[int, int] | None
    output_format: str
    budget: int
    seed: int

    def __post_init__(self):
        if self.budget <= 0:
            raise InputError("budget must be positive")
        if self.degrees is not None and self.degrees[0] > self.degrees[1]:
            raise InputError(f"empty degree range {self.degrees[0]}..{self.degrees[1]}")


def parse_degrees(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise InputError(f"degree range must look like 'a..b' or 'n', got {text!r}") from None
    if a < 0:
        raise InputError("degrees must be nonnegative")
    if a > b:
        raise InputError(f"empty degree range {text!r}")
    return a, b


def load_quiver(source: str) -> Quiver:
    if source in BUILTIN_QUIVERS:
        return BUILTIN_QUIVERS[source]()
    try:
        text = FsPath(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read quiver file {source!r}: {exc.strerror}") from None
    try:
        return parse_quiver(text)
    except (QuiverError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from None


# ---------------------------------------------------------------------------


def cmd_hh(cfg: RunConfig) -> tuple[str, int]:
    lo, hi = cfg.degrees
    dims = {n: cohomology(cfg.quiver, n, cfg.budget).dim for n in range(lo, hi + 1)}
    emit = {"text": tables.dims_text, "csv": tables.dims_csv, "json": tables.dims_json}[cfg.output_format]
    return emit(dims), EXIT_OK


def cmd_decompose(cfg: RunConfig) -> tuple[str, int]:
    try:
        loop_ids(cfg.quiver)
    except ValueError as exc:
        raise InputError(f"decompose covers the two-loops quiver only: {exc}") from None
    lo, hi = cfg.degrees
    if lo < 1:
        raise InputError("decompose starts at degree 1")
    table = multiplicity_table(lo, hi, cfg.quiver)
    emit = {
        "text": tables.multiplicity_text,
        "csv": tables.multiplicity_csv,
        "json": tables.multiplicity_json,
    }[cfg.output_format]
    return emit(table), EXIT_OK


def cmd_bracket(cfg: RunConfig, first: str, second: str, reduce: bool) -> tuple[str, int]:
    try:
        f = parse_cochain(cfg.quiver, first)
        g = parse_cochain(cfg.quiver, second)
    except (PathError, ValueError, KeyError) as exc:
        raise InputError(f"cannot parse element: {exc}") from None
    if f.degree < 1 or g.degree < 1:
        raise InputError("bracket arguments must have degree >= 1")
    result = bracket_q(f, g)
    if reduce:
        for name, c in (("first", f), ("second", g)):
            if coboundary(cfg.quiver, c):
                raise InputError(f"{name} element is not a cocycle; --cohomology needs cocycles")
        result = cohomology(cfg.quiver, result.degree, cfg.budget).reduce(result)
    if cfg.output_format == "text":
        return format_cochain(cfg.quiver, result) + "\n", EXIT_OK
    if cfg.output_format == "json":
        body = {
            "degree": result.degree,
            "terms": [{"pair": str(p), "coefficient": str(v)} for p, v in _ordered(cfg.quiver, result)],
        }
        return json.dumps(body, indent=2) + "\n", EXIT_OK
    rows = ["path,shortcut,coefficient"]
    rows += [f"{p.gamma},{p.x},{v}" for p, v in _ordered(cfg.quiver, result)]
    return "\n".join(rows) + "\n", EXIT_OK


def _ordered(quiver, c):
    index = cochain_space(quiver, c.degree).index
    return sorted(c.items(), key=lambda item: index[item[0]])


def cmd_verify(cfg: RunConfig, suite: str, cases: int) -> tuple[str, int]:
    results = []
    if suite in ("properties", "all"):
        results += properties_suite(cfg.quiver, seed=cfg.seed, cases=cases)
    if suite in ("oracle", "all"):
        n_max = cfg.degrees[1] if cfg.degrees else None
        results += oracle_suite(cfg.quiver, seed=cfg.seed, cases=cases, n_max=n_max)
    ok = all(r.passed for r in results)
    if cfg.output_format == "json":
        body = {"passed": ok, "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
        text = json.dumps(body, indent=2) + "\n"
    elif cfg.output_format == "csv":
        text = "check,passed,detail\n" + "".join(f'"{r.name}",{str(r.passed).lower()},"{r.detail}"\n' for r in results)
    else:
        text = "\n".join(r.line() for r in results) + f"\n{'all checks passed' if ok else 'VERIFICATION FAILED'}\n"
    return text, EXIT_OK if ok else EXIT_FAILED


def _env_budget() -> int:
    try:
        return default_budget()
    except ValueError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--quiver",
        default="two-loops",
        help="quiver JSON file, or a builtin: one-loop, two-loops (default: two-loops)",
    )
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--budget", type=int, default=None, help="basis size limit (default: $QHH_BUDGET or 2^20)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="qhh", description="Hochschild cohomology of radical square zero algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hh", parents=[common], help="dimensions of HH^n")
    p.add_argument("--degrees", required=True, help="range a..b or a single degree")

    p = sub.add_parser("decompose", parents=[common], help="sl2 multiplicities for two loops")
    p.add_argument("--degrees", required=True)

    p = sub.add_parser("bracket", parents=[common], help="bracket of two formal sums of pairs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--cohomology", action="store_true", help="reduce the result modulo coboundaries")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=("properties", "oracle", "all"), default="all")
    p.add_argument("--cases", type=int, default=200, help="random cases per check")
    p.add_argument("--degrees", default=None, help="oracle degrees 0..b (default: fits small tables)")
    return parser


def run(argv: list[str] | None = None) -> tuple[str, str, int]:
    """Run the CLI, returning ``(stdout, stderr, exit_code)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", "", int(exc.code or 0)
    try:
        degrees = parse_degrees(args.degrees) if getattr(args, "degrees", None) else None
        cfg = RunConfig(
            quiver=load_quiver(args.quiver),
            command=args.command,
            degrees=degrees,
            output_format=args.format,
            budget=args.budget if args.budget is not None else _env_budget(),
            seed=args.seed,
        )
        if args.command == "hh":
            out, code = cmd_hh(cfg)
        elif args.command == "decompose":
            out, code = cmd_decompose(cfg)
        elif args.command == "bracket":
            out, code = cmd_bracket(cfg, args.first, args.second, args.cohomology)
        else:
            if args.cases < 1:
                raise InputError("--cases must be positive")
            out, code = cmd_verify(cfg, args.suite, args.cases)
    except InputError as exc:
        return "", f"qhh: error: {exc}\n", EXIT_INPUT
    except BudgetExceeded as exc:
        return "", f"qhh: budget exceeded: {exc}\n", EXIT_BUDGET
    return out, "", code


def main(argv: list[str] | None = None) -> int:
    out, err, code = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
