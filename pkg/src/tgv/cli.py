"""Command-line surface: `tgv <subcommand>`.

Output is machine readable and byte-deterministic for identical invocations:
JSON documents for single-object reports, CSV (with `#` comment preamble) for
tabular ones. Exact rationals print as `p/q`, reals with 12 significant
digits. Worker count never changes output bytes.

Config precedence: command-line flags > TGV_* environment variables >
built-in defaults.

Exit codes: 0 success, 1 input error, 2 guard refusal, 3 internal-consistency
alarm.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import bounds, conditions, delsarte, oracle, search
from .codes import Code, all_local_enumerators, distance_enumerator, parse_code
from .errors import ConsistencyError, GuardError, InputError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_ALARM = 3

ENV_PREFIX = "TGV_"


def _fmt_real(value) -> str:
    return format(float(value), ".12g")


def _round12(value) -> float:
    return float(_fmt_real(value))


def _fmt_frac(value: Fraction) -> str:
    return str(Fraction(value))


def _env_default(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except (TypeError, ValueError):
        raise InputError(f"environment variable {ENV_PREFIX}{name}={raw!r} is invalid")


def _resolve(flag_value, env_name: str, cast, fallback):
    if flag_value is not None:
        return flag_value
    return _env_default(env_name, cast, fallback)


def _format_name(raw: str) -> str:
    if raw not in ("json", "csv"):
        raise ValueError(f"unknown format {raw!r}")
    return raw


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we own the codes
        raise InputError(message)


def _load_code(path: str) -> tuple[Code, str]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    digest = hashlib.sha256(raw).hexdigest()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: not utf-8 ({exc})") from None
    try:
        code = parse_code(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None
    return code, f"sha256:{digest}"


def _word_str(word) -> str:
    return "".join(str(s) for s in word)


def _emit_json(record: dict) -> int:
    sys.stdout.write(json.dumps(record, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _emit_csv(preamble: list[str], header: list[str], rows: list[list[str]],
              trailer: list[str] | None = None) -> int:
    out = []
    out.extend(f"# {line}" for line in preamble)
    out.append(",".join(header))
    out.extend(",".join(row) for row in rows)
    if trailer:
        out.extend(f"# {line}" for line in trailer)
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- enum

def _cmd_enum(args) -> int:
    code, digest = _load_code(args.code_file)
    fmt = _resolve(args.format, "FORMAT", _format_name, "json")
    echo = f"enum {args.code_file}" + (" --local" if args.local else "")
    b = distance_enumerator(code).polynomial
    coeffs = [b.coefficient(j) for j in range(code.m + 1)]
    locals_ = None
    if args.local:
        locals_ = {
            _word_str(loc.center): list(loc.counts)
            for loc in all_local_enumerators(code)
        }
    if fmt == "json":
        record = {
            "command": echo,
            "input_digest": digest,
            "q": code.q,
            "m": code.m,
            "size": code.size,
            "B": [_fmt_frac(c) for c in coeffs],
        }
        if locals_ is not None:
            record["locals"] = locals_
        return _emit_json(record)
    rows = [["", str(j), _fmt_frac(c)] for j, c in enumerate(coeffs)]
    if locals_ is not None:
        for word in sorted(locals_):
            rows.extend(
                [word, str(j), str(c)] for j, c in enumerate(locals_[word])
            )
    return _emit_csv(
        [f"command: {echo}", f"input: {digest}"], ["word", "j", "value"], rows
    )


# ---------------------------------------------------------------- bound

def _parse_delta_grid(spec: str) -> list[float]:
    try:
        if ":" in spec:
            start_s, stop_s, count_s = spec.split(":")
            start, stop, count = float(start_s), float(stop_s), int(count_s)
            if count < 1:
                raise ValueError("count must be >= 1")
            if count == 1:
                return [start]
            return [start + (stop - start) * i / (count - 1) for i in range(count)]
        values = [float(tok) for tok in spec.split(",") if tok.strip()]
        if not values:
            raise ValueError("empty grid")
        return values
    except ValueError as exc:
        raise InputError(f"bad --delta-grid {spec!r}: {exc}") from None


def _cmd_bound(args) -> int:
    code, digest = _load_code(args.code_file)
    fmt = _resolve(args.format, "FORMAT", _format_name, "csv")
    deltas = _parse_delta_grid(args.delta_grid)
    methods = (
        [bounds.BoundMethod.MAIN, bounds.BoundMethod.CARO_WEI]
        if args.method == "both"
        else [bounds.BoundMethod(args.method)]
    )
    echo = f"bound {args.code_file} --delta-grid {args.delta_grid} --method {args.method}"
    plotkin = (code.q - 1) / code.q
    rows = []
    for method in methods:
        for delta in deltas:
            if not 0 < delta < 1 or delta >= plotkin:
                rows.append(
                    {"method": method.value, "delta": delta, "status": "skipped"}
                )
                continue
            report = bounds.bound_report(code, delta, method)
            rows.append(
                {
                    "method": method.value,
                    "delta": delta,
                    "x_star": report.x_star,
                    "bound": report.value,
                    "gv": report.gv_baseline,
                    "excess": report.excess,
                    "status": "ok",
                }
            )
    if fmt == "json":
        record = {
            "command": echo,
            "input_digest": digest,
            "rows": [
                {k: (_round12(v) if isinstance(v, float) else v) for k, v in row.items()}
                for row in rows
            ],
        }
        return _emit_json(record)
    csv_rows = []
    for row in rows:
        if row["status"] == "skipped":
            csv_rows.append([row["method"], _fmt_real(row["delta"]), "", "", "", "", "skipped"])
        else:
            csv_rows.append(
                [
                    row["method"],
                    _fmt_real(row["delta"]),
                    _fmt_real(row["x_star"]),
                    _fmt_real(row["bound"]),
                    _fmt_real(row["gv"]),
                    _fmt_real(row["excess"]),
                    "ok",
                ]
            )
    return _emit_csv(
        [f"command: {echo}", f"input: {digest}"],
        ["method", "delta", "x_star", "bound", "gv", "excess", "status"],
        csv_rows,
    )


# ---------------------------------------------------------------- transform

def _cmd_transform(args) -> int:
    code, digest = _load_code(args.code_file)
    by_sub = delsarte.spectrum_by_substitution(code)
    by_kraw = delsarte.spectrum_by_krawtchouk(code)
    agree = by_sub.coefficients == by_kraw.coefficients
    nonneg = by_sub.all_nonnegative
    witness = None
    if not nonneg:
        witness = next(i for i, a in enumerate(by_sub.coefficients) if a < 0)
    record = {
        "command": f"transform {args.code_file}",
        "input_digest": digest,
        "A_substitution": [_fmt_frac(a) for a in by_sub.coefficients],
        "A_krawtchouk": [_fmt_frac(a) for a in by_kraw.coefficients],
        "methods_agree": agree,
        "all_nonnegative": nonneg,
        "min_coefficient": _fmt_frac(by_sub.min_coefficient),
        "witness": witness,
    }
    _emit_json(record)
    if not agree or not nonneg:
        print("internal-consistency alarm: Delsarte verdict failed", file=sys.stderr)
        return EXIT_ALARM
    return EXIT_OK


# ---------------------------------------------------------------- check

def _cmd_check(args) -> int:
    code, digest = _load_code(args.code_file)
    fmt = _resolve(args.format, "FORMAT", _format_name, "csv")
    grid = _resolve(args.grid, "GRID", int, conditions.DEFAULT_GRID_SIZE)
    kind = conditions.ConditionKind(args.kind)
    result = conditions.sweep(code, kind, grid_size=grid, refine=args.refine)
    probe = conditions.monotonicity_probe(code, kind, grid_size=max(grid, 64))
    echo = (
        f"check {args.code_file} --kind {kind.value} --grid {grid} "
        f"--{'refine' if args.refine else 'no-refine'}"
    )
    extremum = "sup" if kind is conditions.ConditionKind.LEMMA8 else "inf"
    summary = [
        f"{extremum}={_fmt_real(result.sup_estimate)} "
        f"argmax_z={_fmt_real(result.argmax_z)} "
        f"extreme_exact={_fmt_frac(result.sup_exact)}@z={_fmt_frac(result.argmax_z_exact)} "
        f"improves={'true' if result.improves else 'false'}",
        f"monotone_decreasing={'true' if probe.monotone_decreasing else 'false'}"
        + (
            f" first_violation={_fmt_frac(probe.first_violation)}"
            if probe.first_violation is not None
            else ""
        ),
    ]
    if probe.center_monotone is not None:
        nonmono = sum(1 for flag in probe.center_monotone if not flag)
        summary.append(f"nonmonotone_terms={nonmono}")
    if fmt == "json":
        record = {
            "command": echo,
            "input_digest": digest,
            "kind": kind.value,
            "z": [_round12(z) for z in result.z_grid],
            "lhs": [_round12(v) for v in result.lhs_values],
            "extreme": _round12(result.sup_estimate),
            "extreme_exact": _fmt_frac(result.sup_exact),
            "argmax_z": _round12(result.argmax_z),
            "argmax_z_exact": _fmt_frac(result.argmax_z_exact),
            "improves": result.improves,
            "monotone_decreasing": probe.monotone_decreasing,
            "first_violation": (
                _fmt_frac(probe.first_violation)
                if probe.first_violation is not None
                else None
            ),
            "nonmonotone_terms": (
                sum(1 for flag in probe.center_monotone if not flag)
                if probe.center_monotone is not None
                else None
            ),
        }
        return _emit_json(record)
    rows = [
        [_fmt_real(z), _fmt_real(v)]
        for z, v in zip(result.z_grid, result.lhs_values)
    ]
    return _emit_csv(
        [f"command: {echo}", f"input: {digest}"], ["z", "lhs"], rows, summary
    )


# ---------------------------------------------------------------- search

def _cmd_search(args) -> int:
    grid = _resolve(args.grid, "GRID", int, conditions.DEFAULT_GRID_SIZE)
    seed = _resolve(args.seed, "SEED", int, 0)
    budget = _resolve(args.budget, "BUDGET", int, 1000)
    threads = _resolve(args.threads, "THREADS", int, 1)
    size_range = None
    if args.min_size is not None or args.max_size is not None:
        lo = args.min_size if args.min_size is not None else 1
        hi = args.max_size if args.max_size is not None else args.q**args.m
        size_range = (lo, hi)
    cfg = search.SearchConfig(
        q=args.q,
        m=args.m,
        strategy=search.Strategy(args.strategy),
        size_range=size_range,
        z_grid_size=grid,
        budget=budget,
        seed=seed,
        threads=threads,
    )
    result = search.run_search(cfg, journal_path=args.resume)
    lo, hi = cfg.resolved_size_range()
    echo = (
        f"search --q {cfg.q} --m {cfg.m} --strategy {cfg.strategy.value} "
        f"--min-size {lo} --max-size {hi} --grid {cfg.z_grid_size} "
        f"--budget {cfg.budget} --seed {cfg.seed}"
    )
    record = {
        "command": echo,
        "config": {
            "q": cfg.q,
            "m": cfg.m,
            "strategy": cfg.strategy.value,
            "min_size": lo,
            "max_size": hi,
            "z_grid_size": cfg.z_grid_size,
            "budget": cfg.budget,
            "seed": cfg.seed,
        },
        "candidates_examined": result.candidates_examined,
        "best_sup": _round12(result.best_sup),
        "best_z": _round12(result.best_z),
        "best_code": {
            "q": result.best_code.q,
            "m": result.best_code.m,
            "words": [_word_str(w) for w in result.best_code.words],
        },
        "violation_found": result.violation_found,
        "exact_certificate": (
            _fmt_frac(result.exact_certificate)
            if result.exact_certificate is not None
            else None
        ),
    }
    return _emit_json(record)


# ---------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    code, digest = _load_code(args.code_file)
    try:
        x = Fraction(args.x)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad --x {args.x!r}: expected a number or p/q") from None
    try:
        delta = Fraction(args.delta)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad --delta {args.delta!r}") from None
    seed = _resolve(args.seed, "SEED", int, 0)
    report = oracle.verify_instance(
        code, args.n, delta, x=x, trials=args.trials, seed=seed
    )
    echo = (
        f"verify {args.code_file} --n {args.n} --delta {args.delta} "
        f"--x {args.x} --trials {args.trials} --seed {seed}"
    )
    record = {
        "command": echo,
        "input_digest": digest,
        "n": args.n,
        "d": report["d"],
        "v": report["v"],
        "e": report["e"],
        "e_enumerator": _fmt_frac(report["e_enumerator"]),
        "turan": _fmt_frac(report["turan_exact"]),
        "turan_float": _round12(float(report["turan_exact"])),
        "carowei": _fmt_frac(report["carowei_exact"]),
        "carowei_float": _round12(float(report["carowei_exact"])),
        "greedy_clique_size": report["greedy_clique_size"],
        "turan_rhs": _fmt_frac(report["turan_rhs_exact"]),
        "lemma1_rhs": _round12(report["lemma1_rhs"]),
        "lemma1_dominated": report["lemma1_dominated"],
        "sandwich": "PASS" if report["sandwich_pass"] else "FAIL",
        "clique": [_word_str(w) for w in report["clique"].vertices],
    }
    _emit_json(record)
    if not report["sandwich_pass"] or not report["lemma1_dominated"]:
        print("internal-consistency alarm: sandwich invariant failed", file=sys.stderr)
        return EXIT_ALARM
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> _Parser:
    parser = _Parser(prog="tgv", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_enum = sub.add_parser("enum", help="distance enumerators of a code file")
    p_enum.add_argument("code_file")
    p_enum.add_argument("--local", action="store_true", help="include per-word census")
    p_enum.add_argument("--format", choices=["json", "csv"], default=None)
    p_enum.set_defaults(func=_cmd_enum)

    p_bound = sub.add_parser("bound", help="optimized rate bounds over a delta grid")
    p_bound.add_argument("code_file")
    p_bound.add_argument(
        "--delta-grid",
        default="0.05:0.45:9",
        help="comma list or start:stop:count (inclusive)",
    )
    p_bound.add_argument(
        "--method", choices=["main", "carowei", "both"], default="both"
    )
    p_bound.add_argument("--format", choices=["json", "csv"], default=None)
    p_bound.set_defaults(func=_cmd_bound)

    p_transform = sub.add_parser(
        "transform", help="dual spectrum by both routes, with verdicts"
    )
    p_transform.add_argument("code_file")
    p_transform.set_defaults(func=_cmd_transform)

    p_check = sub.add_parser("check", help="improvement-condition sweep over z")
    p_check.add_argument("code_file")
    p_check.add_argument("--kind", choices=["lemma4", "lemma8"], required=True)
    p_check.add_argument("--grid", type=int, default=None)
    p_check.add_argument(
        "--refine", action=argparse.BooleanOptionalAction, default=True
    )
    p_check.add_argument("--format", choices=["json", "csv"], default=None)
    p_check.set_defaults(func=_cmd_check)

    p_search = sub.add_parser("search", help="hunt for a LEMMA8 violation")
    p_search.add_argument("--q", type=int, required=True)
    p_search.add_argument("--m", type=int, required=True)
    p_search.add_argument(
        "--strategy", choices=["exhaustive", "random", "local"], required=True
    )
    p_search.add_argument("--min-size", type=int, default=None)
    p_search.add_argument("--max-size", type=int, default=None)
    p_search.add_argument("--grid", type=int, default=None)
    p_search.add_argument("--budget", type=int, default=None)
    p_search.add_argument("--seed", type=int, default=None)
    p_search.add_argument("--threads", type=int, default=None)
    p_search.add_argument("--resume", default=None, help="journal path for checkpoint/resume")
    p_search.set_defaults(func=_cmd_search)

    p_verify = sub.add_parser("verify", help="finite-n brute-force verification")
    p_verify.add_argument("code_file")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--delta", required=True)
    p_verify.add_argument("--x", default="1/2")
    p_verify.add_argument("--trials", type=int, default=oracle.DEFAULT_TRIALS)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ConsistencyError as exc:
        print(f"internal-consistency alarm: {exc}", file=sys.stderr)
        return EXIT_ALARM


if __name__ == "__main__":
    sys.exit(main())
