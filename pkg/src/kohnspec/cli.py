"""Command-line interface: spectral counts, heat traces, and Weyl coefficients.

Subcommands
-----------
coeff     Weyl coefficient by one route or all four (reconciled).
count     Eigenvalue counting function N(lambda), optionally the mode list.
heat      Split heat-trace sums, optionally cross-checked against the
          direct double sum.
converge  Counting ratio N(lambda)/lambda^n against its limit for a ladder
          of thresholds.
stanton   Form-degree coefficient, its continuation, the explicit pole
          term, and the residual of their identity, at a point or on a grid.

Output formats: table (human, 10 significant digits), csv (machine,
leading "# schema=1" line, 17 significant digits), json (machine, one
object; floats re-parse bit-for-bit).  All output is deterministic.

Exit codes: 0 success; 1 usage or domain error; 2 reconciliation failure
(coeff --method all disagreement, heat --verify mismatch); 3 resource cap
or non-convergence.

Caps can be overridden by environment variables KOHNSPEC_LINE_CAP,
KOHNSPEC_TERM_CAP, KOHNSPEC_NODE_CAP; explicit flags win over environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import coefficients, continuation, heat_trace, spectrum
from .errors import ConvergenceError, ResourceCapError

__all__ = ["build_parser", "main", "entry"]

_SCHEMA = 1


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _line_cap() -> int:
    return _env_int("KOHNSPEC_LINE_CAP", spectrum.DEFAULT_LINE_CAP)


def _term_cap() -> int:
    return _env_int("KOHNSPEC_TERM_CAP", heat_trace.DEFAULT_TERM_CAP)


def _node_cap() -> int:
    return _env_int("KOHNSPEC_NODE_CAP", 200_000)


# ---------------------------------------------------------------- rendering


def _fmt_cell(value, machine: bool) -> str:
    if value is None:
        return "" if machine else "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}" if machine else f"{value:.10g}"
    return str(value)


def _render_table(columns: list[str], rows: list[dict], footer: str | None) -> str:
    cells = [[_fmt_cell(row.get(c), machine=False) for c in columns] for row in rows]
    widths = [
        max(len(columns[i]), max((len(r[i]) for r in cells), default=0))
        for i in range(len(columns))
    ]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
    if footer:
        lines.append(footer)
    return "\n".join(lines) + "\n"


def _render_csv(columns: list[str], rows: list[dict]) -> str:
    lines = [f"# schema={_SCHEMA}", ",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt_cell(row.get(c), machine=True) for c in columns))
    return "\n".join(lines) + "\n"


def _render_json(command: str, params: dict, columns: list[str], rows: list[dict]) -> str:
    payload = {
        "schema": _SCHEMA,
        "command": command,
        "params": params,
        "rows": [{c: row.get(c) for c in columns} for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit(
    args,
    command: str,
    params: dict,
    columns: list[str],
    rows: list[dict],
    footer: str | None = None,
) -> None:
    if args.format == "table":
        text = _render_table(columns, rows, footer)
    elif args.format == "csv":
        text = _render_csv(columns, rows)
    else:
        text = _render_json(command, params, columns, rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_float_list(raw: str, flag: str) -> list[float]:
    items = [piece.strip() for piece in raw.split(",") if piece.strip()]
    if not items:
        raise ValueError(f"{flag} needs at least one value, got {raw!r}")
    try:
        return [float(piece) for piece in items]
    except ValueError:
        raise ValueError(f"{flag} must be a comma-separated list of numbers") from None


# ----------------------------------------------------------------- handlers


def _cmd_coeff(args) -> int:
    columns = ["kind", "n", "method", "value", "error_bound", "work", "exact_form"]

    def estimate_row(est) -> dict:
        return {
            "kind": "estimate",
            "n": est.n,
            "method": est.method,
            "value": est.value,
            "error_bound": est.error_bound,
            "work": est.work,
            "exact_form": str(est.exact_form) if est.exact_form else None,
        }

    if args.method == "all":
        report = coefficients.reconcile(
            args.n,
            terms=args.terms,
            tol=args.tol,
            term_cap=_term_cap(),
            node_cap=_node_cap(),
        )
        rows = [estimate_row(est) for est in report.estimates]
        for a, b, diff, combined in report.differences:
            rows.append(
                {
                    "kind": "difference",
                    "n": args.n,
                    "method": f"{a}|{b}",
                    "value": diff,
                    "error_bound": combined,
                    "work": None,
                    "exact_form": None,
                }
            )
        verdict = "reconciliation: ok" if report.ok else "reconciliation: FAILED"
        _emit(
            args,
            "coeff",
            {"n": args.n, "method": "all", "reconcile_ok": report.ok},
            columns,
            rows,
            footer=verdict,
        )
        if not report.ok:
            print("error: coefficient routes disagree beyond bounds", file=sys.stderr)
            return 2
        return 0

    if args.method == "series-zeta":
        est = coefficients.series_zeta(args.n)
    elif args.method == "series-direct":
        est = coefficients.series_direct(args.n, args.terms, term_cap=_term_cap())
    elif args.method == "integral":
        est = coefficients.integral_coefficient(
            args.n, tol=args.tol, node_cap=_node_cap()
        )
    else:  # intermediate
        est = coefficients.integral_intermediate(
            args.n, tol=args.tol, node_cap=_node_cap()
        )
    _emit(
        args,
        "coeff",
        {"n": args.n, "method": args.method},
        columns,
        [estimate_row(est)],
    )
    return 0


def _cmd_count(args) -> int:
    cap = _line_cap()
    if args.modes:
        lines = spectrum.enumerate_modes(args.n, args.lam, line_cap=cap)
        columns = ["p", "q", "eigenvalue", "multiplicity"]
        rows = [
            {
                "p": line.p,
                "q": line.q,
                "eigenvalue": line.eigenvalue,
                "multiplicity": line.multiplicity,
            }
            for line in lines
        ]
        _emit(args, "count", {"n": args.n, "lambda": args.lam, "modes": True}, columns, rows)
        return 0
    total = spectrum.count(args.n, args.lam, line_cap=cap)
    columns = ["n", "lambda", "count", "ratio"]
    ratio = total / float(args.lam) ** args.n if args.lam > 0 else None
    rows = [{"n": args.n, "lambda": args.lam, "count": total, "ratio": ratio}]
    _emit(args, "count", {"n": args.n, "lambda": args.lam, "modes": False}, columns, rows)
    return 0


def _cmd_heat(args) -> int:
    ts = _parse_float_list(args.t, "--t")
    cap = _term_cap()
    abs_tol = args.tol if args.tol is not None else 1e-15
    columns = [
        "n",
        "t",
        "split_q",
        "split_q_bound",
        "split_w",
        "split_w_bound",
        "scaled_trace",
    ]
    if args.verify:
        columns += ["direct", "direct_bound", "split_total", "abs_diff", "within_bounds"]
    rows = []
    all_within = True
    for t in ts:
        part_q = heat_trace.trace_split_q(args.n, t, abs_tol=abs_tol, term_cap=cap)
        part_w = heat_trace.trace_split_w(args.n, t, abs_tol=abs_tol, term_cap=cap)
        row = {
            "n": args.n,
            "t": t,
            "split_q": part_q.value,
            "split_q_bound": part_q.error_bound,
            "split_w": part_w.value,
            "split_w_bound": part_w.error_bound,
            "scaled_trace": float(t) ** args.n * (part_q.value + part_w.value),
        }
        if args.verify:
            direct = heat_trace.trace_direct(args.n, t, abs_tol=abs_tol, term_cap=cap)
            split_total = part_q.value + part_w.value
            diff = abs(direct.value - split_total)
            budget = direct.error_bound + part_q.error_bound + part_w.error_bound
            within = diff <= budget
            all_within = all_within and within
            row.update(
                direct=direct.value,
                direct_bound=direct.error_bound,
                split_total=split_total,
                abs_diff=diff,
                within_bounds=within,
            )
        rows.append(row)
    _emit(
        args,
        "heat",
        {"n": args.n, "t": ts, "verify": bool(args.verify)},
        columns,
        rows,
    )
    if args.verify and not all_within:
        print("error: split sums disagree with the direct trace", file=sys.stderr)
        return 2
    return 0


def _cmd_converge(args) -> int:
    lams = _parse_float_list(args.lambdas, "--lambdas")
    cap = _line_cap()
    limit = coefficients.series_zeta(args.n).value
    columns = ["n", "lambda", "count", "ratio", "ratio_minus_limit"]
    rows = []
    for lam in lams:
        total = spectrum.count(args.n, lam, line_cap=cap)
        ratio = total / float(lam) ** args.n if lam > 0 else None
        rows.append(
            {
                "n": args.n,
                "lambda": lam,
                "count": total,
                "ratio": ratio,
                "ratio_minus_limit": None if ratio is None else ratio - limit,
            }
        )
    _emit(args, "converge", {"n": args.n, "limit": limit}, columns, rows)
    return 0


def _parse_span(raw: str) -> list[float]:
    parts = raw.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid span must be start:stop:steps, got {raw!r}")
    start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 1:
        raise ValueError(f"grid needs at least one step, got {steps}")
    if steps == 1:
        return [start]
    return [start + (stop - start) * i / (steps - 1) for i in range(steps)]


def _stanton_row(n: int, q: complex, tol: float, node_cap: int, limit: float) -> dict:
    point = continuation.StripPoint(n, q)
    m = n - 1
    in_g_strip = -1.0 < q.real < m
    in_f_strip = 0.0 < q.real < m and abs(q) >= continuation.NEAR_POLE_RADIUS
    g_val = (
        continuation.continued_coefficient(point, tol=tol, node_cap=node_cap)
        if in_g_strip
        else None
    )
    f_val = (
        continuation.stanton_coefficient(point, tol=tol, node_cap=node_cap)
        if in_f_strip
        else None
    )
    pole = continuation.pole_term(point) if (in_g_strip and q != 0) else None
    residual = (
        abs(f_val - g_val - pole)
        if (f_val is not None and g_val is not None and pole is not None)
        else None
    )
    coeff_check = abs(g_val - limit) if (q == 0 and g_val is not None) else None
    return {
        "n": n,
        "q_re": q.real,
        "q_im": q.imag,
        "f_re": None if f_val is None else f_val.real,
        "f_im": None if f_val is None else f_val.imag,
        "g_re": None if g_val is None else g_val.real,
        "g_im": None if g_val is None else g_val.imag,
        "pole_re": None if pole is None else pole.real,
        "pole_im": None if pole is None else pole.imag,
        "residual": residual,
        "coeff_check": coeff_check,
    }


def _cmd_stanton(args) -> int:
    node_cap = _node_cap()
    limit = coefficients.series_zeta(args.n).value
    columns = [
        "n",
        "q_re",
        "q_im",
        "f_re",
        "f_im",
        "g_re",
        "g_im",
        "pole_re",
        "pole_im",
        "residual",
        "coeff_check",
    ]
    if args.grid:
        spans = args.grid.split(",")
        if len(spans) > 2:
            raise ValueError("grid takes at most re and im spans")
        re_axis = _parse_span(spans[0])
        im_axis = _parse_span(spans[1]) if len(spans) == 2 else [0.0]
        points = [complex(re, im) for re in re_axis for im in im_axis]
    else:
        parts = _parse_float_list(args.q, "--q")
        if len(parts) > 2:
            raise ValueError("--q takes re or re,im")
        points = [complex(parts[0], parts[1] if len(parts) == 2 else 0.0)]
    rows = [_stanton_row(args.n, q, args.tol, node_cap, limit) for q in points]
    if len(rows) == 1 and rows[0]["f_re"] is None and rows[0]["g_re"] is None:
        print(
            f"error: q = {points[0]} is outside both evaluator strips", file=sys.stderr
        )
        return 1
    _emit(
        args,
        "stanton",
        {"n": args.n, "tol": args.tol, "points": len(rows)},
        columns,
        rows,
    )
    return 0


# ------------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1 (2 means reconciliation)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(sub) -> None:
    sub.add_argument(
        "--format", choices=("table", "csv", "json"), default="table",
        help="output format (default: table)",
    )
    sub.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="kohnspec",
        description="Kohn Laplacian spectrum on S^(2n-1): counting, heat trace, Weyl coefficient",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    coeff = subs.add_parser(
        "coeff", help="leading Weyl coefficient c(n)", parents=[], add_help=True
    )
    coeff.add_argument("--n", type=int, required=True, help="half-dimension parameter, n >= 2")
    coeff.add_argument(
        "--method",
        choices=("series-zeta", "series-direct", "integral", "intermediate", "all"),
        default="series-zeta",
        help="evaluation route (default: series-zeta); all = run and reconcile every route",
    )
    coeff.add_argument(
        "--terms", type=int, default=coefficients.DEFAULT_SERIES_TERMS,
        help="series length for series-direct",
    )
    coeff.add_argument(
        "--tol", type=float, default=1e-10, help="quadrature tolerance for the integral routes"
    )
    _add_common(coeff)
    coeff.set_defaults(handler=_cmd_coeff)

    count = subs.add_parser("count", help="eigenvalue counting function")
    count.add_argument("--n", type=int, required=True)
    count.add_argument(
        "--lambda", dest="lam", type=float, required=True, help="spectral threshold"
    )
    count.add_argument(
        "--modes", action="store_true",
        help="list every spectral line (p, q, eigenvalue, multiplicity) instead of the total",
    )
    _add_common(count)
    count.set_defaults(handler=_cmd_count)

    heat = subs.add_parser("heat", help="heat-trace sums at one or more times")
    heat.add_argument("--n", type=int, required=True)
    heat.add_argument("--t", required=True, help="comma-separated list of times")
    heat.add_argument(
        "--verify", action="store_true",
        help="also evaluate the direct double sum and check the split against it",
    )
    heat.add_argument(
        "--tol", type=float, default=None, help="absolute tail tolerance (default 1e-15)"
    )
    _add_common(heat)
    heat.set_defaults(handler=_cmd_heat)

    converge = subs.add_parser(
        "converge", help="counting ratio against its limit for a threshold ladder"
    )
    converge.add_argument("--n", type=int, required=True)
    converge.add_argument("--lambdas", required=True, help="comma-separated thresholds")
    _add_common(converge)
    converge.set_defaults(handler=_cmd_converge)

    stanton = subs.add_parser(
        "stanton",
        help="form-degree coefficient, its continuation, and the pole-term identity",
    )
    stanton.add_argument("--n", type=int, required=True, help="n >= 3")
    where = stanton.add_mutually_exclusive_group(required=True)
    where.add_argument("--q", help="evaluation point: re or re,im")
    where.add_argument(
        "--grid",
        help="rectangle sweep re0:re1:steps[,im0:im1:steps]; rows ordered re-major",
    )
    stanton.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    _add_common(stanton)
    stanton.set_defaults(handler=_cmd_stanton)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if isinstance(code, int) else 0
    try:
        return args.handler(args)
    except (ResourceCapError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
