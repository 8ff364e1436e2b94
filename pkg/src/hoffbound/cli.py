"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters, 3 verification mismatch.
"""
import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .bench import bench
from .bounds import CLIQUE_LABEL, bound
from .errors import CapExceededError, HoffboundError, ParameterError
from .numerics import to_decimal
from .oracle import verify
from .spectra import GraphParams

EXIT_OK, EXIT_PARAMS, EXIT_MISMATCH = 0, 2, 3

CSV_HEADER = [
    "family", "n", "q_or_k", "p", "lambda_max", "lambda_min",
    "bound_num", "bound_den", "bound_decimal", "bound_ceil",
]


# -- rendering -----------------------------------------------------------------

def _param_dict(params):
    second = "q" if params.family == "hamming" else "k"
    return {"n": params.n, second: params.second, "p": params.p}


def report_dict(report, digits=6, with_spectrum=False):
    out = {
        "family": report.params.family,
        "params": _param_dict(report.params),
        "lambda_max": report.lambda_max,
        "lambda_min": report.lambda_min,
        "bound": {"num": report.bound.numerator, "den": report.bound.denominator},
        "bound_decimal": to_decimal(report.bound, digits),
        "bound_ceil": report.bound_ceil,
    }
    if with_spectrum and report.spectrum is not None:
        out["spectrum"] = [
            {"index": t, "value": v, "multiplicity": m}
            for t, (v, m) in enumerate(report.spectrum)
        ]
    if report.references:
        out["references"] = report.references.as_dict()
    return out


def _csv_row(report, digits):
    p = report.params
    return [
        p.family, p.n, p.second, p.p, report.lambda_max, report.lambda_min,
        report.bound.numerator, report.bound.denominator,
        to_decimal(report.bound, digits), report.bound_ceil,
    ]


def _table(rows):
    widths = [max(len(str(r[c])) for r in rows) for c in range(len(rows[0]))]
    return "\n".join(
        "  ".join(str(cell).rjust(w) for cell, w in zip(r, widths)).rstrip() for r in rows
    )


def render(reports, fmt="table", digits=6, with_spectrum=False):
    """Render one report or a list of them as table, csv or json text."""
    single = not isinstance(reports, (list, tuple))
    if single:
        reports = [reports]
    if fmt == "json":
        data = [report_dict(r, digits, with_spectrum) for r in reports]
        return json.dumps(data[0] if single else data, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in reports:
            writer.writerow(_csv_row(r, digits))
        return buf.getvalue().rstrip("\n")
    head = ["family", "n", "q/k", "p", "lambda_max", "lambda_min", "bound", "decimal", "ceil"]
    rows = [head] + [
        [r.params.family, r.params.n, r.params.second, r.params.p, r.lambda_max,
         r.lambda_min, str(r.bound), to_decimal(r.bound, digits), r.bound_ceil]
        for r in reports
    ]
    parts = [_table(rows)]
    for r in reports:
        extra = []
        if with_spectrum and r.spectrum is not None:
            spec_rows = [["index", "eigenvalue", "multiplicity"]] + [
                [t, v, m] for t, (v, m) in enumerate(r.spectrum)
            ]
            extra.append(_table(spec_rows))
        if r.references:
            refs = r.references
            if refs.chi_exact is not None:
                extra.append(f"known chi: {refs.chi_exact}")
            if refs.omega_or_clique_bound is not None:
                name = CLIQUE_LABEL if r.params.family == "hamming" else "clique number"
                extra.append(f"{name}: {refs.omega_or_clique_bound}  (Hoffman: {r.bound})")
        if extra:
            parts.append(f"{r.params.label()}\n" + "\n".join(extra))
    return "\n\n".join(parts)


def render_verification(rep, fmt="table"):
    if fmt == "json":
        return json.dumps({
            "family": rep.params.family,
            "params": _param_dict(rep.params),
            "matched": rep.matched,
            "rows_match": rep.rows_match,
            "max_abs_deviation": rep.max_abs_deviation,
            "dp_spectrum": [
                {"index": t, "value": v, "multiplicity": m}
                for t, (v, m) in enumerate(zip(rep.dp_values, rep.dp_multiplicities))
            ],
            "oracle_clusters": [{"value": c, "count": n} for c, n in rep.oracle_clusters],
        }, indent=2)
    lines = [
        f"{rep.params.label()}: {rep.summary()} "
        f"(max |deviation| {rep.max_abs_deviation:.3e}, recurrence rows "
        f"{'agree' if rep.rows_match else 'DISAGREE'} with direct sums)",
        "dp spectrum (value x multiplicity): "
        + ", ".join(f"{v} x {m}" for v, m in zip(rep.dp_values, rep.dp_multiplicities)),
        "oracle clusters (value x count):    "
        + ", ".join(f"{c:.9g} x {n}" for c, n in rep.oracle_clusters),
    ]
    return "\n".join(lines)


def render_bench(rep, fmt="table"):
    data = {
        "family": rep.params.family,
        "params": _param_dict(rep.params),
        "dp_update_count": rep.dp_update_count,
        "row_updates": rep.row_updates,
        "accumulations": rep.accumulations,
        "outer_iterations": rep.outer_iterations,
        "naive_term_count": rep.naive_term_count,
        "dp_seconds": rep.dp_seconds,
        "naive_seconds": rep.naive_seconds,
    }
    if rep.exact_seconds is not None:
        data["exact_seconds"] = rep.exact_seconds
    if fmt == "json":
        return json.dumps(data, indent=2)
    if fmt == "csv":
        keys = ["family", "n", "q_or_k", "p"] + list(data)[2:]
        p = rep.params
        vals = [p.family, p.n, p.second, p.p] + list(data.values())[2:]
        return ",".join(keys) + "\n" + ",".join(str(v) for v in vals)
    rows = [[key, value] for key, value in data.items() if key != "params"]
    rows.insert(1, ["graph", rep.params.label()])
    return _table(rows)


# -- argument handling -----------------------------------------------------------

def parse_range(text):
    """'3', '1..4' or '2,3,5' (pieces may mix) -> sorted list of ints."""
    values = set()
    for piece in text.split(","):
        piece = piece.strip()
        if ".." in piece:
            lo, hi = piece.split("..", 1)
            values.update(range(int(lo), int(hi) + 1))
        elif piece:
            values.add(int(piece))
    if not values:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return sorted(values)


def _add_output(p):
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--digits", type=int, default=6, help="significant digits of bound_decimal")


def _add_family_params(p, family=None):
    p.add_argument("--n", type=int, required=True)
    if family in (None, "hamming"):
        p.add_argument("--q", type=int, required=family == "hamming")
    if family in (None, "johnson", "kneser"):
        p.add_argument("--k", type=int, required=family is not None)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--clamp-p", action="store_true", help="truncate p to the diameter instead of failing")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hoffbound",
        description="Hoffman lower bounds on the chromatic number of Hamming, Johnson and Kneser graph powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for family in ("hamming", "johnson", "kneser"):
        p = sub.add_parser(family, help=f"bound for a {family} graph power")
        _add_family_params(p, family)
        _add_output(p)
        p.add_argument("--spectrum", action="store_true", help="include the distinct spectrum")
        p.add_argument("--oracle", action="store_true", help="also check against brute force")
        p.add_argument("--cap", type=int, default=None, help="oracle vertex cap")

    p = sub.add_parser("verify", help="compare the recurrence spectrum with brute-force eigenvalues")
    p.add_argument("--family", choices=("hamming", "johnson", "kneser"), required=True)
    _add_family_params(p)
    p.add_argument("--tol", type=float, default=1e-6, help="eigenvalue cluster tolerance")
    p.add_argument("--cap", type=int, default=None, help="oracle vertex cap (env HOFFBOUND_ORACLE_CAP)")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("sweep", help="bounds over parameter ranges")
    p.add_argument("--family", choices=("hamming", "johnson", "kneser"), required=True)
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--q", type=parse_range)
    p.add_argument("--k", type=parse_range)
    policy = p.add_mutually_exclusive_group(required=True)
    policy.add_argument("--p", type=parse_range, help="fixed p value(s) for each triple")
    policy.add_argument("--all-p", action="store_true", help="every p from 1 to the diameter")
    policy.add_argument("--p-diameter", action="store_true", help="p equal to the diameter")
    p.add_argument("--clamp-p", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--spectrum", action="store_true")
    _add_output(p)

    p = sub.add_parser("bench", help="count DP updates and time DP against naive evaluation")
    p.add_argument("--family", choices=("hamming", "johnson", "kneser"), required=True)
    _add_family_params(p)
    p.add_argument("--repetitions", type=int, default=10)
    p.add_argument("--exact-timing", action="store_true", help="also time the exact-arithmetic path")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    return parser


def _second(args, family):
    value = args.q if family == "hamming" else args.k
    if value is None:
        raise ParameterError(f"--{'q' if family == 'hamming' else 'k'} is required for {family}")
    return value


def params_from_args(args, family):
    return GraphParams.make(family, args.n, _second(args, family), args.p, args.clamp_p)


def sweep_params(family, ns, seconds, policy, ps=None, clamp_p=False, notes=None):
    """Valid parameter triples in ascending (n, q or k, p) order."""
    out = []
    for n in ns:
        for s in seconds:
            try:
                diam = GraphParams.make(family, n, s, 1).diameter
            except ParameterError as exc:
                if notes is not None:
                    notes.append(f"skipping n={n}, {'q' if family == 'hamming' else 'k'}={s}: {exc}")
                continue
            if policy == "all-p":
                wanted = range(1, diam + 1)
            elif policy == "diameter":
                wanted = [diam]
            else:
                wanted = ps
            seen = set()
            for p in wanted:
                try:
                    params = GraphParams.make(family, n, s, p, clamp_p)
                except ParameterError as exc:
                    if notes is not None:
                        notes.append(f"skipping: {exc}")
                    continue
                if params.p not in seen:
                    seen.add(params.p)
                    out.append(params)
    out.sort(key=lambda g: (g.n, g.second, g.p))
    return out


def sweep(family, ns, seconds, policy, ps=None, clamp_p=False, jobs=1, notes=None):
    """Bound reports for every valid triple, in deterministic order."""
    triples = sweep_params(family, ns, seconds, policy, ps, clamp_p, notes)
    if jobs > 1 and len(triples) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(bound, triples))
    return [bound(t) for t in triples]


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def emit(text):
        print(text, file=stdout)

    try:
        cmd = args.command
        if cmd in ("hamming", "johnson", "kneser"):
            params = params_from_args(args, cmd)
            report = bound(params)
            emit(render(report, args.format, args.digits, args.spectrum))
            if args.oracle:
                rep = verify(params, cap=args.cap)
                print(render_verification(rep), file=stderr)
                if not rep.matched:
                    return EXIT_MISMATCH
            return EXIT_OK
        if cmd == "verify":
            params = params_from_args(args, args.family)
            rep = verify(params, tol=args.tol, cap=args.cap)
            emit(render_verification(rep, args.format))
            return EXIT_OK if rep.matched else EXIT_MISMATCH
        if cmd == "sweep":
            seconds = args.q if args.family == "hamming" else args.k
            if seconds is None:
                raise ParameterError(f"--{'q' if args.family == 'hamming' else 'k'} is required for {args.family}")
            policy = "all-p" if args.all_p else "diameter" if args.p_diameter else "each"
            notes = []
            reports = sweep(args.family, args.n, seconds, policy, args.p, args.clamp_p, args.jobs, notes)
            for note in notes:
                print(note, file=stderr)
            if not reports:
                print("error: no valid parameter triples in the sweep", file=stderr)
                return EXIT_PARAMS
            emit(render(reports, args.format, args.digits, args.spectrum))
            return EXIT_OK
        if cmd == "bench":
            params = params_from_args(args, args.family)
            emit(render_bench(bench(params, args.repetitions, args.exact_timing), args.format))
            return EXIT_OK
    except (ParameterError, CapExceededError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARAMS
    except HoffboundError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    return EXIT_OK


def main():
    sys.exit(run())
