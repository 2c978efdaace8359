"""Command-line front end.

Machine output (CSV or JSON with a ``schema_version`` field) goes to the
file given by --out, or stdout; diagnostics go to stderr.  Exit codes:
0 success, 1 no finding where one was requested, 2 usage error, 3
numeric-cap abort.  The environment variable NBSCOPE_THREADS bounds the
worker count used by parallel scans.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analytic, randomseries, rightlimits, sequences

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_NO_FINDING = 1
EXIT_USAGE = 2
EXIT_NUMERIC_CAP = 3


def _parse_values(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        out.append(complex(part))
    if not out:
        raise argparse.ArgumentTypeError("expected a comma-separated list")
    return out


def _parse_floats(text):
    return [float(p) for p in text.split(",") if p.strip()]


_FAMILY_CHOICES = ["periodic", "gap-factorial", "gap-squares", "rudin-shapiro",
                   "rotation", "erdos-hard", "erdos-soft"]


def _add_source_args(p):
    g = p.add_argument_group("input sequence")
    g.add_argument("--family", choices=_FAMILY_CHOICES,
                   help="generator family")
    g.add_argument("--pattern", type=_parse_values,
                   help="comma-separated pattern values (periodic family)")
    g.add_argument("--fill", type=complex, default=1.0,
                   help="fill value for gap families (default 1)")
    g.add_argument("--q", type=float, help="rotation number (irrational)")
    g.add_argument("--theta", type=float, default=0.0,
                   help="rotation phase offset (default 0)")
    g.add_argument("--boundary", default="fractional-part",
                   choices=["fractional-part", "half-indicator"],
                   help="boundary function for the rotation family")
    g.add_argument("--input", help="CSV file with header n,re,im")


def _build_sequence(args):
    if args.input:
        return sequences.read_sequence_csv(args.input)
    fam = args.family
    if fam is None:
        raise sequences.SequenceError("need --family or --input")
    if fam == "periodic":
        if not args.pattern:
            raise sequences.SequenceError("periodic family needs --pattern")
        return sequences.make_sequence(sequences.periodic(args.pattern))
    if fam == "gap-factorial":
        return sequences.make_sequence(sequences.gap_powers("factorials", args.fill))
    if fam == "gap-squares":
        return sequences.make_sequence(sequences.gap_powers("squares", args.fill))
    if fam == "rudin-shapiro":
        return sequences.make_sequence(sequences.rudin_shapiro())
    if fam == "rotation":
        if args.q is None:
            raise sequences.SequenceError("rotation family needs --q")
        return sequences.make_sequence(
            sequences.rotation(args.q, args.theta, args.boundary))
    if fam == "erdos-hard":
        return sequences.make_sequence(sequences.erdos("hard"))
    if fam == "erdos-soft":
        return sequences.make_sequence(sequences.erdos("soft"))
    raise sequences.SequenceError(f"unknown family {fam!r}")


def _emit_json(args, command, report):
    payload = {"schema_version": SCHEMA_VERSION, "command": command,
               "report": report}
    text = json.dumps(payload, indent=2, allow_nan=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


# -- subcommand handlers ----------------------------------------------------


def _cmd_generate(args):
    seq = _build_sequence(args)
    if args.out:
        sequences.write_sequence_csv(args.out, seq, args.count)
    else:
        sequences.write_sequence_csv(sys.stdout, seq, args.count)
    return EXIT_OK


def _cmd_rightlimits(args):
    seq = _build_sequence(args)
    res = rightlimits.extract_right_limits(
        seq, args.window, args.horizon, eps=args.eps,
        max_candidates=args.max_candidates,
        min_recurrence=args.min_recurrence)
    _emit_json(args, "rightlimits", {
        "candidates": [c.to_json_dict() for c in res.candidates],
        "clusters_total": res.clusters_total,
        "windows_scanned": res.windows_scanned,
        "truncated": res.truncated,
    })
    return EXIT_OK if res.candidates else EXIT_NO_FINDING


def _cmd_certificate(args):
    seq = _build_sequence(args)
    decay = tuple(args.decay) if args.decay else None
    found = []
    if args.kind in ("gap", "both"):
        cert = rightlimits.find_gap_certificate(
            seq, args.window, args.horizon, eps=args.eps, delta=args.delta,
            decay=decay, min_recurrence=args.min_recurrence)
        if cert:
            found.append(cert)
    if args.kind in ("pair", "both") and not found:
        sides = ["backward", "forward"] if args.flank == "both" else [args.flank]
        for side in sides:
            cert = rightlimits.find_pair_certificate(
                seq, args.window, args.horizon, eps=args.eps,
                delta=args.delta, flank_side=side,
                min_recurrence=args.min_recurrence)
            if cert:
                found.append(cert)
                break
    report = {"certificates": [c.to_json_dict() for c in found]}
    _emit_json(args, "certificate", report)
    return EXIT_OK if found else EXIT_NO_FINDING


def _cmd_szego(args):
    seq = _build_sequence(args)
    rep = rightlimits.szego_block_analysis(seq, args.pmax, args.horizon)
    _emit_json(args, "szego", rep.to_json_dict())
    return EXIT_OK


def _cmd_periodicity(args):
    seq = _build_sequence(args)
    found = rightlimits.detect_eventual_periodicity(
        seq, args.max_period, args.max_preperiod, args.horizon, tol=args.tol)
    _emit_json(args, "periodicity", {
        "found": None if found is None else
        {"preperiod": found[0], "period": found[1]}})
    return EXIT_OK if found is not None else EXIT_NO_FINDING


def _arc_from(args):
    if args.full:
        return analytic.ArcSpec.full_circle()
    if args.arc is None:
        raise sequences.SequenceError("need --arc ALPHA BETA or --full")
    return analytic.ArcSpec(args.arc[0], args.arc[1])


def _cmd_probe(args):
    seq = _build_sequence(args)
    arc = _arc_from(args)
    report = analytic.boundary_l1_scan(seq, arc, args.radii,
                                       quad_points=args.quad_points,
                                       tol=args.tol)
    if args.out:
        report.write_csv(args.out)
    else:
        report.write_csv(sys.stdout)
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, "command": "probe",
                   "report": report.to_json_dict()}
        with open(args.json, "w") as f:
            f.write(json.dumps(payload, indent=2, allow_nan=True) + "\n")
    if all(report.skipped):
        print("all radii exceeded the evaluation term cap", file=sys.stderr)
        return EXIT_NUMERIC_CAP
    return EXIT_OK


def _cmd_reflectionless(args):
    if args.pattern:
        arc = _arc_from(args)
        res = analytic.periodic_reflectionless_check(args.pattern, arc)
        _emit_json(args, "reflectionless", res.to_json_dict())
        return EXIT_OK if res.passed else EXIT_NO_FINDING
    if args.window_csv:
        win = sequences.read_window_csv(args.window_csv)
        res = analytic.decay_rule_check(win, args.decay_side,
                                        args.decay_c, args.decay_d, args.delta)
        _emit_json(args, "reflectionless", res.to_json_dict())
        return EXIT_OK
    raise sequences.SequenceError("need --pattern (periodic check) or "
                                  "--window-csv (decay rule)")


def _cmd_montecarlo(args):
    if args.process == "iid":
        spec = randomseries.iid_process(args.values, args.probs, seed=args.seed)
    elif args.process == "markov":
        if not args.transition:
            raise sequences.SequenceError(
                "markov process needs --transition 'row;row;...'")
        rows = [_parse_floats(row) for row in args.transition.split(";")]
        spec = randomseries.markov_process(args.values, rows, seed=args.seed)
    else:
        if args.q is None:
            raise sequences.SequenceError("rotation process needs --q")
        spec = randomseries.rotation_process(args.q, args.theta,
                                             args.boundary, seed=args.seed)
    rep = randomseries.certificate_rate_experiment(
        spec, args.trials, args.window, args.horizon,
        eps=args.eps, delta=args.delta, min_recurrence=args.min_recurrence)
    _emit_json(args, "montecarlo", rep.to_json_dict())
    return EXIT_OK


def _cmd_verdict(args):
    seq = _build_sequence(args)
    cfg = rightlimits.AnalysisConfig(
        width=args.window, eps=args.eps, delta=args.delta,
        horizon=args.horizon, p_max=args.pmax,
        min_recurrence=args.min_recurrence)
    v = rightlimits.verdict(seq, cfg)
    _emit_json(args, "verdict", v.to_json_dict())
    return EXIT_OK if v.kind != "Inconclusive" else EXIT_NO_FINDING


# -- parser -------------------------------------------------------------------


def _numeric_args(p, eps_default=None):
    p.add_argument("--window", type=int, default=5,
                   help="flank/window half-width (default 5)")
    p.add_argument("--eps", type=float, default=eps_default,
                   help="matching tolerance (default: 0 exact input, 0.05 float)")
    p.add_argument("--delta", type=float, default=0.5,
                   help="center separation target (default 0.5)")
    p.add_argument("--horizon", type=int, default=100_000,
                   help="largest index scanned (default 100000)")
    p.add_argument("--min-recurrence", type=int, default=3,
                   help="witnesses required for a certificate (default 3)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="nbscope",
        description="Analyze bounded power series for natural-boundary "
                    "behavior via recurring-window certificates.",
        epilog="NBSCOPE_THREADS bounds the worker count of parallel scans.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a sequence prefix as CSV")
    _add_source_args(p)
    p.add_argument("--count", type=int, default=64)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("rightlimits", help="cluster recurring windows")
    _add_source_args(p)
    _numeric_args(p)
    p.add_argument("--max-candidates", type=int, default=16)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_rightlimits)

    p = sub.add_parser("certificate", help="search for gap/pair certificates")
    _add_source_args(p)
    _numeric_args(p)
    p.add_argument("--kind", choices=["gap", "pair", "both"], default="both")
    p.add_argument("--flank", choices=["backward", "forward", "both"],
                   default="both")
    p.add_argument("--decay", type=float, nargs=2, metavar=("C", "D"),
                   help="exponential flank envelope C*exp(-D*k)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser("szego", help="finite-valued block-recurrence analysis")
    _add_source_args(p)
    p.add_argument("--pmax", type=int, default=8)
    p.add_argument("--horizon", type=int, default=100_000)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_szego)

    p = sub.add_parser("periodicity", help="detect eventual periodicity")
    _add_source_args(p)
    p.add_argument("--max-period", type=int, default=64)
    p.add_argument("--max-preperiod", type=int, default=64)
    p.add_argument("--horizon", type=int, default=100_000)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_periodicity)

    p = sub.add_parser("probe", help="arc integral scan of |f| near the circle")
    _add_source_args(p)
    p.add_argument("--arc", type=float, nargs=2, metavar=("ALPHA", "BETA"))
    p.add_argument("--full", action="store_true", help="full circle")
    p.add_argument("--radii", type=_parse_floats,
                   default=[0.9, 0.99, 0.999, 0.9999])
    p.add_argument("--quad-points", type=int, default=4096)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--json", help="also write a JSON envelope here")
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("reflectionless",
                       help="periodic reflectionless check / decay rule")
    p.add_argument("--pattern", type=_parse_values)
    p.add_argument("--arc", type=float, nargs=2, metavar=("ALPHA", "BETA"))
    p.add_argument("--full", action="store_true")
    p.add_argument("--window-csv", help="two-sided window CSV (n from -W to W)")
    p.add_argument("--decay-side", choices=["positive", "negative"],
                   default="positive")
    p.add_argument("--decay-c", type=float, default=1.0)
    p.add_argument("--decay-d", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=0.5)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_reflectionless)

    p = sub.add_parser("montecarlo", help="pair-certificate rate experiment")
    p.add_argument("--process", choices=["iid", "markov", "rotation"],
                   default="iid")
    p.add_argument("--values", type=_parse_values, default=[0, 1],
                   help="iid atoms / markov emission values")
    p.add_argument("--probs", type=_parse_floats, default=None)
    p.add_argument("--transition",
                   help="markov rows, e.g. '0.9,0.1;0.5,0.5'")
    p.add_argument("--q", type=float)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--boundary", default="fractional-part")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    _numeric_args(p, eps_default=0.0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_montecarlo)

    p = sub.add_parser("verdict", help="run the full evidence pipeline")
    _add_source_args(p)
    _numeric_args(p)
    p.add_argument("--pmax", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verdict)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except analytic.NumericCapError as e:
        print(f"numeric cap: {e}", file=sys.stderr)
        return EXIT_NUMERIC_CAP
    except (sequences.SequenceError, analytic.AnalyticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
