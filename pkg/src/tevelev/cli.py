"""Command-line surface.

Commands:
  compute  one value, optionally from all engines with an agreement check
  table    a (g, ell) grid of values for a fixed profile list
  verify   cross-engine verification over an enumerated problem grid
  oracle0  genus-0 random-configuration certification trials

Exit status: 0 success, 2 parse/usage error, 3 engine disagreement,
4 oracle failure.  Big values are emitted as decimal strings in JSON so
consumers never round them.
"""

import argparse
import csv
import io
import json
import sys
import time

from .params import TevelevProblem, derive_params
from .closed_form import tev_closed
from .recursion import tev_recursive
from .schubert_engine import tev_schubert
from .genus0 import run_trials

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISAGREE = 3
EXIT_ORACLE = 4

ENGINES = {
    "closed": tev_closed,
    "recursion": tev_recursive,
    "schubert": tev_schubert,
}


class ProfileParseError(ValueError):
    pass


def parse_profiles(text):
    """Parse "2,1;3" into ((2, 1), (3,)).  Profiles are separated by ';',
    entries by ','; whitespace is ignored; an empty string means no
    profiles.  Errors report the position of the first bad token."""
    text = "".join(text.split())
    if not text:
        return ()
    profiles = []
    pos = 0
    for chunk in text.split(";"):
        entries = []
        for tok in chunk.split(","):
            if not tok.isdigit():
                raise ProfileParseError(
                    "malformed entry %r at position %d" % (tok, pos))
            e = int(tok)
            if e < 1:
                raise ProfileParseError(
                    "entry %d at position %d is not positive" % (e, pos))
            entries.append(e)
            pos += len(tok) + 1
        if not entries:
            raise ProfileParseError("empty profile at position %d" % pos)
        profiles.append(tuple(entries))
    return tuple(profiles)


def format_profiles(profiles):
    return ";".join(",".join(str(e) for e in p) for p in profiles)


def compute_record(g, ell, profiles, engine="all"):
    """Run the requested engine(s) and assemble one result record."""
    problem = TevelevProblem(g, ell, profiles)
    params = derive_params(problem)
    names = list(ENGINES) if engine == "all" else [engine]
    engines = {}
    timings = {}
    for name in names:
        t0 = time.perf_counter()
        engines[name] = ENGINES[name](problem).value
        timings[name] = time.perf_counter() - t0
    values = set(engines.values())
    agree = len(values) == 1
    return {
        "g": g,
        "ell": ell,
        "profiles": format_profiles(profiles),
        "d": params.d,
        "n": params.n,
        "b": params.b,
        "dim": params.dim,
        "valid": params.valid,
        "violated": list(params.violated),
        "value": str(engines[names[0]]),
        "engines": {name: str(v) for name, v in engines.items()},
        "agree": agree,
        "timings": timings,
    }


_FIELDS = ["g", "ell", "profiles", "d", "n", "b", "valid", "value", "agree"]


def _emit(records, fmt, out):
    if fmt == "json":
        payload = records if isinstance(records, dict) else list(records)
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    rows = [records] if isinstance(records, dict) else list(records)
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=_FIELDS, extrasaction="ignore")
        writer.writeheader()
        for rec in rows:
            writer.writerow(rec)
        return
    # plain table
    widths = {f: max(len(f), *(len(str(r.get(f, ""))) for r in rows))
              for f in _FIELDS}
    out.write("  ".join(f.ljust(widths[f]) for f in _FIELDS) + "\n")
    for rec in rows:
        out.write("  ".join(str(rec.get(f, "")).ljust(widths[f])
                            for f in _FIELDS) + "\n")


def size_multisets(k_max, size_max):
    """Non-increasing size tuples with at most k_max entries in
    1..size_max, the empty tuple included."""
    out = [()]
    def extend(prefix, lo):
        if len(prefix) == k_max:
            return
        for s in range(lo, size_max + 1):
            out.append(prefix + (s,))
            extend(prefix + (s,), s)
    extend((), 1)
    return [tuple(sorted(t, reverse=True)) for t in out]


def verify_grid(g_max, ell_min, ell_max, k_max, size_max):
    """Enumerate valid problems in the box and compare all engines.
    Returns (checked, mismatches)."""
    checked = 0
    mismatches = []
    for sizes in size_multisets(k_max, size_max):
        profiles = tuple((s,) for s in sizes)
        for g in range(g_max + 1):
            for ell in range(ell_min, ell_max + 1):
                problem = TevelevProblem(g, ell, profiles)
                if not derive_params(problem).valid:
                    continue
                checked += 1
                vals = {name: fn(problem).value
                        for name, fn in ENGINES.items()}
                if len(set(vals.values())) != 1:
                    mismatches.append((g, ell, sizes, vals))
    return checked, mismatches


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="tevelev",
        description="Exact counts of covers of the line with prescribed "
                    "incidence and ramification, via three independent "
                    "engines.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute a single value")
    p_compute.add_argument("--g", type=int, required=True)
    p_compute.add_argument("--ell", type=int, required=True)
    p_compute.add_argument("--profiles", default="")
    p_compute.add_argument("--engine", default="all",
                           choices=["closed", "recursion", "schubert", "all"])
    p_compute.add_argument("--format", default="json",
                           choices=["table", "json", "csv"])

    p_table = sub.add_parser("table", help="grid of values over g and ell")
    p_table.add_argument("--g-max", type=int, required=True)
    p_table.add_argument("--ell-min", type=int, required=True)
    p_table.add_argument("--ell-max", type=int, required=True)
    p_table.add_argument("--profiles", default="")
    p_table.add_argument("--engine", default="closed",
                         choices=["closed", "recursion", "schubert", "all"])
    p_table.add_argument("--format", default="table",
                         choices=["table", "json", "csv"])

    p_verify = sub.add_parser("verify", help="cross-engine verification grid")
    p_verify.add_argument("--g-max", type=int, required=True)
    p_verify.add_argument("--ell-min", type=int, required=True)
    p_verify.add_argument("--ell-max", type=int, required=True)
    p_verify.add_argument("--k-max", type=int, required=True)
    p_verify.add_argument("--size-max", type=int, required=True)
    p_verify.add_argument("--format", default="json",
                          choices=["table", "json", "csv"])

    p_oracle = sub.add_parser("oracle0", help="genus-0 certification trials")
    p_oracle.add_argument("--d", type=int, required=True)
    p_oracle.add_argument("--sizes", default="")
    p_oracle.add_argument("--trials", type=int, default=50)
    p_oracle.add_argument("--seed", type=int, default=0)
    p_oracle.add_argument("--box", type=int, default=10 ** 6)

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0

    out = sys.stdout
    try:
        if args.command == "compute":
            profiles = parse_profiles(args.profiles)
            rec = compute_record(args.g, args.ell, profiles, args.engine)
            _emit(rec, args.format, out)
            return EXIT_OK if rec["agree"] else EXIT_DISAGREE

        if args.command == "table":
            profiles = parse_profiles(args.profiles)
            records = [compute_record(g, ell, profiles, args.engine)
                       for g in range(args.g_max + 1)
                       for ell in range(args.ell_min, args.ell_max + 1)]
            _emit(records, args.format, out)
            if not all(r["agree"] for r in records):
                return EXIT_DISAGREE
            return EXIT_OK

        if args.command == "verify":
            t0 = time.perf_counter()
            checked, mismatches = verify_grid(
                args.g_max, args.ell_min, args.ell_max,
                args.k_max, args.size_max)
            report = {
                "checked": checked,
                "mismatches": len(mismatches),
                "wall_time_s": time.perf_counter() - t0,
            }
            if args.format == "json":
                json.dump(report, out, indent=2)
                out.write("\n")
            else:
                for key, val in report.items():
                    out.write("%s\t%s\n" % (key, val))
            return EXIT_OK if not mismatches else EXIT_DISAGREE

        if args.command == "oracle0":
            sizes = tuple(sum(p) for p in parse_profiles(args.sizes))
            summary = run_trials(args.d, sizes, args.trials, args.seed,
                                 box=args.box)
            json.dump({
                "d": summary.d,
                "sizes": list(summary.sizes),
                "trials": summary.trials,
                "seed": summary.seed,
                "full": summary.full,
                "kernel_dim_one": summary.kernel_dim_one,
            }, out, indent=2)
            out.write("\n")
            return EXIT_OK if summary.full == summary.trials else EXIT_ORACLE
    except (ProfileParseError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
