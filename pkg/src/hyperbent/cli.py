"""``hbf`` command line: construct, verify, count, spectrum, enumerate.

Exit status: 0 verdict true / success, 1 verdict false, 2 usage or
precondition error. Reports are JSON on stdout (or ``--report``).
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import truthtable
from ._guards import GuardError
from .dickson import dickson_construction
from .enumeration import count_formula, enumerate_g_functions, exhaustive_count_oracle
from .gf2n import make_field
from .msequence import corollary2_function, corollary2_search, spectrum as crosscorr_spectrum
from .psap import (SymmetryError, TraceForm, balanced_compose, check_psap_symmetry, lift_g_to_f,
                   make_ugroup, restriction_sum, t_construction, trace_form_eval)
from .vectorial import (DimensionError, VectorialFunction, check_condition2, check_condition3, component,
                        component_tables, restriction_multiset)
from .walsh import full_spectrum, hyperbent_mask, hyperbent_witness

CONSTRUCT_ORACLE_MAX_N = 12


class UsageError(Exception):
    pass


def _u0(ctx, exp: int) -> int:
    U = make_ugroup(ctx)
    if not 1 <= exp <= U.order - 1:
        raise UsageError(f"--u0-exp must lie in [1, {U.order - 1}]")
    return int(U.elements[exp])


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this construction")


def _build(args):
    ctx = make_field(args.n)
    params = {"kind": args.kind, "n": args.n}
    extra = {}
    if args.kind == "tconstruction":
        _need(args, "u0_exp")
        params["u0_exp"] = args.u0_exp
        F = t_construction(ctx, _u0(ctx, args.u0_exp))
    elif args.kind == "dickson":
        _need(args, "u0_exp", "r")
        params.update(u0_exp=args.u0_exp, r=args.r)
        F = dickson_construction(ctx, _u0(ctx, args.u0_exp), args.r)
    elif args.kind == "balanced":
        _need(args, "u0_exp", "h_file")
        h = truthtable.read(args.h_file)
        params.update(u0_exp=args.u0_exp, h_file=Path(args.h_file).name, k=h.k)
        F = balanced_compose(h.table, t_construction(ctx, _u0(ctx, args.u0_exp)), h.k)
    elif args.kind == "tracecoeffs":
        _need(args, "coeff_file")
        spec = json.loads(Path(args.coeff_file).read_text())
        rows = np.array(spec["rows"], dtype=np.int64)
        params.update(coeff_file=Path(args.coeff_file).name, k=len(rows))
        F = trace_form_eval(TraceForm(ctx, len(rows), rows))
    elif args.kind == "corollary2":
        _need(args, "u0_exp", "d")
        params.update(u0_exp=args.u0_exp, d=args.d)
        u0 = _u0(ctx, args.u0_exp)
        lam = corollary2_search(ctx, u0, args.d, verify=False)
        extra["lambda"] = lam.bits
        F = corollary2_function(ctx, u0, args.d, lam)
        F = VectorialFunction(ctx, 1, F.table)
    else:
        raise UsageError(f"unknown construction {args.kind!r}")
    return F, params, extra


def _verdicts(F, workers: int) -> dict:
    out: dict = {"symmetric": check_psap_symmetry(F)}
    U = make_ugroup(F.ctx)
    if out["symmetric"]:
        out["condition2"] = check_condition2(F, U)
        try:
            out["condition3"] = check_condition3(F, U)
        except DimensionError as e:
            out["condition3"] = str(e)
    if F.ctx.n <= CONSTRUCT_ORACLE_MAX_N:
        out["oracle"] = bool(np.all(hyperbent_mask(F.ctx, component_tables(F), workers=workers)))
    decided = [v for k, v in out.items() if k != "symmetric" and isinstance(v, bool)]
    out["hyperbent"] = bool(decided) and all(decided) and (out["symmetric"] or "oracle" in out)
    return out


def cmd_construct(args) -> tuple[dict, int]:
    F, params, extra = _build(args)
    text = truthtable.dumps(F)
    Path(args.out).write_text(text)
    verdicts = _verdicts(F, args.workers)
    report = {
        "command": "construct",
        "parameters": params,
        "k": F.k,
        "table_sha256": hashlib.sha256(text.encode()).hexdigest(),
        **extra,
        "verdicts": verdicts,
    }
    return report, 0 if verdicts["hyperbent"] else 1


def cmd_verify(args) -> tuple[dict, int]:
    F = truthtable.read(args.file)
    report: dict = {"command": "verify", "parameters": {"file": Path(args.file).name, "mode": args.mode},
                    "n": F.ctx.n, "k": F.k}
    if args.mode == "oracle":
        if F.ctx.n % 2:
            raise UsageError("n must be even")
        ok = True
        witness = None
        for v in range(1, 1 << F.k):
            w = hyperbent_witness(component(F, v))
            if w is not None:
                lam, t, value = w
                ok, witness = False, {"lambda": lam.bits, "t": t, "v": v, "value": value}
                break
        report["verdict"] = ok
        if witness:
            report["witness"] = witness
        return report, 0 if ok else 1
    if not check_psap_symmetry(F):
        report["verdict"] = "symmetry precondition failed"
        return report, 2
    U = make_ugroup(F.ctx)
    if args.mode == "psap":
        sums = {str(v): restriction_sum(component(F, v), U) for v in range(1, 1 << F.k)}
        ok = all(s == 1 for s in sums.values())
        report["restriction_sums"] = sums
    elif args.mode == "condition2":
        ok = check_condition2(F, U)
    else:
        hist = restriction_multiset(F, U).coeffs
        report["multiset"] = {str(b): int(c) for b, c in enumerate(hist)}
        try:
            ok = check_condition3(F, U)
        except DimensionError as e:
            report["verdict"] = str(e)
            return report, 2
    report["verdict"] = ok
    return report, 0 if ok else 1


def _count_rows(args):
    pairs = [(m, k) for m in args.m for k in args.k]
    if len(pairs) == 1 and pairs[0][1] > pairs[0][0]:
        raise DimensionError(f"k exceeds m (k={pairs[0][1]}, m={pairs[0][0]})")
    rows = []
    for m, k in pairs:
        if k > m:
            continue
        row = {"m": m, "k": k}
        if args.mode in ("formula", "both"):
            row["formula"] = count_formula(m, k).formula_count
        if args.mode in ("exhaustive", "both"):
            row["exhaustive"] = exhaustive_count_oracle(m, k).formula_count
        if args.mode == "both":
            row["match"] = row["formula"] == row["exhaustive"]
        rows.append(row)
    return rows


def cmd_count(args) -> tuple[dict, int]:
    rows = _count_rows(args)
    report = {"command": "count", "parameters": {"m": args.m, "k": args.k, "mode": args.mode}, "counts": rows}
    ok = all(r.get("match", True) for r in rows)
    return report, 0 if ok else 1


def count_csv(rows) -> str:
    buf = io.StringIO()
    fields = [f for f in ("m", "k", "formula", "exhaustive", "match") if any(f in r for r in rows)]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_spectrum(args) -> tuple[dict, int]:
    if args.kind == "walsh":
        if args.file is None:
            raise UsageError("--file is required for a Walsh spectrum")
        F = truthtable.read(args.file)
        f = component(F, args.v)
        spec = full_spectrum(f, args.t)
        return {
            "command": "spectrum",
            "parameters": {"kind": "walsh", "file": Path(args.file).name, "t": args.t, "v": args.v},
            "histogram": {str(k): v for k, v in spec.histogram().items()},
        }, 0
    if args.m is None or args.d is None:
        raise UsageError("--m and --d are required for a crosscorrelation spectrum")
    spec = crosscorr_spectrum(make_field(args.m), args.d)
    return {
        "command": "spectrum",
        "parameters": {"kind": "crosscorr", "m": args.m, "d": args.d},
        "histogram": {str(k): v for k, v in spec.values.items()},
        "distinct_values": spec.distinct,
        "three_valued": spec.is_three_valued,
        "contains_minus_one": spec.contains_minus_one,
    }, 0


def cmd_enumerate(args) -> tuple[dict, int]:
    count = 0
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for g in enumerate_g_functions(args.m, args.k, cap=args.cap):
        if args.limit is not None and count >= args.limit:
            break
        text = truthtable.dumps(lift_g_to_f(g))
        if out_dir:
            (out_dir / f"g{count:06d}.hbf").write_text(text)
        else:
            sys.stdout.write(text + "\n")
        count += 1
    return {"command": "enumerate", "parameters": {"m": args.m, "k": args.k}, "written": count}, 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hbf", description=__doc__.splitlines()[0])
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct")
    c.add_argument("kind", choices=["tconstruction", "dickson", "balanced", "tracecoeffs", "corollary2"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--u0-exp", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--h-file")
    c.add_argument("--coeff-file")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify")
    v.add_argument("file")
    v.add_argument("--mode", choices=["oracle", "psap", "condition2", "condition3"], default="oracle")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("count")
    n.add_argument("--m", type=int, nargs="+", required=True)
    n.add_argument("--k", type=int, nargs="+", required=True)
    n.add_argument("--mode", choices=["formula", "exhaustive", "both"], default="formula")
    n.add_argument("--csv", action="store_true", help="print the count table as CSV")
    n.set_defaults(func=cmd_count)

    s = sub.add_parser("spectrum")
    s.add_argument("kind", choices=["walsh", "crosscorr"])
    s.add_argument("--file")
    s.add_argument("--t", type=int, default=1)
    s.add_argument("--v", type=int, default=1)
    s.add_argument("--m", type=int)
    s.add_argument("--d", type=int)
    s.set_defaults(func=cmd_spectrum)

    e = sub.add_parser("enumerate")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--limit", type=int)
    e.add_argument("--cap", type=int, default=1 << 20)
    e.add_argument("--out-dir")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except (UsageError, ValueError, GuardError, KeyError, OSError) as e:
        msg = str(e) if not isinstance(e, SymmetryError) else "symmetry precondition failed"
        print(json.dumps({"command": args.command, "error": msg}), file=sys.stderr)
        return 2
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 6)
    if args.command == "count" and args.csv:
        text = count_csv(report["counts"])
    else:
        text = json.dumps(report, indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(text)
    elif args.command != "enumerate" or args.out_dir:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
