"""Command-line front end.

Subcommands
-----------
check-pair      two-endpoint interpolation-pair condition for the joint operator
check           single condition by name: zs-lower|zs-upper|cianchi-lower|
                cianchi-upper|stepanov-pair
eval            evaluate an averaging operator on a step function
rearrange       decreasing rearrangement of a step-function CSV
verify-modular  direct modular-inequality verification on a seeded family
reproduce-sec6  the worked power-log example with fitted rates
sandwich-test   two-sided distribution estimates on a random panel

Exit codes: 0 = holds/pass, 2 = mathematical negative, 1 = operational error.
Reports are JSON (schema "orlicz-kit/1", floats at 17 significant digits,
infinities as {"divergent": true, ...}, keys sorted, no timestamps) so that
identical configuration and seed give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from . import calderon as cal
from . import conditions as cond
from . import verify
from .stepfn import StepFunction
from .young import load_young

SCHEMA = "orlicz-kit/1"
_MARK = "@@F17@@"


# ---------------------------------------------------------------------------
# report serialization


def _convert(obj):
    """Floats become 17-significant-digit markers; infinities become
    {"divergent": true}; numpy scalars become plain Python."""
    if isinstance(obj, dict):
        return {str(k): _convert(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_convert(v) for v in obj]
    if isinstance(obj, (np.floating,)):
        obj = float(obj)
    if isinstance(obj, (np.integer,)):
        obj = int(obj)
    if isinstance(obj, (np.bool_,)):
        obj = bool(obj)
    if isinstance(obj, bool) or isinstance(obj, int) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return {"divergent": True}
        if math.isnan(obj):
            return None
        return f"{_MARK}{obj:.17g}{_MARK}"
    return str(obj)


def dumps_report(payload):
    """Deterministic JSON text with floats at 17 significant digits."""
    body = {"schema": SCHEMA}
    body.update(payload)
    text = json.dumps(_convert(body), sort_keys=True, indent=2)
    return text.replace(f'"{_MARK}', "").replace(f'{_MARK}"', "") + "\n"


def _emit(payload, args, curves=()):
    """Print the report; write JSON and CSV curves to --out when given."""
    text = dumps_report(payload)
    sys.stdout.write(text)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "report.json"), "w") as fh:
            fh.write(text)
        for name, pairs in curves:
            with open(os.path.join(args.out, f"{name}.csv"), "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(["t", "F(t)"])
                for t, v in pairs:
                    w.writerow([f"{t:.17g}", f"{v:.17g}"])


def _curves_of(report, prefix):
    """(name, curve) pairs for a ConditionReport and its parts."""
    out = []
    if report.curve:
        out.append((prefix, report.curve))
    for i, part in enumerate(report.parts):
        if isinstance(part, cond.ConditionReport) and part.curve:
            out.append((f"{prefix}-{part.name}-{i}", part.curve))
    return out


# ---------------------------------------------------------------------------
# inputs


def _read_step(path):
    """Step function from a CSV with columns (break, value); a header row
    is allowed.  Breaks must be increasing; the function must be given as
    piece values on (prev, break]."""
    breaks, values = [], []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip():
                continue
            try:
                b, v = float(row[0]), float(row[1])
            except ValueError:
                continue  # header
            breaks.append(b)
            values.append(v)
    if not breaks:
        return StepFunction([], [])
    return StepFunction(breaks, values)


def _load_phi(path):
    if not path:
        raise SystemExit("error: --phi1 and --phi2 spec files are required")
    try:
        return load_young(path)
    except (OSError, ValueError, KeyError) as exc:
        raise SystemExit(f"error: cannot load Young spec {path}: {exc}")


def _operator(args):
    tag = args.op
    if tag == "head":
        return cal.HardyHead(args.p0, args.r0)
    if tag == "tail":
        return cal.HardyTail(args.p1, args.r1)
    if tag == "average":
        return cal.Average()
    if tag == "calderon":
        return cal.CalderonSum(args.p1, args.r1)
    if tag == "joint":
        return cal.JointHardy(args.p0, args.r0, args.p1, args.r1)
    raise SystemExit(f"error: unknown operator tag {tag!r}")


def _check_indices(args):
    if not (1.0 <= args.p0 < args.p1):
        raise SystemExit("error: indices must satisfy 1 <= p0 < p1")
    if args.r0 < 1.0 or args.r1 < 1.0:
        raise SystemExit("error: r indices must be >= 1")


# ---------------------------------------------------------------------------
# subcommands


def cmd_check_pair(args):
    _check_indices(args)
    y1 = _load_phi(args.phi1)
    y2 = _load_phi(args.phi2)
    rep = cond.check_theorem_joint(y1, y2, args.p0, args.r0, args.p1, args.r1)
    _emit({"command": "check-pair", "report": rep.to_dict()}, args,
          curves=_curves_of(rep, "check-pair"))
    return 0 if rep.holds else 2


def cmd_check(args):
    y1 = _load_phi(args.phi1)
    y2 = _load_phi(args.phi2)
    name = args.name
    if name == "zs-lower":
        rep = cond.check_zs_lower(y1, y2, args.p0)
    elif name == "zs-upper":
        rep = cond.check_zs_upper(y1, y2, args.p1)
    elif name == "cianchi-lower":
        rep = cond.check_cianchi_lower(y1, y2, args.p0, args.r0)
    elif name == "cianchi-upper":
        rep = cond.check_cianchi_upper(y1, y2, args.p1, args.r1)
    elif name == "stepanov-pair":
        rep = cond.check_stepanov_pair(y1, y2, args.p0, args.r0)
    else:
        raise SystemExit(f"error: unknown condition {name!r}")
    _emit({"command": "check", "condition": name, "report": rep.to_dict()}, args,
          curves=_curves_of(rep, name))
    return 0 if rep.holds else 2


def cmd_eval(args):
    f = _read_step(args.input)
    if len(f.values) and not f.is_decreasing():
        raise SystemExit("error: input step function must be nonincreasing")
    op = _operator(args)
    if args.t:
        ts = [float(x) for x in args.t.split(",")]
    else:
        n = max(int(math.log10(args.tmax / args.tmin) * args.grid_per_decade) + 1, 2)
        ts = np.geomspace(args.tmin, args.tmax, n).tolist()
    rows = [(t, op(f, t) if len(f.values) else 0.0) for t in ts]
    if args.format == "json":
        _emit({"command": "eval", "operator": args.op,
               "values": [{"t": t, "value": v} for t, v in rows]}, args,
              curves=[("eval", rows)])
    else:
        w = csv.writer(sys.stdout)
        w.writerow(["t", "F(t)"])
        for t, v in rows:
            w.writerow([f"{t:.17g}", f"{v:.17g}"])
        if args.out:
            _emit({"command": "eval", "operator": args.op,
                   "values": [{"t": t, "value": v} for t, v in rows]}, args,
                  curves=[("eval", rows)])
    return 0


def cmd_rearrange(args):
    f = _read_step(args.input)
    fstar = f.rearrangement()
    rows = list(zip(fstar.breaks.tolist(), fstar.values.tolist()))
    if args.format == "json":
        _emit({"command": "rearrange",
               "pieces": [{"upto": b, "value": v} for b, v in rows]}, args)
    else:
        w = csv.writer(sys.stdout)
        w.writerow(["break", "value"])
        for b, v in rows:
            w.writerow([f"{b:.17g}", f"{v:.17g}"])
    return 0


def cmd_verify_modular(args):
    _check_indices(args)
    y1 = _load_phi(args.phi1)
    y2 = _load_phi(args.phi2)
    op = cal.JointHardy(args.p0, args.r0, args.p1, args.r1)
    fam = verify.TestFamily.build(seed=args.seed)
    rep = verify.verify_modular(y1, y2, op, fam, ceiling=args.ceiling,
                                probe_exponent=args.p0)
    _emit({"command": "verify-modular", "seed": args.seed, "report": rep.to_dict()}, args)
    return 0 if rep.holds else 2


def cmd_reproduce(args):
    out = verify.reproduce_worked_example(r_values=(args.r1, args.r2), quick=args.quick)
    curves = []
    for case in out["cases"]:
        pairs = sorted((float(k), v) for k, v in case["head_values"].items())
        curves.append((f"head-r{case['r']:g}", pairs))
        if "tail_truncations" in case:
            pairs = sorted((float(k), v) for k, v in case["tail_truncations"].items())
            curves.append((f"tail-r{case['r']:g}", pairs))
    _emit({"command": "reproduce-sec6", "report": out}, args, curves=curves)
    return 0 if out["passes"] else 2


def cmd_sandwich_test(args):
    rng = np.random.default_rng(args.seed)
    panel = [StepFunction.indicator(1.0, 1.0)]
    panel += [verify.random_decreasing(rng) for _ in range(20)]
    tgrid = np.geomspace(args.tmin, args.tmax, 25)
    slack = args.tol
    violations = []
    checked = 0
    for p in (2.0, 4.0):
        for r in (1.0, 2.0, 3.0):
            for i, g in enumerate(panel):
                for t in tgrid:
                    lo, mid, hi = cal.sandwich_hardy_head(p, r, g, t)
                    checked += 1
                    if not (lo <= mid * (1 + slack) and mid <= hi * (1 + slack)):
                        violations.append({"kind": "head", "p": p, "r": r,
                                           "member": i, "t": float(t),
                                           "lower": lo, "mid": mid, "upper": hi})
    for q in (2.0, 3.0):
        for r in (1.0, 2.0, 3.0):
            for i, g in enumerate(panel):
                for t in tgrid:
                    lo, mid, hi = cal.sandwich_calderon(q, r, g, t)
                    checked += 1
                    if not (lo <= mid * (1 + slack) and mid <= hi * (1 + slack)):
                        violations.append({"kind": "calderon", "q": q, "r": r,
                                           "member": i, "t": float(t),
                                           "lower": lo, "mid": mid, "upper": hi})
    _emit({"command": "sandwich-test", "seed": args.seed, "checked": checked,
           "violations": violations}, args)
    return 0 if not violations else 2


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(sp, indices=True):
    if indices:
        sp.add_argument("--phi1", help="Young-function spec (JSON) for the range side")
        sp.add_argument("--phi2", help="Young-function spec (JSON) for the domain side")
        sp.add_argument("--p0", type=float, default=2.0)
        sp.add_argument("--r0", type=float, default=1.0)
        sp.add_argument("--p1", type=float, default=4.0)
        sp.add_argument("--r1", type=float, default=1.0)
    sp.add_argument("--grid-per-decade", type=int, default=33)
    sp.add_argument("--tmin", type=float, default=1e-3)
    sp.add_argument("--tmax", type=float, default=1e3)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="output directory for JSON report and CSV curves")
    sp.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser():
    ap = argparse.ArgumentParser(prog="orliczkit", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check-pair", help="two-endpoint interpolation-pair condition")
    _add_common(sp)
    sp.set_defaults(func=cmd_check_pair)

    sp = sub.add_parser("check", help="single integral condition by name")
    sp.add_argument("name", choices=("zs-lower", "zs-upper", "cianchi-lower",
                                     "cianchi-upper", "stepanov-pair"))
    _add_common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("eval", help="evaluate an operator on a step function")
    sp.add_argument("--op", required=True,
                    choices=("head", "tail", "average", "calderon", "joint"))
    sp.add_argument("--input", required=True, help="step-function CSV (break, value)")
    sp.add_argument("--t", help="comma-separated evaluation points")
    _add_common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("rearrange", help="decreasing rearrangement of a step CSV")
    sp.add_argument("--input", required=True)
    _add_common(sp)
    sp.set_defaults(func=cmd_rearrange)

    sp = sub.add_parser("verify-modular", help="modular inequality on a seeded family")
    _add_common(sp)
    sp.add_argument("--ceiling", type=float, default=1e6)
    sp.set_defaults(func=cmd_verify_modular)

    sp = sub.add_parser("reproduce-sec6", help="worked power-log example")
    _add_common(sp, indices=False)
    sp.add_argument("--r1", type=float, default=1.0)
    sp.add_argument("--r2", type=float, default=2.0)
    sp.add_argument("--quick", action="store_true",
                    help="three decades only, wider tolerances")
    sp.set_defaults(func=cmd_reproduce)

    sp = sub.add_parser("sandwich-test", help="distribution sandwich suite")
    _add_common(sp)
    sp.set_defaults(func=cmd_sandwich_test)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for mathematical
        # negatives here, so remap (but keep 0 for --help)
        return 0 if not exc.code else 1
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 1
        return 1 if exc.code else 0
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
