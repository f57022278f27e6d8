"""Command line front end.

Elements and configurations travel as JSON objects on stdin and stdout in
the same formats the library serializers use.  Verification verbs exit 0
when every check passes, print the first counterexample as JSON and exit 1
otherwise; malformed invocations exit 2 through the argument parser.

With --trace, the bijection verbs additionally print one JSON line per
elementary move before the final result line, so a run can be diffed
against a worked example state by state.
"""

import argparse
import csv
import json
import sys

from . import bijection, crystals, energy, kr, rigged, roots, xm


def _parse_tensor(text):
    spec = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"bad tensor factor {chunk!r}")
        try:
            r, s = int(parts[0]), int(parts[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad tensor factor {chunk!r}")
        if r < 1 or s < 1:
            raise argparse.ArgumentTypeError(f"bad tensor factor {chunk!r}")
        spec.append((r, s))
    return tuple(spec)


def _parse_coeffs(text):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}")


def _read_json():
    data = sys.stdin.read()
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise SystemExit(f"error: stdin is not valid JSON: {exc}")


def _emit(obj, as_json, text):
    print(json.dumps(obj) if as_json else text)


def _weight_of(args):
    if args.weight is None:
        return None
    return xm.weight_from_label(args.rank, args.weight)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise SystemExit(f"error: --{name} is required for this verb")


# ---------------------------------------------------------------------------
# plain verbs

def _cmd_enumerate_paths(args):
    _require(args, "rank", "tensor")
    lam = _weight_of(args)
    for t in xm.paths(args.rank, args.tensor, lam):
        _emit(crystals.element_to_json(t), args.json, crystals.element_str(t))
    return 0


def _cmd_enumerate_rc(args):
    _require(args, "rank", "tensor")
    L = rigged.multiplicity_array(args.rank, args.tensor)
    lam = _weight_of(args)
    lams = [lam] if lam is not None else xm.rc_weights(args.rank, L)
    for w in lams:
        for rc in rigged.rigged_configurations(args.rank, L, w):
            _emit(rigged.rc_to_json(rc), args.json, rigged.rc_str(rc))
    return 0


def _trace_record(step, op, state, payload):
    record = {"step": step, "op": op, "state": rigged.rc_to_json(state)}
    if op in ("delta", "delta_inv"):
        record["letter"] = payload
    elif op in ("delta_spin", "delta_spin_inv"):
        record["signs"] = list(payload)
    return record


def _cmd_phi(args):
    t = crystals.element_from_json(_read_json())
    if args.trace:
        state = None
        for step, (op, state, payload) in enumerate(bijection.insertion_trace(t)):
            print(json.dumps(_trace_record(step, op, state, payload)))
        rc = state
    else:
        rc = bijection.path_to_rc(t)
    _emit(rigged.rc_to_json(rc), True, None)
    return 0


def _cmd_phi_inv(args):
    _require(args, "tensor")
    rc = rigged.rc_from_json(_read_json())
    if args.rank is not None and args.rank != rc.n:
        raise SystemExit(f"error: --rank {args.rank} but the configuration has rank {rc.n}")
    if args.trace:
        for step, (op, state, payload) in enumerate(
            bijection.removal_trace(rc.n, args.tensor, rc)
        ):
            print(json.dumps(_trace_record(step, op, state, payload)))
    t = bijection.rc_to_path(rc.n, args.tensor, rc)
    _emit(crystals.element_to_json(t), True, None)
    return 0


def _cmd_apply_op(args):
    data = _read_json()
    index = args.index
    if "levels" in data:
        rc = rigged.rc_from_json(data)
        if index == 0:
            raise SystemExit("error: configurations carry classical operators only")
        out = (rigged.rc_e if args.op == "e" else rigged.rc_f)(rc, index)
        print(json.dumps(rigged.rc_to_json(out) if out is not None else None))
    else:
        t = crystals.element_from_json(data)
        out = (kr.apply_e if args.op == "e" else kr.apply_f)(t, index)
        print(json.dumps(crystals.element_to_json(out) if out is not None else None))
    return 0


def _cmd_rmatrix(args):
    t = crystals.element_from_json(_read_json())
    order = _parse_coeffs(args.order)
    out = energy.reorder(t, order)
    _emit(crystals.element_to_json(out), True, None)
    return 0


def _cmd_energy(args):
    t = crystals.element_from_json(_read_json())
    d = energy.intrinsic_energy(t)
    _emit({"energy": d}, args.json, str(d))
    return 0


def _cmd_cocharge(args):
    rc = rigged.rc_from_json(_read_json())
    c = rigged.cocharge(rc)
    _emit({"cocharge": c}, args.json, str(c))
    return 0


# ---------------------------------------------------------------------------
# verification verbs

def _counterexample(kind, **fields):
    print(json.dumps({"counterexample": kind, **fields}))


def _cmd_verify_xm(args):
    _require(args, "rank", "tensor")
    n, spec = args.rank, args.tensor
    rows = []
    status = 0
    for lam, X, M in xm.compare(n, spec):
        label = xm.weight_label(n, lam)
        if X != M:
            _counterexample(
                "xm", weight=list(label),
                x={str(e): c for e, c in sorted(X.items())},
                m={str(e): c for e, c in sorted(M.items())},
            )
            status = 1
            break
        if not args.json:
            print(f"weight {label}: X = M = {xm.poly_str(X)}")
        for e in sorted(set(X) | set(M)):
            rows.append((label, e, X.get(e, 0), M.get(e, 0)))
    if status == 0 and args.json:
        print(json.dumps({"verified": "xm", "rank": n, "tensor": list(spec),
                          "weights": len({r[0] for r in rows})}))
    if args.report_dir:
        _write_report(args.report_dir, n, spec, rows)
    return status


def _write_report(report_dir, n, spec, rows):
    import os

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(report_dir, exist_ok=True)
    with open(os.path.join(report_dir, "report.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["weight", "exponent", "x_coefficient", "m_coefficient"])
        for label, e, xc, mc in rows:
            writer.writerow(["+".join(map(str, label)), e, xc, mc])
    by_label = {}
    for label, e, xc, mc in rows:
        by_label.setdefault(label, []).append((e, xc, mc))
    for label, triples in by_label.items():
        exps = [t[0] for t in triples]
        fig, ax = plt.subplots(figsize=(6, 3.2))
        ax.bar([e - 0.18 for e in exps], [t[1] for t in triples], width=0.36, label="X")
        ax.bar([e + 0.18 for e in exps], [t[2] for t in triples], width=0.36, label="M")
        ax.set_xlabel("power of q")
        ax.set_ylabel("coefficient")
        ax.set_xticks(exps)
        ax.set_title(f"rank {n}, weight {label}")
        ax.legend()
        fig.tight_layout()
        slug = "-".join(map(str, label))
        fig.savefig(os.path.join(report_dir, f"xm_{slug}.png"))
        plt.close(fig)


def _cmd_verify_rinv(args):
    _require(args, "rank", "tensor")
    n, spec = args.rank, args.tensor
    table = bijection.phi_map(n, spec)
    for i in range(1, len(spec)):
        swapped = list(spec)
        j = len(spec) - i - 1
        swapped[j], swapped[j + 1] = swapped[j + 1], swapped[j]
        other = bijection.phi_map(n, tuple(swapped))
        for t, rc in table.items():
            image = energy.apply_r(t, i)
            if other[image] != rc:
                _counterexample(
                    "rinv", position=i,
                    element=crystals.element_to_json(t),
                    image=crystals.element_to_json(image),
                )
                return 1
        if not args.json:
            print(f"swap at position {i}: {len(table)} elements invariant")
    if args.json:
        print(json.dumps({"verified": "rinv", "rank": n, "tensor": list(spec),
                          "elements": len(table)}))
    return 0


def _cmd_verify_stats(args):
    _require(args, "rank", "tensor")
    n, spec = args.rank, args.tensor
    checked = 0
    for t in kr.tensor_highest(n, spec):
        d = energy.intrinsic_energy(t)
        c = rigged.cocharge(rigged.theta(bijection.path_to_rc(t)))
        if d != c:
            _counterexample(
                "stats", element=crystals.element_to_json(t),
                energy=d, cocharge=c,
            )
            return 1
        checked += 1
    if args.json:
        print(json.dumps({"verified": "stats", "rank": n, "tensor": list(spec),
                          "paths": checked}))
    else:
        print(f"energy matches cocharge on {checked} paths")
    return 0


# ---------------------------------------------------------------------------
# wiring

def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=None,
                        help="rank n of the diagram (at least 4)")
    common.add_argument("--tensor", type=_parse_tensor, default=None,
                        help='factors as "r,s;r,s;..." with the leftmost factor first')
    common.add_argument("--weight", type=_parse_coeffs, default=None,
                        help="fundamental weight coefficients c1,...,cn")
    common.add_argument("--json", action="store_true",
                        help="machine readable output")
    common.add_argument("--trace", action="store_true",
                        help="print every intermediate configuration as a JSON line")

    parser = argparse.ArgumentParser(
        prog="krrc",
        description="Type D Kirillov-Reshetikhin crystals, rigged configurations, "
                    "and the statistics preserving bijection between them.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("enumerate-paths", parents=[common],
                   help="list the classically highest elements"
                   ).set_defaults(run=_cmd_enumerate_paths)
    sub.add_parser("enumerate-rc", parents=[common],
                   help="list the restricted rigged configurations"
                   ).set_defaults(run=_cmd_enumerate_rc)
    sub.add_parser("phi", parents=[common],
                   help="element JSON on stdin to configuration JSON"
                   ).set_defaults(run=_cmd_phi)
    sub.add_parser("phi-inv", parents=[common],
                   help="configuration JSON on stdin to element JSON (needs --tensor)"
                   ).set_defaults(run=_cmd_phi_inv)
    p = sub.add_parser("apply-op", parents=[common],
                       help="apply a crystal operator to the JSON object on stdin")
    p.add_argument("--op", choices=("e", "f"), required=True)
    p.add_argument("--index", type=int, required=True,
                   help="node label, 0 for the affine operator on elements")
    p.set_defaults(run=_cmd_apply_op)
    p = sub.add_parser("rmatrix", parents=[common],
                       help="reorder the factors of the element on stdin")
    p.add_argument("--order", required=True,
                   help='target order as source positions, e.g. "3,2,1"')
    p.set_defaults(run=_cmd_rmatrix)
    sub.add_parser("energy", parents=[common],
                   help="intrinsic energy of the element on stdin"
                   ).set_defaults(run=_cmd_energy)
    sub.add_parser("cocharge", parents=[common],
                   help="cocharge of the configuration on stdin"
                   ).set_defaults(run=_cmd_cocharge)
    p = sub.add_parser("verify-xm", parents=[common],
                       help="compare the path and configuration generating functions")
    p.add_argument("--report-dir", default=None,
                   help="write report.csv and per weight coefficient figures here")
    p.set_defaults(run=_cmd_verify_xm)
    sub.add_parser("verify-rinv", parents=[common],
                   help="check that factor swaps preserve the configuration"
                   ).set_defaults(run=_cmd_verify_rinv)
    sub.add_parser("verify-stats", parents=[common],
                   help="check energy against cocharge across the bijection"
                   ).set_defaults(run=_cmd_verify_stats)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
