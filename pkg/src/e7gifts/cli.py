"""Command-line front end: build the triple systems and gifts, run the
check suites, classify, run the descent, and print the real-closed table.

Every invocation emits one JSON report (stdout, or --out) and a short
human summary on stderr.  Exit codes: 0 when no check failed, 1 when
some check failed, 2 on usage errors.  Identical command lines with the
same seed give byte-identical JSON apart from the timing field.
"""

import argparse
import json
import sys

from gmpy2 import mpq

from . import brown, descent, fts, gift
from . import report as rep
from .report import Report, RunConfig
from .scalars import parse_rat

KINDS = ("ms", "albert-split", "albert-division")


def _build_ts(kind, w_dim=None):
    if kind == "ms":
        return fts.build_ms(26 if w_dim is None else w_dim)
    if w_dim is not None:
        raise ValueError("--w-dim only applies to the ms kind")
    if kind == "albert-split":
        return fts.build_albert()
    if kind == "albert-division":
        from .albert import division_albert
        return fts.build_albert(division_albert())
    raise ValueError("unknown kind %r" % kind)


def _summary_check(ts):
    return rep.passed("construction-summary", {
        "kind": ts.kind, "dim": ts.n,
        "t_support_triples": len(ts.t_sym),
        "q_support_tuples": len(ts.q_sym),
    })


def _cmd_fts(args, config, report):
    ts = _build_ts(args.kind, args.w_dim)
    report.add(_summary_check(ts))
    if args.action == "build":
        return
    if args.action == "check":
        report.add(fts.check_axioms(ts, config))
        return
    label, res = fts.classify(ts, config)
    res.evidence["label"] = label
    report.add(res)


def _cmd_gift(args, config, report):
    ts = _build_ts(args.kind, args.w_dim)
    g = gift.end_of(ts)
    report.add(_summary_check(ts))
    if args.action == "check":
        report.add(gift.check_gift_axioms(g, config))
        skew, sym = gift.skew_sym_dims(g)
        report.add(rep.passed("skew-sym-dimensions",
                              {"skew": skew, "sym": sym}))
        return
    if args.action == "rank-pi":
        report.add(gift.derivation_suite(g, config))
        return
    # ideals: the zero ideal, a rank-1 line and a rank-2 isotropic plane
    from .linalg import unit
    import random
    rng = random.Random(config.seed)
    examples = [
        ("zero", []),
        ("line", [unit(ts.n, 0)]),
        ("isotropic-plane", [unit(ts.n, 0), unit(ts.n, 1)]),
    ]
    for name, vecs in examples:
        ideal = gift.hom_ideal(g, vecs)
        preds = gift.ideal_predicates(g, ideal, rng)
        report.add(rep.passed("ideal-" + name, {
            "dim": ideal.dim, "rank": ideal.rank,
            "inner": preds["inner"], "singular": preds["singular"],
            "isotropic": preds["isotropic"],
        }))


def _cmd_descent(args, config, report):
    a = parse_rat(args.a)
    b = parse_rat(args.b)
    g = descent.quatconst_build(a, b)
    report.add(rep.passed("construction-summary", {
        "kind": g.kind, "degree": g.n,
        "field_param": a, "multiplier": b,
    }))
    if args.action == "build":
        report.add(g.meta["datum"].checks(config))
        return
    report.add(descent.descended_gift_checks(g, config))
    report.add(gift.check_gift_axioms(g, config))
    J = g.meta["datum"].ts.meta["albert"]
    report.add(brown.check_brown_algebra(J, config))
    report.add(brown.check_brown_descent(J, a, config))


def _cmd_symplem(args, config, report):
    alpha = parse_rat(args.alpha)
    beta = parse_rat(args.beta)
    a_coeffs = [parse_rat(x) for x in args.coeffs_a.split(",")]
    c_coeffs = [parse_rat(x) for x in args.coeffs_c.split(",")]
    h, checks = descent.symplem_verify(alpha, beta, a_coeffs, c_coeffs,
                                       config)
    report.add(checks)
    report.add(rep.passed("hermitian-form", {
        "quaternion_params": list(h.quat_params),
        "coefficients": list(h.coeffs),
        "trace_form": list(descent.hermitian_trace_form(h).coeffs),
        "witt_index": descent.witt_index_hermitian(h),
    }))


def _cmd_real_table(args, config, report):
    rows = descent.e7_real_table()
    report.add(rep.passed("real-closed-witt-table", {"rows": rows}))


def _parser():
    p = argparse.ArgumentParser(
        prog="e7gifts",
        description="exact constructions and checks for 56-dimensional"
                    " triple systems and their twisted endomorphism"
                    " algebras")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--primes", type=int, default=3)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--out", default=None, help="write the JSON report here")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("fts", "gift"):
        sp = sub.add_parser(name)
        actions = ("build", "check", "classify") if name == "fts" \
            else ("check", "rank-pi", "ideals")
        sp.add_argument("action", choices=actions)
        sp.add_argument("--kind", choices=KINDS, default="albert-split")
        sp.add_argument("--w-dim", type=int, default=None)
        sp.set_defaults(func=_cmd_fts if name == "fts" else _cmd_gift)

    sp = sub.add_parser("descent")
    sp.add_argument("action", choices=("build", "check"))
    sp.add_argument("--a", default="-1", help="field parameter, a nonsquare")
    sp.add_argument("--b", default="-1", help="twist multiplier")
    sp.set_defaults(func=_cmd_descent)

    sp = sub.add_parser("symplem")
    sp.add_argument("action", choices=("verify",))
    sp.add_argument("--alpha", default="-1")
    sp.add_argument("--beta", default="-1")
    sp.add_argument("--coeffs-a", default="1",
                    help="comma-separated hermitian diagonal, length <= 3")
    sp.add_argument("--coeffs-c", default="1",
                    help="comma-separated twisting scalars")
    sp.set_defaults(func=_cmd_symplem)

    sp = sub.add_parser("real-table")
    sp.set_defaults(func=_cmd_real_table)
    return p


def main(argv=None):
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(seed=args.seed, samples=args.samples,
                           primes=args.primes, exhaustive=args.exhaustive,
                           out=args.out)
    except ValueError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
    report = Report(" ".join(argv if argv is not None else sys.argv[1:]),
                    config)
    try:
        args.func(args, config, report)
    except ValueError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
    payload = report.to_json()
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    for c in report.checks:
        print("%-12s %s" % (c.status, c.name), file=sys.stderr)
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
