"""Command-line front door.

Exit codes: 0 when every check passes or the requested witness is
found, 1 on a verification failure or a fruitless search, 2 on usage
and parse errors.  Output is deterministic for identical inputs;
timing and node counts only ever appear after a '--- stats ---' line.
"""

import argparse
import sys
import time

from . import equivalence as eqv
from . import goodseq as gsq
from . import mvm as mvm_mod
from . import search as search_mod
from . import structure as struct_mod
from .core import (AlgebraError, Report, all_congruences, parse_file,
                   serialize, write_file, FAIL, INCONCLUSIVE, PASS)


def parse_algebra(path):
    """Read and validate an algebra file."""
    return parse_file(path)


def _print_report(report):
    print(report.render())


def _entries_arg(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise AlgebraError(f"bad entry list {text!r}: expected "
                           "comma-separated integers") from None


def _sizes_arg(text):
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        n = int(text)
        return n, n
    except ValueError:
        raise AlgebraError(f"bad size range {text!r}: expected N or A..B") \
            from None


def _seq_str(s):
    return "(" + ",".join(str(e) for e in s.entries) + ")"


# ============================================================
# Verbs
# ============================================================

def _cmd_check_axioms(args):
    alg = parse_algebra(args.algebra)
    chk = mvm_mod.check_mvm(alg)
    _print_report(chk.report)
    print(f"A1..A7: {'pass' if chk.ok else 'fail'}")
    return 0 if chk.ok else 1


def _cmd_gs_sum(args):
    alg = parse_algebra(args.algebra)
    m = mvm_mod.as_mvm(alg)
    left = gsq.gs_make(m, _entries_arg(args.left))
    right = gsq.gs_make(m, _entries_arg(args.right))
    total = gsq.gs_sum(left, right)
    print(f"left: {_seq_str(left)}")
    print(f"right: {_seq_str(right)}")
    print(f"sum: {_seq_str(total)}")
    print("formulas-agree: PASS")
    return 0


def _cmd_gs_enum(args):
    alg = parse_algebra(args.algebra)
    m = mvm_mod.as_mvm(alg)
    seqs = gsq.enumerate_good_sequences(m, max_len=args.max_len)
    for s in seqs:
        print(_seq_str(s))
    print(f"count: {len(seqs)}")
    return 0


def _cmd_roundtrip(args):
    alg = parse_algebra(args.algebra)
    m = mvm_mod.as_mvm(alg)
    t0 = time.monotonic()
    report = eqv.roundtrip_report(m, max_len=args.max_len)
    report.footer.append(f"time: {time.monotonic() - t0:.2f}s")
    _print_report(report)
    return 0 if report.ok else 1


def _cmd_ulm_demo(args):
    m = args.denominator
    u = eqv.ScaledIntUlm(m)
    p = eqv.ScaledNatPUlm(m)
    t0 = time.monotonic()
    reports = [
        eqv.ulm_axiom_report(u, bound=args.bound),
        eqv.pulm_axiom_report(p, bound=args.bound),
        eqv.eps0_eta0_report(u, bound=args.bound),
        eqv.pulm_lemma_suite(p, bound=args.bound),
        eqv.derived_signature_report(m, bound=args.bound),
    ]
    ok = True
    for r in reports:
        _print_report(r)
        print()
        ok = ok and r.ok
    print(f"ulm-demo denominator {m}: {'pass' if ok else 'fail'}")
    print("--- stats ---")
    print(f"time: {time.monotonic() - t0:.2f}s")
    return 0 if ok else 1


def _cmd_congruences(args):
    alg = parse_algebra(args.algebra)
    congs = all_congruences(alg)
    for c in congs:
        print("".join("{" + ",".join(str(x) for x in blk) + "}"
                      for blk in c.blocks()))
    print(f"count: {len(congs)}")
    return 0


def _cmd_si_check(args):
    alg = parse_algebra(args.algebra)
    m = mvm_mod.as_mvm(alg)
    if not args.suite:
        res = struct_mod.is_subdirectly_irreducible(m)
        print(f"SI: {'yes' if res.si else 'no'}")
        return 0
    report, res = struct_mod.si_theorem_suite(m, max_len=args.max_len)
    _print_report(report)

    def verdict(name):
        for e in report.entries:
            if e.name == name:
                if e.status == PASS:
                    return "yes"
                if e.status == FAIL:
                    return "no"
                return "n/a"
        return "n/a"

    print(f"SI: {'yes' if res.si else 'no'}; "
          f"totally ordered: {verdict('totally-ordered')}; "
          f"good-pair law: {verdict('good-pair-law')}")
    return 0 if report.ok else 1


def _cmd_search_models(args):
    satisfy, fresh = search_mod.parse_problem_file(args.satisfy)
    violate = ()
    if args.violate:
        veqs, vfresh = search_mod.parse_problem_file(args.violate)
        violate = veqs
        fresh = tuple(dict.fromkeys(fresh + vfresh))
    problem = search_mod.SearchProblem(
        satisfy=satisfy, violate=violate, sizes=_sizes_arg(args.sizes),
        symmetry_breaking=not args.no_symmetry, fresh=fresh)
    if args.all:
        out = search_mod.find_all_models(
            problem, time_limit=args.time_limit, node_limit=args.node_limit)
        print(f"status: {'complete' if out.complete else 'bound_hit'}")
        print(f"models: {len(out.models)}")
        for model in out.models:
            print()
            print(serialize(model), end="")
        print("--- stats ---")
        print(f"nodes: {out.stats.nodes}")
        print(f"time: {out.stats.seconds:.2f}s")
        return 0 if out.models else 1
    out = search_mod.find_model(
        problem, time_limit=args.time_limit, node_limit=args.node_limit)
    print(f"status: {out.status}")
    if out.model is not None:
        print(serialize(out.model), end="")
        if args.out:
            write_file(out.model, args.out)
    print("--- stats ---")
    print(f"nodes: {out.stats.nodes}")
    print(f"time: {out.stats.seconds:.2f}s")
    return 0 if out.status == "witness" else 1


def _cmd_independence(args):
    report, _ = search_mod.independence_suite(
        sizes=_sizes_arg(args.sizes),
        time_limit_per_item=args.time_limit_per_item)
    text = report.render()
    print(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if report.ok else 1


def _cmd_mv_check(args):
    alg = parse_algebra(args.algebra)
    if mvm_mod.NEG in alg.ops:
        chk = mvm_mod.check_mv(alg)
        _print_report(chk.report)
        if not chk.ok:
            print("mv-axioms: fail")
            return 1
        print("mv-axioms: pass")
        derived = mvm_mod.mv_to_mvm(chk.algebra)
        print(f"mvm-embedding: PASS ({derived.name} satisfies A1..A7)")
        return 0
    m = mvm_mod.as_mvm(alg)
    if not mvm_mod.has_mv_negation(m):
        print("mv-negation: no")
        return 1
    print("mv-negation: yes")
    return 0


def _cmd_corpus(args):
    paths = mvm_mod.write_corpus(args.out)
    for p in paths:
        print(p)
    return 0


# ============================================================
# Parser
# ============================================================

def _build_parser():
    ap = argparse.ArgumentParser(
        prog="mvmlab",
        description="finite-model toolkit for MV-monoidal algebras")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check-axioms", help="run A1..A7 on an algebra file")
    p.add_argument("--algebra", required=True)
    p.set_defaults(fn=_cmd_check_axioms)

    p = sub.add_parser("gs-sum", help="sum two good sequences")
    p.add_argument("--algebra", required=True)
    p.add_argument("--left", required=True,
                   help="comma-separated entries, empty for the zero sequence")
    p.add_argument("--right", required=True)
    p.set_defaults(fn=_cmd_gs_sum)

    p = sub.add_parser("gs-enum", help="enumerate good sequences")
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(fn=_cmd_gs_enum)

    p = sub.add_parser("roundtrip",
                       help="equivalence round trips on one algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(fn=_cmd_roundtrip)

    p = sub.add_parser("ulm-demo",
                       help="integer-chain unital monoid sanity suites")
    p.add_argument("--denominator", type=int, default=2)
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(fn=_cmd_ulm_demo)

    p = sub.add_parser("congruences", help="print the congruence lattice")
    p.add_argument("--algebra", required=True)
    p.set_defaults(fn=_cmd_congruences)

    p = sub.add_parser("si-check", help="subdirect irreducibility")
    p.add_argument("--algebra", required=True)
    p.add_argument("--suite", action="store_true")
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(fn=_cmd_si_check)

    p = sub.add_parser("search-models", help="bounded finite-model search")
    p.add_argument("--satisfy", required=True,
                   help="equation file to satisfy")
    p.add_argument("--violate", help="equation file to violate")
    p.add_argument("--sizes", default="2..4", help="N or A..B")
    p.add_argument("--all", action="store_true",
                   help="collect every model instead of the first")
    p.add_argument("--time-limit", type=float)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--out", help="write the first witness to this file")
    p.set_defaults(fn=_cmd_search_models)

    p = sub.add_parser("independence",
                       help="axiom independence study, witness per item")
    p.add_argument("--sizes", default="2..4")
    p.add_argument("--time-limit-per-item", type=float, default=90.0)
    p.add_argument("--report", help="also write the report to this file")
    p.set_defaults(fn=_cmd_independence)

    p = sub.add_parser("mv-check",
                       help="MV axioms, or negation detection on an MVM")
    p.add_argument("--algebra", required=True)
    p.set_defaults(fn=_cmd_mv_check)

    p = sub.add_parser("corpus", help="write the bundled corpus")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_corpus)
    return ap


def main(argv=None):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.fn(args)
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RuntimeError as e:
        print(f"FAIL: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
