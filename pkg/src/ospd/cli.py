"""Command-line front end.

Subcommands: enumerate | graph | char | kcoef | verify | dims.  Exit codes:
0 success, 1 verification failure, 2 usage error.  Streams are deterministic
for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import character, crystal, osptab
from .alphabet import make_alphabet
from .osptab import MUTATIONS, RejectError

USAGE_ERROR = 2


def _parse_partition(text):
    text = text.strip()
    if text in ("", "0", "-"):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise RejectError("cannot parse partition %r" % text) from None
    return tuple(x for x in parts if x)


def _add_common(p, need_lambda=True):
    p.add_argument("--family", choices=("classical", "super"),
                   default="classical")
    p.add_argument("-m", type=int, default=2)
    p.add_argument("-n", type=int, default=0)
    if need_lambda:
        p.add_argument("--lambda", dest="lam", default="0",
                       help="partition, e.g. 3,2,1 (0 for empty)")
        p.add_argument("--ell", type=int, default=1)
    p.add_argument("--max-boxes", type=int, default=None)
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--jobs", type=int, default=1)


def _config(args, need_lambda=True):
    alphabet = make_alphabet(args.family, args.m, args.n)
    plan = None
    if need_lambda:
        plan = osptab.shape_plan(_parse_partition(args.lam), args.ell, alphabet)
    if args.family == "super" and args.max_boxes is None and need_lambda:
        raise RejectError("super alphabets require --max-boxes")
    return alphabet, plan


def _write(args, text):
    if args.output in ("-", None):
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def cmd_enumerate(args):
    alphabet, plan = _config(args)
    lines = []
    for t in osptab.enumerate_tableaux(plan, alphabet, args.max_boxes):
        lines.append(json.dumps(osptab.tuple_to_json(t), sort_keys=True))
    _write(args, "".join(line + "\n" for line in lines))
    return 0


def cmd_graph(args):
    alphabet, plan = _config(args)
    graph = crystal.explore(plan, alphabet, args.family, args.max_boxes)
    if args.format == "dot":
        _write(args, crystal.graph_to_dot(graph))
    else:
        _write(args, json.dumps(crystal.graph_to_json(graph), sort_keys=True,
                                indent=1) + "\n")
    return 0


def cmd_char(args):
    alphabet, plan = _config(args)
    poly = character.s_character(plan, alphabet, args.max_boxes)
    _write(args, json.dumps(poly.to_json(alphabet)) + "\n")
    return 0


def cmd_kcoef(args):
    alphabet, plan = _config(args)
    bound = args.max_boxes
    if bound is None:
        bound = plan.ell * alphabet.size
    table = character.k_coefficients(plan, bound)
    out = [{"mu": list(mu), "K": k} for mu, k in sorted(table.items())]
    _write(args, json.dumps(out) + "\n")
    return 0


def cmd_dims(args):
    alphabet, plan = _config(args)
    dim = character.weyl_dim_D(plan.ell, plan.lam, alphabet.size)
    _write(args, "%d\n" % dim)
    return 0


# ---------------------------------------------------------------------------
# the verification battery

def _check_worked_examples():
    from .signature import sigma_pair
    A = make_alphabet("super", 4, 6)
    L = lambda *names: tuple(A.parse(s) for s in names)
    T = osptab.classify_pair(L("b4", "b1", "1/2", "3/2", "3/2"),
                             L("b3", "b2", "3/2", "5/2"), 3)
    ok = T.residue == 1 and sigma_pair(T.left, T.right) == (2, 1)
    ok &= osptab.lr_split(T) == (L("b4", "1/2", "3/2"),
                                 L("b3", "b2", "b1", "3/2", "3/2", "5/2"))
    ok &= osptab.star_split(T) == (L("b4", "b2", "b1", "1/2", "3/2", "3/2"),
                                   L("b3", "3/2", "5/2"))
    S1 = osptab.classify_pair(L("b1", "5/2", "7/2", "9/2"),
                              L("b2", "b1", "7/2", "9/2"), 2)
    S2 = osptab.classify_pair(L("b3", "b2", "b1", "1/2", "3/2", "5/2", "7/2"),
                              L("b2", "b1", "1/2", "3/2", "7/2", "9/2"), 1)
    ok &= osptab.is_admissible(T, S1) and osptab.is_admissible(T, S2)
    return bool(ok), {}


def _check_classical_crystal(m, n, lam, ell):
    alphabet = make_alphabet("classical", m, n)
    plan = osptab.shape_plan(lam, ell, alphabet)
    graph = crystal.explore(plan, alphabet, "classical")
    dim = character.weyl_dim_D(ell, lam, m + n)
    bad = crystal.check_axioms(graph)
    hw_ok = (len(graph.sources) == 1 and
             graph.weights[graph.sources[0]] == crystal.plan_weight(alphabet, plan))
    ok = (len(graph.vertices) == dim and graph.components == 1
          and hw_ok and not bad)
    return ok, {"vertices": len(graph.vertices), "dim": dim,
                "components": graph.components, "sources": len(graph.sources),
                "axiom_violations": len(bad)}


def _check_super_closure(m, n, lam, ell, bound=8):
    alphabet = make_alphabet("super", m, n)
    plan = osptab.shape_plan(lam, ell, alphabet)
    graph = crystal.explore(plan, alphabet, "super", bound)  # raises on violation
    bad = crystal.check_axioms(graph)
    H = osptab.highest_weight_tuple(plan, alphabet, "super")
    hid = graph.index()[crystal._key(H)]
    genuine = [s for s in graph.sources
               if crystal.is_genuine_highest(alphabet, "super", graph.vertices[s])]
    ok = (graph.components == 1 and not bad and genuine == [hid]
          and graph.weights[hid] == crystal.plan_weight(alphabet, plan))
    return ok, {"vertices": len(graph.vertices), "sources": len(graph.sources),
                "genuine_sources": len(genuine), "components": graph.components,
                "truncated": len(graph.truncated)}


def _check_schur(kind, m, n, lam, ell, bound):
    alphabet = make_alphabet(kind, m, n)
    plan = osptab.shape_plan(lam, ell, alphabet)
    table = character.k_coefficients(plan, bound if bound is not None
                                     else plan.ell * alphabet.size)
    ok = character.schur_expansion_matches(plan, alphabet, bound, table)
    rep = character.verify_pieri(plan, alphabet, bound)
    return ok and rep["ok"], {"expansion": ok, "pieri": rep["ok"],
                              "elements": rep["n"]}


def _check_lemma_suites(seed):
    from .lemmas import run_admissibility_suite, run_split_lemma_suite
    detail = {}
    ok = True
    for kind in ("classical", "super"):
        alphabet = make_alphabet(kind, 4, 2)
        rep = run_split_lemma_suite(alphabet, per_clause=100, seed=seed)
        rep2 = run_admissibility_suite(alphabet, per_case=100, seed=seed + 1)
        ok &= rep["ok"] and rep["complete"] and rep2["ok"] and rep2["complete"]
        detail[kind] = {"split": sum(rep["counts"].values()),
                        "admissible": sum(rep2["counts"].values())}
    return ok, detail


def _verify_checks(seed):
    rng = random.Random(seed)
    checks = [("worked-examples", _check_worked_examples)]
    for lam, ell in [((), 1), ((1,), 1), ((1, 1), 2), ((2,), 2)]:
        checks.append(("classical-crystal-D3-%s-%d" % (lam, ell),
                       lambda lam=lam, ell=ell: _check_classical_crystal(3, 0, lam, ell)))
        checks.append(("classical-crystal-D4-%s-%d" % (lam, ell),
                       lambda lam=lam, ell=ell: _check_classical_crystal(4, 0, lam, ell)))
    checks.append(("super-closure-2|2-(1,1)-2",
                   lambda: _check_super_closure(2, 2, (1, 1), 2)))
    for kind, m, n, lam, ell, bound in [
            ("classical", 3, 0, (1,), 2, None),
            ("classical", 4, 0, (2,), 2, None),
            ("super", 2, 2, (1, 1), 2, 8)]:
        checks.append(("schur-pieri-%s-%d-%d-%s-%d" % (kind, m, n, lam, ell),
                       lambda k=kind, a=m, b=n, l=lam, e=ell, q=bound:
                       _check_schur(k, a, b, l, e, q)))
    checks.append(("split-lemma-suites",
                   lambda: _check_lemma_suites(rng.randrange(2 ** 30))))
    return checks


def cmd_verify(args):
    if args.mutate:
        MUTATIONS.add(args.mutate)
    checks = _verify_checks(args.seed)
    results = []

    def run(item):
        name, fn = item
        try:
            ok, detail = fn()
        except Exception as exc:  # closure violations raise
            ok, detail = False, {"error": str(exc)}
        return {"name": name, "ok": bool(ok), "detail": detail}

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run, checks))
    else:
        results = [run(item) for item in checks]
    report = {"seed": args.seed, "ok": all(r["ok"] for r in results),
              "checks": results}
    _write(args, json.dumps(report, sort_keys=True, indent=1) + "\n")
    for r in results:
        sys.stderr.write("%-40s %s\n" % (r["name"], "ok" if r["ok"] else "FAIL"))
    sys.stderr.write("verify: %s\n" % ("ok" if report["ok"] else "FAILED"))
    return 0 if report["ok"] else 1


def main(argv=None):
    parser = argparse.ArgumentParser(prog="ospd")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream tableaux as JSON lines")
    _add_common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("graph", help="export the crystal graph")
    _add_common(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("char", help="character polynomial")
    _add_common(p)
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("kcoef", help="branching coefficients")
    _add_common(p)
    p.set_defaults(fn=cmd_kcoef)

    p = sub.add_parser("dims", help="type D Weyl dimension")
    _add_common(p)
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("verify", help="run the verification battery")
    _add_common(p, need_lambda=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mutate", default=None,
                   help="fault injection for testing, e.g. flip-adm-i")
    p.set_defaults(fn=cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except RejectError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE_ERROR
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
