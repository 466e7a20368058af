"""Command-line interface: ``ratknot <verb> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  JSON and CSV output never contain timings, so identical arguments
give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import census, checks
from .conway import format_seq, if_eval, parse, tangle_fraction, to_even_form, to_positive_form
from .extfrac import parse_fraction
from .homology import AbelianGroupFin, h1_double_cover, lm1_knot, realize_module, reduce_mod, solve_det_congruence
from .polyinv import alexander_conway, certify_n_similar_to_unknot, genus_rational, jones, signature, vassiliev_extract
from .trivial import RationalKnot, certify_unknotting_one, family_knot, lm1_det, make_wn, verify_n_trivial_structure

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _seq_arg(tokens: list[str]) -> tuple:
    text = " ".join(tokens)
    try:
        return parse(text)
    except ValueError as e:
        raise UsageError(f"bad Conway notation {text!r}: {e}") from None


def _knot_from_args(args) -> RationalKnot:
    if args.seq:
        return RationalKnot.from_sequence(_seq_arg(args.seq))
    if args.p is None:
        raise UsageError("give P Q or --seq")
    if args.p == 1:
        return RationalKnot(1, 0)
    q = 0 if args.q is None else args.q
    return RationalKnot(args.p, q % args.p)


# --- verbs ------------------------------------------------------------------
# each returns (payload dict, ok flag); payload["text"] is the plain rendering


def cmd_if_eval(args):
    f = if_eval(_seq_arg(args.notation))
    return {"value": str(f), "text": str(f)}, True


def cmd_fraction(args):
    seq = _seq_arg(args.notation)
    f = tangle_fraction(seq)
    return {"sequence": list(seq), "fraction": str(f), "trivial": f.num == 0 and not f.is_inf, "text": str(f)}, True


def cmd_positive_form(args):
    seq = to_positive_form(parse_fraction(args.fraction))
    return {"sequence": list(seq), "text": format_seq(seq)}, True


def cmd_even_form(args):
    seq = to_even_form(args.p, args.q, canonical=args.canonical, up_to_mirror=args.up_to_mirror)
    return {"p": args.p, "q": args.q, "sequence": list(seq), "genus": len(seq) // 2, "text": format_seq(seq)}, True


def cmd_wn(args):
    seq = make_wn(args.params)
    return {"params": args.params, "sequence": list(seq), "text": format_seq(seq)}, True


def cmd_verify_trivial(args):
    rep = verify_n_trivial_structure(args.params, trials=args.trials, seed=args.seed)
    d = rep.as_dict()
    d["text"] = f"{rep.checks} checks, {len(rep.violations)} violations" + "".join(f"\nnote: {x}" for x in rep.notes)
    return d, rep.ok


def cmd_family(args):
    k = family_knot(args.params, args.c)
    seq = make_wn(args.params) + (args.c,)
    out = {
        "params": args.params,
        "c": args.c,
        "sequence": list(seq),
        "knot": str(k),
        "p": k.p,
        "q": k.q,
        "even_form": list(to_even_form(k.p, k.q)) if k.p > 1 else [],
        "genus": genus_rational(k),
    }
    if args.params[-1] in (2, -2):
        out["unknotting_number_one"] = certify_unknotting_one(args.params, args.c)
    out["text"] = f"{k}  {format_seq(seq)}  genus {out['genus']}"
    return out, True


def cmd_invariants(args):
    k = _knot_from_args(args)
    delta, nabla = alexander_conway(k)
    data = vassiliev_extract(k, args.degree)
    v = jones(k)
    out = {
        "knot": str(k),
        "determinant": k.p,
        "jones": v.to_pairs(),
        "alexander": delta.to_pairs(),
        "conway": nabla.to_pairs(),
        "signature": signature(k),
        "genus": genus_rational(k),
        "h1_double_cover": h1_double_cover(k).as_dict(),
        "vassiliev": data.as_dict(),
    }
    out["text"] = "\n".join([
        f"knot       {k}",
        f"jones      {v.format('t')}",
        f"alexander  {delta.format('t')}",
        f"conway     {nabla.format('z')}",
        f"signature  {out['signature']}",
        f"genus      {out['genus']}",
        f"v2, v3     {data.v2}, {data.v3}",
    ])
    return out, True


def cmd_similar(args):
    if args.family:
        k = family_knot(args.family, args.c)
    else:
        k = _knot_from_args(args)
    cert = certify_n_similar_to_unknot(k, args.degree)
    out = cert.as_dict()
    out["text"] = f"{k}: {'passes' if cert.passed else 'fails'} degree-{args.degree} polynomial certificate\n{cert.caveat}"
    return out, cert.passed


def cmd_det_solve(args):
    signs = tuple(args.signs) if args.signs else (1,) * args.n
    if len(signs) != args.n:
        raise UsageError(f"--signs needs {args.n} entries")
    s = solve_det_congruence(args.p, args.k, args.n, signs)
    det = lm1_det(args.n, signs, s)
    k = lm1_knot(signs, s)
    ok = det % args.p == args.k % args.p and k.p == det
    out = {"p": args.p, "k": args.k, "n": args.n, "signs": list(signs), "s": s, "det": det, "knot": str(k)}
    out["text"] = f"s = {s}, det = {det} = {args.k % args.p} mod {args.p}, knot {k}"
    return out, ok


def cmd_realize_homology(args):
    result = realize_module(args.p, args.orders, args.n)
    got = reduce_mod(h1_double_cover(result), args.p)
    want = AbelianGroupFin.from_cyclic([x for x in args.orders if x != 1])
    out = {
        "p": args.p,
        "requested": want.as_dict(),
        "summands": [str(k) for k in result.summands],
        "h1_mod_p": got.as_dict(),
        "verified": got == want,
    }
    out["text"] = f"{result}\nH_1(D; Z_{args.p}) = {got}"
    return out, got == want


def cmd_census(args):
    table = census.load_or_build(args.max_k or 64, args.cache)
    rep = census.asymptotic_check(table, args.rho)
    rows = []
    rho = rep.rho
    for k in range(1, table.K + 1):
        bound = math.ceil(census.exp_upper_bound(rho, k)) if k >= 2 else 1
        rows.append({"k": k, "d_k": str(table.d(k)), "bound": str(bound), "pass": table.d(k) >= bound})
    kmax = min(24, table.K)
    out = {
        "max_k": table.K,
        "asymptotic": rep.as_dict(),
        "recursion_breaks": table.check_recursion(),
        "enumeration_discrepancies": census.compare_enumeration(table, kmax),
        "rows": rows,
        "csv_columns": ["k", "d_k", "bound", "pass"],
    }
    last = rows[-1]
    out["text"] = f"d_{last['k']} = {last['d_k']}\nrho={rho}: k0 = {rep.k0}, failures {rep.failures}"
    return out, not out["recursion_breaks"]


def _run_check(job):
    index, kw = job
    return checks.CHECKS[index](**kw)


def cmd_verify_paper(args):
    kw = {"seed": args.seed, "n_cap": args.n, "max_k": args.max_k or 2**16}
    jobs = [(i, kw) for i in range(len(checks.CHECKS))]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_check, jobs))
    else:
        results = [_run_check(j) for j in jobs]
    ok = all(r.ok for r in results)
    out = {"n": args.n, "results": [r.as_dict() for r in results], "all_passed": ok}
    out["text"] = "\n".join(r.line() for r in results)
    return out, ok


# --- parser -------------------------------------------------------------------


def _add_knot_args(p):
    p.add_argument("p", type=int, nargs="?", help="determinant of S(p, q)")
    p.add_argument("q", type=int, nargs="?")
    p.add_argument("--seq", nargs="+", help="Conway notation instead of P Q")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cache", help=f"census cache file (default ${census.CACHE_ENV} or ~/.cache/ratknot)")
    common.add_argument("--max-k", type=int, default=None, help="census size (64 for census, 2^16 for verify-paper)")
    common.add_argument("--degree", type=int, default=3)

    parser = argparse.ArgumentParser(prog="ratknot", description="Rational tangles, n-trivial rational knots and their invariants.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn, verb_parser=p)
        return p

    p = verb("if-eval", cmd_if_eval, "iterated fraction of a Conway sequence")
    p.add_argument("notation", nargs="+", help="C(a1,...,an) or a1 ... an")
    p = verb("fraction", cmd_fraction, "tangle fraction of a Conway sequence")
    p.add_argument("notation", nargs="+")
    p = verb("positive-form", cmd_positive_form, "Conway sequence with all entries of one sign")
    p.add_argument("fraction", help="p/q, p or inf")
    p = verb("even-form", cmd_even_form, "all-even Conway sequence of S(p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--up-to-mirror", action="store_true")
    p = verb("wn", cmd_wn, "the sequence w_n")
    p.add_argument("params", type=int, nargs="+")
    p = verb("verify-trivial", cmd_verify_trivial, "randomized structural n-triviality check")
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--trials", type=int, default=100)
    p = verb("family", cmd_family, "knot w_n ++ (c)")
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--c", type=int, required=True)
    p = verb("invariants", cmd_invariants, "polynomial and classical invariants")
    _add_knot_args(p)
    p = verb("similar", cmd_similar, "polynomial certificate of n-similarity to the unknot")
    _add_knot_args(p)
    p.add_argument("--family", type=int, nargs="+")
    p.add_argument("--c", type=int, default=2)
    p = verb("det-solve", cmd_det_solve, "n-trivial knot with det = k mod p")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--signs", type=int, nargs="+")
    p = verb("realize-homology", cmd_realize_homology, "knot with prescribed H_1(D; Z_p)")
    p.add_argument("p", type=int)
    p.add_argument("orders", type=int, nargs="*")
    p.add_argument("--n", type=int, default=1)
    p = verb("census", cmd_census, "d_k table and asymptotic bound")
    p.add_argument("--rho", default="0.3")
    p = verb("verify-paper", cmd_verify_paper, "run every acceptance check")
    p.add_argument("--n", type=int, default=None, help="cap on the depth n used by the checks")
    return parser


def render(payload: dict, fmt: str, args) -> str:
    body = {k: v for k, v in payload.items() if k != "text"}
    if fmt == "text":
        return payload["text"] + "\n"
    if fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": args.verb, "seed": args.seed, "result": body}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "rows" in body:
        cols = body["csv_columns"]
        w.writerow(cols)
        for r in body["rows"]:
            w.writerow([str(r[c]).lower() if isinstance(r[c], bool) else r[c] for c in cols])
    else:
        w.writerow(["key", "value"])
        w.writerow(["schema_version", SCHEMA_VERSION])
        w.writerow(["seed", args.seed])
        for k in sorted(body):
            v = body[k]
            w.writerow([k, v if isinstance(v, (str, int)) and not isinstance(v, bool) else json.dumps(v, sort_keys=True)])
    return buf.getvalue()


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        payload, ok = args.func(args)
    except (UsageError, ValueError, ZeroDivisionError) as e:
        print(f"ratknot {args.verb}: {e}", file=sys.stderr)
        sys.stderr.write(args.verb_parser.format_usage())
        return EXIT_USAGE
    sys.stdout.write(render(payload, args.format, args))
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
