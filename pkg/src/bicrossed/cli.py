"""Command line front end: verify, cohomology, vanest, eval.

Exit codes: 0 all selected checks pass, 1 an identity is violated,
2 the input (fixture, flags, expression) is malformed.
"""

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .coeff import SAYDModule
from .exactlin import Fraction
from .fixture import FixtureError, load_fixture, parse_commutative, parse_word_sum
from .reduced import ReducedComplex
from .report import Report
from .suites import ORDER, run_suites
from .vanest import RelativeBicomplex, check_relative, check_van_est

ALIASES = {
    "e0": "e0-trivial",
    "e1": "e1-borel-sl2",
    "e2": "e2-axb",
    "e3": "e3-laurent",
    "e1-broken": "e1-broken-matched",
}


class InputError(Exception):
    pass


def shipped_fixtures():
    root = resources.files("bicrossed") / "fixtures"
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def resolve_fixture(arg):
    """A path, a shipped fixture name (with or without .json), or a short alias."""
    p = Path(arg)
    if p.is_file():
        return load_fixture(p)
    stem = arg[: -len(".json")] if arg.endswith(".json") else arg
    stem = ALIASES.get(stem, stem)
    root = resources.files("bicrossed") / "fixtures"
    cand = root / f"{stem}.json"
    if cand.is_file():
        with resources.as_file(cand) as real:
            return load_fixture(real)
    raise FixtureError(arg, f"no such file or shipped fixture (shipped: {', '.join(shipped_fixtures())})")


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _modules(fx, name):
    if name is None:
        return fx.module_names()
    if name not in fx.module_names():
        raise InputError(f"no module named {name!r} (have: {', '.join(fx.module_names())})")
    return [name]


def _cochain_text(fx, M, c):
    """m_a ⊗ θ^I ∧ θ^J with g1 names in I and g2 names in J."""
    terms = []
    for (a, I, J), x in sorted(c.items(), key=lambda t: (t[0][0], t[0][1], t[0][2])):
        wedge = "∧".join([f"θ^{fx.g1[i]}" for i in I] + [f"θ^{fx.g2[j]}" for j in J]) or "1"
        terms.append(f"{x}*{M.g1.names[a]}⊗{wedge}")
    return " + ".join(terms) or "0"


def cmd_verify(args, out):
    fx = resolve_fixture(args.fixture)
    names = ORDER if args.suite == "all" else [args.suite]
    results = run_suites(fx, names, args.depth, args.samples, args.seed, timing=args.timing)
    ok = all(r["status"] == "pass" for r in results)
    if args.format == "json":
        out.write(_dump({"fixture": fx.name, "status": "pass" if ok else "fail", "reports": results}) + "\n")
    else:
        for r in results:
            line = f"{r['suite']:<10} {r['status']:<8} checked={r['checked']}"
            if r.get("blocked_by"):
                line += f" blocked_by={','.join(r['blocked_by'])}"
            out.write(line + "\n")
            for v in r["violations"][: args.max_violations]:
                out.write(f"  {v['identity']}: {v['ref']}\n    at {v['witness']}\n    lhs {v['lhs']}\n    rhs {v['rhs']}\n")
            extra = len(r["violations"]) - args.max_violations
            if extra > 0:
                out.write(f"  … {extra} more\n")
        out.write(f"{fx.name}: {'pass' if ok else 'fail'}\n")
    return 0 if ok else 1


def cmd_cohomology(args, out):
    fx = resolve_fixture(args.fixture)
    h = fx.h if args.relative else ()
    rows = []
    for name in _modules(fx, args.module):
        M = fx.module(name)
        try:
            res = RelativeBicomplex(fx.mp, M, h).cohomology(args.max_degree)
        except ValueError as exc:
            raise InputError(f"{name}: {exc}") from exc
        row = {"module": name, "dims": res.dims}
        if args.representatives:
            row["representatives"] = [[_cochain_text(fx, M, c) for c in reps] for reps in res.representatives]
        rows.append(row)
    h_names = [fx.g2[j] for j in h]
    if args.format == "json":
        out.write(_dump({"fixture": fx.name, "h": h_names, "modules": rows}) + "\n")
        return 0
    width = max(len(r["dims"]) for r in rows) if rows else 0
    label = f"H^i(g1⋈g2, {{{', '.join(h_names)}}}, M)" if h_names else "H^i(g1⋈g2, M)"
    out.write(f"{fx.name}  {label}\n")
    out.write("module     " + " ".join(f"{i:>4}" for i in range(width)) + "\n")
    for r in rows:
        out.write(f"{r['module']:<10} " + " ".join(f"{d:>4}" for d in r["dims"]) + "\n")
        for i, reps in enumerate(r.get("representatives", [])):
            for c in reps:
                out.write(f"  [{i}] {c}\n")
    return 0


def _pq(text):
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected P,Q with non-negative integers") from None
    if p < 0 or q < 0:
        raise argparse.ArgumentTypeError("expected P,Q with non-negative integers")
    return p, q


def cmd_vanest(args, out):
    fx = resolve_fixture(args.fixture)
    gate = run_suites(fx, ["sayd", "pairing"], args.depth, args.samples, args.seed)
    blocked = [r["suite"] for r in gate if r["status"] != "pass"]
    rep = Report("vanest")
    if not blocked:
        p, q = args.pq
        for name in _modules(fx, args.module):
            M = fx.module(name)
            RB = RelativeBicomplex(fx.mp, M, fx.h)
            rep.extend(check_relative(RB, args.samples, args.seed))
            R = ReducedComplex(SAYDModule(fx.H, M))
            rep.extend(check_van_est(fx.pairing_context, RB, R, p, q, args.samples, args.seed))
    status = "skipped" if blocked else ("pass" if rep.ok else "fail")
    doc = {
        "suite": "vanest",
        "status": status,
        "seed": args.seed,
        "depth": args.depth,
        "pq": list(args.pq),
        "checked": rep.checked,
        "violations": [v.as_dict() for v in rep.violations],
        "elapsed_ms": 0,
    }
    if blocked:
        doc["blocked_by"] = blocked
    if args.format == "json":
        out.write(_dump(doc) + "\n")
    else:
        line = f"vanest {status} checked={rep.checked}"
        if blocked:
            line += f" blocked_by={','.join(blocked)}"
        out.write(line + "\n")
        for v in doc["violations"]:
            out.write(f"  {v['identity']}: {v['ref']}\n    at {v['witness']}\n    lhs {v['lhs']}\n    rhs {v['rhs']}\n")
    return 0 if status == "pass" else 1


def pair_value(fx, text):
    """⟨f, v⟩ for ``"<f-expr> ; <g2-word>"``."""
    if text.count(";") != 1:
        raise FixtureError("--pair", "expected '<f-expr> ; <g2-monomial>'")
    left, right = (s.strip() for s in text.split(";"))
    P = fx.pairing_context
    f = parse_commutative(left, P.F.names, 1, "--pair (F side)")
    v = parse_word_sum(right, P.U2, fx.g2, "--pair (U(g2) side)")
    return P.eval(f, v)


def cmd_eval(args, out):
    fx = resolve_fixture(args.fixture)
    val = Fraction(pair_value(fx, args.pair))
    if args.format == "json":
        out.write(_dump({"fixture": fx.name, "pair": args.pair, "value": str(val)}) + "\n")
    else:
        out.write(f"{val}\n")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="bicrossed", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity suites on a fixture")
    v.add_argument("fixture")
    v.add_argument("--suite", choices=ORDER + ["all"], default="all")
    v.add_argument("--depth", type=int, default=3)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--timing", action="store_true", help="fill elapsed_ms (output is then not reproducible)")
    v.add_argument("--max-violations", type=int, default=5, help="per suite, text format only")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cohomology", help="dimensions of the (relative) Lie algebra cohomology")
    c.add_argument("fixture")
    c.add_argument("--module", default=None, help="default: every module of the fixture")
    c.add_argument("--relative", action="store_true", help="relative to the fixture's levi subalgebra")
    c.add_argument("--max-degree", type=int, default=None)
    c.add_argument("--representatives", action="store_true")
    c.add_argument("--format", choices=["table", "json"], default="table")
    c.set_defaults(func=cmd_cohomology)

    w = sub.add_parser("vanest", help="chain-map checks of the van Est map")
    w.add_argument("fixture")
    w.add_argument("--module", default=None)
    w.add_argument("--pq", type=_pq, default=(2, 2), help="largest bidegree P,Q checked")
    w.add_argument("--depth", type=int, default=3)
    w.add_argument("--samples", type=int, default=3)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--format", choices=["text", "json"], default="text")
    w.set_defaults(func=cmd_vanest)

    e = sub.add_parser("eval", help="evaluate the pairing of F with U(g2)")
    e.add_argument("fixture")
    e.add_argument("--pair", required=True, help='"<f-expr> ; <g2-monomial>", e.g. "f^2 ; F^2"')
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_eval)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (FixtureError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
