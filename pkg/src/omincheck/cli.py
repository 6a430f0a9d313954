"""Command-line entry point: ``omincheck {compat,orbits,verify,gb,complex} ...``.

Exit codes: 0 all checks passed, 1 some check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from . import cluster, detideal, hilbert, orderposet, rootsys, simplicial
from .errors import BudgetError, InputError
from .polyring import VariableSet

BUDGET_ENV = "OMINCHECK_BUDGET_OVERRIDE"
GB_MAX_N = 4
OMIN_MAX_N = 2
COMBI_MAX_N = 6

ROOT_GRAMMAR = "roots are written e1-e2, e1+e2, 2e3, -2e3, -e1+e2 or -a<i>"


@dataclass
class Report:
    command: str
    inputs: dict
    checks: list[dict] = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)

    def add(self, name: str, status: str | bool, details=None):
        if isinstance(status, bool):
            status = "pass" if status else "fail"
        self.checks.append({"name": name, "status": status, "details": details if details is not None else {}})

    @property
    def failed(self) -> bool:
        return any(c["status"] == "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "checks": self.checks,
                "artifacts": self.artifacts}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"# {self.command} " + " ".join(f"{k}={v}" for k, v in sorted(self.inputs.items()))]
        for c in self.checks:
            lines.append(f"{c['status'].upper():7s} {c['name']}")
            if c["status"] != "pass" and c["details"]:
                lines.append("        " + json.dumps(c["details"], sort_keys=True))
        for k, v in sorted(self.artifacts.items()):
            if k == "table":
                names = self.artifacts.get("roots", [])
                w = max(map(len, names), default=1)
                lines.append(" " * w + " " + " ".join(f"{x:>{w}}" for x in names))
                lines += [f"{a:>{w}} " + " ".join(f"{x:>{w}}" for x in row) for a, row in zip(names, v)]
            elif k != "complex":
                lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
        return "\n".join(lines)


def _override(args) -> bool:
    return bool(getattr(args, "force", False)) or os.environ.get(BUDGET_ENV, "") not in ("", "0")


class UsageError(Exception):
    pass


def _check_n(n: int, lo: int = 2):
    if n < lo:
        raise UsageError(f"--n must be >= {lo}")


# -- compat ---------------------------------------------------------------

def cmd_compat(args) -> Report:
    n = args.n
    _check_n(n)
    if n > COMBI_MAX_N and not _override(args):
        raise BudgetError(f"compat is capped at n <= {COMBI_MAX_N}")
    rep = Report("compat", {"n": n, "mode": "pair" if args.pair else "table"})
    if args.pair:
        try:
            a, b = (rootsys.parse_root(s, n) for s in args.pair)
        except InputError as e:
            raise UsageError(f"{e}; {ROOT_GRAMMAR}") from None
        rep.inputs["pair"] = [rootsys.format_root(a), rootsys.format_root(b)]
        deg = rootsys.compatibility_degree(a, b, n)
        by_deg = deg == 0
        by_pos = rootsys.is_compatible_positional(a, b, n)
        rep.artifacts = {"degree": deg, "compatible": by_deg, "compatible_positional": by_pos,
                         "positions": [list(rootsys.to_array_position(a, n)),
                                       list(rootsys.to_array_position(b, n))],
                         "names": [rootsys.alpha_name(a), rootsys.alpha_name(b)]}
        rep.add("predicates_agree", by_deg == by_pos, {"degree": deg, "positional": by_pos})
    else:
        order, table = rootsys.compatibility_table(n)
        rep.artifacts = {"roots": [rootsys.alpha_name(r) for r in order],
                         "roots_eps": [rootsys.format_root(r) for r in order],
                         "table": table}
        bad = [[rootsys.format_root(a), rootsys.format_root(b)] for a in order for b in order
               if rootsys.is_compatible(a, b, n) != rootsys.is_compatible_positional(a, b, n)]
        rep.add("predicates_agree", not bad, {"mismatches": bad} if bad else None)
    return rep


def cmd_orbits(args) -> Report:
    n = args.n
    _check_n(n)
    orbits = rootsys.tau_orbits(n)
    rep = Report("orbits", {"n": n})
    rep.artifacts = {"orbits": [[rootsys.format_root(r) for r in o] for o in orbits]}
    sizes = [len(o) for o in orbits]
    rep.add("orbit_structure", len(orbits) == n and all(s == n + 1 for s in sizes), {"sizes": sizes})
    return rep


# -- verify ---------------------------------------------------------------

def _gb_checks(rep: Report, pattern, labeling, trials: int, seed: int, allowed: bool):
    if not allowed:
        rep.add("universal_gb", "skipped", {"reason": f"Groebner checks capped at n <= {GB_MAX_N}"})
        return False
    gens = detideal.minor_generators(pattern, labeling)
    shape_ok = all(g.is_homogeneous() and g.lm.degree == 2 and len(g.terms) <= 2
                   and all(c in (1, -1) for c, _ in g.terms) for g in gens)
    rep.add("minor_shape", shape_ok, {"generators": len(gens)})
    res = detideal.verify_universal_gb(pattern, labeling, trials, seed)
    fails = [{"precedence": list(c.precedence), "failing_pair": c.failing_pair,
              "remainder": c.remainder, "new_initial": c.new_initial} for c in res.failures()]
    rep.add("universal_gb", res.ok, {"orders": len(res.checks), "seed": seed, "failures": fails})
    return True


def _match_details(m) -> dict:
    return {"generators": len(m.initial),
            "only_initial": [str(x) for x in m.only_initial()],
            "only_stanley_reisner": [str(x) for x in m.only_sr()]}


def _verify_nn(rep: Report, n: int, trials: int, seed: int, override: bool):
    pattern, labeling = detideal.ZeroPattern.diag(n), detideal.spade_labeling(n)
    gb_ok = _gb_checks(rep, pattern, labeling, trials, seed, override or n <= GB_MAX_N)
    cx = cluster.build_cluster_complex(n, max_n=max(n, COMBI_MAX_N))
    fh = simplicial.f_h_vectors(cx)
    rep.artifacts["f_vector"] = list(fh.f)
    rep.artifacts["h_vector"] = list(fh.h)
    rep.add("h_vector_narayana", list(fh.h) == hilbert.narayana_c(n), {"h": list(fh.h)})
    rep.add("facet_count", len(cx.facets) == comb(2 * n, n), {"facets": len(cx.facets)})
    sc = simplicial.sphere_checks(cx)
    rep.add("sphere", sc.all_ok, {"pure": sc.pure, "euler_characteristic": sc.euler_characteristic,
                                  "ridge_ok": sc.ridge_ok, "connected": sc.connected,
                                  "bad_ridge": [str(v) for v in sc.bad_ridge or ()]})
    rep.add("h_symmetry", hilbert.h_symmetry_check(fh.h), {"h": list(fh.h)})
    if n <= GB_MAX_N or override:
        fc = cluster.fan_checks(n, max_n=n)
        rep.add("fan", fc.ok, {"dependent_facet": fc.dependent_facet, "bad_ridge": fc.bad_ridge})
    else:
        rep.add("fan", "skipped", {"reason": f"fan checks capped at n <= {GB_MAX_N}"})
    if not gb_ok:
        for name in ("initial_sr_match", "hilbert_series", "squarefree", "macaulay_invariance"):
            rep.add(name, "skipped", {"reason": "Groebner budget"})
        return
    m = cluster.match_initial_to_sr(n, max_n=n)
    rep.add("initial_sr_match", m.equal, _match_details(m))
    ideal = hilbert.MonomialIdeal(m.initial, labeling.size)
    series = hilbert.hilbert_series_monomial_quotient(ideal)
    rep.artifacts["hilbert_series"] = series.to_dict()
    rep.add("hilbert_series", series == hilbert.paper_series_nn(n)
            and series.numerator_at_one() == comb(2 * n, n),
            {"computed": str(series), "expected": str(hilbert.paper_series_nn(n))})
    rep.add("squarefree", hilbert.squarefree_check(ideal),
            {"non_squarefree": [str(g) for g in ideal.generators if not g.is_squarefree()]})
    rep.add("h_series_consistency", series == hilbert.series_from_h(fh.h), None)
    rng = random.Random(seed)
    seen = {}
    for _ in range(min(trials, 5)):
        vars = VariableSet.shuffled(labeling.size, rng)
        ini = detideal.initial_generators(pattern, labeling, vars)
        s = hilbert.hilbert_series_monomial_quotient(hilbert.MonomialIdeal(tuple(ini), labeling.size))
        seen[str(s)] = seen.get(str(s), 0) + 1
    rep.add("macaulay_invariance", set(seen) <= {str(series)}, {"series_counts": seen})


def _verify_nplus(rep: Report, n: int, trials: int, seed: int, override: bool):
    pattern, labeling = detideal.ZeroPattern.upper(n), detideal.heart_labeling(n)
    gb_ok = _gb_checks(rep, pattern, labeling, trials, seed, override or n <= GB_MAX_N)
    cx = orderposet.order_complex(n)
    fh = simplicial.f_h_vectors(cx)
    rep.artifacts["f_vector"] = list(fh.f)
    rep.artifacts["h_vector"] = list(fh.h)
    rep.add("facet_count", len(cx.facets) == 2 ** (n - 1), {"facets": len(cx.facets)})
    order = orderposet.paper_shelling_order(n)
    sh = simplicial.verify_shelling(cx, [p.chain for p in order])
    rep.add("shelling", sh.ok, {"failing_index": sh.failing_index})
    if not gb_ok:
        for name in ("initial_sr_match", "hilbert_series", "squarefree"):
            rep.add(name, "skipped", {"reason": "Groebner budget"})
        return
    m = orderposet.match_initial_to_sr_nplus(n, max_n=n)
    rep.add("initial_sr_match", m.equal, _match_details(m))
    ideal = hilbert.MonomialIdeal(m.initial, labeling.size)
    series = hilbert.hilbert_series_monomial_quotient(ideal)
    rep.artifacts["hilbert_series"] = series.to_dict()
    expected = hilbert.series_from_h(fh.h, n)
    rep.add("hilbert_series", series == expected, {"computed": str(series), "from_h_vector": str(expected)})
    rep.add("squarefree", hilbert.squarefree_check(ideal),
            {"non_squarefree": [str(g) for g in ideal.generators if not g.is_squarefree()]})


def _verify_omin(rep: Report, n: int, trials: int, seed: int, override: bool):
    if n > OMIN_MAX_N and not override:
        rep.add("omin_series", "skipped", {"reason": f"O_min Groebner check capped at n <= {OMIN_MAX_N}"})
    else:
        res = hilbert.verify_omin_via_gb(n, max_n=n)
        rep.artifacts["hilbert_series"] = res.series.to_dict()
        rep.add("omin_series", res.matches_paper,
                {"computed": str(res.series), "expected": str(res.expected), "gb_size": res.gb_size})
    rep.add("regular_sequence_identity", hilbert.regular_sequence_identity(n),
            {"nn": str(hilbert.paper_series_nn(n)), "omin": str(hilbert.omin_series(n))})


def cmd_verify(args) -> Report:
    n = args.n
    _check_n(n, 1 if args.case == "omin" else 2)
    override = _override(args)
    rep = Report("verify", {"case": args.case, "n": n, "trials": args.trials, "seed": args.seed})
    if args.case != "omin" and n > COMBI_MAX_N and not override:
        rep.add("all", "skipped", {"reason": f"combinatorial checks capped at n <= {COMBI_MAX_N}"})
        return rep
    {"nn": _verify_nn, "nplus": _verify_nplus, "omin": _verify_omin}[args.case](
        rep, n, args.trials, args.seed, override)
    return rep


def cmd_gb(args) -> Report:
    if args.zeros:
        try:
            pattern = detideal.ZeroPattern.from_json(Path(args.zeros).read_text())
        except OSError as e:
            raise UsageError(str(e)) from None
        labeling = detideal.Labeling.row_major(pattern)
        inputs = {"zeros": json.loads(pattern.to_json())}
    else:
        if args.n is None:
            raise UsageError("--preset needs --n")
        _check_n(args.n)
        if args.n > GB_MAX_N and not _override(args):
            raise BudgetError(f"Groebner checks capped at n <= {GB_MAX_N}")
        if args.preset == "diag":
            pattern, labeling = detideal.ZeroPattern.diag(args.n), detideal.spade_labeling(args.n)
        else:
            pattern, labeling = detideal.ZeroPattern.upper(args.n), detideal.heart_labeling(args.n)
        inputs = {"preset": args.preset, "n": args.n}
    inputs.update(trials=args.trials, seed=args.seed)
    rep = Report("gb", inputs)
    _gb_checks(rep, pattern, labeling, args.trials, args.seed, True)
    rep.artifacts["initial_generators"] = [str(m) for m in detideal.initial_generators(pattern, labeling)]
    return rep


def cmd_complex(args) -> Report:
    n = args.n
    _check_n(n)
    limit = COMBI_MAX_N if not _override(args) else n
    if n > limit:
        raise BudgetError(f"complex export capped at n <= {COMBI_MAX_N}")
    if args.kind == "cluster":
        cx = cluster.build_cluster_complex(n, max_n=limit)
        ground = [rootsys.format_root(r) for r in cx.ground]
        facets = [[rootsys.format_root(r) for r in cx.vertices_of(F)] for F in cx.facets]
    else:
        cx = orderposet.order_complex(n)
        ground = [list(v) for v in cx.ground]
        facets = [[list(v) for v in cx.vertices_of(F)] for F in cx.facets]
    fh = simplicial.f_h_vectors(cx)
    rep = Report("complex", {"kind": args.kind, "n": n})
    rep.artifacts = {"complex": {"ground": ground, "facets": facets},
                     "f_vector": list(fh.f), "h_vector": list(fh.h)}
    rep.add("pure", cx.is_pure(), {"facets": len(cx.facets)})
    if args.out:
        Path(args.out).write_text(json.dumps(rep.artifacts["complex"], indent=2) + "\n")
    return rep


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="omincheck", description=__doc__.splitlines()[0])
    ap.add_argument("--force", action="store_true", help=f"ignore desk-scale budgets (or set {BUDGET_ENV}=1)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--force", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("compat", help="compatibility degrees of C_n almost positive roots")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--table", action="store_true")
    g.add_argument("--pair", nargs=2, metavar=("A", "B"))
    common(p)

    p = sub.add_parser("orbits", help="tau-orbits of Phi_{>=-1}")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="run the full verification for one case")
    p.add_argument("--case", choices=["nn", "nplus", "omin"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("gb", help="universal Groebner check of 2x2 minors for a zero pattern")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--zeros", metavar="FILE", help='JSON {"rows": m, "cols": n, "zeros": [[i, j], ...]}')
    src.add_argument("--preset", choices=["diag", "upper"])
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("complex", help="export the cluster complex or the interval order complex")
    p.add_argument("--kind", choices=["cluster", "order"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="FILE")
    common(p)
    return ap


def _rewrite_pair(argv: list[str]) -> list[str]:
    # root strings such as -e1+e2 look like options to argparse
    argv = list(argv)
    if "--pair" in argv:
        k = argv.index("--pair")
        vals = argv[k + 1:k + 3]
        if len(vals) == 2:
            argv[k + 1:k + 3] = [f"\0{v}" for v in vals]
    return argv


COMMANDS = {"compat": cmd_compat, "orbits": cmd_orbits, "verify": cmd_verify,
            "gb": cmd_gb, "complex": cmd_complex}


def main(argv: list[str] | None = None) -> int:
    argv = _rewrite_pair(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if getattr(args, "pair", None):
        args.pair = [v.lstrip("\0") for v in args.pair]
    try:
        rep = COMMANDS[args.command](args)
    except (UsageError, InputError, BudgetError) as e:
        kind = "budget exceeded" if isinstance(e, BudgetError) else "error"
        print(f"omincheck {args.command}: {kind}: {e}", file=sys.stderr)
        return 2
    print(rep.to_json() if args.json else rep.to_text())
    return 1 if rep.failed else 0


if __name__ == "__main__":
    sys.exit(main())
