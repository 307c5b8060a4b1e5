"""Command line front end.

Subcommands: gen (write instances), check (panconnectivity verdicts and
certificates), classify (structure recognition), verify (seeded campaigns
over a named statement), replay (constructive certificate with branch
traces). Machine output is JSON on stdout; human summaries go to stderr.
Exit codes are a stable contract: 0 pass, 1 property fails, 2 usage or
infeasible input, 3 inconclusive under the search budget.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analysis import (
    classify_ham_path_obstruction,
    is_panconnected_single,
    is_rainbow_panconnected,
    recognize_F_family,
    recognize_join_partition,
    recognize_two_cliques,
    verify_theorem_1_5,
)
from .constructions import HypothesisViolation, constructive_panconnect, endpoint_bound_report
from .core import GraphCollection, collection_min_degree
from .generate import (
    GenSpec,
    gen_cor23_obstruction,
    gen_extremal_F,
    gen_lemma_shape,
    gen_random_collection,
    generate,
)
from .io import InstanceFormatError, format_instance, read_instance
from .search import (
    BudgetExceeded,
    SearchBudget,
    default_budget,
    find_rainbow_ham_path,
    find_rainbow_path,
    rainbow_distance,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

THEOREM_IDS = ("t1_1", "t1_5", "t2_1", "lem1", "lem5-bounds", "cor2_3")


def _emit_json(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _budget_from(args) -> SearchBudget:
    if getattr(args, "budget", None):
        return SearchBudget(node_limit=args.budget)
    return default_budget()


# ---------------------------------------------------------------------------
# gen

_FAMILY_ALIASES = {
    "f": "F_family",
    "F_family": "F_family",
    "random": "random",
    "cor23_ii": "two_cliques_cor23",
    "two_cliques_cor23": "two_cliques_cor23",
    "cor23_iii": "join_partition_cor23",
    "join_partition_cor23": "join_partition_cor23",
}


def cmd_gen(args) -> int:
    family = _FAMILY_ALIASES.get(args.family, args.family)
    if not (family in set(_FAMILY_ALIASES.values()) or family.startswith("lemma_shape:")):
        _say(f"unknown family {args.family!r}")
        return EXIT_USAGE
    if family == "random":
        default_m, default_delta = args.n - 1, (args.n + 1) // 2
    elif family in ("two_cliques_cor23", "join_partition_cor23"):
        default_m, default_delta = args.n, None
    else:
        default_m, default_delta = args.n - 1, None
    params = {}
    if args.variant is not None:
        params["variant"] = args.variant
    spec = GenSpec(
        n=args.n,
        m=args.m if args.m is not None else default_m,
        seed=args.seed,
        family=family,
        min_degree=args.min_degree if args.min_degree is not None else default_delta,
        params=params,
    )
    try:
        coll = generate(spec)
    except ValueError as exc:
        _say(f"infeasible: {exc}")
        return EXIT_USAGE
    text = format_instance(coll)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        with open(args.out + ".spec.json", "w") as fh:
            fh.write(json.dumps(spec.to_json_dict(), indent=2, sort_keys=True) + "\n")
        _say(f"wrote {args.out} ({coll.n} vertices, {coll.m} graphs)")
    else:
        sys.stdout.write(text)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# check


def _load(path: str) -> GraphCollection:
    try:
        return read_instance(path)
    except (OSError, InstanceFormatError) as exc:
        raise SystemExit(_usage_exit(f"cannot read instance: {exc}"))


def _usage_exit(msg: str) -> int:
    _say(msg)
    return EXIT_USAGE


def cmd_check(args) -> int:
    coll = _load(args.infile)
    budget = _budget_from(args)
    if args.k is not None and args.pair is None:
        return _usage_exit("--k needs --pair")
    if args.pair is not None:
        x, y = args.pair
        if not (0 <= x < coll.n and 0 <= y < coll.n and x != y):
            return _usage_exit(f"bad pair ({x}, {y}) for n={coll.n}")
        return _check_pair(coll, x, y, args.k, budget, args.cert)
    try:
        cert = is_rainbow_panconnected(coll, budget=budget)
    except BudgetExceeded as exc:
        _say(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE
    if args.cert:
        _emit_json(cert.to_json_dict(), args.cert)
    if cert.verdict is True:
        print(f"panconnected: yes (k capped at {cert.k_cap})")
        return EXIT_PASS
    if cert.verdict is False:
        x, y, k = cert.failure
        print(f"panconnected: no, failing triple ({x}, {y}, {k})")
        return EXIT_FAIL
    print("panconnected: unknown (budget exhausted)")
    return EXIT_INCONCLUSIVE


def _check_pair(coll, x, y, k, budget, cert_path) -> int:
    try:
        if k is not None:
            path = find_rainbow_path(coll, x, y, k, budget=budget)
            result = {
                "pair": [x, y],
                "k": k,
                "found": path is not None,
                "path": None if path is None else path.to_json_dict(),
            }
            _emit_json(result, cert_path)
            if cert_path:
                print("found" if path is not None else "absent")
            return EXIT_PASS if path is not None else EXIT_FAIL
        dist = rainbow_distance(coll, x, y, budget=budget)
        k_cap = min(coll.n, coll.m + 1)
        witnesses = {}
        missing = []
        if dist is not None:
            for kk in range(dist + 1, k_cap + 1):
                p = find_rainbow_path(coll, x, y, kk, budget=budget)
                if p is None:
                    missing.append(kk)
                else:
                    witnesses[kk] = p.to_json_dict()
        result = {
            "pair": [x, y],
            "distance": dist,
            "k_cap": k_cap,
            "missing": missing,
            "witnesses": {str(kk): w for kk, w in sorted(witnesses.items())},
        }
        _emit_json(result, cert_path)
        if cert_path:
            print("complete" if dist is not None and not missing else "incomplete")
        return EXIT_PASS if dist is not None and not missing else EXIT_FAIL
    except BudgetExceeded as exc:
        _say(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# classify


def cmd_classify(args) -> int:
    coll = _load(args.infile)
    budget = _budget_from(args)
    report: dict = {"n": coll.n, "m": coll.m, "min_degree": collection_min_degree(coll)}
    witness = recognize_F_family(coll)
    if witness is None:
        witness = recognize_two_cliques(coll)
    if witness is None:
        witness = recognize_join_partition(coll)
    report["kind"] = witness.kind if witness is not None else "none"
    report["witness"] = None if witness is None else witness.to_json_dict()
    if coll.m == coll.n:
        try:
            cls = classify_ham_path_obstruction(coll, budget=budget)
            report["case"] = cls.case
            report["within_hypothesis"] = cls.within_hypothesis
            if cls.ham_report is not None:
                report["ham_connected"] = cls.ham_report.holds
        except BudgetExceeded:
            report["case"] = "unknown"
    _emit_json(report, args.out)
    if args.out:
        print(report["kind"])
    return EXIT_PASS


# ---------------------------------------------------------------------------
# verify (campaigns)


@dataclass
class CampaignReport:
    """Outcome tallies for one seeded campaign; pass means zero fails and
    zero inconclusives, and every failure embeds a reproducer."""

    theorem: str
    trials_per_n: dict[int, int]
    base_seed: int
    node_limit: int
    passes: int = 0
    fails: int = 0
    inconclusive: int = 0
    failing: list = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return self.fails == 0 and self.inconclusive == 0

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "trials_per_n": {str(n): t for n, t in sorted(self.trials_per_n.items())},
            "base_seed": self.base_seed,
            "budget": {
                "node_limit": self.node_limit,
                "inconclusive_trials": self.inconclusive,
            },
            "passes": self.passes,
            "fails": self.fails,
            "inconclusive": self.inconclusive,
            "passed": self.passed,
            "failing": self.failing,
            "wall_time_s": round(self.wall_time_s, 3),
        }


def _trial_t1_5(n: int, seed: int, budget: SearchBudget):
    spec = GenSpec(n, n - 1, seed, "random", min_degree=(n + 1) // 2)
    coll = generate(spec)
    res = verify_theorem_1_5(coll, budget=budget)
    if res.outcome == "holds":
        return "pass", res.via, spec
    if res.outcome == "inconclusive":
        return "inconclusive", "budget", spec
    return "fail", f"failure={res.certificate.failure} {res.rejection_reason}", spec


def _trial_t2_1(n: int, seed: int, budget: SearchBudget):
    from .analysis import is_rainbow_ham_connected

    spec = GenSpec(n, n - 1, seed, "random", min_degree=(n + 1) // 2)
    coll = generate(spec)
    rep = is_rainbow_ham_connected(coll, budget=budget)
    if rep.holds is True:
        return "pass", None, spec
    if rep.holds is None:
        return "inconclusive", "budget", spec
    return "fail", f"pair {rep.failing_pair} has no spanning path", spec


def _trial_t1_1(n: int, seed: int, budget: SearchBudget):
    target = (n + 3) // 2
    spec = GenSpec(n, 1, seed, "random", min_degree=target)
    coll = generate(spec)
    ok = is_panconnected_single(coll[0], budget=budget)
    return ("pass" if ok else "fail"), (None if ok else "k-path missing"), spec


def _trial_lem1(n: int, seed: int, budget: SearchBudget):
    spec = GenSpec(n, n - 1, seed, "random", min_degree=(n + 1) // 2)
    coll = generate(spec)
    cert = is_rainbow_panconnected(coll, budget=budget)
    if cert.verdict is True:
        return "pass", None, spec
    if cert.verdict is None:
        return "inconclusive", "budget", spec
    return "fail", f"failing triple {cert.failure}", spec


def _trial_lem5(n: int, seed: int, budget: SearchBudget):
    variants = ("lo-lo",) if n == 7 else ("lo-lo", "lo-hi")
    variant = variants[seed % len(variants)]
    spec = GenSpec(n, n - 1, seed, "lemma_shape:lem5", params={"variant": variant})
    coll, handles = gen_lemma_shape("lem5", n, seed, variant)
    try:
        rep = endpoint_bound_report(
            coll, handles["path"], excluded_color=handles["excluded_color"], budget=budget
        )
    except HypothesisViolation as exc:
        return "fail", f"hypothesis check rejected the fixture: {exc}", spec
    allowed = {(n - 5) // 2, (n - 3) // 2}
    ok = (
        rep.d1 in allowed
        and rep.d2 in allowed
        and n - 5 <= rep.d1 + rep.d2 <= n - 4
    )
    return ("pass" if ok else "fail"), (None if ok else f"degrees ({rep.d1}, {rep.d2})"), spec


def _trial_cor2_3(n: int, seed: int, budget: SearchBudget):
    case = "ii" if seed % 2 == 0 else "iii"
    family = "two_cliques_cor23" if case == "ii" else "join_partition_cor23"
    spec = GenSpec(n, n, seed, family)
    coll = generate(spec)
    cls = classify_ham_path_obstruction(coll, budget=budget)
    if cls.case != case:
        return "fail", f"classified as {cls.case}, built {case}", spec
    for x in range(n):
        for y in range(x + 1, n):
            if find_rainbow_ham_path(coll, x, y, budget=budget) is not None:
                return "fail", f"unexpected spanning path for ({x}, {y})", spec
    return "pass", None, spec


_TRIALS = {
    "t1_1": _trial_t1_1,
    "t1_5": _trial_t1_5,
    "t2_1": _trial_t2_1,
    "lem1": _trial_lem1,
    "lem5-bounds": _trial_lem5,
    "cor2_3": _trial_cor2_3,
}

_N_CONSTRAINT = {
    "t1_1": lambda n: 4 <= n,
    "t1_5": lambda n: n % 2 == 1 and n >= 5,
    "t2_1": lambda n: n % 2 == 1 and n >= 5,
    "lem1": lambda n: n == 5,
    "lem5-bounds": lambda n: n in (7, 9),
    "cor2_3": lambda n: n % 2 == 0 and n >= 4,
}


def _campaign_trial(task) -> dict:
    theorem, n, seed, node_limit = task
    budget = SearchBudget(node_limit=node_limit)
    try:
        status, detail, spec = _TRIALS[theorem](n, seed, budget)
    except BudgetExceeded:
        status, detail = "inconclusive", "budget"
        spec = GenSpec(n, 0, seed, "unknown")
    return {
        "n": n,
        "seed": seed,
        "status": status,
        "detail": detail,
        "spec": spec.to_json_dict(),
    }


def run_campaign(
    theorem: str,
    n_values: list[int],
    trials: int,
    base_seed: int,
    node_limit: int,
    jobs: int = 1,
) -> CampaignReport:
    """Seeded verification campaign; deterministic given identical flags."""
    if theorem not in _TRIALS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    bad = [n for n in n_values if not _N_CONSTRAINT[theorem](n)]
    if bad:
        raise ValueError(f"theorem {theorem} does not apply to n={bad}")
    tasks = [
        (theorem, n, base_seed + t, node_limit)
        for n in n_values
        for t in range(trials)
    ]
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_campaign_trial, tasks, chunksize=8))
    else:
        results = [_campaign_trial(t) for t in tasks]
    report = CampaignReport(
        theorem=theorem,
        trials_per_n={n: trials for n in n_values},
        base_seed=base_seed,
        node_limit=node_limit,
    )
    for res in sorted(results, key=lambda r: (r["n"], r["seed"])):
        if res["status"] == "pass":
            report.passes += 1
        elif res["status"] == "fail":
            report.fails += 1
            report.failing.append(
                {
                    "n": res["n"],
                    "seed": res["seed"],
                    "detail": res["detail"],
                    "spec": res["spec"],
                    "reproducer": (
                        f"verify --theorem {theorem} --n {res['n']} "
                        f"--trials 1 --seed {res['seed']}"
                    ),
                }
            )
        else:
            report.inconclusive += 1
    report.wall_time_s = time.perf_counter() - start
    return report


def cmd_verify(args) -> int:
    try:
        n_values = [int(s) for s in args.n.split(",") if s]
    except ValueError:
        return _usage_exit(f"bad --n list {args.n!r}")
    budget = _budget_from(args)
    try:
        report = run_campaign(
            args.theorem, n_values, args.trials, args.seed, budget.node_limit, args.jobs
        )
    except ValueError as exc:
        return _usage_exit(str(exc))
    _emit_json(report.to_json_dict(), args.report)
    total = report.passes + report.fails + report.inconclusive
    _say(
        f"{args.theorem}: {report.passes}/{total} pass, {report.fails} fail, "
        f"{report.inconclusive} inconclusive ({report.wall_time_s:.1f}s)"
    )
    if report.fails:
        return EXIT_FAIL
    if report.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


# ---------------------------------------------------------------------------
# replay


def cmd_replay(args) -> int:
    coll = _load(args.infile)
    budget = _budget_from(args)
    n, m = coll.n, coll.m
    hypothesis = n % 2 == 1 and n >= 5 and m == n - 1 and 2 * collection_min_degree(coll) >= n + 1
    if not hypothesis:
        note = (
            "constructive replay needs odd n >= 5, m = n-1 and min degree >= "
            "(n+1)/2; emitting a search certificate only"
        )
        try:
            cert = is_rainbow_panconnected(coll, budget=budget)
        except BudgetExceeded as exc:
            _say(f"inconclusive: {exc}")
            return EXIT_INCONCLUSIVE
        _emit_json({"mode": "search", "note": note, "certificate": cert.to_json_dict()}, args.out)
        _say(note)
        if cert.verdict is True:
            return EXIT_PASS
        return EXIT_FAIL if cert.verdict is False else EXIT_INCONCLUSIVE
    if args.pair is not None:
        pairs = [tuple(args.pair)]
    else:
        pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    reports = []
    clean = True
    verdict = None
    try:
        for x, y in pairs:
            rep = constructive_panconnect(coll, x, y, budget=budget)
            reports.append(rep)
            if rep.discrepancies:
                clean = False
            if rep.verdict is not None:
                verdict = rep.verdict
            elif rep.missing_k:
                clean = False
    except BudgetExceeded as exc:
        _say(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE
    out = {
        "mode": "constructive",
        "n": n,
        "m": m,
        "clean": clean,
        "verdict": None if verdict is None else verdict.to_json_dict(),
        "pairs": [r.to_json_dict() for r in reports],
    }
    _emit_json(out, args.out)
    branches = sorted({t.lemma for r in reports for t in r.traces})
    _say(
        f"replayed {len(reports)} pair(s); branches: {', '.join(branches)}; "
        + ("no discrepancies" if clean else "DISCREPANCIES FOUND")
    )
    return EXIT_PASS if clean else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rainbowpan",
        description="rainbow path toolkit: generate, check, classify, verify, replay",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--min-degree", type=int, dest="min_degree")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--variant")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="panconnectivity check / single query")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--pair", type=int, nargs=2, metavar=("U", "V"))
    c.add_argument("--k", type=int)
    c.add_argument("--cert", help="write certificate JSON here")
    c.add_argument("--budget", type=int)
    c.set_defaults(func=cmd_check)

    cl = sub.add_parser("classify", help="recognize extremal structure")
    cl.add_argument("--in", dest="infile", required=True)
    cl.add_argument("--out")
    cl.add_argument("--budget", type=int)
    cl.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="seeded campaign for one statement")
    v.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    v.add_argument("--n", required=True, help="comma-separated vertex counts")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--report", help="write campaign JSON here")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("replay", help="constructive certificate with traces")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--pair", type=int, nargs=2, metavar=("U", "V"))
    r.add_argument("--out")
    r.add_argument("--budget", type=int)
    r.set_defaults(func=cmd_replay)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as done:
        code = done.code
        return code if isinstance(code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
