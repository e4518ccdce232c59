"""Command-line front end.

Verbs: solve, validate, bounds, check-axiom, check-fair, suite.
Exit codes: 0 success, 2 parse error, 3 infeasible or condition not met,
4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import glob as globmod
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import axioms as ax
from . import egal, ordinal, speaked, suite as suitemod
from .core import DichotomousInstance
from .degrees import (DegreeInstance, capped_total, cardinal_total,
                      cost_total, distance_total, solve_r_cap, solve_r_card,
                      solve_r_cost_exact, solve_r_cost_fptas, solve_r_dist)
from .errors import (ConditionNotMet, InstanceTooLarge, ParseError, PbtkError,
                     ResourceBound, UnknownRule)
from .ioformat import AxisProfile, load_params, parse_election
from .ordinal import OrdinalInstance, WorthFunction

SCHEMA = "pbtk/1"


@dataclass
class RunResult:
    rule: str
    params: dict
    outcome: object
    objective: object
    timing_ms: float
    seed: int | None

    def to_json(self, with_timing=False):
        """Canonical form: identical inputs and seed give identical bytes;
        timing is opt-in because it never replays."""
        doc = {
            "schema": SCHEMA,
            "rule": self.rule,
            "params": self.params,
            "outcome": self.outcome,
            "objective": self.objective,
            "seed": self.seed,
        }
        if with_timing:
            doc["timing_ms"] = round(self.timing_ms, 3)
        return json.dumps(doc, sort_keys=True)


def _sets(sets):
    return [sorted(s.members) for s in sets]


def _frac(v):
    return str(v) if isinstance(v, Fraction) else v


def run(rule_spec, instance, options=None):
    """Dispatch a named rule on a parsed instance; returns RunResult."""
    options = options or {}
    t0 = time.perf_counter()
    params = {k: _frac(v) for k, v in options.items() if v is not None and k != "params_doc"}

    def done(outcome, objective):
        return RunResult(rule_spec, params, outcome, objective,
                         (time.perf_counter() - t0) * 1000.0, options.get("seed"))

    if isinstance(instance, DichotomousInstance):
        max_m = options.get("max_enum") or 25
        if rule_spec == "mpb":
            res = egal.mpb_exact(instance, max_m=max_m)
            return done(_sets(res.winning_sets), {"min_utility": res.optimal_value})
        if rule_spec == "mpb-dp":
            res = egal.mpb_dp_distinct_votes(instance)
            return done(_sets(res.winning_sets), {"min_utility": res.optimal_value})
        if rule_spec == "ordered-relax":
            s = egal.ordered_relax(instance)
            worst, _ = egal._set_min_utility(instance, s)
            return done(sorted(s.members), {"min_utility": worst})
        if rule_spec == "minmax":
            res = egal.minmax_exact(instance, max_m=max_m)
            return done(_sets(res.winning_sets), {"max_shortfall": res.optimal_value})
        if rule_spec == "minmax-ordered-relax":
            s, value = egal.minmax_ordered_relax(instance)
            return done(sorted(s.members), {"max_shortfall": value})
        if rule_spec in ("utilitarian-card", "utilitarian-cost", "utilitarian-coverage"):
            f = rule_spec.rsplit("-", 1)[1]
            outs = ax.approval_outcomes(instance, f)
            value = ax._ApprovalTables(instance).welfare_value(f)
            best = None
            for s in outs:
                mask = 0
                idx = {p.id: i for i, p in enumerate(instance.projects)}
                for pid in s:
                    mask |= 1 << idx[pid]
                best = value(mask)
            return done([sorted(s) for s in outs], {"welfare": best})
        raise UnknownRule(f"{rule_spec} is not an approval-model rule")

    if isinstance(instance, OrdinalInstance):
        worth = options.get("alpha")
        if rule_spec.startswith("mt-") or rule_spec.startswith("ct-"):
            scheme, f = rule_spec.split("-", 1)
            wf = WorthFunction(tuple(worth)).extended(instance.m) if worth else None
            sets = ordinal.dt_rule(instance, scheme, f, worth=wf,
                                   max_m=options.get("max_enum") or 20)
            approvals = ordinal.translated_approvals(instance, scheme, wf)
            best = sets[0].members
            cm = instance.cost_map
            if f == "card":
                welfare = sum(len(a & best) for a in approvals)
            elif f == "cost":
                welfare = sum(sum(cm[p] for p in a & best) for a in approvals)
            else:
                welfare = sum(1 for a in approvals if a & best)
            return done(_sets(sets), {"welfare": welfare, "optima": len(sets)})
        if rule_spec == "pbcc":
            sets = ordinal.pb_cc(instance, max_m=options.get("max_enum") or 20)
            total = sum(ordinal.cc_utility(instance, i, sets[0].members)
                        for i in range(instance.n))
            return done(_sets(sets), {"total_utility": total})
        if rule_spec == "sg":
            theta = options.get("theta")
            if theta is None:
                raise UnknownRule("sg needs --theta")
            sets = ordinal.sg_rule(instance, theta,
                                   max_m=options.get("max_enum") or 20)
            return done(_sets(sets),
                        {"total_rank": ordinal.sg_score(instance, theta, sets[0])})
        if rule_spec == "arg":
            k = options.get("k")
            if k is None:
                raise UnknownRule("arg needs --k")
            res = ordinal.arg_rule(instance, k, max_m=options.get("max_enum") or 20)
            return done(_sets(res.sets),
                        {"theta": res.theta, "share_level_met": res.condition_met})
        raise UnknownRule(f"{rule_spec} is not a ranked-model rule")

    if isinstance(instance, DegreeInstance):
        eps = options.get("epsilon")
        mode = options.get("mode") or "exact"
        if rule_spec == "r-card":
            vs = solve_r_card(instance)
            return done(list(vs.degrees), {"utility": cardinal_total(instance, vs)})
        if rule_spec == "r-cost":
            vs = (solve_r_cost_fptas(instance, Fraction(eps))
                  if mode == "fptas" else solve_r_cost_exact(instance))
            return done(list(vs.degrees), {"utility": cost_total(instance, vs)})
        if rule_spec == "r-cap":
            vs = solve_r_cap(instance, mode=mode,
                             eps=Fraction(eps) if eps else None)
            return done(list(vs.degrees), {"utility": capped_total(instance, vs)})
        if rule_spec == "r-dist":
            vs = solve_r_dist(instance, mode=mode,
                              eps=Fraction(eps) if eps else None)
            return done(list(vs.degrees), {"penalty": distance_total(instance, vs)})
        raise UnknownRule(f"{rule_spec} is not a ranged-model rule")

    if isinstance(instance, AxisProfile):
        doc = options.get("params_doc")
        if doc is None:
            raise UnknownRule("axis-model rules need --params")
        kind, (rule, groups) = load_params(doc, instance)
        if rule_spec == "pfgbr":
            if kind != "ballots":
                raise UnknownRule("pfgbr needs kind=ballots parameters")
            dist = speaked.PFGBRule(rule, groups).distribution(instance.profile)
            return done({instance.axis[t]: str(v) for t, v in enumerate(dist)},
                        {"support": sum(1 for v in dist if v)})
        if rule_spec in ("gmmr", "median", "mixture"):
            dist = rule.distribution(instance.profile)
            return done({instance.axis[t]: str(v) for t, v in enumerate(dist)},
                        {"support": sum(1 for v in dist if v)})
        raise UnknownRule(f"{rule_spec} is not an axis-model rule")

    raise UnknownRule(f"no rules registered for {type(instance).__name__}")


def _table(result):
    lines = [f"rule: {result.rule}"]
    lines.append(f"outcome: {result.outcome}")
    lines.append(f"objective: {result.objective}")
    lines.append(f"timing_ms: {result.timing_ms:.3f}")
    return "\n".join(lines)


def _load_instances(args):
    paths = []
    if args.glob:
        paths = sorted(globmod.glob(args.glob))
    elif args.election:
        paths = [args.election]
    else:
        raise ParseError("need --election FILE or --glob PATTERN")
    out = []
    for path in paths:
        with open(path, "r", encoding="utf-8") as fh:
            out.append((path, parse_election(fh.read())))
    return out


def _fractions(text):
    return [Fraction(v) for v in text.split(",")]


def main(argv=None):
    parser = argparse.ArgumentParser(prog="pbtk",
                                     description="participatory budgeting toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--election")
        p.add_argument("--glob")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--seed", type=int)
        p.add_argument("--max-enum", type=int, dest="max_enum")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel workers for --glob batches")

    p_solve = sub.add_parser("solve", help="run an aggregation rule")
    common(p_solve)
    p_solve.add_argument("--rule", required=True)
    p_solve.add_argument("--epsilon")
    p_solve.add_argument("--theta", type=int)
    p_solve.add_argument("--k", type=int)
    p_solve.add_argument("--mode", choices=("exact", "fptas", "pfptas"))
    p_solve.add_argument("--alpha", help="comma-separated worth values, best rank first")
    p_solve.add_argument("--params", help="JSON parameter file for axis-model rules")

    p_val = sub.add_parser("validate", help="parse and check an election file")
    common(p_val)

    p_bounds = sub.add_parser("bounds", help="prefix-fill size bounds and related flags")
    common(p_bounds)

    p_axiom = sub.add_parser("check-axiom", help="axiom falsification on one instance")
    common(p_axiom)
    p_axiom.add_argument("--rule", required=True)
    p_axiom.add_argument("--axiom", required=True)
    p_axiom.add_argument("--alpha")

    p_fair = sub.add_parser("check-fair", help="entitlement guarantees, axis model")
    common(p_fair)
    p_fair.add_argument("--params", required=True)
    p_fair.add_argument("--fairness", required=True,
                        choices=("weak-geg", "strong-geg", "weak-ieg", "strong-ieg"))
    p_fair.add_argument("--mode", choices=("enum", "condition"), default="enum")

    p_suite = sub.add_parser("suite", help="run the axiom score-card")
    p_suite.add_argument("--trials", type=int, default=500)
    p_suite.add_argument("--seed", type=int, default=20240801)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConditionNotMet,) as exc:
        print(f"condition not met: {exc}", file=sys.stderr)
        return 3
    except (ResourceBound, InstanceTooLarge) as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return 4
    except PbtkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _solve_path(job):
    path, rule, options, fmt = job
    with open(path, "r", encoding="utf-8") as fh:
        inst = parse_election(fh.read())
    result = run(rule, inst, options)
    return result.to_json() if fmt == "json" else _table(result)


def _dispatch(args):
    if args.verb == "suite":
        rows = suitemod.run_suite(trials=args.trials, seed=args.seed)
        print(suitemod.to_json(rows))
        return 0 if suitemod.suite_ok(rows) else 3

    instances = _load_instances(args)

    if args.verb == "validate":
        for path, inst in instances:
            print(json.dumps({"schema": SCHEMA, "file": path, "ok": True,
                              "model": type(inst).__name__}, sort_keys=True))
        return 0

    if args.verb == "bounds":
        for path, inst in instances:
            if not isinstance(inst, DichotomousInstance):
                raise ParseError("bounds applies to approval elections")
            b = egal.ordered_fill_bounds(inst)
            _, h_a = egal.approval_size_bounds(inst)
            print(json.dumps({
                "schema": SCHEMA, "file": path, "fill_min": b.l_o,
                "fill_max": b.h_o, "largest_ballot": h_a,
                "high_cardinality_budget": egal.is_hcbp(inst),
            }, sort_keys=True))
        return 0

    if args.verb == "solve":
        options = {
            "epsilon": args.epsilon, "theta": args.theta, "k": args.k,
            "mode": args.mode, "seed": args.seed, "max_enum": args.max_enum,
            "alpha": [int(v) for v in args.alpha.split(",")] if args.alpha else None,
        }
        if args.params:
            with open(args.params, "r", encoding="utf-8") as fh:
                options["params_doc"] = fh.read()
        if args.jobs > 1 and len(instances) > 1:
            with concurrent.futures.ProcessPoolExecutor(args.jobs) as pool:
                lines = pool.map(_solve_path,
                                 [(path, args.rule, options, args.format)
                                  for path, _ in instances])
            for line in lines:
                print(line)
            return 0
        for path, inst in instances:
            result = run(args.rule, inst, options)
            print(result.to_json() if args.format == "json" else _table(result))
        return 0

    if args.verb == "check-axiom":
        registry = {
            "mpb": ax.mpb_rule(),
            "utilitarian-card": ax.welfare_rule("card"),
            "utilitarian-cost": ax.welfare_rule("cost"),
            "utilitarian-coverage": ax.welfare_rule("coverage"),
            "mt-card": ax.translation_rule("mt", "card"),
            "mt-cost": ax.translation_rule("mt", "cost"),
            "mt-coverage": ax.translation_rule("mt", "coverage"),
            "pbcc": ax.pbcc_rule(),
            "r-card": ax.degree_rule("card"),
            "r-cost": ax.degree_rule("cost"),
            "r-cap": ax.degree_rule("capped"),
            "r-dist": ax.degree_rule("dist"),
        }
        if args.rule.startswith("ct-"):
            if not args.alpha:
                raise ParseError("ct rules need --alpha")
            wf = WorthFunction(tuple(int(v) for v in args.alpha.split(",")))
            rule = ax.translation_rule("ct", args.rule.split("-", 1)[1], wf)
        elif args.rule in registry:
            rule = registry[args.rule]
        else:
            raise UnknownRule(args.rule)
        code = 0
        for path, inst in instances:
            report = ax.check_axiom(rule, args.axiom, inst)
            print(json.dumps({
                "schema": SCHEMA, "file": path, "rule": args.rule,
                "axiom": args.axiom, "verdict": report.verdict,
                "witness": repr(report.witness) if report.witness else None,
            }, sort_keys=True))
            if report.violated:
                code = 3
        return code

    if args.verb == "check-fair":
        with open(args.params, "r", encoding="utf-8") as fh:
            doc = fh.read()
        code = 0
        for path, inst in instances:
            if not isinstance(inst, AxisProfile):
                raise ParseError("check-fair applies to single-peaked elections")
            kind, (rule, groups) = load_params(doc, inst)
            weak = args.fairness.startswith("weak")
            if args.mode == "enum":
                dist_fn = (speaked.PFGBRule(rule, groups).distribution
                           if kind == "ballots" else rule.distribution)
                check = (speaked.check_weak_geg_enum if weak
                         else speaked.check_strong_geg_enum)
                ok, witness = check(dist_fn, groups, inst.m)
            else:
                if kind == "ballots":
                    check = (speaked.check_weak_geg_ballots if weak
                             else speaked.check_strong_geg_ballots)
                else:
                    check = (speaked.check_weak_geg_mixture if weak
                             else speaked.check_strong_geg_mixture)
                ok, witness = check(rule, groups)
            print(json.dumps({
                "schema": SCHEMA, "file": path, "fairness": args.fairness,
                "mode": args.mode, "holds": ok,
                "witness": repr(witness) if witness else None,
            }, sort_keys=True))
            if not ok:
                code = 3
        return code

    raise ParseError(f"unknown verb {args.verb}")


if __name__ == "__main__":
    sys.exit(main())
