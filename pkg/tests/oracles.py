"""Naive reference implementations the fast solvers are checked against.

Everything here enumerates subsets directly from definitions, with no
masks, tables, or pruning, so a shared bug with the production code is
unlikely.
"""

import itertools


def subsets(ids):
    for r in range(len(ids) + 1):
        yield from itertools.combinations(sorted(ids), r)


def feasible_sets(costs, budget):
    for combo in subsets(costs):
        if sum(costs[p] for p in combo) <= budget:
            yield frozenset(combo)


def money_share(costs, approvals, chosen):
    return [sum(costs[p] for p in a & chosen) for a in approvals]


def brute_maxmin(inst):
    """(value, set of optimal frozensets) for the worst-off money share."""
    costs = inst.cost_map
    best, arg = -1, set()
    for s in feasible_sets(costs, inst.budget):
        value = min(money_share(costs, inst.approvals, s))
        if value > best:
            best, arg = value, {s}
        elif value == best:
            arg.add(s)
    return best, arg


def brute_welfare(inst, approvals, f):
    costs = inst.cost_map
    best, arg = None, set()
    for s in feasible_sets(costs, inst.budget):
        if f == "card":
            w = sum(len(a & s) for a in approvals)
        elif f == "cost":
            w = sum(sum(costs[p] for p in a & s) for a in approvals)
        else:
            w = sum(1 for a in approvals if a & s)
        if best is None or w > best:
            best, arg = w, {s}
        elif w == best:
            arg.add(s)
    return best, arg


def brute_pbcc(inst):
    costs = inst.cost_map
    best, arg = None, set()
    for s in feasible_sets(costs, inst.budget):
        total = 0
        for pref in inst.prefs:
            ranks = [pref.rank(p) for p in s if pref.rank(p) is not None]
            if ranks:
                total += inst.m - min(ranks)
        if best is None or total > best:
            best, arg = total, {s}
        elif total == best:
            arg.add(s)
    return best, arg


def brute_rank_share(inst, voter, theta, chosen):
    costs = inst.cost_map
    if sum(costs[p] for p in chosen) < theta:
        return inst.m + 1
    pref = inst.prefs[voter]
    for j in range(1, inst.m + 1):
        prefix = {p for p in pref.ranked if pref.rank(p) <= j}
        if sum(costs[p] for p in prefix & chosen) >= theta:
            return j
    return inst.m + 1


def brute_sg(inst, theta):
    costs = inst.cost_map
    best, arg = None, set()
    for s in feasible_sets(costs, inst.budget):
        total = sum(brute_rank_share(inst, i, theta, s) for i in range(inst.n))
        if best is None or total < best:
            best, arg = total, {s}
        elif total == best:
            arg.add(s)
    return best, arg


def brute_arg(inst, k):
    """Descending scan over every share level."""
    for theta in range(inst.budget, 0, -1):
        best, arg = brute_sg(inst, theta)
        if best <= k * inst.n:
            return theta, arg, True
    best, arg = brute_sg(inst, 1)
    return 1, arg, False


def brute_degrees(inst, total_fn, maximize=True):
    best, arg = None, set()
    for vs in inst.iter_valid_sets():
        v = total_fn(inst, vs)
        if best is None or (v > best if maximize else v < best):
            best, arg = v, {vs.degrees}
        elif v == best:
            arg.add(vs.degrees)
    return best, arg


def brute_minmax_shortfall(inst):
    costs = inst.cost_map
    best = None
    for s in feasible_sets(costs, inst.budget):
        worst = max(inst.budget - u for u in money_share(costs, inst.approvals, s))
        if best is None or worst < best:
            best = worst
    return best
