"""Rules for incomplete weak rankings over fixed-cost projects.

Two welfare families: translation rules (convert rankings to approvals,
then maximize an approval welfare f) and a budgeted best-representative
rule scoring m minus the rank of the best funded project. The fair family
guarantees budget shares within rank prefixes: the share-guarantee rule
minimizes the total prefix rank needed to reach a share theta, and the
average-rank-guarantee rule maximizes theta subject to an average rank cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (FeasibleSet, Project, WeakOrdinalPreference,
                   canonical_sets, iter_feasible_masks)
from .errors import InstanceTooLarge, ResourceBound

ENUM_MAX_M = 20

WELFARE_FUNCTIONS = ("card", "cost", "coverage")


@dataclass(frozen=True)
class OrdinalInstance:
    budget: int
    projects: tuple
    prefs: tuple  # one WeakOrdinalPreference per voter

    def __post_init__(self):
        ids = [p.id for p in self.projects]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate project ids")
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        if not self.prefs:
            raise ValueError("need at least one voter")
        if any(p.cost < 1 for p in self.projects):
            raise ValueError("projects need cost >= 1")
        known = set(ids)
        for i, pref in enumerate(self.prefs):
            unknown = pref.ranked - known
            if unknown:
                raise ValueError(f"voter {i} ranks unknown projects {sorted(unknown)}")

    @property
    def m(self):
        return len(self.projects)

    @property
    def n(self):
        return len(self.prefs)

    @property
    def cost_map(self):
        return {p.id: p.cost for p in self.projects}

    def cost_of(self, ids):
        cm = self.cost_map
        return sum(cm[p] for p in ids)

    def make_set(self, ids):
        return FeasibleSet(frozenset(ids), self.cost_of(ids))


def make_ordinal_instance(budget, costs, rankings):
    """rankings: per voter, a list of equivalence classes (iterables of ids)."""
    projects = tuple(Project(pid, c) for pid, c in sorted(costs.items()))
    prefs = tuple(WeakOrdinalPreference(tuple(frozenset(c) for c in r)) for r in rankings)
    return OrdinalInstance(budget, projects, prefs)


@dataclass(frozen=True)
class WorthFunction:
    """Maximum amount a project at each rank deserves; non-increasing.

    Values are given for ranks 1..m. (The textbook form also pins the last
    value to zero, but the canonical worked instances ignore that, so only
    monotonicity is enforced here.)
    """

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("worth values must be non-negative")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("worth values must be non-increasing")

    def __call__(self, rank):
        if not 1 <= rank <= len(self.values):
            raise ValueError(f"rank {rank} outside 1..{len(self.values)}")
        return self.values[rank - 1]

    def extended(self, m):
        """Cover m ranks, padding with the final value (projects appended
        by instance transformations rank at the tail)."""
        if m <= len(self.values):
            return self
        return WorthFunction(self.values + (self.values[-1],) * (m - len(self.values)))


def translate_mt(inst):
    """Knapsack-style translation: take whole classes while they fit, then
    keep the boundary-class projects that fit the leftover on their own."""
    out = []
    cm = inst.cost_map
    for pref in inst.prefs:
        approved = set()
        total = 0
        boundary = None
        for cls in pref.classes:
            cls_cost = sum(cm[p] for p in cls)
            if total + cls_cost <= inst.budget:
                approved |= cls
                total += cls_cost
            else:
                boundary = cls
                break
        if boundary is not None:
            leftover = inst.budget - total
            approved |= {p for p in boundary if cm[p] <= leftover}
        out.append(frozenset(approved))
    return tuple(out)


def translate_ct(inst, worth):
    """Approve each ranked project whose cost fits its rank's worth."""
    if len(worth.values) != inst.m:
        raise ValueError("worth function must cover ranks 1..m")
    out = []
    for pref in inst.prefs:
        approved = set()
        for p in pref.ranked:
            if inst.cost_map[p] <= worth(pref.rank(p)):
                approved.add(p)
        out.append(frozenset(approved))
    return tuple(out)


def translated_approvals(inst, scheme, worth=None):
    if scheme == "mt":
        return translate_mt(inst)
    if scheme == "ct":
        if worth is None:
            raise ValueError("ct scheme needs a worth function")
        return translate_ct(inst, worth)
    raise ValueError(f"unknown translation scheme {scheme!r}")


def _welfare(f, approvals, members, cm):
    total = 0
    for a in approvals:
        inter = a & members
        if f == "card":
            total += len(inter)
        elif f == "cost":
            total += sum(cm[p] for p in inter)
        else:
            total += 1 if inter else 0
    return total


def dt_rule(inst, scheme, f, worth=None, max_m=ENUM_MAX_M):
    """Translate rankings to approvals, then list every feasible welfare
    maximizer for f in {card, cost, coverage}."""
    if f not in WELFARE_FUNCTIONS:
        raise ValueError(f"unknown welfare function {f!r}")
    if inst.m > max_m:
        raise InstanceTooLarge(f"m={inst.m} exceeds enumeration guard {max_m}")
    approvals = translated_approvals(inst, scheme, worth)
    cm = inst.cost_map
    order = [p.id for p in inst.projects]
    costs = [p.cost for p in inst.projects]
    best, arg = None, []
    for mask, cost in iter_feasible_masks(costs, inst.budget):
        members = frozenset(order[i] for i in range(inst.m) if mask >> i & 1)
        w = _welfare(f, approvals, members, cm)
        if best is None or w > best:
            best, arg = w, [FeasibleSet(members, cost)]
        elif w == best:
            arg.append(FeasibleSet(members, cost))
    return canonical_sets(arg)


def dt_card_optimum(inst, scheme, worth=None):
    """Polynomial path for f=card: knapsack over per-project approval counts."""
    approvals = translated_approvals(inst, scheme, worth)
    score = {p.id: sum(1 for a in approvals if p.id in a) for p in inst.projects}
    # dp[c] = best score at total cost exactly c
    dp = [0] + [None] * inst.budget
    for p in inst.projects:
        for c in range(inst.budget - p.cost, -1, -1):
            if dp[c] is not None:
                cand = dp[c] + score[p.id]
                tgt = c + p.cost
                if dp[tgt] is None or cand > dp[tgt]:
                    dp[tgt] = cand
    return max(v for v in dp if v is not None)


def ct_cost_dp(inst, worth, cell_cap=20_000_000):
    """Optimal f=cost welfare under the worth-function translation.

    Table over exact score columns (score(p) = approvers * cost), bounded
    by m * n * worth(1).
    """
    approvals = translate_ct(inst, worth)
    columns = inst.m * inst.n * (worth(1) if inst.m else 0)
    if inst.m * max(columns, 1) > cell_cap:
        raise ResourceBound(f"table of {inst.m * columns} cells exceeds cap {cell_cap}")
    score = {p.id: p.cost * sum(1 for a in approvals if p.id in a) for p in inst.projects}
    # score -> cheapest cost realizing it
    best = {0: 0}
    for p in inst.projects:
        additions = {}
        for s, c in best.items():
            nc = c + p.cost
            if nc > inst.budget:
                continue
            ns = s + score[p.id]
            floor = min(
                (x for x in (best.get(ns), additions.get(ns)) if x is not None),
                default=None,
            )
            if floor is None or nc < floor:
                additions[ns] = nc
        best.update(additions)
    return max(best)


def cc_utility(inst, voter, members):
    pref = inst.prefs[voter]
    ranks = [pref.rank(p) for p in members if pref.rank(p) is not None]
    return 0 if not ranks else inst.m - min(ranks)


def pb_cc(inst, max_m=ENUM_MAX_M):
    """All feasible sets maximizing the summed best-rank utility m - r."""
    if inst.m > max_m:
        raise InstanceTooLarge(f"m={inst.m} exceeds enumeration guard {max_m}")
    order = [p.id for p in inst.projects]
    costs = [p.cost for p in inst.projects]
    best, arg = None, []
    for mask, cost in iter_feasible_masks(costs, inst.budget):
        members = frozenset(order[i] for i in range(inst.m) if mask >> i & 1)
        w = sum(cc_utility(inst, i, members) for i in range(inst.n))
        if best is None or w > best:
            best, arg = w, [FeasibleSet(members, cost)]
        elif w == best:
            arg.append(FeasibleSet(members, cost))
    return canonical_sets(arg)


def rank_share(inst, voter, theta, s):
    """Smallest rank j such that S holds at least theta worth of the voter's
    first j classes; m+1 when S (or its ranked part) never reaches theta."""
    if not 1 <= theta <= inst.budget:
        raise ValueError(f"theta must lie in 1..{inst.budget}")
    members = s.members if isinstance(s, FeasibleSet) else frozenset(s)
    if inst.cost_of(members) < theta:
        return inst.m + 1
    pref = inst.prefs[voter]
    total = 0
    seen = 0
    for cls in pref.classes:
        total += inst.cost_of(cls & members)
        if total >= theta:
            return seen + 1  # shared rank of this class
        seen += len(cls)
    return inst.m + 1  # ranked part of S never reaches theta


def sg_score(inst, theta, members):
    fs = inst.make_set(members) if not isinstance(members, FeasibleSet) else members
    return sum(rank_share(inst, i, theta, fs) for i in range(inst.n))


def sg_rule(inst, theta, max_m=ENUM_MAX_M):
    """All feasible sets minimizing the summed share ranks for theta."""
    if inst.m > max_m:
        raise InstanceTooLarge(f"m={inst.m} exceeds enumeration guard {max_m}")
    order = [p.id for p in inst.projects]
    costs = [p.cost for p in inst.projects]
    best, arg = None, []
    for mask, cost in iter_feasible_masks(costs, inst.budget):
        members = frozenset(order[i] for i in range(inst.m) if mask >> i & 1)
        fs = FeasibleSet(members, cost)
        w = sum(rank_share(inst, i, theta, fs) for i in range(inst.n))
        if best is None or w < best:
            best, arg = w, [fs]
        elif w == best:
            arg.append(fs)
    return canonical_sets(arg)


@dataclass(frozen=True)
class ArgResult:
    theta: int
    sets: tuple
    condition_met: bool  # False when no share level passes the rank cap


def _sg_optimum(inst, theta):
    costs = [p.cost for p in inst.projects]
    best = None
    for mask, _ in iter_feasible_masks(costs, inst.budget):
        members = frozenset(inst.projects[i].id for i in range(inst.m) if mask >> i & 1)
        w = sg_score(inst, theta, members)
        if best is None or w < best:
            best = w
    return best


def arg_rule(inst, k, max_m=ENUM_MAX_M):
    """Largest share theta whose optimal total rank stays within k*n, then
    all optimal sets for it. The optimum is non-decreasing in theta, so a
    binary search replaces the descending scan."""
    if inst.m > max_m:
        raise InstanceTooLarge(f"m={inst.m} exceeds enumeration guard {max_m}")
    if not 1 <= k <= inst.m:
        raise ValueError(f"k must lie in 1..{inst.m}")
    cap = k * inst.n
    lo, hi = 1, inst.budget
    best_theta = None
    while lo <= hi:
        mid = (lo + hi) // 2
        if _sg_optimum(inst, mid) <= cap:
            best_theta = mid
            lo = mid + 1
        else:
            hi = mid - 1
    if best_theta is None:
        return ArgResult(1, tuple(sg_rule(inst, 1, max_m=max_m)), False)
    return ArgResult(best_theta, tuple(sg_rule(inst, best_theta, max_m=max_m)), True)
