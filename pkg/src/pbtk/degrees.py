"""Welfare rules for projects with several permissible funding levels.

Each project has an increasing list of degree costs (degree 0 = unfunded,
cost 0); voters report a per-project interval [L, H] of acceptable costs
drawn from that list. A valid outcome picks exactly one degree per project
with total cost within budget.

Four welfare notions:
  cardinal   - count projects funded inside the voter's interval;
  cost       - sum the funded amounts inside the interval;
  capped     - like cost, but overshooting pays out H instead of 0;
  distance   - penalty |funded - nearest acceptable|, to be minimized.

Exact solvers share one score-column dynamic program; the approximation
schemes round scores before running the same table.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameter, ResourceBound


@dataclass(frozen=True)
class DegreeInstance:
    budget: int
    degree_costs: tuple  # per project: strictly increasing positive costs (degree 0 implicit)
    lower: tuple  # per voter: tuple of per-project lower bounds
    upper: tuple  # per voter: tuple of per-project upper bounds

    def __post_init__(self):
        object.__setattr__(self, "degree_costs", tuple(tuple(c) for c in self.degree_costs))
        object.__setattr__(self, "lower", tuple(tuple(v) for v in self.lower))
        object.__setattr__(self, "upper", tuple(tuple(v) for v in self.upper))
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        for j, costs in enumerate(self.degree_costs):
            if list(costs) != sorted(set(costs)) or (costs and costs[0] < 1):
                raise ValueError(f"project {j}: degree costs must be strictly increasing, >= 1")
        if len(self.lower) != len(self.upper) or not self.lower:
            raise ValueError("need matching lower/upper bounds for at least one voter")
        for i, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if len(lo) != self.m or len(hi) != self.m:
                raise ValueError(f"voter {i}: bounds must cover every project")
            for j in range(self.m):
                allowed = {0, *self.degree_costs[j]}
                if lo[j] not in allowed or hi[j] not in allowed:
                    raise ValueError(f"voter {i}, project {j}: bounds outside the degree cost set")
                if lo[j] > hi[j]:
                    raise ValueError(f"voter {i}, project {j}: lower bound exceeds upper bound")

    @property
    def m(self):
        return len(self.degree_costs)

    @property
    def n(self):
        return len(self.lower)

    def degree_count(self, j):
        return len(self.degree_costs[j])

    def cost(self, j, t):
        """Cost of degree t of project j (t = 0 means unfunded)."""
        return 0 if t == 0 else self.degree_costs[j][t - 1]

    @property
    def t_star(self):
        return max(self.degree_count(j) for j in range(self.m))

    def valid_set(self, degrees):
        degrees = tuple(degrees)
        total = sum(self.cost(j, t) for j, t in enumerate(degrees))
        if total > self.budget:
            raise ValueError("assignment exceeds the budget")
        return ValidSet(degrees, total)

    def iter_valid_sets(self, cap=None):
        ranges = [range(self.degree_count(j) + 1) for j in range(self.m)]
        count = math.prod(len(r) for r in ranges)
        if cap is not None and count > cap:
            raise ResourceBound(f"{count} assignments exceed cap {cap}")
        for degrees in itertools.product(*ranges):
            total = sum(self.cost(j, t) for j, t in enumerate(degrees))
            if total <= self.budget:
                yield ValidSet(tuple(degrees), total)


@dataclass(frozen=True)
class ValidSet:
    degrees: tuple  # chosen degree index per project, 0 = unfunded
    total_cost: int


def cardinal_total(inst, vs):
    total = 0
    for i in range(inst.n):
        for j, t in enumerate(vs.degrees):
            c = inst.cost(j, t)
            if t != 0 and inst.lower[i][j] <= c <= inst.upper[i][j]:
                total += 1
    return total


def cost_total(inst, vs):
    total = 0
    for i in range(inst.n):
        for j, t in enumerate(vs.degrees):
            c = inst.cost(j, t)
            if inst.lower[i][j] <= c <= inst.upper[i][j]:
                total += c
    return total


def capped_total(inst, vs):
    total = 0
    for i in range(inst.n):
        for j, t in enumerate(vs.degrees):
            c = inst.cost(j, t)
            lo, hi = inst.lower[i][j], inst.upper[i][j]
            if c < lo:
                continue
            total += c if c <= hi else hi
    return total


def distance_total(inst, vs):
    total = 0
    for i in range(inst.n):
        for j, t in enumerate(vs.degrees):
            c = inst.cost(j, t)
            lo, hi = inst.lower[i][j], inst.upper[i][j]
            if c < lo:
                total += lo - c
            elif c > hi:
                total += c - hi
    return total


def _within_count(inst, j, c):
    return sum(1 for i in range(inst.n) if inst.lower[i][j] <= c <= inst.upper[i][j])


def degree_score_tables(inst, rule):
    """Per-(project, degree) total score under the given welfare notion.

    Index [j][t] with t = 0 meaning unfunded; for the distance notion the
    entries are penalties (lower is better).
    """
    tables = []
    for j in range(inst.m):
        row = []
        for t in range(inst.degree_count(j) + 1):
            c = inst.cost(j, t)
            if rule == "cardinal":
                row.append(0 if t == 0 else _within_count(inst, j, c))
            elif rule == "cost":
                row.append(0 if t == 0 else c * _within_count(inst, j, c))
            elif rule == "capped":
                s = 0
                if t != 0:
                    for i in range(inst.n):
                        lo, hi = inst.lower[i][j], inst.upper[i][j]
                        if c >= lo:
                            s += c if c <= hi else hi
                row.append(s)
            elif rule == "distance":
                s = 0
                for i in range(inst.n):
                    lo, hi = inst.lower[i][j], inst.upper[i][j]
                    if c < lo:
                        s += lo - c
                    elif c > hi:
                        s += c - hi
                row.append(s)
            else:
                raise ValueError(f"unknown rule {rule!r}")
        tables.append(row)
    return tables


def _suffix_reachable(scores, costs, budget):
    """For each suffix start j: {score achievable by projects j..m-1 -> min cost}."""
    m = len(scores)
    suffix = [dict() for _ in range(m + 1)]
    suffix[m] = {0: 0}
    for j in range(m - 1, -1, -1):
        cur = {}
        for s, c in suffix[j + 1].items():
            for t, st in enumerate(scores[j]):
                nc = c + costs[j][t]
                if nc > budget:
                    continue
                ns = s + st
                if ns not in cur or nc < cur[ns]:
                    cur[ns] = nc
        suffix[j] = cur
    return suffix


def optimize_scores(inst, scores, maximize=True):
    """Optimal valid set for additive per-degree scores.

    Returns the lexicographically least degree vector among the optima;
    a suffix-reachability table drives that reconstruction.
    """
    costs = [[inst.cost(j, t) for t in range(inst.degree_count(j) + 1)]
             for j in range(inst.m)]
    suffix = _suffix_reachable(scores, costs, inst.budget)
    pick = max if maximize else min
    target = pick(suffix[0])
    degrees = []
    remaining_score, budget_left = target, inst.budget
    for j in range(inst.m):
        for t in range(inst.degree_count(j) + 1):
            ns = remaining_score - scores[j][t]
            nc = budget_left - costs[j][t]
            if nc >= 0 and ns in suffix[j + 1] and suffix[j + 1][ns] <= nc:
                degrees.append(t)
                remaining_score, budget_left = ns, nc
                break
        else:
            raise AssertionError("reconstruction failed")
    return inst.valid_set(degrees), target


def solve_r_card(inst):
    """Maximize the number of (voter, project) pairs funded inside bounds."""
    vs, _ = optimize_scores(inst, degree_score_tables(inst, "cardinal"))
    return vs


def solve_r_cost_exact(inst, table_cap=5_000_000):
    """Maximize total in-bounds funding; score columns bounded by n*b."""
    if inst.n * max(inst.budget, 1) > table_cap:
        raise ResourceBound(f"n*b = {inst.n * inst.budget} exceeds cap {table_cap}")
    vs, _ = optimize_scores(inst, degree_score_tables(inst, "cost"))
    return vs


def _eliminate_unaffordable(scores, costs_of, budget):
    return [
        [s if costs_of(j, t) <= budget else (0 if t == 0 else None)
         for t, s in enumerate(row)]
        for j, row in enumerate(scores)
    ]


def _rounded(scores, factor):
    return [[None if s is None else int(Fraction(s) * factor) for s in row] for row in scores]


def _optimize_masked(inst, scores, maximize=True):
    """optimize_scores over score tables where None marks a forbidden degree."""
    usable = [[(t, s) for t, s in enumerate(row) if s is not None] for row in scores]
    costs = [[inst.cost(j, t) for t, _ in usable[j]] for j in range(inst.m)]
    svals = [[s for _, s in usable[j]] for j in range(inst.m)]
    suffix = _suffix_reachable(svals, costs, inst.budget)
    pick = max if maximize else min
    target = pick(suffix[0])
    degrees = []
    remaining_score, budget_left = target, inst.budget
    for j in range(inst.m):
        for k, (t, s) in enumerate(usable[j]):
            ns = remaining_score - s
            nc = budget_left - costs[j][k]
            if nc >= 0 and ns in suffix[j + 1] and suffix[j + 1][ns] <= nc:
                degrees.append(t)
                remaining_score, budget_left = ns, nc
                break
        else:
            raise AssertionError("reconstruction failed")
    return inst.valid_set(degrees)


def solve_r_cost_fptas(inst, eps):
    """(1-eps)-approximation for the cost rule via score rounding."""
    return _fptas_max(inst, "cost", eps)


def _fptas_max(inst, rule, eps):
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    scores = degree_score_tables(inst, rule)
    scores = _eliminate_unaffordable(scores, inst.cost, inst.budget)
    big = max((s for row in scores for s in row if s is not None), default=0)
    if big == 0:
        return inst.valid_set([0] * inst.m)
    factor = Fraction(inst.m, 1) / (eps * big)
    return _optimize_masked(inst, _rounded(scores, factor), maximize=True)


def solve_r_cap(inst, mode="exact", eps=None, table_cap=5_000_000):
    """Capped-cost welfare: overshooting a voter's bound still pays out H."""
    if mode == "exact":
        if inst.n * max(inst.budget, 1) > table_cap:
            raise ResourceBound(f"n*b = {inst.n * inst.budget} exceeds cap {table_cap}")
        vs, _ = optimize_scores(inst, degree_score_tables(inst, "capped"))
        return vs
    if mode == "fptas":
        return _fptas_max(inst, "capped", eps)
    raise ValueError(f"unknown mode {mode!r}")


def disutility_stats(inst):
    """(q_max, q_sigma): largest per-degree penalty and sum of per-project minima."""
    scores = degree_score_tables(inst, "distance")
    q_max = max(s for row in scores for s in row)
    q_sigma = sum(min(row) for row in scores)
    return q_max, q_sigma


def variance_coefficient(inst):
    q_max, q_sigma = disutility_stats(inst)
    if q_sigma == 0:
        raise DegenerateParameter("zero minimum total penalty: ratio undefined")
    return Fraction(q_max, q_sigma)


def solve_r_dist(inst, mode="exact", eps=None):
    """Minimize total distance penalty; 'pfptas' guarantees (1+eps)*OPT.

    The rounded scheme divides by the sum of per-project minimum penalties,
    so a zero sum raises DegenerateParameter; callers fall back to exact.
    """
    scores = degree_score_tables(inst, "distance")
    if mode == "exact":
        vs, _ = optimize_scores(inst, scores, maximize=False)
        return vs
    if mode == "pfptas":
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        _, q_sigma = disutility_stats(inst)
        if q_sigma == 0:
            raise DegenerateParameter("zero minimum total penalty; use exact mode")
        factor = Fraction(inst.m, 1) / (eps * q_sigma)
        vs, _ = optimize_scores(inst, _rounded(scores, factor), maximize=False)
        return vs
    raise ValueError(f"unknown mode {mode!r}")


def degree_scalable_limit(inst):
    """gcd-rescaled instance and its largest scaled degree cost."""
    values = [c for row in inst.degree_costs for c in row]
    if not values:
        raise ValueError("need at least one degree cost")
    g = math.gcd(inst.budget, *values)
    scaled = DegreeInstance(
        inst.budget // g,
        tuple(tuple(c // g for c in row) for row in inst.degree_costs),
        tuple(tuple(v // g for v in row) for row in inst.lower),
        tuple(tuple(v // g for v in row) for row in inst.upper),
    )
    delta = max(c for row in scaled.degree_costs for c in row)
    return scaled, delta
