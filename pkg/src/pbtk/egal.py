"""Egalitarian solvers for approval instances with fixed project costs.

Maxmin objective: pick a feasible set maximizing the smallest money-share
utility c(A_i ∩ S). The mirrored minmax objective minimizes the largest
shortfall b - c(A_i ∩ S); both share the same optimal sets. Exact paths are
subset enumeration and a distinct-vote dynamic program; the approximate
path rounds the LP relaxation greedily (ordered fill along c(p)·x*).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import simplex
from .core import (DichotomousInstance, FeasibleSet, Project, canonical_sets,
                   iter_feasible_masks)
from .errors import InstanceTooLarge, ResourceBound

ALL_OPTIMA_MAX_M = 20
ENUM_MAX_M = 25


@dataclass(frozen=True)
class MpbResult:
    optimal_value: int
    winning_sets: tuple  # all optima (canonical order) unless exhaustive=False
    winners: frozenset
    exhaustive: bool = True


@dataclass(frozen=True)
class LpSolution:
    x: dict  # project id -> Fraction in [0, 1]
    q: Fraction


@dataclass(frozen=True)
class OrderedFillBounds:
    l_o: int
    h_o: int


def _mask_to_set(inst, mask, cost):
    ids = [inst.projects[i].id for i in range(inst.m) if mask >> i & 1]
    return FeasibleSet(frozenset(ids), cost)


def _approval_masks(inst):
    index = {p.id: i for i, p in enumerate(inst.projects)}
    masks = []
    for a in inst.approvals:
        mk = 0
        for pid in a:
            mk |= 1 << index[pid]
        masks.append(mk)
    return masks


def _mask_min_utility(mask, approval_masks, costs):
    best = None
    for am in approval_masks:
        inter = mask & am
        u = 0
        while inter:
            lsb = inter & -inter
            u += costs[lsb.bit_length() - 1]
            inter ^= lsb
        if best is None or u < best:
            best = u
            if best == 0:
                break
    return best


def mpb_exact(inst, max_m=ENUM_MAX_M, all_optima_max_m=ALL_OPTIMA_MAX_M):
    """Exact maxmin value and its optimal feasible sets.

    Enumerates subsets for m <= max_m; above all_optima_max_m only one
    representative optimum is reported (exhaustive=False) because the
    irresolute outcome may be astronomically large.
    """
    if inst.m > max_m:
        raise InstanceTooLarge(f"m={inst.m} exceeds enumeration guard {max_m}")
    costs = [p.cost for p in inst.projects]
    amasks = _approval_masks(inst)
    keep_all = inst.m <= all_optima_max_m
    best = -1
    arg = []
    for mask, cost in iter_feasible_masks(costs, inst.budget):
        u = _mask_min_utility(mask, amasks, costs)
        if u > best:
            best = u
            arg = [(mask, cost)]
        elif u == best and keep_all:
            arg.append((mask, cost))
    sets = canonical_sets(_mask_to_set(inst, mk, c) for mk, c in arg)
    winners = frozenset(p for s in sets for p in s.members)
    return MpbResult(best, tuple(sets), winners, exhaustive=keep_all)


def solve_maxmin(inst, max_m=ENUM_MAX_M, **dp_kwargs):
    """Route to enumeration when m is small, else the distinct-vote DP."""
    if inst.m <= max_m:
        return mpb_exact(inst, max_m=max_m)
    return mpb_dp_distinct_votes(inst, **dp_kwargs)


def distinct_votes(inst):
    """Deduplicated approval ballots, in first-appearance order."""
    seen = []
    for a in inst.approvals:
        if a not in seen:
            seen.append(a)
    return seen


def mpb_dp_distinct_votes(inst, max_distinct=4, budget_cap=10_000, cell_cap=2_000_000):
    """Maxmin via a dynamic program over per-ballot utility vectors.

    State: vector of money-share utilities of the distinct ballots; value:
    cheapest cost realizing it, plus backpointers to recover one optimum.
    """
    votes = distinct_votes(inst)
    nhat = len(votes)
    if nhat > max_distinct:
        raise InstanceTooLarge(f"{nhat} distinct ballots exceed guard {max_distinct}")
    if inst.budget > budget_cap:
        raise ResourceBound(f"budget {inst.budget} exceeds guard {budget_cap}")
    zero = (0,) * nhat
    # state -> (cheapest cost, bitmask of chosen projects realizing it)
    states = {zero: (0, 0)}
    for j, proj in enumerate(inst.projects):
        delta = tuple(proj.cost if proj.id in votes[t] else 0 for t in range(nhat))
        additions = {}
        for vec, (cost, mask) in states.items():
            nc = cost + proj.cost
            if nc > inst.budget:
                continue
            nvec = tuple(v + d for v, d in zip(vec, delta))
            floor = min(
                (x[0] for x in (states.get(nvec), additions.get(nvec)) if x is not None),
                default=None,
            )
            if floor is None or nc < floor:
                additions[nvec] = (nc, mask | 1 << j)
        states.update(additions)
        if len(states) > cell_cap:
            raise ResourceBound(f"DP exceeded {cell_cap} cells")
    best_vec, best = None, -1
    for vec in states:
        u = min(vec)
        if u > best or (u == best and (best_vec is None or vec < best_vec)):
            best, best_vec = u, vec
    mask = states[best_vec][1]
    chosen = [inst.projects[j].id for j in range(inst.m) if mask >> j & 1]
    fs = inst.make_set(chosen)
    return MpbResult(best, (fs,), frozenset(fs.members), exhaustive=False)


def rescale_by_gcd(inst):
    """Divide all costs and the budget by their gcd; returns (inst', delta).

    delta is the largest project cost after rescaling; optima are unchanged
    because every subset cost scales uniformly.
    """
    values = [p.cost for p in inst.projects]
    if not any(values):
        raise ValueError("need at least one positive cost")
    g = math.gcd(inst.budget, *values)
    scaled = DichotomousInstance(
        inst.budget // g,
        tuple(Project(p.id, p.cost // g) for p in inst.projects),
        inst.approvals,
    )
    delta = max(p.cost for p in scaled.projects)
    return scaled, delta


def solve_mpb_relaxation(inst, max_size=200):
    """LP relaxation of the maxmin program: exact rational optimum.

    max q  s.t.  q <= sum_{p in A_i} c_p x_p  for each voter,
    sum c_p x_p <= b,  0 <= x <= 1.
    """
    if inst.m > max_size or inst.n > max_size:
        raise InstanceTooLarge(f"LP size guard {max_size} exceeded")
    m = inst.m
    cm = inst.cost_map
    # variables: x_0..x_{m-1}, q
    objective = [0] * m + [1]
    rows, rhs = [], []
    for a in inst.approvals:
        row = [-cm[p.id] if p.id in a else 0 for p in inst.projects] + [1]
        rows.append(row)
        rhs.append(0)
    rows.append([cm[p.id] for p in inst.projects] + [0])
    rhs.append(inst.budget)
    for i in range(m):
        row = [0] * (m + 1)
        row[i] = 1
        rows.append(row)
        rhs.append(1)
    value, x = simplex.solve_max(objective, rows, rhs)
    sol = {p.id: x[i] for i, p in enumerate(inst.projects)}
    return LpSolution(sol, value)


def ordered_fill(inst, order):
    """Greedy prefix fill: walk the order, stop at the first overflow."""
    ids = list(order)
    if sorted(ids) != sorted(p.id for p in inst.projects):
        raise ValueError("order must be a permutation of the project ids")
    cm = inst.cost_map
    chosen, total = [], 0
    for pid in ids:
        if total + cm[pid] > inst.budget:
            break
        chosen.append(pid)
        total += cm[pid]
    return FeasibleSet(frozenset(chosen), total)


def ordered_fill_bounds(inst):
    """Extremal prefix-fill sizes: descending-cost fill is smallest, ascending largest."""
    desc = sorted(inst.projects, key=lambda p: (-p.cost, p.id))
    asc = sorted(inst.projects, key=lambda p: (p.cost, p.id))
    l_o = len(ordered_fill(inst, [p.id for p in desc]).members)
    h_o = len(ordered_fill(inst, [p.id for p in asc]).members)
    return OrderedFillBounds(l_o, h_o)


def approval_size_bounds(inst):
    sizes = [len(a) for a in inst.approvals]
    return min(sizes), max(sizes)


def is_hcbp(inst):
    """High-cardinality budget property: every fill output outgrows every ballot."""
    _, h_a = approval_size_bounds(inst)
    return ordered_fill_bounds(inst).l_o > h_a


def ordered_relax(inst):
    """LP-rounding greedy: fill along descending c(p)·x*, ids break ties.

    Falls back to the ascending-cost fill when the relaxation puts zero
    weight everywhere (all scores tie at 0).
    """
    sol = solve_mpb_relaxation(inst)
    cm = inst.cost_map
    scores = {pid: cm[pid] * xv for pid, xv in sol.x.items()}
    if all(v == 0 for v in scores.values()):
        asc = sorted(inst.projects, key=lambda p: (p.cost, p.id))
        return ordered_fill(inst, [p.id for p in asc])
    order = sorted(scores, key=lambda pid: (-scores[pid], pid))
    return ordered_fill(inst, order)


def additive_bound_holds(inst, opt_value, s=None):
    """Check ALG >= OPT - |A_j \\ S|/|S \\ A_j| * (b - OPT) for the fill output.

    j is the worst-off voter under the output S. Vacuous (returns True)
    when S \\ A_j is empty, where the ratio is undefined.
    """
    if s is None:
        s = ordered_relax(inst)
    alg, j = _set_min_utility(inst, s)
    a_j = inst.approvals[j]
    denom = len(s.members - a_j)
    if denom == 0:
        return True
    eta = Fraction(len(a_j - s.members), denom)
    return Fraction(alg) >= Fraction(opt_value) - eta * (inst.budget - opt_value)


def _set_min_utility(inst, s):
    best_u, best_v = None, 0
    for i, a in enumerate(inst.approvals):
        u = inst.cost_of(a & s.members)
        if best_u is None or u < best_u:
            best_u, best_v = u, i
    return best_u, best_v


@dataclass(frozen=True)
class MinmaxResult:
    optimal_value: int  # smallest achievable maximum shortfall b - u_i(S)
    winning_sets: tuple
    winners: frozenset
    exhaustive: bool = True


def minmax_exact(inst, **kwargs):
    """Minimize the maximum shortfall; same optimal sets as the maxmin rule."""
    res = mpb_exact(inst, **kwargs)
    return MinmaxResult(inst.budget - res.optimal_value, res.winning_sets,
                        res.winners, res.exhaustive)


def minmax_value(inst, s):
    """Largest shortfall b - u_i(S) over voters."""
    worst, _ = _set_min_utility(inst, s)
    return inst.budget - worst


def minmax_ordered_relax(inst):
    """Greedy LP rounding for the shortfall objective.

    The relaxations of both objectives share their optimal x*, so the same
    fill applies; only the reported value differs.
    """
    s = ordered_relax(inst)
    return s, minmax_value(inst, s)
