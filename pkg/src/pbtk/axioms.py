"""Transformation harness: falsify or fail-to-falsify axioms per instance.

An axiom check enumerates every bounded well-formed transformation of the
given instance (splits into at most 3 parts, unit discounts, unit budget
raises, adjacent-class swaps, bound shifts) and tests the axiom's clause
against the rule's full maximizer set. Verdicts are per instance:
'violated' comes with a replayable witness; otherwise the report says
'satisfied-on-instance' - universally quantified axioms are never proved,
only survived.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import DichotomousInstance, Project, WeakOrdinalPreference
from .degrees import (DegreeInstance, capped_total, cardinal_total, cost_total,
                      distance_total)
from .errors import IllFormedTransformation
from .ordinal import OrdinalInstance, translated_approvals

APPROVAL_AXIOMS = (
    "splitting", "merging", "discount", "limit", "strong-exhaustiveness",
    "weak-exhaustiveness", "narrow-top", "clone-independence",
    "maximal-coverage", "inclusion-maximality", "anonymity", "neutrality",
    "consistency",
)
ORDINAL_AXIOMS = (
    "splitting", "discount", "limit", "inclusion-maximality",
    "candidate-monotonicity", "non-crossing-monotonicity", "anonymity",
    "neutrality", "consistency", "pro-affordability",
)
DEGREE_AXIOMS = (
    "shrink-resistance", "discount-proofness", "range-abidingness",
    "range-convergingness", "range-unanimity", "degree-efficiency",
    "lower-bound-sensitivity", "upper-bound-sensitivity",
)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    rule: str
    verdict: str  # 'violated' | 'satisfied-on-instance'
    witness: dict | None = None

    @property
    def violated(self):
        return self.verdict == "violated"


# ---------------------------------------------------------------------------
# fast approval-welfare evaluation over subset masks


class _ApprovalTables:
    """Per-subset utilities for one approval instance, built incrementally."""

    def __init__(self, inst):
        self.inst = inst
        m = inst.m
        self.ids = [p.id for p in inst.projects]
        self.costs = [p.cost for p in inst.projects]
        index = {pid: i for i, pid in enumerate(self.ids)}
        self.amasks = []
        for a in inst.approvals:
            mk = 0
            for pid in a:
                mk |= 1 << index[pid]
            self.amasks.append(mk)
        size = 1 << m
        cost = [0] * size
        for mask in range(1, size):
            lsb = mask & -mask
            cost[mask] = cost[mask ^ lsb] + self.costs[lsb.bit_length() - 1]
        self.cost = cost
        self.feasible = [mask for mask in range(size) if cost[mask] <= inst.budget]

    def members(self, mask):
        return frozenset(self.ids[i] for i in range(self.inst.m) if mask >> i & 1)

    def maximizer_masks(self, value):
        best, arg = None, []
        for mask in self.feasible:
            v = value(mask)
            if best is None or v > best:
                best, arg = v, [mask]
            elif v == best:
                arg.append(mask)
        return arg

    def welfare_value(self, f):
        if f in ("card", "cost"):
            weights = [0] * self.inst.m
            for i in range(self.inst.m):
                approvers = sum(1 for am in self.amasks if am >> i & 1)
                weights[i] = approvers * (self.costs[i] if f == "cost" else 1)
            size = 1 << self.inst.m
            score = [0] * size
            for mask in range(1, size):
                lsb = mask & -mask
                score[mask] = score[mask ^ lsb] + weights[lsb.bit_length() - 1]
            return lambda mask: score[mask]
        if f == "coverage":
            return lambda mask: sum(1 for am in self.amasks if am & mask)
        if f == "maxmin":
            costs = self.costs

            def value(mask):
                worst = None
                for am in self.amasks:
                    inter = mask & am
                    u = 0
                    while inter:
                        lsb = inter & -inter
                        u += costs[lsb.bit_length() - 1]
                        inter ^= lsb
                    if worst is None or u < worst:
                        worst = u
                        if worst == 0:
                            break
                return worst

            return value
        raise ValueError(f"unknown welfare {f!r}")


def approval_outcomes(inst, objective):
    tables = _ApprovalTables(inst)
    masks = tables.maximizer_masks(tables.welfare_value(objective))
    return sorted((tables.members(mk) for mk in masks), key=lambda s: tuple(sorted(s)))


# ---------------------------------------------------------------------------
# rule adapters


@dataclass(frozen=True)
class Rule:
    """Uniform harness interface: full maximizer collection per instance."""

    name: str
    model: str  # 'approval' | 'ordinal' | 'degree'
    fn: object

    def outcomes(self, inst):
        return self.fn(inst)

    def winners(self, inst):
        out = set()
        for s in self.outcomes(inst):
            out |= set(s)
        return out


def welfare_rule(f):
    return Rule(f"R[{f}]", "approval", lambda inst: approval_outcomes(inst, f))


def mpb_rule():
    return Rule("maxmin", "approval", lambda inst: approval_outcomes(inst, "maxmin"))


def _ordinal_outcomes(inst, scheme, f, worth):
    if worth is not None:
        worth = worth.extended(inst.m)
    approvals = translated_approvals(inst, scheme, worth)
    approval_inst = DichotomousInstance(inst.budget, inst.projects, approvals)
    return approval_outcomes(approval_inst, f)


def translation_rule(scheme, f, worth=None):
    tag = f"<{scheme.upper()},{f}>"
    return Rule(tag, "ordinal",
                lambda inst: _ordinal_outcomes(inst, scheme, f, worth))


def _pbcc_outcomes(inst):
    tables = _ApprovalTables(
        DichotomousInstance(inst.budget, inst.projects,
                            tuple(p.ranked for p in inst.prefs)))
    m = inst.m
    size = 1 << m
    # per-voter best rank per mask, incrementally
    per_voter = []
    for pref in inst.prefs:
        ranks = [pref.rank(pid) for pid in tables.ids]
        best = [m + 1] * size
        for mask in range(1, size):
            lsb = mask & -mask
            r = ranks[lsb.bit_length() - 1]
            best[mask] = min(best[mask ^ lsb], m + 1 if r is None else r)
        per_voter.append(best)

    def value(mask):
        total = 0
        for best in per_voter:
            r = best[mask]
            if r <= m:
                total += m - r
        return total

    masks = tables.maximizer_masks(value)
    return sorted((tables.members(mk) for mk in masks), key=lambda s: tuple(sorted(s)))


def pbcc_rule():
    return Rule("best-representative", "ordinal", _pbcc_outcomes)


def degree_rule(objective):
    totals = {"card": cardinal_total, "cost": cost_total,
              "capped": capped_total, "dist": distance_total}
    total = totals[objective]
    sign = -1 if objective == "dist" else 1

    def outcomes(inst):
        best, arg = None, []
        for vs in inst.iter_valid_sets():
            v = sign * total(inst, vs)
            if best is None or v > best:
                best, arg = v, [vs]
            elif v == best:
                arg.append(vs)
        return sorted(arg, key=lambda s: s.degrees)

    return Rule(f"R[{objective}]", "degree", outcomes)


# ---------------------------------------------------------------------------
# transformations


@dataclass(frozen=True)
class Transformation:
    kind: str
    payload: tuple = ()


def _split_project(inst, pid, parts):
    """Replace pid by new projects with the given cost composition."""
    cm = {p.id: p.cost for p in inst.projects}
    if pid not in cm:
        raise IllFormedTransformation(f"unknown project {pid}")
    if sum(parts) != cm[pid] or any(c < 1 for c in parts):
        raise IllFormedTransformation("split must preserve total cost with positive parts")
    new_ids = tuple(f"{pid}#{i+1}" for i in range(len(parts)))
    projects = tuple(p for p in inst.projects if p.id != pid) + tuple(
        Project(nid, c) for nid, c in zip(new_ids, parts))
    if isinstance(inst, DichotomousInstance):
        approvals = tuple(
            (a - {pid}) | set(new_ids) if pid in a else a for a in inst.approvals)
        return DichotomousInstance(inst.budget, projects, approvals), new_ids
    prefs = []
    for pref in inst.prefs:
        classes = tuple(
            (cls - {pid}) | set(new_ids) if pid in cls else cls for cls in pref.classes)
        prefs.append(WeakOrdinalPreference(classes))
    return OrdinalInstance(inst.budget, projects, tuple(prefs)), new_ids


def _merge_projects(inst, group, new_id):
    cm = {p.id: p.cost for p in inst.projects}
    group = frozenset(group)
    if not group <= set(cm):
        raise IllFormedTransformation("unknown projects in merge group")
    for a in inst.approvals:
        if a & group not in (frozenset(), group):
            raise IllFormedTransformation("merge needs all-or-nothing approvals")
    total = sum(cm[p] for p in group)
    projects = tuple(p for p in inst.projects if p.id not in group) + (
        Project(new_id, total),)
    approvals = tuple(
        (a - group) | {new_id} if group <= a else a for a in inst.approvals)
    return DichotomousInstance(inst.budget, projects, approvals)


def _discount(inst, pid):
    cm = {p.id: p.cost for p in inst.projects}
    if cm.get(pid, 0) < 2:
        raise IllFormedTransformation("discount needs cost >= 2")
    projects = tuple(
        Project(p.id, p.cost - 1) if p.id == pid else p for p in inst.projects)
    if isinstance(inst, DichotomousInstance):
        return DichotomousInstance(inst.budget, projects, inst.approvals)
    return OrdinalInstance(inst.budget, projects, inst.prefs)


def _budget_increase(inst):
    if any(p.cost == inst.budget + 1 for p in inst.projects):
        raise IllFormedTransformation("a project costs exactly budget+1")
    if isinstance(inst, DichotomousInstance):
        return DichotomousInstance(inst.budget + 1, inst.projects, inst.approvals)
    return OrdinalInstance(inst.budget + 1, inst.projects, inst.prefs)


def _rank_swap(inst, voter, x, x_prime):
    """Exchange x with x_prime sitting in the class directly above it."""
    pref = inst.prefs[voter]
    j = next((k for k, cls in enumerate(pref.classes) if x in cls), None)
    if j is None or j == 0 or x_prime not in pref.classes[j - 1]:
        raise IllFormedTransformation("swap needs x below x' in adjacent classes")
    classes = list(pref.classes)
    classes[j - 1] = (classes[j - 1] - {x_prime}) | {x}
    classes[j] = (classes[j] - {x}) | {x_prime}
    prefs = list(inst.prefs)
    prefs[voter] = WeakOrdinalPreference(tuple(classes))
    return OrdinalInstance(inst.budget, inst.projects, tuple(prefs))


def _degree_discount(inst, j, t):
    costs = inst.degree_costs[j]
    if t < 1 or t > len(costs):
        raise IllFormedTransformation("no such degree")
    old = costs[t - 1]
    floor = costs[t - 2] if t >= 2 else 0
    if old - 1 <= floor:
        raise IllFormedTransformation("discount would collide with the next degree down")
    new_costs = tuple(c - 1 if k == t - 1 else c for k, c in enumerate(costs))
    rows = list(inst.degree_costs)
    rows[j] = new_costs
    # bounds equal to the old value track it down
    lower = tuple(tuple(v - 1 if (jj == j and v == old) else v for jj, v in enumerate(row))
                  for row in inst.lower)
    upper = tuple(tuple(v - 1 if (jj == j and v == old) else v for jj, v in enumerate(row))
                  for row in inst.upper)
    return DegreeInstance(inst.budget, tuple(rows), lower, upper)


def apply(transformation, inst):
    """Apply a well-formed transformation; raises IllFormedTransformation."""
    kind, payload = transformation.kind, transformation.payload
    if kind == "split":
        return _split_project(inst, payload[0], payload[1])[0]
    if kind == "merge":
        return _merge_projects(inst, payload[0], payload[1])
    if kind == "discount":
        return _discount(inst, payload[0])
    if kind == "budget_increase":
        return _budget_increase(inst)
    if kind == "rank_swap":
        return _rank_swap(inst, *payload)
    if kind == "degree_discount":
        return _degree_discount(inst, *payload)
    if kind == "bound_shift":
        voter, j, lo, hi = payload
        lower = tuple(tuple(lo if jj == j else v for jj, v in enumerate(row))
                      if i == voter else row for i, row in enumerate(inst.lower))
        upper = tuple(tuple(hi if jj == j else v for jj, v in enumerate(row))
                      if i == voter else row for i, row in enumerate(inst.upper))
        return DegreeInstance(inst.budget, inst.degree_costs, lower, upper)
    raise IllFormedTransformation(f"unknown transformation {kind!r}")


def _compositions(total, parts):
    """Ordered compositions of total into exactly `parts` positive integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# axiom checks: fixed-cost models (approval and ranked)


def _report(axiom, rule, witness=None):
    verdict = "violated" if witness is not None else "satisfied-on-instance"
    return AxiomReport(axiom, rule.name, verdict, witness)


def _cost_map(inst):
    return {p.id: p.cost for p in inst.projects}


def _check_splitting(rule, inst, max_parts=3, part_cap=None):
    winners = rule.winners(inst)
    for pid in sorted(winners):
        cost = _cost_map(inst)[pid]
        for parts in range(2, max_parts + 1):
            if cost < parts:
                continue
            comps = list(_compositions(cost, parts))
            if part_cap is not None:
                comps = comps[:part_cap]
            for comp in comps:
                t = Transformation("split", (pid, comp))
                new_inst = apply(t, inst)
                new_ids = {f"{pid}#{i+1}" for i in range(parts)}
                if not (rule.winners(new_inst) & new_ids):
                    return {"transformation": t, "project": pid}
    return None


def _check_merging(rule, inst):
    """Merge groups drawn from within a single winning set (spanning two
    optima merges projects that never co-win, which the axiom's own
    replacement argument cannot cover)."""
    tried = set()
    for s in rule.outcomes(inst):
        members = sorted(s)
        for r in range(2, len(members) + 1):
            for group in itertools.combinations(members, r):
                gset = frozenset(group)
                if gset in tried:
                    continue
                tried.add(gset)
                if not all(a & gset in (frozenset(), gset) for a in inst.approvals):
                    continue
                t = Transformation("merge", (gset, "+".join(group)))
                new_inst = apply(t, inst)
                if "+".join(group) not in rule.winners(new_inst):
                    return {"transformation": t, "group": group}
    return None


def _check_discount(rule, inst):
    for pid in sorted(rule.winners(inst)):
        if _cost_map(inst)[pid] < 2:
            continue
        t = Transformation("discount", (pid,))
        if pid not in rule.winners(apply(t, inst)):
            return {"transformation": t, "project": pid}
    return None


def _check_limit(rule, inst):
    if any(p.cost == inst.budget + 1 for p in inst.projects):
        return None  # precondition fails; axiom silent here
    t = Transformation("budget_increase")
    before = rule.winners(inst)
    after = rule.winners(apply(t, inst))
    dropped = before - after
    if dropped:
        return {"transformation": t, "dropped": sorted(dropped)}
    return None


def _check_strong_exhaustiveness(rule, inst):
    cm = _cost_map(inst)
    for s in rule.outcomes(inst):
        used = sum(cm[p] for p in s)
        for pid in cm:
            if pid not in s and used + cm[pid] <= inst.budget:
                return {"set": tuple(sorted(s)), "addable": pid}
    return None


def _check_weak_exhaustiveness(rule, inst):
    cm = _cost_map(inst)
    outcomes = [frozenset(s) for s in rule.outcomes(inst)]
    chosen = set(outcomes)
    for s in outcomes:
        used = sum(cm[p] for p in s)
        for pid in cm:
            if pid not in s and used + cm[pid] <= inst.budget:
                if s | {pid} not in chosen:
                    return {"set": tuple(sorted(s)), "added": pid}
    return None


def _check_narrow_top(rule, inst):
    common = set.intersection(*(set(a) for a in inst.approvals))
    if not common:
        return None
    winners = rule.winners(inst)
    missing = sorted(common - winners)
    if missing:
        return {"unanimous-but-losing": missing}
    return None


def _check_clone_independence(rule, inst):
    base = {frozenset(s) for s in rule.outcomes(inst)}
    # collapse duplicated ballots
    deduped = []
    for a in inst.approvals:
        if a not in deduped:
            deduped.append(a)
    if len(deduped) != inst.n:
        collapsed = DichotomousInstance(inst.budget, inst.projects, tuple(deduped))
        if {frozenset(s) for s in rule.outcomes(collapsed)} != base:
            return {"direction": "collapse"}
    # duplicating each ballot once
    for i in range(inst.n):
        doubled = DichotomousInstance(
            inst.budget, inst.projects, inst.approvals + (inst.approvals[i],))
        if {frozenset(s) for s in rule.outcomes(doubled)} != base:
            return {"direction": "duplicate", "voter": i}
    return None


def _check_maximal_coverage(rule, inst):
    cm = _cost_map(inst)
    winners = rule.winners(inst)
    uncovered = [i for i, a in enumerate(inst.approvals) if not (a & winners)]
    if not uncovered:
        return None
    for s in rule.outcomes(inst):
        covered = {i for i, a in enumerate(inst.approvals) if a & s}
        for pid in s:
            rest = frozenset(s) - {pid}
            still = {i for i, a in enumerate(inst.approvals) if a & rest}
            if still != covered:
                continue  # pid is not redundant
            leftover = inst.budget - sum(cm[p] for p in rest)
            for i in uncovered:
                cheap = [a for a in inst.approvals[i] if cm[a] <= leftover]
                if cheap:
                    return {"set": tuple(sorted(s)), "redundant": pid,
                            "voter": i, "affordable": sorted(cheap)}
    return None


def _check_inclusion_maximality(rule, inst):
    cm = _cost_map(inst)
    outcomes = [frozenset(s) for s in rule.outcomes(inst)]
    chosen = set(outcomes)
    others = [p.id for p in inst.projects]
    for s in outcomes:
        spare = [p for p in others if p not in s]
        for r in range(1, len(spare) + 1):
            for extra in itertools.combinations(spare, r):
                sup = s | set(extra)
                if sum(cm[p] for p in sup) <= inst.budget and sup not in chosen:
                    return {"set": tuple(sorted(s)), "superset": tuple(sorted(sup))}
    return None


def _permuted_instance(inst, perm):
    if isinstance(inst, DichotomousInstance):
        return DichotomousInstance(
            inst.budget, inst.projects, tuple(inst.approvals[i] for i in perm))
    return OrdinalInstance(
        inst.budget, inst.projects, tuple(inst.prefs[i] for i in perm))


def _check_anonymity(rule, inst, cap=24):
    base = {frozenset(s) for s in rule.outcomes(inst)}
    perms = itertools.islice(itertools.permutations(range(inst.n)), cap)
    for perm in perms:
        if {frozenset(s) for s in rule.outcomes(_permuted_instance(inst, perm))} != base:
            return {"permutation": perm}
    return None


def _relabel(inst, mapping):
    projects = tuple(
        Project(mapping[p.id], p.cost)
        for p in sorted(inst.projects, key=lambda p: mapping[p.id]))
    if isinstance(inst, DichotomousInstance):
        approvals = tuple(frozenset(mapping[p] for p in a) for a in inst.approvals)
        return DichotomousInstance(inst.budget, projects, approvals)
    prefs = tuple(
        WeakOrdinalPreference(tuple(frozenset(mapping[p] for p in cls)
                                    for cls in pref.classes))
        for pref in inst.prefs)
    return OrdinalInstance(inst.budget, projects, prefs)


def _check_neutrality(rule, inst, cap=24):
    ids = sorted(p.id for p in inst.projects)
    base = {frozenset(s) for s in rule.outcomes(inst)}
    perms = itertools.islice(itertools.permutations(ids), cap)
    for perm in perms:
        mapping = dict(zip(ids, perm))
        relabeled = _relabel(inst, mapping)
        expect = {frozenset(mapping[p] for p in s) for s in base}
        if {frozenset(s) for s in rule.outcomes(relabeled)} != expect:
            return {"relabeling": mapping}
    return None


def _sub_instance(inst, voters):
    if isinstance(inst, DichotomousInstance):
        return DichotomousInstance(
            inst.budget, inst.projects, tuple(inst.approvals[i] for i in voters))
    return OrdinalInstance(
        inst.budget, inst.projects, tuple(inst.prefs[i] for i in voters))


def _check_consistency(rule, inst, cap=32):
    if inst.n < 2:
        return None
    base = {frozenset(s) for s in rule.outcomes(inst)}
    seen = 0
    for r in range(1, inst.n):
        for left in itertools.combinations(range(inst.n), r):
            right = tuple(i for i in range(inst.n) if i not in left)
            seen += 1
            if seen > cap:
                return None
            out_l = {frozenset(s) for s in rule.outcomes(_sub_instance(inst, left))}
            out_r = {frozenset(s) for s in rule.outcomes(_sub_instance(inst, right))}
            joint = out_l & out_r
            if joint and not joint <= base:
                return {"left": left, "right": right,
                        "missing": sorted(tuple(sorted(s)) for s in joint - base)}
    return None


def _check_candidate_monotonicity(rule, inst):
    for x in sorted(rule.winners(inst)):
        for voter, pref in enumerate(inst.prefs):
            for j, cls in enumerate(pref.classes):
                if x not in cls or j == 0:
                    continue
                for x_prime in sorted(pref.classes[j - 1]):
                    t = Transformation("rank_swap", (voter, x, x_prime))
                    if x not in rule.winners(apply(t, inst)):
                        return {"transformation": t, "project": x}
    return None


def _check_non_crossing(rule, inst):
    outcomes = [frozenset(s) for s in rule.outcomes(inst)]
    for s in outcomes:
        for x in sorted(s):
            for voter, pref in enumerate(inst.prefs):
                for j, cls in enumerate(pref.classes):
                    if x not in cls or j == 0:
                        continue
                    for x_prime in sorted(pref.classes[j - 1]):
                        if x_prime in s:
                            continue
                        t = Transformation("rank_swap", (voter, x, x_prime))
                        new_out = {frozenset(o) for o in rule.outcomes(apply(t, inst))}
                        if s not in new_out:
                            return {"transformation": t, "set": tuple(sorted(s))}
    return None


def _check_pro_affordability(rule, inst):
    cm = _cost_map(inst)
    winners = rule.winners(inst)
    for x in sorted(winners):
        for p in inst.projects:
            if p.id == x or p.cost >= cm[x]:
                continue
            if all(pref.prefers(p.id, x) for pref in inst.prefs):
                if p.id not in winners:
                    return {"winner": x, "cheaper-preferred": p.id}
    return None


# ---------------------------------------------------------------------------
# axiom checks: degree model (maximizer semantics throughout)


def _deg_outcome_key(vs):
    return vs.degrees


def _shrink_shifts(inst, voter, j, c):
    """Bound shifts toward c that leave every other funding level's
    acceptability (for this voter) unchanged; crossing past c or flipping
    another level would be a different vote, not a tightening."""
    lo, hi = inst.lower[voter][j], inst.upper[voter][j]
    allowed = sorted({0, *inst.degree_costs[j]})
    others = [v for v in allowed if v != c]
    for nlo in allowed:
        if not min(lo, c) <= nlo <= max(lo, c):
            continue
        for nhi in allowed:
            if not min(hi, c) <= nhi <= max(hi, c):
                continue
            if nlo > nhi or (nlo, nhi) == (lo, hi):
                continue
            if any((lo <= v <= hi) != (nlo <= v <= nhi) for v in others):
                continue
            yield nlo, nhi


def _check_shrink_resistance(rule, inst):
    outcomes = rule.outcomes(inst)
    for s in outcomes:
        for voter in range(inst.n):
            for j in range(inst.m):
                c = inst.cost(j, s.degrees[j])
                for nlo, nhi in _shrink_shifts(inst, voter, j, c):
                    t = Transformation("bound_shift", (voter, j, nlo, nhi))
                    new = {o.degrees for o in rule.outcomes(apply(t, inst))}
                    if s.degrees not in new:
                        return {"transformation": t, "set": s.degrees}
    return None


def _check_discount_proofness(rule, inst):
    """The discounted funding level must stay funded in some selected set
    (the set itself may legally change once the freed unit of budget lets a
    better combination in)."""
    outcomes = rule.outcomes(inst)
    for s in outcomes:
        for j, t_idx in enumerate(s.degrees):
            if t_idx == 0:
                continue
            try:
                t = Transformation("degree_discount", (j, t_idx))
                new_inst = apply(t, inst)
            except IllFormedTransformation:
                continue
            if not any(o.degrees[j] == t_idx for o in rule.outcomes(new_inst)):
                return {"transformation": t, "set": s.degrees, "degree": (j, t_idx)}
    return None


def _consensus_range(inst, j):
    """Funded levels of project j every voter accepts (may be empty)."""
    vals = [c for c in inst.degree_costs[j]
            if all(inst.lower[i][j] <= c <= inst.upper[i][j] for i in range(inst.n))]
    return sorted(vals)


def _check_range_abidingness(rule, inst):
    for s in rule.outcomes(inst):
        for j in range(inst.m):
            rng = _consensus_range(inst, j)
            if rng and inst.cost(j, s.degrees[j]) > max(rng):
                return {"set": s.degrees, "project": j, "ceiling": max(rng)}
    return None


def _check_range_convergingness(rule, inst):
    """Trajectory reading: compare the canonical (lexicographically least)
    outcome before and after a unit budget raise; with ties an 'outcome
    change' is otherwise ill-defined."""
    if not any(_consensus_range(inst, j) for j in range(inst.m)):
        return None
    s = rule.outcomes(inst)[0]
    bigger = DegreeInstance(inst.budget + 1, inst.degree_costs,
                            inst.lower, inst.upper)
    after = rule.outcomes(bigger)
    if any(o.degrees == s.degrees for o in after):
        return None  # old outcome still optimal: nothing forces a change
    s2 = after[0]
    moved = False
    for j in range(inst.m):
        rng = _consensus_range(inst, j)
        if not rng:
            continue
        c1, c2 = inst.cost(j, s.degrees[j]), inst.cost(j, s2.degrees[j])
        if c1 == c2:
            continue  # untouched consensus projects do not count against
        moved = True
        if c1 in rng or abs(c1 - min(rng)) > abs(c2 - min(rng)):
            return None
    if not moved:
        return None
    return {"set": s.degrees, "after": s2.degrees}


def _check_range_unanimity(rule, inst):
    tops = []
    for j in range(inst.m):
        rng = _consensus_range(inst, j)
        if not rng:
            return None
        tops.append(max(rng))
    if sum(tops) > inst.budget:
        return None
    want = tuple(
        0 if tops[j] == 0 else inst.degree_costs[j].index(tops[j]) + 1
        for j in range(inst.m))
    if want not in {o.degrees for o in rule.outcomes(inst)}:
        return {"expected": want}
    return None


def _check_degree_efficiency(rule, inst):
    for s in rule.outcomes(inst):
        for j, t_idx in enumerate(s.degrees):
            for k in range(t_idx + 1, inst.degree_count(j) + 1):
                upgraded = s.total_cost - inst.cost(j, t_idx) + inst.cost(j, k)
                if upgraded <= inst.budget:
                    return {"set": s.degrees, "project": j, "upgrade": k}
    return None


def _check_lower_bound_sensitivity(rule, inst):
    for s in rule.outcomes(inst):
        for j, t_idx in enumerate(s.degrees):
            c = inst.cost(j, t_idx)
            lmin = min(inst.lower[i][j] for i in range(inst.n))
            for k in range(inst.degree_count(j) + 1):
                ck = inst.cost(j, k)
                if not c < ck < lmin:
                    continue
                if s.total_cost - c + ck <= inst.budget:
                    return {"set": s.degrees, "project": j, "between": k}
    return None


def _check_upper_bound_sensitivity(rule, inst):
    for s in rule.outcomes(inst):
        for j, t_idx in enumerate(s.degrees):
            c = inst.cost(j, t_idx)
            hmax = max(inst.upper[i][j] for i in range(inst.n))
            for k in range(inst.degree_count(j) + 1):
                ck = inst.cost(j, k)
                if c > ck > hmax:
                    return {"set": s.degrees, "project": j, "between": k}
    return None


_CHECKS = {
    "splitting": _check_splitting,
    "merging": _check_merging,
    "discount": _check_discount,
    "limit": _check_limit,
    "strong-exhaustiveness": _check_strong_exhaustiveness,
    "weak-exhaustiveness": _check_weak_exhaustiveness,
    "narrow-top": _check_narrow_top,
    "clone-independence": _check_clone_independence,
    "maximal-coverage": _check_maximal_coverage,
    "inclusion-maximality": _check_inclusion_maximality,
    "anonymity": _check_anonymity,
    "neutrality": _check_neutrality,
    "consistency": _check_consistency,
    "candidate-monotonicity": _check_candidate_monotonicity,
    "non-crossing-monotonicity": _check_non_crossing,
    "pro-affordability": _check_pro_affordability,
    "shrink-resistance": _check_shrink_resistance,
    "discount-proofness": _check_discount_proofness,
    "range-abidingness": _check_range_abidingness,
    "range-convergingness": _check_range_convergingness,
    "range-unanimity": _check_range_unanimity,
    "degree-efficiency": _check_degree_efficiency,
    "lower-bound-sensitivity": _check_lower_bound_sensitivity,
    "upper-bound-sensitivity": _check_upper_bound_sensitivity,
}


def check_axiom(rule, axiom, inst):
    """Run one axiom's bounded falsification search on one instance."""
    if axiom not in _CHECKS:
        raise ValueError(f"unknown axiom {axiom!r}")
    witness = _CHECKS[axiom](rule, inst)
    return _report(axiom, rule, witness)
