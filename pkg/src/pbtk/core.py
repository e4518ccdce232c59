"""Shared data model: instances, preferences, feasibility, and utilities.

Conventions used across the toolkit:
  * costs and budgets are non-negative integers (exact DP tables);
  * irresolute outcomes are listed in lexicographic order of their sorted
    member-id tuples, so golden tests are reproducible;
  * voter indices are 0-based, the lowest index breaks ties.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InstanceTooLarge, KindMismatch

UTILITY_KINDS = ("cardinal", "cost", "money-share", "boolean", "cc")


@dataclass(frozen=True, order=True)
class Project:
    id: str
    cost: int

    def __post_init__(self):
        if not isinstance(self.cost, int) or isinstance(self.cost, bool):
            raise ValueError(f"cost of {self.id!r} must be an integer, got {self.cost!r}")
        if self.cost < 0:
            raise ValueError(f"cost of {self.id!r} must be non-negative")


@dataclass(frozen=True)
class FeasibleSet:
    """A budget-respecting subset of projects together with its total cost."""

    members: frozenset
    total_cost: int

    def sort_key(self):
        return tuple(sorted(self.members))

    def __contains__(self, pid):
        return pid in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)


def canonical_sets(sets):
    """Deduplicate and order feasible sets lexicographically by sorted ids."""
    seen = {}
    for s in sets:
        seen[s.sort_key()] = s
    return [seen[k] for k in sorted(seen)]


@dataclass(frozen=True)
class WeakOrdinalPreference:
    """Incomplete weak order: equivalence classes from most to least preferred.

    Projects absent from every class are unranked; their rank is undefined
    (callers that need a sentinel use m+1 explicitly).
    """

    classes: tuple

    def __post_init__(self):
        flat = [p for cls in self.classes for p in cls]
        if len(flat) != len(set(flat)):
            raise ValueError("a project appears in two equivalence classes")
        if any(len(cls) == 0 for cls in self.classes):
            raise ValueError("empty equivalence class")
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in self.classes))

    @property
    def ranked(self):
        return frozenset(p for cls in self.classes for p in cls)

    def rank(self, pid):
        """1 + number of projects strictly preferred over pid; None if unranked."""
        seen = 0
        for cls in self.classes:
            if pid in cls:
                return seen + 1
            seen += len(cls)
        return None

    def prefix(self, j):
        """Union of the first j equivalence classes."""
        out = set()
        for cls in self.classes[:j]:
            out |= cls
        return frozenset(out)

    def prefers(self, a, b):
        """True iff a is ranked at least as high as b (unranked == bottom)."""
        ra, rb = self.rank(a), self.rank(b)
        if ra is None:
            return rb is None
        if rb is None:
            return True
        return ra <= rb


@dataclass(frozen=True)
class DichotomousInstance:
    budget: int
    projects: tuple
    approvals: tuple  # one frozenset of project ids per voter

    def __post_init__(self):
        ids = [p.id for p in self.projects]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate project ids")
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        if len(self.approvals) < 1:
            raise ValueError("need at least one voter")
        if any(p.cost < 1 for p in self.projects):
            raise ValueError("restricted-cost projects need cost >= 1")
        known = set(ids)
        object.__setattr__(self, "approvals", tuple(frozenset(a) for a in self.approvals))
        for i, a in enumerate(self.approvals):
            unknown = a - known
            if unknown:
                raise ValueError(f"voter {i} approves unknown projects {sorted(unknown)}")

    @property
    def m(self):
        return len(self.projects)

    @property
    def n(self):
        return len(self.approvals)

    @property
    def cost_map(self):
        return {p.id: p.cost for p in self.projects}

    def cost_of(self, ids):
        cm = self.cost_map
        return sum(cm[p] for p in ids)

    def feasible(self, ids):
        return self.cost_of(ids) <= self.budget

    def make_set(self, ids):
        return FeasibleSet(frozenset(ids), self.cost_of(ids))


def make_instance(budget, costs, approvals):
    """Convenience constructor from a cost dict and approval iterables."""
    projects = tuple(Project(pid, c) for pid, c in sorted(costs.items()))
    return DichotomousInstance(budget, projects, tuple(frozenset(a) for a in approvals))


@dataclass(frozen=True)
class Utility:
    kind: str
    value: int


def feasible_subsets(inst, max_m=25):
    """All S with c(S) <= b, ordered lexicographically by sorted ids.

    Downward closed by construction: every subset of a returned set is
    returned too.
    """
    if inst.m > max_m:
        raise InstanceTooLarge(f"m={inst.m} exceeds enumeration guard {max_m}")
    out = []
    ids = sorted(p.id for p in inst.projects)
    cm = inst.cost_map
    for r in range(inst.m + 1):
        for combo in itertools.combinations(ids, r):
            c = sum(cm[p] for p in combo)
            if c <= inst.budget:
                out.append(FeasibleSet(frozenset(combo), c))
    return canonical_sets(out)


def iter_feasible_masks(costs, budget):
    """Yield (mask, cost) over all feasible subsets, given a cost list.

    Low-level helper for the enumeration-based solvers; masks index into
    the instance's project tuple. Subset costs are built incrementally
    (cost[mask] = cost[mask without lowest bit] + that bit's cost).
    """
    m = len(costs)
    size = 1 << m
    table = [0] * size
    yield 0, 0
    for mask in range(1, size):
        lsb = mask & -mask
        c = table[mask ^ lsb] + costs[lsb.bit_length() - 1]
        table[mask] = c
        if c <= budget:
            yield mask, c


def utility(inst, voter, s, kind):
    """Per-voter utility of a feasible set under the requested notion."""
    if kind not in UTILITY_KINDS:
        raise KindMismatch(f"unknown utility kind {kind!r}")
    members = s.members if isinstance(s, FeasibleSet) else frozenset(s)
    if kind == "cc":
        if not hasattr(inst, "prefs"):
            raise KindMismatch("cc utility needs ranked preferences")
        pref = inst.prefs[voter]
        ranks = [pref.rank(p) for p in members if pref.rank(p) is not None]
        value = 0 if not ranks else inst.m - min(ranks)
        return Utility(kind, value)
    if not hasattr(inst, "approvals"):
        raise KindMismatch(f"{kind} utility needs approval ballots")
    approved = inst.approvals[voter] & members
    if kind == "cardinal":
        return Utility(kind, len(approved))
    if kind in ("cost", "money-share"):
        return Utility(kind, inst.cost_of(approved))
    return Utility(kind, 1 if approved else 0)


def min_utility(inst, s):
    """Minimum money-share utility over voters and its arg-min voter index."""
    best_v, best_u = 0, None
    for i in range(inst.n):
        u = utility(inst, i, s, "money-share").value
        if best_u is None or u < best_u:
            best_v, best_u = i, u
    return best_u, best_v
