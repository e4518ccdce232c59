"""Randomized rules on a single-peaked axis, with entitlement guarantees.

Projects are axis positions 0..m-1. A ranking is single-peaked when every
prefix of it is an axis interval. Rules come in two interchangeable forms:

  * ballot form: one probability distribution per vector counting, for
    each voter group, how many peaks sit left of a position; the rule's
    output telescopes prefix masses of those ballots;
  * extreme-point form: convex mixtures of deterministic selectors (group
    min-max rules, or median rules with n+1 phantom positions).

Entitlement guarantees ask that each group's representative interval
(weak) or some single project in it (strong) carry at least the group's
quota of probability. Both are decidable two ways: brute enumeration of
all single-peaked profiles, or structural conditions on the ballots /
mixture parameters; the two must agree, which the tests exploit.

All probabilities are exact fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConditionNotMet, InvalidBallots, ResourceBound


# ---------------------------------------------------------------------------
# preferences and profiles


@dataclass(frozen=True)
class SPPreference:
    """Strict ranking of 0..m-1 whose every top-k prefix is an interval."""

    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if not is_single_peaked(self.order, len(self.order)):
            raise ValueError(f"ranking {self.order} is not single-peaked")

    @property
    def peak(self):
        return self.order[0]

    def top_interval(self, k):
        """(lo, hi) of the k most preferred projects; an interval by shape."""
        prefix = self.order[:k]
        return min(prefix), max(prefix)

    def upper_contour(self, p):
        """Projects ranked at least as high as p."""
        idx = self.order.index(p)
        return frozenset(self.order[: idx + 1])


def is_single_peaked(order, m):
    if sorted(order) != list(range(m)):
        return False
    lo = hi = order[0]
    for p in order[1:]:
        if p == lo - 1:
            lo = p
        elif p == hi + 1:
            hi = p
        else:
            return False
    return True


@lru_cache(maxsize=None)
def all_single_peaked(m):
    """Every single-peaked ranking of 0..m-1 (2^(m-1) of them)."""
    out = []

    def grow(lo, hi, acc):
        if len(acc) == m:
            out.append(SPPreference(tuple(acc)))
            return
        if lo > 0:
            grow(lo - 1, hi, acc + [lo - 1])
        if hi < m - 1:
            grow(lo, hi + 1, acc + [hi + 1])

    for peak in range(m):
        grow(peak, peak, [peak])
    return tuple(out)


def canonical_pref(m, peak):
    """The single-peaked ranking that exhausts the left side first."""
    left = list(range(peak, -1, -1))
    right = list(range(peak + 1, m))
    return SPPreference(tuple(left + right))


def iter_profiles(m, n, cap=None):
    space = all_single_peaked(m)
    total = len(space) ** n
    if cap is not None and total > cap:
        raise ResourceBound(f"{total} profiles exceed cap {cap}")
    return itertools.product(space, repeat=n)


# ---------------------------------------------------------------------------
# groups and counting vectors


@dataclass(frozen=True)
class GroupStructure:
    """Partition of voters with per-group quota parameters.

    kappa: representative interval sizes; eta: probability quotas;
    psi: representative selectors (one per group).
    """

    groups: tuple  # tuple of tuples of voter indices
    kappa: tuple
    eta: tuple
    psi: tuple

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))
        object.__setattr__(self, "eta", tuple(Fraction(e) for e in self.eta))
        flat = [v for g in self.groups for v in g]
        if sorted(flat) != list(range(len(flat))):
            raise ValueError("groups must partition 0..n-1")
        if not (len(self.groups) == len(self.kappa) == len(self.eta) == len(self.psi)):
            raise ValueError("per-group parameter lengths disagree")

    @property
    def n(self):
        return sum(len(g) for g in self.groups)

    @property
    def g(self):
        return len(self.groups)

    @property
    def sizes(self):
        return tuple(len(g) for g in self.groups)

    def restrict(self, profile, q):
        return tuple(profile[v] for v in self.groups[q])


def singleton_groups(n, kappa, eta, m):
    """One group per voter with top-k representative selectors."""
    psi = tuple(RepFunction("topk", kappa[i], m) for i in range(n))
    return GroupStructure(tuple((i,) for i in range(n)), tuple(kappa), tuple(eta), psi)


def gamma_vectors(sizes):
    return list(itertools.product(*(range(s + 1) for s in sizes)))


def dominates(a, b):
    return all(x >= y for x, y in zip(a, b))


def alpha_vector(profile, groups, t):
    """Per-group counts of peaks at or left of position t (t = -1 gives zeros)."""
    return tuple(
        sum(1 for v in g if profile[v].peak <= t) for g in groups.groups
    )


def tau(group_profile, t):
    """t-th smallest peak of the group (1-based); position 0 for t = 0."""
    if t == 0:
        return 0
    return sorted(p.peak for p in group_profile)[t - 1]


# ---------------------------------------------------------------------------
# representative selectors


@dataclass(frozen=True)
class RepFunction:
    """Selects a kappa-sized axis interval representing a group's profile.

    tags:
      start-at-order-statistic ("r1", param r): interval begins at the r-th
          smallest peak;
      distinct-peak cover ("r2"): maximize distinct peak values inside;
      voter cover ("r3"): maximize voters whose peak falls inside;
      modal start ("r4"): interval begins at the most common peak;
      top block ("topk"): the voter's own k best projects (singletons only).
    Interval starts are clamped into [0, m-kappa]; ties resolve to the
    smallest start.
    """

    tag: str
    kappa: int
    m: int
    param: int = 1

    def select(self, group_profile):
        m, k = self.m, self.kappa
        clamp = lambda s: max(0, min(s, m - k))
        peaks = [p.peak for p in group_profile]
        if self.tag == "topk":
            if len(group_profile) != 1:
                raise ValueError("top-block selector is defined for single voters")
            lo, hi = group_profile[0].top_interval(k)
            return lo, hi
        if self.tag == "r1":
            start = clamp(sorted(peaks)[self.param - 1])
            return start, start + k - 1
        if self.tag == "r4":
            counts = {p: peaks.count(p) for p in set(peaks)}
            best = min(p for p in counts if counts[p] == max(counts.values()))
            start = clamp(best)
            return start, start + k - 1
        scores = []
        for start in range(m - k + 1):
            window = range(start, start + k)
            if self.tag == "r2":
                s = len({p for p in peaks if p in window})
            elif self.tag == "r3":
                s = sum(1 for p in peaks if p in window)
            else:
                raise ValueError(f"unknown selector {self.tag!r}")
            scores.append(s)
        start = scores.index(max(scores))
        return start, start + k - 1


# ---------------------------------------------------------------------------
# ballot-form rules


@dataclass(frozen=True)
class BallotFamily:
    """One probability distribution per peak-count vector."""

    m: int
    sizes: tuple
    delta: dict  # gamma -> tuple of m Fractions

    def __post_init__(self):
        clean = {}
        for gamma, dist in self.delta.items():
            dist = tuple(Fraction(v) for v in dist)
            if len(dist) != self.m or any(v < 0 for v in dist) or sum(dist) != 1:
                raise InvalidBallots(f"ballot at {gamma} is not a distribution")
            clean[tuple(gamma)] = dist
        object.__setattr__(self, "delta", clean)
        expected = set(gamma_vectors(self.sizes))
        if set(clean) != expected:
            raise InvalidBallots("need exactly one ballot per count vector")
        bottom = tuple(0 for _ in self.sizes)
        top = tuple(self.sizes)
        if clean[bottom][self.m - 1] != 1 or clean[top][0] != 1:
            raise InvalidBallots("ballot unanimity violated at the extreme vectors")
        for a in expected:
            for b in expected:
                if dominates(a, b) and a != b:
                    ca = cb = Fraction(0)
                    for t in range(self.m):
                        ca += clean[a][t]
                        cb += clean[b][t]
                        if ca < cb:
                            raise InvalidBallots(
                                f"prefix mass at {a} below {b} up to position {t}"
                            )

    def prefix(self, gamma, t):
        """Mass on positions 0..t; zero when t < 0."""
        if t < 0:
            return Fraction(0)
        return sum(self.delta[tuple(gamma)][: t + 1], Fraction(0))


@dataclass(frozen=True)
class PFGBRule:
    """Telescoping evaluation of a ballot family over a grouped profile."""

    ballots: BallotFamily
    groups: GroupStructure

    def distribution(self, profile):
        m = self.ballots.m
        out = []
        prev = Fraction(0)
        for t in range(m):
            cur = self.ballots.prefix(alpha_vector(profile, self.groups, t), t)
            mass = cur - prev
            if mass < 0:
                raise InvalidBallots("negative mass: ballots not monotone")
            out.append(mass)
            prev = cur
        return tuple(out)


def pfbr_from_subset_ballots(m, n, subset_delta):
    """Ballot family keyed by voter subsets (singleton groups)."""
    delta = {}
    for subset, dist in subset_delta.items():
        gamma = tuple(1 if i in subset else 0 for i in range(n))
        delta[gamma] = dist
    return BallotFamily(m, (1,) * n, delta)


# ---------------------------------------------------------------------------
# extreme-point (deterministic) rules and mixtures


@dataclass(frozen=True)
class GroupMinMaxRule:
    """min over count vectors of max(order statistics of peaks, parameter)."""

    m: int
    groups: GroupStructure
    beta: dict  # gamma -> project index
    validate: bool = True

    def __post_init__(self):
        beta = {tuple(g): int(p) for g, p in self.beta.items()}
        object.__setattr__(self, "beta", beta)
        sizes = self.groups.sizes
        expected = set(gamma_vectors(sizes))
        if set(beta) != expected:
            raise ValueError("need one parameter per count vector")
        if self.validate:
            bottom, top = tuple(0 for _ in sizes), tuple(sizes)
            if beta[bottom] != self.m - 1:
                raise ValueError("parameter at the zero vector must be the last position")
            if beta[top] != 0:
                raise ValueError("parameter at the full vector must be position 0")
            for a in expected:
                for b in expected:
                    if dominates(a, b) and beta[a] > beta[b]:
                        raise ValueError(f"parameters not monotone: {a} vs {b}")

    def select(self, profile):
        best = None
        for gamma in gamma_vectors(self.groups.sizes):
            stat = max(
                max(tau(self.groups.restrict(profile, q), gamma[q]) for q in range(self.groups.g)),
                self.beta[gamma],
            )
            if best is None or stat < best:
                best = stat
        return best

    def distribution(self, profile):
        sel = self.select(profile)
        return tuple(Fraction(1) if t == sel else Fraction(0) for t in range(self.m))


def min_max_rule(n, m, subset_beta, validate=True):
    """Subset-indexed min-max parameters as a singleton-group rule."""
    groups = singleton_groups(n, (1,) * n, (Fraction(0),) * n, m)
    beta = {}
    for subset, p in subset_beta.items():
        gamma = tuple(1 if i in subset else 0 for i in range(n))
        beta[gamma] = p
    return GroupMinMaxRule(m, groups, beta, validate)


@dataclass(frozen=True)
class MedianRule:
    """Median of the n peaks and n+1 fixed phantom positions."""

    m: int
    betas: tuple  # n+1 non-decreasing positions, first 0, last m-1

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(int(b) for b in self.betas))
        if self.betas[0] != 0 or self.betas[-1] != self.m - 1:
            raise ValueError("phantoms must start at 0 and end at m-1")
        if any(a > b for a, b in zip(self.betas, self.betas[1:])):
            raise ValueError("phantoms must be non-decreasing")

    @property
    def n(self):
        return len(self.betas) - 1

    def select(self, profile):
        vals = sorted([p.peak for p in profile] + list(self.betas))
        return vals[len(vals) // 2]

    def distribution(self, profile):
        sel = self.select(profile)
        return tuple(Fraction(1) if t == sel else Fraction(0) for t in range(self.m))


@dataclass(frozen=True)
class Mixture:
    """Convex combination of deterministic selectors."""

    components: tuple  # (weight, rule) pairs

    def __post_init__(self):
        comps = tuple((Fraction(w), r) for w, r in self.components)
        object.__setattr__(self, "components", comps)
        if any(w < 0 for w, _ in comps) or sum(w for w, _ in comps) != 1:
            raise ValueError("weights must be non-negative and sum to one")

    def distribution(self, profile):
        total = None
        for w, rule in self.components:
            d = rule.distribution(profile)
            if total is None:
                total = [w * v for v in d]
            else:
                total = [t + w * v for t, v in zip(total, d)]
        return tuple(total)


def mixture_to_ballots(mixture, groups, m):
    """Read off the ballot family from boundary profiles (all peaks extreme)."""
    delta = {}
    for gamma in gamma_vectors(groups.sizes):
        profile = [None] * groups.n
        for q, members in enumerate(groups.groups):
            for idx, v in enumerate(members):
                peak = 0 if idx < gamma[q] else m - 1
                profile[v] = canonical_pref(m, peak)
        delta[gamma] = mixture.distribution(tuple(profile))
    return BallotFamily(m, groups.sizes, delta)


# ---------------------------------------------------------------------------
# stochastic dominance and rule sanity properties


def sd_dominates(dist_a, dist_b, pref):
    """dist_a at least dist_b on every upper contour of the ranking."""
    ca = cb = Fraction(0)
    for p in pref.order:
        ca += dist_a[p]
        cb += dist_b[p]
        if ca < cb:
            return False
    return True


def check_unanimity(rule_dist, m, n, cap=None):
    for peak in range(m):
        for profile in itertools.product(
            [p for p in all_single_peaked(m) if p.peak == peak], repeat=n
        ):
            d = rule_dist(profile)
            if d[peak] != 1:
                return False, profile
    return True, None


def check_strategyproof(rule_dist, m, n, cap=200_000):
    space = all_single_peaked(m)
    count = 0
    for profile in iter_profiles(m, n):
        truth = rule_dist(profile)
        for i in range(n):
            for lie in space:
                if lie == profile[i]:
                    continue
                count += 1
                if count > cap:
                    raise ResourceBound("deviation space exceeds cap")
                manipulated = profile[:i] + (lie,) + profile[i + 1:]
                if not sd_dominates(truth, rule_dist(manipulated), profile[i]):
                    return False, (profile, i, lie)
    return True, None


def check_group_anonymity(rule_dist, groups, m):
    for profile in iter_profiles(m, groups.n):
        base = rule_dist(profile)
        for q in range(groups.g):
            members = groups.groups[q]
            for perm in itertools.permutations(members):
                if perm == members:
                    continue
                swapped = list(profile)
                for src, dst in zip(members, perm):
                    swapped[dst] = profile[src]
                if rule_dist(tuple(swapped)) != base:
                    return False, (profile, q, perm)
    return True, None


# ---------------------------------------------------------------------------
# feasibility of selector outputs, given peak statistics


def _selector_signatures(psi, size, m):
    """All (start, cumulative-peak-counts) pairs the selector can produce."""
    sigs = set()
    for group_profile in itertools.product(all_single_peaked(m), repeat=size):
        start, _ = psi.select(group_profile)
        peaks = [p.peak for p in group_profile]
        cum = tuple(sum(1 for p in peaks if p <= t) for t in range(m))
        sigs.add((start, cum))
    return sigs


_SIG_CACHE = {}


def selector_signatures(psi, size):
    key = (psi, size)
    if key not in _SIG_CACHE:
        _SIG_CACHE[key] = _selector_signatures(psi, size, psi.m)
    return _SIG_CACHE[key]


def feasible_at(psi, size, x, z1, z2):
    """Can the selector output start x with z1 peaks left of x and z2 peaks
    at or before the interval's end?"""
    kappa = psi.kappa
    for start, cum in selector_signatures(psi, size):
        if start != x:
            continue
        before = cum[x - 1] if x > 0 else 0
        if before == z1 and cum[min(x + kappa - 1, psi.m - 1)] == z2:
            return True
    return False


def set_feasible_at(psi, size, x, zs):
    """Chain variant: zs = (count left of x, counts at or before each
    interval position)."""
    kappa = psi.kappa
    if len(zs) != kappa + 1:
        raise ValueError("need one count before the window plus one per position")
    for start, cum in selector_signatures(psi, size):
        if start != x:
            continue
        before = cum[x - 1] if x > 0 else 0
        if before != zs[0]:
            continue
        if all(cum[x + j - 1] == zs[j] for j in range(1, kappa + 1)):
            return True
    return False


# ---------------------------------------------------------------------------
# entitlement guarantees: enumeration mode


def check_weak_geg_enum(rule_dist, groups, m, cap=None):
    """Every group's representative interval carries its quota, at every profile."""
    for profile in iter_profiles(m, groups.n, cap):
        d = rule_dist(profile)
        for q in range(groups.g):
            lo, hi = groups.psi[q].select(groups.restrict(profile, q))
            if sum(d[lo: hi + 1], Fraction(0)) < groups.eta[q]:
                return False, (profile, q)
    return True, None


def check_strong_geg_enum(rule_dist, groups, m, cap=None):
    """Some single representative project carries the quota, at every profile."""
    for profile in iter_profiles(m, groups.n, cap):
        d = rule_dist(profile)
        for q in range(groups.g):
            lo, hi = groups.psi[q].select(groups.restrict(profile, q))
            if not any(d[t] >= groups.eta[q] for t in range(lo, hi + 1)):
                return False, (profile, q)
    return True, None


# ---------------------------------------------------------------------------
# entitlement guarantees: structural conditions on ballots


def check_weak_geg_ballots(ballots, groups):
    """Prefix-mass gaps across dominating count vectors cover each quota."""
    m = ballots.m
    gammas = gamma_vectors(groups.sizes)
    for q in range(groups.g):
        kappa, eta, psi = groups.kappa[q], groups.eta[q], groups.psi[q]
        size = groups.sizes[q]
        for hi_v in gammas:
            for lo_v in gammas:
                if not dominates(hi_v, lo_v):
                    continue
                for x in range(m - kappa + 1):
                    if not feasible_at(psi, size, x, lo_v[q], hi_v[q]):
                        continue
                    gap = ballots.prefix(hi_v, x + kappa - 1) - ballots.prefix(lo_v, x - 1)
                    if gap < eta:
                        return False, (q, hi_v, lo_v, x)
    return True, None


def _chains(gammas, length):
    """Non-decreasing (componentwise) tuples of count vectors."""

    def extend(chain):
        if len(chain) == length:
            yield tuple(chain)
            return
        for g in gammas:
            if not chain or dominates(g, chain[-1]):
                yield from extend(chain + [g])

    yield from extend([])


def check_strong_geg_ballots(ballots, groups):
    """Along every feasible chain, some single position's telescoped mass
    reaches the quota."""
    m = ballots.m
    gammas = gamma_vectors(groups.sizes)
    for q in range(groups.g):
        kappa, eta, psi = groups.kappa[q], groups.eta[q], groups.psi[q]
        size = groups.sizes[q]
        for chain in _chains(gammas, kappa + 1):
            for x in range(m - kappa + 1):
                zs = tuple(c[q] for c in chain)
                if not set_feasible_at(psi, size, x, zs):
                    continue
                ok = any(
                    ballots.prefix(chain[t + 1], x + t) - ballots.prefix(chain[t], x + t - 1)
                    >= eta
                    for t in range(kappa)
                )
                if not ok:
                    return False, (q, chain, x)
    return True, None


# ---------------------------------------------------------------------------
# entitlement guarantees: structural conditions on mixtures


def check_weak_geg_mixture(mixture, groups):
    """Enough mixture weight pins both parameters inside each feasible window."""
    m = groups.psi[0].m
    gammas = gamma_vectors(groups.sizes)
    for q in range(groups.g):
        kappa, eta, psi = groups.kappa[q], groups.eta[q], groups.psi[q]
        size = groups.sizes[q]
        for hi_v in gammas:
            for lo_v in gammas:
                if not dominates(hi_v, lo_v):
                    continue
                for x in range(m - kappa + 1):
                    if not feasible_at(psi, size, x, lo_v[q], hi_v[q]):
                        continue
                    w = sum(
                        (w for w, rule in mixture.components
                         if rule.beta[lo_v] >= x and rule.beta[hi_v] <= x + kappa - 1),
                        Fraction(0),
                    )
                    if w < eta:
                        return False, (q, hi_v, lo_v, x)
    return True, None


def check_strong_geg_mixture(mixture, groups):
    m = groups.psi[0].m
    gammas = gamma_vectors(groups.sizes)
    for q in range(groups.g):
        kappa, eta, psi = groups.kappa[q], groups.eta[q], groups.psi[q]
        size = groups.sizes[q]
        for chain in _chains(gammas, kappa + 1):
            for x in range(m - kappa + 1):
                zs = tuple(c[q] for c in chain)
                if not set_feasible_at(psi, size, x, zs):
                    continue
                ok = False
                for t in range(kappa):
                    w = sum(
                        (w for w, rule in mixture.components
                         if rule.beta[chain[t]] >= x + t and rule.beta[chain[t + 1]] <= x + t),
                        Fraction(0),
                    )
                    if w >= eta:
                        ok = True
                        break
                if not ok:
                    return False, (q, chain, x)
    return True, None


# ---------------------------------------------------------------------------
# individual guarantees (singleton groups); median-mixture conditions


def ieg_groups(n, kappa, eta, m):
    return singleton_groups(n, kappa, eta, m)


def check_weak_ieg(rule, kappa, eta, m, n, mode, groups=None):
    """Per-voter quota on the voter's own top block.

    mode: 'enum' with any distribution-valued rule, 'ballots' with a
    BallotFamily, 'minmax' with a Mixture of singleton-group min-max rules,
    'median' with a Mixture of median rules.
    """
    gs = groups or ieg_groups(n, kappa, eta, m)
    if mode == "enum":
        return check_weak_geg_enum(rule, gs, m)
    if mode == "ballots":
        return check_weak_geg_ballots(rule, gs)
    if mode == "minmax":
        return check_weak_geg_mixture(rule, gs)
    if mode == "median":
        return check_weak_ieg_median(rule, kappa, eta, m, n)
    raise ValueError(f"unknown mode {mode!r}")


def check_strong_ieg(rule, kappa, eta, m, n, mode, groups=None):
    gs = groups or ieg_groups(n, kappa, eta, m)
    if mode == "enum":
        return check_strong_geg_enum(rule, gs, m)
    if mode == "ballots":
        return check_strong_geg_ballots(rule, gs)
    if mode == "minmax":
        return check_strong_geg_mixture(rule, gs)
    if mode == "median":
        return check_strong_ieg_median(rule, kappa, eta, m, n)
    raise ValueError(f"unknown mode {mode!r}")


def check_weak_ieg_median(mixture, kappa, eta, m, n):
    """Anonymous form: every window must meet every phantom gap."""
    for r in range(n):
        for i in range(n):
            for x in range(m - kappa[i] + 1):
                window = range(x, x + kappa[i])
                w = sum(
                    (wt for wt, rule in mixture.components
                     if any(rule.betas[r] <= t <= rule.betas[r + 1] for t in window)),
                    Fraction(0),
                )
                if w < eta[i]:
                    return False, (r, i, x)
    return True, None


def check_strong_ieg_median(mixture, kappa, eta, m, n):
    """Anonymous strong form, quantifying over peak placements inside the
    window (non-decreasing tuples b_r..b_{r+s})."""
    for i in range(n):
        K = kappa[i]
        for x in range(m - K + 1):
            window = list(range(x, x + K))
            for r in range(1, n + 1):
                for s in range(0, n - r + 1):
                    for bs in itertools.combinations_with_replacement(window, s + 1):
                        if not _median_strong_cond(mixture, eta[i], window, r, bs):
                            return False, (i, x, r, bs)
    return True, None


def _median_strong_cond(mixture, eta, window, r, bs):
    s = len(bs) - 1
    # (C1): some occupied position is pinned between consecutive phantoms
    for c in set(bs):
        w = Fraction(0)
        for wt, rule in mixture.components:
            n = rule.n
            if any(
                bs[t - r] == c and rule.betas[n - t] <= c <= rule.betas[n - t + 1]
                for t in range(r, r + s + 1)
            ):
                w += wt
        if w >= eta:
            return True
    # (C2): some unoccupied position equals the right phantom exactly
    for c in window:
        if c in bs:
            continue
        if c < bs[0]:
            u = r - 1
        elif c > bs[-1]:
            u = r + s
        else:
            u = max(r + t for t in range(s + 1) if bs[t] < c)
        w = Fraction(0)
        for wt, rule in mixture.components:
            if rule.betas[rule.n - u] == c:
                w += wt
        if w >= eta:
            return True
    return False


# ---------------------------------------------------------------------------
# constructive fair mixtures


def construct_fair_mixture(case, groups, m):
    """Build a mixture passing the strong guarantee under one of three
    arithmetic regimes on (kappa, eta)."""
    kmin = min(groups.kappa)
    emax = max(groups.eta)
    sizes = groups.sizes
    gammas = gamma_vectors(sizes)
    bottom, top = tuple(0 for _ in sizes), tuple(sizes)

    def constant_rule(position):
        beta = {g: position for g in gammas}
        beta[bottom], beta[top] = m - 1, 0
        return GroupMinMaxRule(m, groups, beta, validate=False)

    if case == "I":
        if sum(groups.eta) > 1 or 2 * kmin < m + 1:
            raise ConditionNotMet("need quotas summing to at most 1 and wide windows")
        comps = []
        for q in range(groups.g):
            # any constant inside the guaranteed overlap [m-kappa_q, kappa_q-1]
            comps.append((groups.eta[q], constant_rule(m - groups.kappa[q])))
        slack = 1 - sum(groups.eta)
        if slack:
            comps.append((slack, constant_rule(m - groups.kappa[0])))
        return Mixture(tuple(comps))

    if case == "II":
        copies = m // kmin
        if copies * emax > 1:
            raise ConditionNotMet("quota too large for the window count")
        d = kmin  # valid spacing start: every kappa-window catches one anchor
        comps = [(emax, constant_rule(d - 1 + i * kmin)) for i in range(copies)]
        slack = 1 - emax * copies
        if slack:
            comps.append((slack, constant_rule(d - 1)))
        return Mixture(tuple(comps))

    if case == "III":
        n = groups.n
        if emax > Fraction(1, n) or 2 * kmin >= m + 1:
            raise ConditionNotMet("need per-voter quotas and narrow windows")
        if any(psi.tag not in ("r1", "r2", "r3", "r4", "topk") for psi in groups.psi):
            raise ConditionNotMet("selectors must contain some voter's peak")
        comps = []
        for i in range(1, n + 1):
            beta = {}
            for g in gammas:
                beta[g] = kmin - 1 if sum(g) >= i else m - kmin
            beta[bottom], beta[top] = m - 1, 0
            comps.append((Fraction(1, n), GroupMinMaxRule(m, groups, beta, validate=False)))
        return Mixture(tuple(comps))

    raise ValueError(f"unknown case {case!r}")


# ---------------------------------------------------------------------------
# random generators for cross-checking


def random_gmmr(rng, groups, m):
    """Random monotone parameter family."""
    gammas = sorted(gamma_vectors(groups.sizes), key=lambda g: (sum(g), g))
    bottom, top = tuple(0 for _ in groups.sizes), tuple(groups.sizes)
    beta = {bottom: m - 1, top: 0}
    for g in gammas:
        if g in (bottom, top):
            continue
        cap = min(
            (beta[h] for h in beta if dominates(g, h) and g != h),
            default=m - 1,
        )
        beta[g] = rng.randint(0, cap)
    return GroupMinMaxRule(m, groups, beta)


def random_median(rng, n, m):
    mids = sorted(rng.randint(0, m - 1) for _ in range(n - 1))
    return MedianRule(m, tuple([0] + mids + [m - 1]))


def random_mixture(rng, groups, m, components=3, kind="gmmr"):
    weights = [rng.randint(1, 5) for _ in range(components)]
    total = sum(weights)
    rules = []
    for _ in range(components):
        if kind == "gmmr":
            rules.append(random_gmmr(rng, groups, m))
        else:
            rules.append(random_median(rng, groups.n, m))
    return Mixture(tuple((Fraction(w, total), r) for w, r in zip(weights, rules)))
