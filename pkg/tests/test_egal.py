"""Worst-off-voter solvers: exact paths, LP rounding, size bounds."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import hcbp_instance, random_approval_instance
from pbtk import egal, simplex
from pbtk.core import make_instance
from pbtk.errors import InstanceTooLarge, NumericFailure


def members(sets):
    return [tuple(sorted(s.members)) for s in sets]


class TestSimplex:
    def test_tiny_lp(self):
        # max x+y st x<=2, y<=3, x+y<=4
        value, x = simplex.solve_max([1, 1], [[1, 0], [0, 1], [1, 1]], [2, 3, 4])
        assert value == 4

    def test_unbounded(self):
        with pytest.raises(NumericFailure):
            simplex.solve_max([1], [[-1]], [0])

    def test_degenerate_rhs(self):
        value, x = simplex.solve_max([1, 0], [[1, -1], [0, 1]], [0, 2])
        assert value == 2 and x[0] == 2

    def test_exact_fractions(self):
        value, _ = simplex.solve_max([3], [[7]], [1])
        assert value == Fraction(3, 7)


class TestMpbExact:
    def test_all_equal_costs_example(self):
        inst = make_instance(12, {"p1": 4, "p2": 4, "p3": 4, "p4": 4},
                             [{"p1", "p2"}, {"p3"}, {"p4"}])
        res = egal.mpb_exact(inst)
        assert res.optimal_value == 4
        assert members(res.winning_sets) == [("p1", "p3", "p4"), ("p2", "p3", "p4")]

    def test_unanimous_project_can_lose(self):
        inst = make_instance(6, {"p1": 1, "p2": 3, "p3": 3},
                             [{"p1", "p2"}, {"p1", "p3"}])
        res = egal.mpb_exact(inst)
        assert res.optimal_value == 3
        assert members(res.winning_sets) == [("p2", "p3")]

    def test_empty_approver_gets_all_feasible_sets(self):
        inst = make_instance(3, {"p1": 1, "p2": 2}, [frozenset()])
        res = egal.mpb_exact(inst)
        assert res.optimal_value == 0
        assert len(res.winning_sets) == 4  # every feasible subset

    def test_matches_oracle(self, rng):
        for _ in range(60):
            inst = random_approval_instance(rng, m_max=8)
            res = egal.mpb_exact(inst)
            value, arg = oracles.brute_maxmin(inst)
            assert res.optimal_value == value
            assert {s.members for s in res.winning_sets} == arg

    def test_weak_exhaustiveness_of_optima(self, rng):
        for _ in range(30):
            inst = random_approval_instance(rng, m_max=7)
            res = egal.mpb_exact(inst)
            chosen = {s.members for s in res.winning_sets}
            cm = inst.cost_map
            for s in res.winning_sets:
                for p in cm:
                    if p not in s.members and s.total_cost + cm[p] <= inst.budget:
                        assert s.members | {p} in chosen


class TestMpbDp:
    def test_matches_enumeration(self, rng):
        for _ in range(60):
            inst = random_approval_instance(rng, m_max=9, n_max=4)
            res = egal.mpb_dp_distinct_votes(inst)
            value, arg = oracles.brute_maxmin(inst)
            assert res.optimal_value == value
            assert res.winning_sets[0].members in arg

    def test_identical_voters_reduce_to_knapsack(self, rng):
        for _ in range(20):
            m = rng.randint(1, 9)
            ids = [f"p{i}" for i in range(m)]
            costs = {p: rng.randint(1, 8) for p in ids}
            budget = rng.randint(1, 25)
            inst = make_instance(budget, costs, [frozenset(ids)] * 3)
            res = egal.mpb_dp_distinct_votes(inst)
            best = max(sum(costs[p] for p in s)
                       for s in oracles.feasible_sets(costs, budget))
            assert res.optimal_value == best

    def test_budget_below_every_cost(self):
        inst = make_instance(1, {"p1": 2, "p2": 3}, [{"p1"}, {"p2"}])
        assert egal.mpb_dp_distinct_votes(inst).optimal_value == 0

    def test_distinct_vote_guard(self):
        approvals = [{"p1"}, {"p2"}, {"p3"}, {"p4"}, {"p1", "p2"}]
        inst = make_instance(4, {f"p{i}": 1 for i in range(1, 5)}, approvals)
        with pytest.raises(InstanceTooLarge):
            egal.mpb_dp_distinct_votes(inst)


class TestRescale:
    def test_hundreds_of_millions(self):
        inst = make_instance(10000, {"a": 100, "b": 900, "c": 200}, [{"a"}])
        scaled, delta = egal.rescale_by_gcd(inst)
        assert delta == 9
        assert scaled.budget == 100

    def test_all_costs_equal_budget(self):
        inst = make_instance(7, {"a": 7, "b": 7}, [{"a"}])
        _, delta = egal.rescale_by_gcd(inst)
        assert delta == 1

    def test_coprime_is_identity(self):
        inst = make_instance(7, {"a": 3, "b": 5}, [{"a"}])
        scaled, _ = egal.rescale_by_gcd(inst)
        assert scaled == inst

    def test_optima_preserved(self, rng):
        for _ in range(20):
            inst = random_approval_instance(rng, m_max=7, b_max=12)
            factor = rng.randint(2, 5)
            big = make_instance(
                inst.budget * factor,
                {p.id: p.cost * factor for p in inst.projects},
                inst.approvals)
            scaled, _ = egal.rescale_by_gcd(big)
            lhs = egal.mpb_exact(scaled)
            rhs = egal.mpb_exact(inst)
            assert {s.members for s in lhs.winning_sets} == \
                {s.members for s in rhs.winning_sets}


class TestOrderedFill:
    def test_stops_at_first_overflow(self):
        inst = make_instance(4, {"p1": 2, "p2": 3, "p3": 2}, [set()])
        assert sorted(egal.ordered_fill(inst, ["p1", "p2", "p3"]).members) == ["p1"]

    def test_ascending_cost_order(self):
        inst = make_instance(4, {"p1": 2, "p2": 3, "p3": 2}, [set()])
        assert sorted(egal.ordered_fill(inst, ["p1", "p3", "p2"]).members) == ["p1", "p3"]

    def test_empty_projects(self):
        inst = make_instance(4, {"p1": 9}, [set()])
        assert egal.ordered_fill(inst, ["p1"]).members == frozenset()

    def test_bounds_on_example(self):
        inst = make_instance(4, {"p1": 2, "p2": 3, "p3": 2}, [set()])
        b = egal.ordered_fill_bounds(inst)
        assert (b.l_o, b.h_o) == (1, 2)

    def test_unit_costs(self):
        inst = make_instance(3, {f"p{i}": 1 for i in range(5)}, [set()])
        b = egal.ordered_fill_bounds(inst)
        assert (b.l_o, b.h_o) == (3, 3)

    def test_bounds_sandwich_random_orders(self, rng):
        for _ in range(20):
            inst = random_approval_instance(rng, m_max=7)
            b = egal.ordered_fill_bounds(inst)
            ids = [p.id for p in inst.projects]
            for _ in range(200):
                rng.shuffle(ids)
                size = len(egal.ordered_fill(inst, ids).members)
                assert b.l_o <= size <= b.h_o


class TestHcbp:
    def test_unit_costs_hold(self):
        inst = make_instance(5, {f"p{i}": 1 for i in range(8)},
                             [{"p1", "p2", "p3"}, {"p4"}])
        assert egal.is_hcbp(inst)

    def test_full_ballot_breaks_it(self):
        ids = {f"p{i}": 1 for i in range(4)}
        inst = make_instance(3, ids, [frozenset(ids)])
        assert not egal.is_hcbp(inst)

    def test_matches_direct_recomputation(self, rng):
        for _ in range(30):
            inst = random_approval_instance(rng, m_max=7)
            bounds = egal.ordered_fill_bounds(inst)
            h_a = max(len(a) for a in inst.approvals)
            assert egal.is_hcbp(inst) == (bounds.l_o > h_a)


class TestRelaxation:
    def test_single_voter_single_project(self):
        inst = make_instance(5, {"p1": 4}, [{"p1"}])
        sol = egal.solve_mpb_relaxation(inst)
        assert sol.q == 4 and sol.x["p1"] == 1

    def test_two_disjoint_voters(self):
        inst = make_instance(9, {"p1": 4, "p2": 5}, [{"p1"}, {"p2"}])
        sol = egal.solve_mpb_relaxation(inst)
        assert sol.q == 4

    def test_upper_bounds_integer_optimum(self, rng):
        for _ in range(40):
            inst = random_approval_instance(rng, m_max=8, b_max=20)
            sol = egal.solve_mpb_relaxation(inst)
            value, _ = oracles.brute_maxmin(inst)
            assert sol.q >= value


class TestOrderedRelax:
    def test_budget_respected(self, rng):
        for _ in range(40):
            inst = random_approval_instance(rng, m_max=8)
            s = egal.ordered_relax(inst)
            assert s.total_cost <= inst.budget

    def test_additive_bound_random(self, rng):
        for _ in range(60):
            inst = random_approval_instance(rng, m_max=8)
            value, _ = oracles.brute_maxmin(inst)
            assert egal.additive_bound_holds(inst, value)

    def test_subset_ballot_optimality(self):
        # when the output covers the worst-off ballot, it is optimal
        inst = make_instance(20, {"p1": 3, "p2": 4, "p3": 5},
                             [{"p1"}, {"p1", "p2"}])
        s = egal.ordered_relax(inst)
        value, _ = oracles.brute_maxmin(inst)
        j = egal._set_min_utility(inst, s)[1]
        if inst.approvals[j] <= s.members:
            worst, _ = egal._set_min_utility(inst, s)
            assert worst == value

    def test_hcbp_family_bound(self, rng):
        for _ in range(15):
            inst = hcbp_instance(rng)
            opt, _ = oracles.brute_maxmin(inst)
            s = egal.ordered_relax(inst)
            alg, _ = egal._set_min_utility(inst, s)
            h_a = max(len(a) for a in inst.approvals)
            assert alg >= opt - h_a * (inst.budget - opt)


class TestMinmax:
    def test_affine_complement(self, rng):
        for _ in range(30):
            inst = random_approval_instance(rng, m_max=7)
            mm = egal.minmax_exact(inst)
            mx = egal.mpb_exact(inst)
            assert mm.optimal_value == inst.budget - mx.optimal_value
            assert mm.winning_sets == mx.winning_sets

    def test_matches_shortfall_oracle(self, rng):
        for _ in range(30):
            inst = random_approval_instance(rng, m_max=7)
            assert egal.minmax_exact(inst).optimal_value == \
                oracles.brute_minmax_shortfall(inst)

    def test_hcbp_ratio(self, rng):
        for _ in range(15):
            inst = hcbp_instance(rng)
            _, value = egal.minmax_ordered_relax(inst)
            opt = oracles.brute_minmax_shortfall(inst)
            h_o = egal.ordered_fill_bounds(inst).h_o
            assert Fraction(value) <= (2 - Fraction(1, h_o)) * opt


@st.composite
def small_instances(draw):
    m = draw(st.integers(1, 5))
    n = draw(st.integers(1, 3))
    ids = [f"p{i}" for i in range(m)]
    costs = {p: draw(st.integers(1, 9)) for p in ids}
    budget = draw(st.integers(1, 15))
    approvals = [frozenset(p for p in ids if draw(st.booleans())) for _ in range(n)]
    return make_instance(budget, costs, approvals)


class TestRelaxationAlwaysUpperBounds:
    @given(small_instances())
    @settings(max_examples=60, deadline=None)
    def test_lp_at_least_integer_optimum(self, inst):
        sol = egal.solve_mpb_relaxation(inst)
        value, _ = oracles.brute_maxmin(inst)
        assert sol.q >= value
        assert all(0 <= v <= 1 for v in sol.x.values())
