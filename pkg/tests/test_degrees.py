"""Funding-level solvers: exact tables, rounding schemes, rescaling."""

from fractions import Fraction

import pytest

import oracles
from conftest import random_degree_instance
from pbtk.degrees import (DegreeInstance, capped_total, cardinal_total,
                          cost_total, degree_scalable_limit, disutility_stats,
                          distance_total, solve_r_cap, solve_r_card,
                          solve_r_cost_exact, solve_r_cost_fptas, solve_r_dist,
                          variance_coefficient)
from pbtk.errors import DegenerateParameter, ResourceBound


class TestModel:
    def test_bounds_must_come_from_level_costs(self):
        with pytest.raises(ValueError):
            DegreeInstance(5, [(2, 4)], [(3,)], [(4,)])

    def test_bounds_ordered(self):
        with pytest.raises(ValueError):
            DegreeInstance(5, [(2, 4)], [(4,)], [(2,)])

    def test_level_costs_increasing(self):
        with pytest.raises(ValueError):
            DegreeInstance(5, [(4, 2)], [(0,)], [(0,)])


class TestCardinalRule:
    def test_single_project_within_bounds(self):
        inst = DegreeInstance(5, [(3,)], [(0,)], [(3,)])
        assert solve_r_card(inst).degrees == (1,)

    def test_zero_budget_funds_nothing(self):
        inst = DegreeInstance(0, [(3,), (1,)], [(0, 0)], [(3, 1)])
        assert solve_r_card(inst).degrees == (0, 0)

    def test_matches_enumeration(self, rng):
        for _ in range(80):
            inst = random_degree_instance(rng, b_max=15)
            got = solve_r_card(inst)
            best, arg = oracles.brute_degrees(inst, cardinal_total)
            assert cardinal_total(inst, got) == best
            assert got.degrees == min(arg)


class TestCostRule:
    def test_single_voter_knapsack(self):
        inst = DegreeInstance(10, [(4,), (5,), (3,)],
                              [(4, 5, 3)], [(4, 5, 3)])
        vs = solve_r_cost_exact(inst)
        assert cost_total(inst, vs) == 9

    def test_vetoed_everything(self):
        inst = DegreeInstance(10, [(4,), (5,)], [(0, 0)], [(0, 0)])
        vs = solve_r_cost_exact(inst)
        assert cost_total(inst, vs) == 0
        assert vs.degrees == (0, 0)

    def test_matches_enumeration(self, rng):
        for _ in range(80):
            inst = random_degree_instance(rng, b_max=15)
            got = solve_r_cost_exact(inst)
            best, arg = oracles.brute_degrees(inst, cost_total)
            assert cost_total(inst, got) == best
            assert got.degrees == min(arg)

    @pytest.mark.parametrize("eps", [Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)])
    def test_fptas_ratio(self, rng, eps):
        for _ in range(40):
            inst = random_degree_instance(rng, b_max=15)
            best, _ = oracles.brute_degrees(inst, cost_total)
            got = cost_total(inst, solve_r_cost_fptas(inst, eps))
            assert Fraction(got) >= (1 - eps) * best

    def test_single_item_instance_is_exact(self):
        inst = DegreeInstance(9, [(4, 7)], [(4,)], [(7,)])
        exact = cost_total(inst, solve_r_cost_exact(inst))
        approx = cost_total(inst, solve_r_cost_fptas(inst, Fraction(9, 10)))
        assert approx == exact

    def test_tiny_eps_recovers_optimum(self, rng):
        for _ in range(20):
            inst = random_degree_instance(rng, m_max=3, b_max=12)
            best, _ = oracles.brute_degrees(inst, cost_total)
            got = cost_total(inst, solve_r_cost_fptas(inst, Fraction(1, 100)))
            assert got == best


class TestCappedRule:
    def test_overshoot_pays_the_bound(self):
        inst = DegreeInstance(9, [(5, 9)], [(0,)], [(5,)])
        vs = solve_r_cap(inst, "exact")
        # either level pays 5; the tie resolves to the lexicographically least
        assert capped_total(inst, vs) == 5
        assert vs.degrees == (1,)

    def test_cap_never_binding_matches_cost_rule(self, rng):
        for _ in range(30):
            inst = random_degree_instance(rng, m_max=3, b_max=12)
            top = tuple(tuple(r) for r in inst.degree_costs)
            relaxed = DegreeInstance(
                inst.budget, inst.degree_costs,
                tuple(tuple(0 for _ in row) for row in inst.lower),
                tuple(tuple(max(top[j]) for j in range(inst.m)) for _ in range(inst.n)))
            a = solve_r_cap(relaxed, "exact")
            b = solve_r_cost_exact(relaxed)
            assert capped_total(relaxed, a) == cost_total(relaxed, b)

    def test_matches_enumeration(self, rng):
        for _ in range(80):
            inst = random_degree_instance(rng, b_max=15)
            got = solve_r_cap(inst, "exact")
            best, arg = oracles.brute_degrees(inst, capped_total)
            assert capped_total(inst, got) == best
            assert got.degrees == min(arg)

    @pytest.mark.parametrize("eps", [Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)])
    def test_fptas_ratio(self, rng, eps):
        for _ in range(40):
            inst = random_degree_instance(rng, b_max=15)
            best, _ = oracles.brute_degrees(inst, capped_total)
            got = capped_total(inst, solve_r_cap(inst, "fptas", eps))
            assert Fraction(got) >= (1 - eps) * best


class TestDistanceRule:
    def test_all_bounds_satisfiable(self):
        inst = DegreeInstance(9, [(4,), (5,)], [(4, 5)], [(4, 5)])
        vs = solve_r_dist(inst, "exact")
        assert distance_total(inst, vs) == 0
        assert vs.degrees == (1, 1)

    def test_forced_shortfall(self):
        # only the cheap level is affordable; the bound sits at the dear one
        inst = DegreeInstance(3, [(2, 7)], [(7,)], [(7,)])
        vs = solve_r_dist(inst, "exact")
        assert vs.degrees == (1,)
        assert distance_total(inst, vs) == 5

    def test_matches_enumeration(self, rng):
        for _ in range(80):
            inst = random_degree_instance(rng, b_max=15)
            got = solve_r_dist(inst, "exact")
            best, arg = oracles.brute_degrees(inst, distance_total, maximize=False)
            assert distance_total(inst, got) == best
            assert got.degrees == min(arg)

    @pytest.mark.parametrize("eps", [Fraction(1, 10), Fraction(1, 2), Fraction(9, 10), 1])
    def test_parameterized_scheme_ratio(self, rng, eps):
        for _ in range(40):
            inst = random_degree_instance(rng, b_max=15)
            best, _ = oracles.brute_degrees(inst, distance_total, maximize=False)
            try:
                got = distance_total(inst, solve_r_dist(inst, "pfptas", eps))
            except DegenerateParameter:
                continue
            assert Fraction(got) <= (1 + Fraction(eps)) * best

    def test_degenerate_parameter(self):
        inst = DegreeInstance(9, [(4,)], [(4,)], [(4,)])
        assert disutility_stats(inst)[1] == 0
        with pytest.raises(DegenerateParameter):
            solve_r_dist(inst, "pfptas", Fraction(1, 2))
        with pytest.raises(DegenerateParameter):
            variance_coefficient(inst)


class TestScalableLimit:
    def test_worked_rescale(self):
        inst = DegreeInstance(100, [(10, 20, 60)], [(0,)], [(60,)])
        scaled, delta = degree_scalable_limit(inst)
        assert delta == 6
        assert scaled.budget == 10

    def test_gcd_one_is_identity(self):
        inst = DegreeInstance(7, [(2, 5)], [(0,)], [(5,)])
        scaled, delta = degree_scalable_limit(inst)
        assert scaled == inst and delta == 5

    def test_costs_equal_budget(self):
        inst = DegreeInstance(6, [(6,)], [(6,)], [(6,)])
        _, delta = degree_scalable_limit(inst)
        assert delta == 1

    def test_optima_preserved(self, rng):
        for _ in range(20):
            inst = random_degree_instance(rng, m_max=3, b_max=10)
            factor = rng.randint(2, 4)
            big = DegreeInstance(
                inst.budget * factor,
                tuple(tuple(c * factor for c in row) for row in inst.degree_costs),
                tuple(tuple(v * factor for v in row) for row in inst.lower),
                tuple(tuple(v * factor for v in row) for row in inst.upper))
            scaled, _ = degree_scalable_limit(big)
            assert solve_r_cost_exact(scaled).degrees == solve_r_cost_exact(inst).degrees


class TestSanityInvariants:
    def test_outputs_are_valid_sets(self, rng):
        for _ in range(40):
            inst = random_degree_instance(rng, b_max=15)
            for vs in (solve_r_card(inst), solve_r_cost_exact(inst),
                       solve_r_cap(inst, "exact"), solve_r_dist(inst, "exact")):
                assert vs.total_cost <= inst.budget
                assert len(vs.degrees) == inst.m

    def test_cost_rule_beats_single_project_plans(self, rng):
        for _ in range(30):
            inst = random_degree_instance(rng, b_max=15)
            best = cost_total(inst, solve_r_cost_exact(inst))
            for j in range(inst.m):
                for t in range(1, inst.degree_count(j) + 1):
                    if inst.cost(j, t) > inst.budget:
                        continue
                    degrees = [0] * inst.m
                    degrees[j] = t
                    assert best >= cost_total(inst, inst.valid_set(degrees))


class TestResourceGuards:
    def test_cost_rule_table_cap(self):
        inst = DegreeInstance(10, [(4,)], [(4,), (4,)], [(4,), (4,)])
        with pytest.raises(ResourceBound):
            solve_r_cost_exact(inst, table_cap=5)

    def test_enumeration_cap(self):
        inst = DegreeInstance(10, [(1, 2, 3), (1, 2, 3)], [(0, 0)], [(3, 3)])
        with pytest.raises(ResourceBound):
            list(inst.iter_valid_sets(cap=4))
