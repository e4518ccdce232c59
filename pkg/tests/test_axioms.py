"""Transformation harness: apply semantics, witnesses, the score-card."""

import pytest

from pbtk import suite
from pbtk.axioms import (Transformation, apply, check_axiom, degree_rule,
                         mpb_rule, pbcc_rule, welfare_rule)
from pbtk.core import make_instance
from pbtk.degrees import DegreeInstance
from pbtk.errors import IllFormedTransformation
from pbtk.ordinal import make_ordinal_instance


class TestTransformations:
    def test_split_rewrites_every_ballot(self):
        inst = make_instance(9, {"p": 4, "q": 2}, [{"p"}, {"q"}])
        out = apply(Transformation("split", ("p", (1, 3))), inst)
        assert out.approvals[0] == {"p#1", "p#2"}
        assert out.approvals[1] == {"q"}
        assert out.cost_of({"p#1", "p#2"}) == 4

    def test_split_must_preserve_cost(self):
        inst = make_instance(9, {"p": 4}, [{"p"}])
        with pytest.raises(IllFormedTransformation):
            apply(Transformation("split", ("p", (1, 1))), inst)

    def test_discount_needs_cost_two(self):
        inst = make_instance(9, {"p": 1}, [{"p"}])
        with pytest.raises(IllFormedTransformation):
            apply(Transformation("discount", ("p",)), inst)

    def test_budget_increase_guard(self):
        inst = make_instance(3, {"p": 4}, [{"p"}])
        with pytest.raises(IllFormedTransformation):
            apply(Transformation("budget_increase"), inst)

    def test_merge_needs_aligned_ballots(self):
        inst = make_instance(9, {"p": 4, "q": 2}, [{"p"}, {"q"}])
        with pytest.raises(IllFormedTransformation):
            apply(Transformation("merge", (frozenset({"p", "q"}), "pq")), inst)

    def test_rank_swap_adjacent_classes_only(self):
        inst = make_ordinal_instance(5, {"a": 1, "b": 1, "c": 1},
                                     [[["a"], ["b"], ["c"]]])
        swapped = apply(Transformation("rank_swap", (0, "c", "b")), inst)
        assert swapped.prefs[0].rank("c") == 2
        with pytest.raises(IllFormedTransformation):
            apply(Transformation("rank_swap", (0, "c", "a")), inst)

    def test_degree_discount_tracks_bounds(self):
        inst = DegreeInstance(5, [(3, 5)], [(3,)], [(5,)])
        out = apply(Transformation("degree_discount", (0, 1)), inst)
        assert out.degree_costs[0] == (2, 5)
        assert out.lower[0][0] == 2

    def test_degree_discount_collision(self):
        inst = DegreeInstance(5, [(2, 3)], [(0,)], [(3,)])
        with pytest.raises(IllFormedTransformation):
            apply(Transformation("degree_discount", (0, 2)), inst)


class TestWitnessReplay:
    def test_discount_witness_replays(self):
        inst = make_instance(12, {"p1": 4, "p2": 4, "p3": 4, "p4": 4},
                             [{"p1", "p2"}, {"p3"}, {"p4"}])
        rule = mpb_rule()
        report = check_axiom(rule, "discount", inst)
        assert report.violated
        t = report.witness["transformation"]
        pid = report.witness["project"]
        assert pid in rule.winners(inst)
        assert pid not in rule.winners(apply(t, inst))

    def test_limit_witness_replays(self):
        inst = make_instance(12, {"p1": 3, "p2": 1, "p3": 3, "p4": 3,
                                  "p5": 3, "p6": 6},
                             [{"p1", "p2"}, {"p3", "p4"}, {"p5"}, {"p6"}])
        rule = mpb_rule()
        report = check_axiom(rule, "limit", inst)
        assert report.violated
        after = rule.winners(apply(report.witness["transformation"], inst))
        assert all(p not in after for p in report.witness["dropped"])


class TestRuleAdapters:
    def test_welfare_rule_matches_oracle(self, rng):
        import oracles
        from conftest import random_approval_instance
        for _ in range(30):
            inst = random_approval_instance(rng, m_max=6)
            for f in ("card", "cost", "coverage"):
                got = {frozenset(s) for s in welfare_rule(f).outcomes(inst)}
                _, arg = oracles.brute_welfare(inst, inst.approvals, f)
                assert got == arg

    def test_pbcc_adapter_matches_module(self, rng):
        from conftest import random_ordinal_instance
        from pbtk.ordinal import pb_cc
        for _ in range(20):
            inst = random_ordinal_instance(rng, m_max=6)
            got = {frozenset(s) for s in pbcc_rule().outcomes(inst)}
            assert got == {s.members for s in pb_cc(inst)}

    def test_degree_adapter_contains_solver_output(self, rng):
        from conftest import random_degree_instance
        from pbtk.degrees import solve_r_cost_exact
        for _ in range(20):
            inst = random_degree_instance(rng, b_max=12)
            outs = {o.degrees for o in degree_rule("cost").outcomes(inst)}
            assert solve_r_cost_exact(inst).degrees in outs


class TestScoreCard:
    def test_full_card_small_sweeps(self):
        rows = suite.run_suite(trials=60)
        assert suite.suite_ok(rows)

    def test_every_expected_violation_is_curated(self):
        for rule, axiom, expected, factory in suite.TABLE:
            if expected in (suite.EXPECT_VIOL, suite.EXPECT_DIVERGENCE):
                assert factory is not None, (rule, axiom)

    def test_ct_limit_rows(self):
        rows = suite.ct_limit_rows()
        verdicts = {r.axiom: r.verdict for r in rows}
        assert verdicts["limit[wide-worth]"] == "violated"
        assert verdicts["limit[flat-worth]"] == "satisfied-on-instance"

    def test_json_export_is_deterministic(self):
        rows = suite.ct_limit_rows()
        assert suite.to_json(rows) == suite.to_json(suite.ct_limit_rows())
