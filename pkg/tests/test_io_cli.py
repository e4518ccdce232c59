"""Election files, parameter documents, and the command-line front end."""

import json

import pytest

from pbtk.cli import main, run
from pbtk.core import DichotomousInstance
from pbtk.degrees import DegreeInstance
from pbtk.errors import IdError, ParseError, ValidationError
from pbtk.ioformat import (AxisProfile, parse_election, serialize_election)
from pbtk.ordinal import OrdinalInstance

APPROVAL = """\
META
budget;6
vote_type;approval
num_projects;3
num_votes;2
PROJECTS
project_id;cost
p1;1
p2;3
p3;3
VOTES
voter_id;vote
1;p1,p2
2;p1,p3
"""

ORDINAL = """\
META
budget;5
vote_type;ordinal
PROJECTS
project_id;cost
p1;3
p2;3
p3;2
VOTES
voter_id;vote
1;p1>p2,p3
2;p3
"""

RANGED = """\
META
budget;10
vote_type;ranged
PROJECTS
project_id;costs
p1;3|7
p2;4
VOTES
voter_id;vote
1;p1:3:7,p2:0:4
2;p2:4:4
"""

SINGLE_PEAKED = """\
META
vote_type;single-peaked
axis;p1|p2|p3
PROJECTS
project_id;cost
p1;1
p2;1
p3;1
VOTES
voter_id;vote
1;p1>p2>p3
2;p3>p2>p1
3;p2>p3>p1
4;p3>p2>p1
"""

BALLOT_PARAMS = json.dumps({
    "schema": "pbtk/1", "kind": "ballots", "groups": [[0], [1, 2, 3]],
    "kappa": [1, 2], "eta": ["1/3", "2/5"], "psi": "r2",
    "delta": {
        "0,0": ["0", "0", "1"], "0,1": ["0", "0.1", "0.9"],
        "0,2": ["0.1", "0.1", "0.8"], "0,3": ["0.2", "0", "0.8"],
        "1,0": ["0.4", "0.1", "0.5"], "1,1": ["0.5", "0", "0.5"],
        "1,2": ["0.7", "0.2", "0.1"], "1,3": ["1", "0", "0"]}})


class TestParsing:
    def test_approval(self):
        inst = parse_election(APPROVAL)
        assert isinstance(inst, DichotomousInstance)
        assert inst.budget == 6 and inst.m == 3 and inst.n == 2

    def test_ordinal(self):
        inst = parse_election(ORDINAL)
        assert isinstance(inst, OrdinalInstance)
        assert inst.prefs[0].rank("p2") == 2

    def test_ranged(self):
        inst = parse_election(RANGED)
        assert isinstance(inst, DegreeInstance)
        assert inst.degree_costs == ((3, 7), (4,))
        assert inst.lower[0] == (3, 0)

    def test_single_peaked(self):
        inst = parse_election(SINGLE_PEAKED)
        assert isinstance(inst, AxisProfile)
        assert [p.peak for p in inst.profile] == [0, 2, 1, 2]

    def test_unknown_project_in_vote(self):
        bad = APPROVAL.replace("2;p1,p3", "2;p1,zz")
        with pytest.raises(IdError) as err:
            parse_election(bad)
        assert "line" in str(err.value)

    def test_bounds_out_of_order(self):
        bad = RANGED.replace("p1:3:7", "p1:7:3")
        with pytest.raises(ValidationError):
            parse_election(bad)

    def test_non_integer_cost(self):
        bad = APPROVAL.replace("p2;3", "p2;3.5")
        with pytest.raises(TypeError):
            parse_election(bad)

    def test_section_order_enforced(self):
        scrambled = "PROJECTS\n" + APPROVAL
        with pytest.raises(ParseError):
            parse_election(scrambled)

    def test_vote_count_checked(self):
        bad = APPROVAL.replace("num_votes;2", "num_votes;5")
        with pytest.raises(ValidationError):
            parse_election(bad)


class TestRoundTrip:
    @pytest.mark.parametrize("doc", [APPROVAL, ORDINAL, RANGED, SINGLE_PEAKED])
    def test_parse_serialize_parse(self, doc):
        inst = parse_election(doc)
        again = parse_election(serialize_election(inst))
        if isinstance(inst, DegreeInstance):
            assert again == inst
        elif isinstance(inst, AxisProfile):
            assert again.axis == inst.axis and again.profile == inst.profile
        else:
            assert again.budget == inst.budget
            assert again.projects == inst.projects
            if hasattr(inst, "approvals"):
                assert again.approvals == inst.approvals
            else:
                assert again.prefs == inst.prefs


class TestRunDispatch:
    def test_maxmin_objective_attached(self):
        result = run("mpb", parse_election(APPROVAL))
        assert result.outcome == [["p2", "p3"]]
        assert result.objective == {"min_utility": 3}

    def test_rounding_rule_reports_same_metric(self):
        inst = parse_election(APPROVAL)
        a = run("mpb", inst)
        b = run("ordered-relax", inst)
        assert a.objective["min_utility"] == b.objective["min_utility"]

    def test_share_rule_equals_best_representative(self, rng):
        from conftest import random_ordinal_instance
        for _ in range(20):
            inst = random_ordinal_instance(rng, m_max=5, b_max=10)
            sg = run("sg", inst, {"theta": 1})
            cc = run("pbcc", inst)
            assert sg.outcome == cc.outcome

    def test_byte_identical_json(self):
        inst = parse_election(APPROVAL)
        a = run("mpb", inst, {"seed": 7}).to_json()
        b = run("mpb", inst, {"seed": 7}).to_json()
        assert a == b
        assert "timing_ms" in run("mpb", inst).to_json(with_timing=True)

    def test_axis_rule_through_params(self, tmp_path):
        result = run("pfgbr", parse_election(SINGLE_PEAKED),
                     {"params_doc": BALLOT_PARAMS})
        assert result.outcome == {"p1": "2/5", "p2": "1/10", "p3": "1/2"}


class TestCli:
    def write(self, tmp_path, name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    def test_solve_exit_zero(self, tmp_path, capsys):
        path = self.write(tmp_path, "e.pb", APPROVAL)
        assert main(["solve", "--election", path, "--rule", "mpb"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == "pbtk/1"

    def test_parse_error_exit_two(self, tmp_path, capsys):
        path = self.write(tmp_path, "bad.pb", "VOTES\nnope")
        assert main(["validate", "--election", path]) == 2

    def test_resource_bound_exit_four(self, tmp_path):
        many = "\n".join(f"p{i};1" for i in range(9))
        doc = (
            "META\nbudget;3\nvote_type;approval\nPROJECTS\nproject_id;cost\n"
            + many + "\nVOTES\nvoter_id;vote\n1;p1\n")
        path = self.write(tmp_path, "big.pb", doc)
        assert main(["solve", "--election", path, "--rule", "mpb",
                     "--max-enum", "4"]) == 4

    def test_check_fair_condition_and_enum_agree(self, tmp_path, capsys):
        election = self.write(tmp_path, "sp.pb", SINGLE_PEAKED)
        params = self.write(tmp_path, "params.json", BALLOT_PARAMS)
        for mode in ("enum", "condition"):
            code = main(["check-fair", "--election", election, "--params", params,
                         "--fairness", "strong-geg", "--mode", mode])
            payload = json.loads(capsys.readouterr().out)
            assert payload["holds"] is False and code == 3

    def test_batch_glob(self, tmp_path, capsys):
        self.write(tmp_path, "a.pb", APPROVAL)
        self.write(tmp_path, "b.pb", APPROVAL)
        assert main(["validate", "--glob", str(tmp_path / "*.pb")]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert len(out) == 2

    def test_table_format(self, tmp_path, capsys):
        path = self.write(tmp_path, "e.pb", APPROVAL)
        assert main(["solve", "--election", path, "--rule", "mpb",
                     "--format", "table"]) == 0
        assert "rule: mpb" in capsys.readouterr().out


class TestModelErrorsSurfaceAsValidation:
    def test_negative_budget(self):
        bad = APPROVAL.replace("budget;6", "budget;-6")
        with pytest.raises((ValidationError, TypeError)):
            parse_election(bad)

    def test_zero_cost_project(self):
        bad = APPROVAL.replace("p1;1", "p1;0")
        with pytest.raises(ValidationError):
            parse_election(bad)
