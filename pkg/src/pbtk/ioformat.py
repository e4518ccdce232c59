"""Election and parameter files.

Election files are sectioned semicolon-separated text with a fixed section
order META -> PROJECTS -> VOTES (see docs/format.md). The vote_type META
key selects the model:

  approval       comma-separated approved ids
  ordinal        classes best-first, '>' between classes, ',' inside
  ranged         "id:lo:hi" entries; PROJECTS carry '|'-separated level costs
  single-peaked  full strict ranking, '>'-separated; META carries the axis

Rule parameters for the axis model (ballot families, min-max or median
positions, mixtures) load from JSON documents, schema tag "pbtk/1".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .core import DichotomousInstance, Project, WeakOrdinalPreference
from .degrees import DegreeInstance
from .errors import IdError, ParseError, ValidationError
from .ordinal import OrdinalInstance
from .speaked import (BallotFamily, GroupStructure, GroupMinMaxRule,
                      MedianRule, Mixture, RepFunction, SPPreference)

VOTE_TYPES = ("approval", "ordinal", "ranged", "single-peaked")


@dataclass(frozen=True)
class AxisProfile:
    """Single-peaked election: named axis plus one full ranking per voter."""

    axis: tuple  # project ids in axis order
    profile: tuple  # SPPreference per voter
    budget: int = 1

    @property
    def m(self):
        return len(self.axis)

    @property
    def n(self):
        return len(self.profile)


def _int(value, line, what):
    value = value.strip()
    if not value or any(c not in "0123456789" for c in value.lstrip("-")) or "-" in value[1:]:
        raise TypeError(f"line {line}: {what} must be an integer, got {value!r}")
    return int(value)


def parse_election(text):
    """Parse an election document (text or path-like)."""
    if hasattr(text, "read_text"):
        text = text.read_text()
    elif isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = text.splitlines()
    sections = {}
    current = None
    order = []
    for idx, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("META", "PROJECTS", "VOTES"):
            if line in sections:
                raise ParseError(f"duplicate section {line}", idx)
            current = line
            sections[line] = []
            order.append(line)
            continue
        if current is None:
            raise ParseError("content before the META section", idx)
        sections[current].append((idx, line))
    if order != ["META", "PROJECTS", "VOTES"]:
        raise ParseError(f"sections must be META, PROJECTS, VOTES in order; saw {order}")

    meta = {}
    for idx, line in sections["META"]:
        key, sep, value = line.partition(";")
        if not sep:
            raise ParseError("META rows need key;value", idx)
        meta[key.strip()] = value.strip()
    vote_type = meta.get("vote_type")
    if vote_type not in VOTE_TYPES:
        raise ParseError(f"vote_type must be one of {VOTE_TYPES}, got {vote_type!r}")
    budget = _int(meta["budget"], 0, "budget") if "budget" in meta else None
    if vote_type != "single-peaked" and budget is None:
        raise ParseError("META needs a budget")

    rows = sections["PROJECTS"]
    if not rows:
        raise ParseError("PROJECTS section is empty")
    header = rows[0][1]
    want = "project_id;costs" if vote_type == "ranged" else "project_id;cost"
    if header != want:
        raise ParseError(f"PROJECTS header must be {want!r}", rows[0][0])
    ids, costs, degree_costs = [], {}, {}
    for idx, line in rows[1:]:
        pid, sep, rest = line.partition(";")
        pid = pid.strip()
        if not sep or not pid:
            raise ParseError("PROJECTS rows need project_id;cost", idx)
        if pid in costs or pid in degree_costs:
            raise ParseError(f"duplicate project id {pid}", idx)
        ids.append(pid)
        if vote_type == "ranged":
            levels = [_int(v, idx, "degree cost") for v in rest.split("|")]
            if levels != sorted(set(levels)) or (levels and levels[0] < 1):
                raise ValidationError("degree costs must be strictly increasing and >= 1", idx)
            degree_costs[pid] = tuple(levels)
        else:
            costs[pid] = _int(rest, idx, "cost")

    vrows = sections["VOTES"]
    if not vrows:
        raise ParseError("VOTES section is empty")
    if vrows[0][1] != "voter_id;vote":
        raise ParseError("VOTES header must be 'voter_id;vote'", vrows[0][0])
    votes = []
    for idx, line in vrows[1:]:
        _, sep, payload = line.partition(";")
        if not sep:
            raise ParseError("VOTES rows need voter_id;vote", idx)
        votes.append((idx, payload.strip()))
    if "num_projects" in meta and _int(meta["num_projects"], 0, "num_projects") != len(ids):
        raise ValidationError("num_projects does not match the PROJECTS section")
    if "num_votes" in meta and _int(meta["num_votes"], 0, "num_votes") != len(votes):
        raise ValidationError("num_votes does not match the VOTES section")

    known = set(ids)
    if vote_type == "approval":
        approvals = []
        for idx, payload in votes:
            names = [v.strip() for v in payload.split(",") if v.strip()] if payload else []
            for name in names:
                if name not in known:
                    raise IdError(f"unknown project {name!r} in a vote", idx)
            approvals.append(frozenset(names))
        try:
            projects = tuple(Project(pid, costs[pid]) for pid in ids)
            return DichotomousInstance(budget, projects, tuple(approvals))
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc

    if vote_type == "ordinal":
        prefs = []
        for idx, payload in votes:
            classes = []
            for block in payload.split(">"):
                names = [v.strip() for v in block.split(",") if v.strip()]
                for name in names:
                    if name not in known:
                        raise IdError(f"unknown project {name!r} in a vote", idx)
                if names:
                    classes.append(frozenset(names))
            try:
                prefs.append(WeakOrdinalPreference(tuple(classes)))
            except ValueError as exc:
                raise ValidationError(str(exc), idx) from exc
        try:
            projects = tuple(Project(pid, costs[pid]) for pid in ids)
            return OrdinalInstance(budget, projects, tuple(prefs))
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc

    if vote_type == "ranged":
        lower, upper = [], []
        for idx, payload in votes:
            lo = {pid: 0 for pid in ids}
            hi = {pid: 0 for pid in ids}
            entries = [e.strip() for e in payload.split(",") if e.strip()] if payload else []
            for entry in entries:
                parts = entry.split(":")
                if len(parts) != 3:
                    raise ParseError(f"ranged entries look like id:lo:hi, got {entry!r}", idx)
                pid = parts[0].strip()
                if pid not in known:
                    raise IdError(f"unknown project {pid!r} in a vote", idx)
                lo[pid] = _int(parts[1], idx, "lower bound")
                hi[pid] = _int(parts[2], idx, "upper bound")
                if lo[pid] > hi[pid]:
                    raise ValidationError(f"lower bound exceeds upper bound for {pid}", idx)
            lower.append(tuple(lo[pid] for pid in ids))
            upper.append(tuple(hi[pid] for pid in ids))
        try:
            return DegreeInstance(budget,
                                  tuple(degree_costs[pid] for pid in ids),
                                  tuple(lower), tuple(upper))
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc

    # single-peaked
    axis = [v.strip() for v in meta.get("axis", "").split("|") if v.strip()]
    if not axis:
        axis = ids  # axis defaults to declaration order
    if sorted(axis) != sorted(ids):
        raise ValidationError("axis must list exactly the declared projects")
    index = {pid: i for i, pid in enumerate(axis)}
    profile = []
    for idx, payload in votes:
        names = [v.strip() for v in payload.split(">") if v.strip()]
        if sorted(names) != sorted(ids):
            raise ValidationError("single-peaked votes must rank every project exactly once", idx)
        try:
            profile.append(SPPreference(tuple(index[n] for n in names)))
        except ValueError as exc:
            raise ValidationError(str(exc), idx) from exc
    return AxisProfile(tuple(axis), tuple(profile), budget if budget is not None else 1)


def serialize_election(inst):
    """Inverse of parse_election for all four models."""
    out = ["META"]
    if isinstance(inst, DichotomousInstance):
        out += [f"budget;{inst.budget}", "vote_type;approval",
                f"num_projects;{inst.m}", f"num_votes;{inst.n}", "PROJECTS",
                "project_id;cost"]
        out += [f"{p.id};{p.cost}" for p in inst.projects]
        out += ["VOTES", "voter_id;vote"]
        out += [f"{i+1};{','.join(sorted(a))}" for i, a in enumerate(inst.approvals)]
    elif isinstance(inst, OrdinalInstance):
        out += [f"budget;{inst.budget}", "vote_type;ordinal",
                f"num_projects;{inst.m}", f"num_votes;{inst.n}", "PROJECTS",
                "project_id;cost"]
        out += [f"{p.id};{p.cost}" for p in inst.projects]
        out += ["VOTES", "voter_id;vote"]
        for i, pref in enumerate(inst.prefs):
            vote = ">".join(",".join(sorted(cls)) for cls in pref.classes)
            out.append(f"{i+1};{vote}")
    elif isinstance(inst, DegreeInstance):
        out += [f"budget;{inst.budget}", "vote_type;ranged",
                f"num_projects;{inst.m}", f"num_votes;{inst.n}", "PROJECTS",
                "project_id;costs"]
        ids = [f"p{j+1}" for j in range(inst.m)]
        out += [f"{ids[j]};{'|'.join(str(c) for c in inst.degree_costs[j])}"
                for j in range(inst.m)]
        out += ["VOTES", "voter_id;vote"]
        for i in range(inst.n):
            entries = [f"{ids[j]}:{inst.lower[i][j]}:{inst.upper[i][j]}"
                       for j in range(inst.m)
                       if (inst.lower[i][j], inst.upper[i][j]) != (0, 0)]
            out.append(f"{i+1};{','.join(entries)}")
    elif isinstance(inst, AxisProfile):
        out += [f"budget;{inst.budget}", "vote_type;single-peaked",
                f"num_projects;{inst.m}", f"num_votes;{inst.n}",
                f"axis;{'|'.join(inst.axis)}", "PROJECTS", "project_id;cost"]
        out += [f"{pid};1" for pid in inst.axis]
        out += ["VOTES", "voter_id;vote"]
        for i, pref in enumerate(inst.profile):
            out.append(f"{i+1};{'>'.join(inst.axis[t] for t in pref.order)}")
    else:
        raise TypeError(f"cannot serialize {type(inst).__name__}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# axis-model parameter documents


def _gamma_key(s):
    return tuple(int(v) for v in s.split(","))


def load_params(doc, axis_profile):
    """Build an axis-model rule description from a JSON document.

    Returns (kind, payload): 'ballots' -> (BallotFamily, GroupStructure),
    'mixture' -> (Mixture, GroupStructure).
    """
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    if doc.get("schema") not in (None, "pbtk/1"):
        raise ParseError(f"unsupported schema {doc.get('schema')!r}")
    m = axis_profile.m
    index = {pid: i for i, pid in enumerate(axis_profile.axis)}
    groups = tuple(tuple(g) for g in doc.get("groups", [[i] for i in range(axis_profile.n)]))
    kappa = tuple(doc.get("kappa", [1] * len(groups)))
    eta = tuple(Fraction(str(e)) for e in doc.get("eta", [0] * len(groups)))
    default_tag = lambda g: "topk" if len(g) == 1 else "r1"
    psi_tag = doc.get("psi")
    psi = tuple(RepFunction(psi_tag or default_tag(g), kappa[q], m,
                            int(doc.get("psi_param", 1)))
                for q, g in enumerate(groups))
    structure = GroupStructure(groups, kappa, eta, psi)

    kind = doc.get("kind")
    if kind == "ballots":
        delta = {_gamma_key(k): tuple(Fraction(str(x)) for x in v)
                 for k, v in doc["delta"].items()}
        return "ballots", (BallotFamily(m, structure.sizes, delta), structure)
    if kind == "mixture":
        comps = []
        for comp in doc["components"]:
            comps.append((Fraction(str(comp["weight"])),
                          _load_dscr(comp["rule"], structure, m, index)))
        return "mixture", (Mixture(tuple(comps)), structure)
    if kind in ("minmax", "median"):
        rule = _load_dscr(doc, structure, m, index)
        return "mixture", (Mixture(((Fraction(1), rule),)), structure)
    raise ParseError(f"unknown parameter kind {kind!r}")


def _load_dscr(doc, structure, m, index):
    kind = doc.get("kind")
    if kind == "minmax":
        beta = {_gamma_key(k): index[v] for k, v in doc["beta"].items()}
        return GroupMinMaxRule(m, structure, beta,
                               validate=bool(doc.get("validate", True)))
    if kind == "median":
        inner = [index[v] for v in doc["betas"]]
        return MedianRule(m, tuple([0] + inner + [m - 1]))
    raise ParseError(f"unknown rule kind {kind!r}")
