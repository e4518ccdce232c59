import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pbtk.core import make_instance
from pbtk.degrees import DegreeInstance
from pbtk.ordinal import make_ordinal_instance


def random_approval_instance(rng, m_max=10, n_max=5, b_max=30):
    m = rng.randint(1, m_max)
    n = rng.randint(1, n_max)
    ids = [f"p{i+1:02d}" for i in range(m)]
    budget = rng.randint(1, b_max)
    costs = {p: rng.randint(1, b_max) for p in ids}
    approvals = [frozenset(p for p in ids if rng.random() < 0.5) for _ in range(n)]
    return make_instance(budget, costs, approvals)


def random_ordinal_instance(rng, m_max=8, n_max=5, b_max=30, complete=False):
    m = rng.randint(2, m_max)
    n = rng.randint(1, n_max)
    ids = [f"p{i+1:02d}" for i in range(m)]
    costs = {p: rng.randint(1, b_max) for p in ids}
    rankings = []
    for _ in range(n):
        perm = ids[:]
        rng.shuffle(perm)
        take = m if complete else rng.randint(1, m)
        chosen = perm[:take]
        classes, k = [], 0
        while k < len(chosen):
            width = rng.randint(1, min(3, len(chosen) - k))
            classes.append(chosen[k: k + width])
            k += width
        rankings.append(classes)
    return make_ordinal_instance(rng.randint(1, b_max), costs, rankings)


def random_degree_instance(rng, m_max=4, t_max=3, n_max=5, b_max=30, cell_cap=4096):
    while True:
        m = rng.randint(1, m_max)
        dcosts = []
        for _ in range(m):
            k = rng.randint(1, t_max)
            dcosts.append(tuple(sorted(rng.sample(range(1, b_max + 1), k))))
        total_cells = 1
        for row in dcosts:
            total_cells *= len(row) + 1
        if total_cells > cell_cap:
            continue
        n = rng.randint(1, n_max)
        lo, hi = [], []
        for _ in range(n):
            lrow, hrow = [], []
            for j in range(m):
                allowed = [0] + list(dcosts[j])
                a, b = sorted((rng.choice(allowed), rng.choice(allowed)))
                lrow.append(a)
                hrow.append(b)
            lo.append(tuple(lrow))
            hi.append(tuple(hrow))
        return DegreeInstance(rng.randint(1, b_max), dcosts, lo, hi)


def hcbp_instance(rng, m=9, b_slack=3):
    """Cheap projects, tiny ballots, roomy budget: fill sizes beat ballots."""
    from pbtk.egal import is_hcbp
    while True:
        ids = [f"p{i+1:02d}" for i in range(m)]
        costs = {p: rng.randint(1, 3) for p in ids}
        budget = sum(costs.values()) - rng.randint(1, b_slack)
        n = rng.randint(1, 4)
        approvals = []
        for _ in range(n):
            size = rng.randint(1, 2)
            approvals.append(frozenset(rng.sample(ids, size)))
        inst = make_instance(budget, costs, approvals)
        if is_hcbp(inst):
            return inst


@pytest.fixture
def rng():
    return random.Random(987654321)
