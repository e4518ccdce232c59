"""Small dense simplex over exact rationals.

Solves  max c.x  s.t.  A.x <= b,  x >= 0  with b >= 0, so the all-slack
basis is feasible and no phase-1 is needed. Bland's rule prevents cycling;
with Fraction arithmetic the optimum is exact. The LPs solved here have at
most a few hundred rows and columns, so a dense tableau is plenty.
"""

from fractions import Fraction

from .errors import NumericFailure


def solve_max(objective, rows, rhs, max_pivots=200_000):
    """Return (optimal value, x list) for max objective.x, rows.x <= rhs, x >= 0.

    All inputs are coerced to Fraction; every rhs entry must be >= 0.
    """
    n = len(objective)
    m = len(rows)
    c = [Fraction(v) for v in objective]
    b = [Fraction(v) for v in rhs]
    if any(v < 0 for v in b):
        raise NumericFailure("negative rhs: all-slack start infeasible")

    # tableau: columns = n structural + m slacks + rhs
    tab = []
    for i, row in enumerate(rows):
        r = [Fraction(v) for v in row] + [Fraction(0)] * m + [b[i]]
        r[n + i] = Fraction(1)
        tab.append(r)
    # objective row keeps reduced costs (maximization: pivot while some > 0)
    z = c + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    for _ in range(max_pivots):
        # Bland: entering = lowest index with positive reduced cost
        enter = next((j for j in range(n + m) if z[j] > 0), None)
        if enter is None:
            x = [Fraction(0)] * n
            for i, bv in enumerate(basis):
                if bv < n:
                    x[bv] = tab[i][-1]
            value = -z[-1]
            return value, x
        # ratio test, ties broken by lowest basis variable (Bland)
        leave, best = None, None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise NumericFailure("objective unbounded")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if z[enter] != 0:
            f = z[enter]
            z = [v - f * w for v, w in zip(z, tab[leave])]
        basis[leave] = enter
    raise NumericFailure("pivot limit exceeded")
