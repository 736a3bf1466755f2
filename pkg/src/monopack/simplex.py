"""Exact rational simplex over `fractions.Fraction`.

Two entry points, both certificate-producing:

* `simplex_max_leq` solves  max c^T x  s.t.  A x <= b, x >= 0  (b >= 0) and
  returns the optimal primal vertex together with the optimal dual vector,
  whose objective values agree exactly (strong duality read off the final
  tableau).
* `solve_eq_nonneg` decides feasibility of  A x = b, x >= 0  by a phase-1
  simplex with artificial variables; on infeasibility it returns a Farkas
  vector y with y^T A_j >= 0 for every column j and y^T b < 0.

Anti-cycling: entering columns are scanned in a fixed order (optionally a
caller-supplied preference order, used for warm starts) and the leaving row
breaks ties by smallest basis index, i.e. Bland's rule under a fixed column
order, which terminates.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class UnboundedError(RuntimeError):
    pass


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, col: int) -> None:
    piv = tab[r][col]
    row = tab[r]
    inv = ONE / piv
    tab[r] = [v * inv for v in row]
    row = tab[r]
    for k, other in enumerate(tab):
        if k == r:
            continue
        factor = other[col]
        if factor:
            tab[k] = [a - factor * b for a, b in zip(other, row)]
    basis[r] = col


def _run(tab, basis, order) -> None:
    """Drive the objective row (last row of `tab`) to optimality."""
    obj = tab[-1]
    while True:
        col = -1
        for j in order:
            if obj[j] > 0:
                col = j
                break
        if col < 0:
            return
        best_r, best_ratio = -1, None
        for r in range(len(tab) - 1):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[r] < basis[best_r]
                ):
                    best_r, best_ratio = r, ratio
        if best_r < 0:
            raise UnboundedError("objective unbounded above")
        _pivot(tab, basis, best_r, col)
        obj = tab[-1]


def simplex_max_leq(
    a_rows: list[list[Fraction]],
    b: list[Fraction],
    c: list[Fraction],
    prefer: list[int] | None = None,
):
    """Maximise c.x subject to A x <= b (b >= 0), x >= 0.

    Returns (x, y, value): exact primal solution, exact dual solution on the
    rows, and the shared optimal value.
    """
    m, n = len(a_rows), len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("rhs must be non-negative")
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in a_rows[i]]
        row += [ONE if k == i else ZERO for k in range(m)]
        row.append(Fraction(b[i]))
        tab.append(row)
    obj = [Fraction(v) for v in c] + [ZERO] * (m + 1)
    tab.append(obj)
    basis = [n + i for i in range(m)]

    order = list(range(n))
    if prefer:
        seen = set(prefer)
        order = list(prefer) + [j for j in order if j not in seen]
    # slack columns must be entering candidates too, otherwise a vertex with a
    # negative dual component (positive slack reduced cost) looks optimal
    order += list(range(n, n + m))

    _run(tab, basis, order)

    x = [ZERO] * n
    for r, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[r][-1]
    obj = tab[-1]
    y = [-obj[n + i] for i in range(m)]
    value = -obj[-1]
    return x, y, value


def solve_eq_nonneg(a_rows: list[list[Fraction]], b: list[Fraction]):
    """Decide feasibility of A x = b, x >= 0.

    Returns (x, None) with an exact feasible solution, or (None, y) with a
    Farkas certificate: y^T A_j >= 0 for every column j and y^T b < 0.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in a_rows[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row)
        rhs.append(bi)

    # phase 1: max -(sum of artificials)
    tab = []
    for i in range(m):
        row = rows[i] + [ONE if k == i else ZERO for k in range(m)]
        row.append(rhs[i])
        tab.append(row)
    # objective row for c = (0,...,0, -1,...,-1), expressed against the
    # artificial starting basis: obj_j = c_j - z_j with z_j = sum of column j
    obj = [sum(rows[i][j] for i in range(m)) for j in range(n)]
    obj += [ZERO] * m
    obj.append(sum(rhs))
    tab.append(obj)
    basis = [n + i for i in range(m)]

    _run(tab, basis, list(range(n + m)))

    obj = tab[-1]
    # the stored rhs of the objective row is -(phase-1 optimum)
    if obj[-1] == 0:
        x = [ZERO] * n
        for r, bv in enumerate(basis):
            if bv < n:
                x[bv] = tab[r][-1]
        return x, None
    # infeasible: read the dual from the artificial columns.  For artificial
    # i, obj[n+i] = c_i - y_i = -1 - y_i  =>  y_i = -1 - obj[n+i]; flip back
    # the sign of rows that were negated.  Optimality of phase 1 gives
    # y^T A_j >= 0 for every column and y^T b = (phase-1 optimum) < 0.
    y = []
    for i in range(m):
        yi = -ONE - obj[n + i]
        if Fraction(b[i]) < 0:
            yi = -yi
        y.append(yi)
    return None, y
