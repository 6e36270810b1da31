"""Independent oracles and generators shared by the test modules."""

import random
from fractions import Fraction
from itertools import combinations

from waldschmidt.geometry import ProjPoint, transform_point


def gauss_rank(rows):
    """Rank by plain Fraction Gaussian elimination with first-nonzero pivoting.

    Deliberately a different elimination order from the library's kernel, so
    it can serve as an independent check.
    """
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                f = rows[r][col] / prow[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_square(a, b):
    """Solve a square rational system exactly; None when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(bb)] for row, bb in zip(a, b)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        prow = m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / prow[col]
                m[r] = [x - f * y for x, y in zip(m[r], prow)]
    return [m[i][n] / m[i][i] for i in range(n)]


def lp_min_t_by_vertices(system):
    """Exact LP optimum by brute-force vertex enumeration.

    Candidate vertices come from all choices of nvars+1 active hyperplanes
    among the constraints and the coordinate planes; feasible ones are ranked
    by their t value.
    """
    nv = 1 + system.nvars
    planes = []
    for c in system.constraints:
        planes.append(([c.t_coeff] + list(c.a_coeffs), c.rhs))
    for j in range(nv):
        row = [Fraction(0)] * nv
        row[j] = Fraction(1)
        planes.append((row, Fraction(0)))
    best = None
    for combo in combinations(range(len(planes)), nv):
        a = [planes[i][0] for i in combo]
        b = [planes[i][1] for i in combo]
        x = solve_square(a, b)
        if x is None:
            continue
        if any(v < 0 for v in x):
            continue
        ok = True
        for c in system.constraints:
            lhs = c.t_coeff * x[0] + sum(q * v for q, v in zip(c.a_coeffs, x[1:]))
            if lhs < c.rhs:
                ok = False
                break
        if ok and (best is None or x[0] < best):
            best = x[0]
    return best


def unimodular(rng, size=4):
    """Random integer matrix of determinant +-1 via elementary products."""
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(size):
        kind = rng.randrange(3)
        i, j = rng.sample(range(3), 2)
        if kind == 0:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(3):
                m[i][k] += c * m[j][k]
        elif kind == 1:
            m[i], m[j] = m[j], m[i]
        else:
            for k in range(3):
                m[i][k] = -m[i][k]
    return m


def transform_points(t, points):
    return [transform_point(t, p) for p in points]


def random_point(rng, bound=4):
    while True:
        coords = [rng.randint(-bound, bound) for _ in range(3)]
        if any(coords):
            return ProjPoint(*coords)
