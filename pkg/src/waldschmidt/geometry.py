"""Exact projective-plane primitives: points, curves, incidence and multiplicity."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd

from .linalg import RatMatrix, format_rational, nullspace, parse_rational, rank_exact


class GeometryError(ValueError):
    pass


class IdenticalPointsError(GeometryError):
    pass


class DuplicatePointError(GeometryError):
    pass


class NonUniqueConicError(GeometryError):
    pass


class WrongDegreeError(GeometryError):
    pass


class CollinearVerticesError(GeometryError):
    pass


@lru_cache(maxsize=None)
def monomials(d):
    """Exponent triples of degree d, graded-lex with x0 > x1 > x2."""
    out = []
    for a in range(d, -1, -1):
        for b in range(d - a, -1, -1):
            out.append((a, b, d - a - b))
    return tuple(out)


def monomial_count(d):
    return comb(d + 2, 2)


def _normalize_int_triple(coords):
    ints = [int(c) for c in coords]
    if all(v == 0 for v in ints):
        raise GeometryError("zero triple is not a projective point")
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(ints)


class ProjPoint:
    """Point of the projective plane with canonical primitive integer coordinates."""

    __slots__ = ("coords",)

    def __init__(self, x0, x1, x2):
        fr = [Fraction(x0), Fraction(x1), Fraction(x2)]
        den = 1
        for e in fr:
            den = den * e.denominator // gcd(den, e.denominator)
        object.__setattr__(self, "coords", _normalize_int_triple([e * den for e in fr]))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @classmethod
    def parse(cls, triple):
        if len(triple) != 3:
            raise GeometryError("point needs three coordinates")
        return cls(*[parse_rational(c) for c in triple])

    def to_json(self):
        return [str(c) for c in self.coords]

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(%d:%d:%d)" % self.coords


class PlaneCurve:
    """Plane curve of degree d as a primitive integer coefficient vector.

    Coefficients follow the graded-lex monomial order of monomials(d).
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if degree < 1:
            raise WrongDegreeError("curve degree must be >= 1")
        if len(coeffs) != monomial_count(degree):
            raise GeometryError("degree-%d curve needs %d coefficients"
                                % (degree, monomial_count(degree)))
        if all(c == 0 for c in coeffs):
            raise GeometryError("zero form does not define a curve")
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        for v in ints:
            if v:
                if v < 0:
                    ints = [-u for u in ints]
                break
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(Fraction(v) for v in ints))

    def __setattr__(self, name, value):
        raise AttributeError("PlaneCurve is immutable")

    @classmethod
    def parse(cls, obj):
        return cls(int(obj["degree"]), [parse_rational(c) for c in obj["coeffs"]])

    def to_json(self):
        return {"degree": self.degree,
                "coeffs": [format_rational(c) for c in self.coeffs]}

    def evaluate(self, point):
        x0, x1, x2 = point.coords
        total = Fraction(0)
        for c, (a, b, e) in zip(self.coeffs, monomials(self.degree)):
            if c:
                total += c * x0 ** a * x1 ** b * x2 ** e
        return total

    def derivative_value(self, beta, point):
        """Evaluate the mixed partial derivative given by exponent triple beta."""
        x0, x1, x2 = point.coords
        total = Fraction(0)
        for c, alpha in zip(self.coeffs, monomials(self.degree)):
            if not c:
                continue
            term = c
            ok = True
            for i in range(3):
                a, b = alpha[i], beta[i]
                if a < b:
                    ok = False
                    break
                for k in range(b):
                    term *= a - k
            if not ok:
                continue
            term *= x0 ** (alpha[0] - beta[0])
            term *= x1 ** (alpha[1] - beta[1])
            term *= x2 ** (alpha[2] - beta[2])
            total += term
        return total

    def multiply(self, other):
        """Product curve; coefficient convolution in the fixed monomial order."""
        d = self.degree + other.degree
        mons = monomials(d)
        index = {m: i for i, m in enumerate(mons)}
        out = [Fraction(0)] * len(mons)
        for ca, ma in zip(self.coeffs, monomials(self.degree)):
            if not ca:
                continue
            for cb, mb in zip(other.coeffs, monomials(other.degree)):
                if not cb:
                    continue
                key = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
                out[index[key]] += ca * cb
        return PlaneCurve(d, out)

    def __eq__(self, other):
        return (isinstance(other, PlaneCurve) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return "PlaneCurve(%d, %s)" % (self.degree, [str(c) for c in self.coeffs])


def line_through(p, q):
    """The unique line through two distinct points (cross product of coordinates)."""
    if p == q:
        raise IdenticalPointsError("no unique line through identical points %r" % (p,))
    a0, a1, a2 = p.coords
    b0, b1, b2 = q.coords
    # line coefficients for (x0, x1, x2) in monomial order of degree 1
    return PlaneCurve(1, [a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])


def evaluation_row(d, point):
    """Row of degree-d monomial values at a point."""
    x0, x1, x2 = point.coords
    return [Fraction(x0 ** a * x1 ** b * x2 ** c) for a, b, c in monomials(d)]


def derivative_row(d, point, beta):
    """Row of the beta-partials of the degree-d monomials, evaluated at a point."""
    x0, x1, x2 = point.coords
    row = []
    for alpha in monomials(d):
        term = Fraction(1)
        ok = True
        for i in range(3):
            a, b = alpha[i], beta[i]
            if a < b:
                ok = False
                break
            for k in range(b):
                term *= a - k
        if not ok:
            row.append(Fraction(0))
            continue
        term *= x0 ** (alpha[0] - beta[0])
        term *= x1 ** (alpha[1] - beta[1])
        term *= x2 ** (alpha[2] - beta[2])
        row.append(term)
    return row


def conic_through(pts):
    """The unique conic through five points; rank below 5 means no unique conic."""
    if len(pts) != 5:
        raise GeometryError("conic_through expects exactly 5 points")
    if len(set(pts)) != 5:
        raise NonUniqueConicError("duplicated points leave a pencil of conics")
    m = RatMatrix.from_rows([evaluation_row(2, p) for p in pts])
    if rank_exact(m) < 5:
        raise NonUniqueConicError("evaluation matrix has rank < 5")
    basis = nullspace(m)
    return PlaneCurve(2, basis[0])


def is_irreducible_conic(c):
    """A conic is irreducible iff its symmetric matrix has nonzero determinant."""
    if c.degree != 2:
        raise WrongDegreeError("expected a degree-2 curve")
    # coeffs ordered x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
    a, b, cc, d, e, f = c.coeffs
    m = [[2 * a, b, cc], [b, 2 * d, e], [cc, e, 2 * f]]
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return det != 0


def mult_at(curve, point):
    """Order of vanishing at a point: least k with a nonzero order-k partial."""
    for k in range(curve.degree + 1):
        for beta in monomials(k):
            if curve.derivative_value(beta, point) != 0:
                return k
    # a nonzero form of degree d has a nonzero order-d partial
    raise GeometryError("unreachable: nonzero form vanishing to excess order")


def contains(curve, point):
    return curve.evaluate(point) == 0


class IncidenceProfile:
    """Collinearity and conic membership data for a point list."""

    def __init__(self, points, max_collinear, witness_line, collinear_groups,
                 conic_subsets, pairwise_lines):
        self.points = points
        self.max_collinear = max_collinear
        self.witness_line = witness_line
        self.collinear_groups = collinear_groups
        self.conic_subsets = conic_subsets
        self.pairwise_lines = pairwise_lines


def incidence_profile(points, conic_cap=12):
    """Exact incidence data: maximal collinear groups and >=6-point conic groups.

    Conic detection enumerates 5-subsets, so the input is capped (default 12).
    """
    n = len(points)
    if len(set(points)) != n:
        raise DuplicatePointError("points must be pairwise distinct")
    pairwise = {}
    line_groups = {}
    for i, j in combinations(range(n), 2):
        ln = line_through(points[i], points[j])
        pairwise[(i, j)] = ln
        if ln not in line_groups:
            members = frozenset(k for k in range(n) if contains(ln, points[k]))
            line_groups[ln] = members
    collinear_groups = []
    seen = set()
    for ln, members in line_groups.items():
        if len(members) >= 3 and members not in seen:
            seen.add(members)
            collinear_groups.append((tuple(sorted(members)), ln))
    collinear_groups.sort()
    max_collinear = 0
    witness_line = None
    for members, ln in collinear_groups:
        if len(members) > max_collinear:
            max_collinear = len(members)
            witness_line = ln
    if max_collinear == 0 and n >= 2:
        max_collinear = min(n, 2)
        witness_line = pairwise[(0, 1)] if n >= 2 else None

    conic_subsets = []
    if 5 <= n <= conic_cap:
        seen_conics = set()
        collinear_sets = [set(m) for m, _ in collinear_groups]
        for combo in combinations(range(n), 5):
            if any(len(cs.intersection(combo)) >= 3 for cs in collinear_sets):
                continue
            try:
                conic = conic_through([points[k] for k in combo])
            except NonUniqueConicError:
                continue
            if conic in seen_conics or not is_irreducible_conic(conic):
                continue
            seen_conics.add(conic)
            members = tuple(sorted(k for k in range(n) if contains(conic, points[k])))
            if len(members) >= 6:
                conic_subsets.append((members, conic))
        conic_subsets = sorted(set(conic_subsets), key=lambda t: (-len(t[0]), t[0]))
    return IncidenceProfile(list(points), max_collinear, witness_line,
                            collinear_groups, conic_subsets, pairwise)


def concurrency_count_at(q, pts):
    """Number of distinct lines through q containing at least two of pts."""
    if q in pts:
        raise GeometryError("q must not be one of the points")
    lines = set()
    for a, b in combinations(pts, 2):
        ln = line_through(a, b)
        if contains(ln, q):
            lines.add(ln)
    return len(lines)


def q_collinear_set(ps, qs):
    """Points of ps on the sides of the triangle qs, vertices excluded."""
    if len(qs) != 3:
        raise GeometryError("need exactly three triangle vertices")
    q1, q2, q3 = qs
    if contains(line_through(q1, q2), q3):
        raise CollinearVerticesError("triangle vertices are collinear")
    if set(ps) & set(qs):
        raise GeometryError("ps must be disjoint from the vertices")
    sides = [line_through(q2, q3), line_through(q1, q3), line_through(q1, q2)]
    return [p for p in ps if any(contains(s, p) for s in sides)]


def cubic_with_double_point(simple, dbl):
    """A cubic through six simple points with a double point at dbl.

    Nine linear conditions on ten cubic coefficients always leave a kernel;
    the first basis vector under the deterministic kernel convention is
    returned and its multiplicities are verified.
    """
    if len(simple) != 6:
        raise GeometryError("need exactly six simple points")
    pts = list(simple) + [dbl]
    if len(set(pts)) != 7:
        raise DuplicatePointError("the seven points must be pairwise distinct")
    rows = [evaluation_row(3, p) for p in simple]
    for beta in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        rows.append(derivative_row(3, dbl, beta))
    basis = nullspace(RatMatrix.from_rows(rows))
    if not basis:
        raise GeometryError("unreachable: 9 equations in 10 unknowns have a kernel")
    cubic = PlaneCurve(3, basis[0])
    for p in simple:
        if mult_at(cubic, p) < 1:
            raise GeometryError("postcondition failed: missing simple point %r" % (p,))
    if mult_at(cubic, dbl) < 2:
        raise GeometryError("postcondition failed: %r is not a double point" % (dbl,))
    return cubic


def _partial_vector(curve, i):
    d = curve.degree
    out = [Fraction(0)] * monomial_count(d - 1)
    index = {m: k for k, m in enumerate(monomials(d - 1))}
    for c, alpha in zip(curve.coeffs, monomials(d)):
        if c and alpha[i] >= 1:
            key = list(alpha)
            key[i] -= 1
            out[index[tuple(key)]] += c * alpha[i]
    return out


def is_smooth_cubic(curve):
    """Exact smoothness test for a plane cubic over the algebraic closure.

    The three partials are quadrics; they share no projective zero iff they
    form a regular sequence, in which case the quotient Hilbert series is
    (1+t)^3 and the degree-4 multiples of the partials fill all of degree 4.
    So smoothness is equivalent to the 18x15 multiplication matrix having
    full column rank.  A smooth plane cubic is automatically irreducible.
    """
    if curve.degree != 3:
        raise WrongDegreeError("expected a degree-3 curve")
    partials = [_partial_vector(curve, i) for i in range(3)]
    quartics = monomials(4)
    index = {m: k for k, m in enumerate(quartics)}
    rows = []
    for quad in partials:
        for gamma in monomials(2):
            row = [Fraction(0)] * len(quartics)
            for c, beta in zip(quad, monomials(2)):
                if c:
                    key = (beta[0] + gamma[0], beta[1] + gamma[1], beta[2] + gamma[2])
                    row[index[key]] += c
            rows.append(row)
    return rank_exact(RatMatrix.from_rows(rows)) == len(quartics)


def transform_point(t, p):
    """Image of p under the 3x3 rational matrix t (rows of t act on coords)."""
    x = p.coords
    y = [sum(Fraction(t[i][j]) * x[j] for j in range(3)) for i in range(3)]
    return ProjPoint(*y)


def _adjugate(t):
    t = [[Fraction(v) for v in row] for row in t]
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = t[r[0]][c[0]] * t[r[1]][c[1]] - t[r[0]][c[1]] * t[r[1]][c[0]]
            cof[j][i] = (-1) ** (i + j) * minor
    return cof


def transform_curve(t, curve):
    """Image curve under t: substitute the inverse (adjugate) linear change."""
    inv = _adjugate(t)
    lines = []
    for i in range(3):
        lines.append(list(inv[i]))
    mons = monomials(curve.degree)
    index = {m: i for i, m in enumerate(mons)}
    out = [Fraction(0)] * len(mons)
    for c, alpha in zip(curve.coeffs, monomials(curve.degree)):
        if not c:
            continue
        # expand prod_i (inv[i].x)^alpha[i]
        terms = {(0, 0, 0): c}
        for i in range(3):
            for _ in range(alpha[i]):
                new = {}
                for mono, coef in terms.items():
                    for j in range(3):
                        if lines[i][j]:
                            key = list(mono)
                            key[j] += 1
                            key = tuple(key)
                            new[key] = new.get(key, Fraction(0)) + coef * lines[i][j]
                terms = new
        for mono, coef in terms.items():
            out[index[mono]] += coef
    return PlaneCurve(curve.degree, out)
