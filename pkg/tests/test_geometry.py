import random

import pytest

from helpers import gauss_rank, transform_points, unimodular
from waldschmidt.fixtures import STANDARD_CONIC, conic_point, fixture
from waldschmidt.geometry import (CollinearVerticesError, IdenticalPointsError,
                                  NonUniqueConicError, PlaneCurve, ProjPoint,
                                  WrongDegreeError, concurrency_count_at,
                                  conic_through, contains,
                                  cubic_with_double_point, evaluation_row,
                                  incidence_profile, is_irreducible_conic,
                                  is_smooth_cubic, line_through, mult_at,
                                  q_collinear_set, transform_curve,
                                  transform_point)


def test_line_through_coordinate_axes():
    assert line_through(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)) == PlaneCurve(1, [0, 0, 1])


def test_line_through_symmetric_points():
    assert line_through(ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)) == PlaneCurve(1, [1, -1, 0])


def test_line_through_identical_points_raises():
    with pytest.raises(IdenticalPointsError):
        line_through(ProjPoint(1, 0, 0), ProjPoint(1, 0, 0))


def test_third_point_on_line_iff_determinant_vanishes():
    rng = random.Random(7)
    for _ in range(50):
        a = ProjPoint(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(1, 4))
        b = ProjPoint(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(1, 4))
        c = ProjPoint(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(1, 4))
        if a == b:
            continue
        ln = line_through(a, b)
        det = gauss_rank([list(a.coords), list(b.coords), list(c.coords)]) < 3
        assert contains(ln, c) == det


def test_conic_through_parametrized_points():
    pts = [conic_point(t) for t in (0, 1, 2, 3, -1)]
    assert conic_through(pts) == STANDARD_CONIC


def test_conic_through_four_collinear_raises():
    pts = [ProjPoint(1, a, 0) for a in range(4)] + [ProjPoint(0, 0, 1)]
    m = [evaluation_row(2, p) for p in pts]
    assert gauss_rank(m) < 5
    with pytest.raises(NonUniqueConicError):
        conic_through(pts)


def test_conic_through_duplicate_raises():
    pts = [conic_point(t) for t in (0, 1, 2, 3)] + [conic_point(0)]
    with pytest.raises(NonUniqueConicError):
        conic_through(pts)


def test_irreducible_conic_predicate():
    assert is_irreducible_conic(STANDARD_CONIC)
    assert not is_irreducible_conic(PlaneCurve(2, [0, 1, 0, 0, 0, 0]))  # x0*x1
    assert not is_irreducible_conic(PlaneCurve(2, [1, 0, 0, 0, 0, 0]))  # x0^2
    with pytest.raises(WrongDegreeError):
        is_irreducible_conic(PlaneCurve(1, [1, 0, 0]))


def test_mult_at_basics():
    assert mult_at(PlaneCurve(1, [0, 0, 1]), ProjPoint(1, 0, 0)) == 1
    pair = PlaneCurve(1, [1, 0, 0]).multiply(PlaneCurve(1, [0, 1, 0]))
    assert mult_at(pair, ProjPoint(0, 0, 1)) == 2
    # (1:1:1) is the t=1 point of the conic itself, so a genuinely off point
    # is used for the multiplicity-zero case
    assert mult_at(STANDARD_CONIC, ProjPoint(1, 1, 1)) == 1
    assert mult_at(STANDARD_CONIC, ProjPoint(1, 0, 1)) == 0


def test_mult_additive_on_products():
    rng = random.Random(11)
    pts = [ProjPoint(0, 0, 1), ProjPoint(1, 2, 1), ProjPoint(1, 0, 0)]
    for _ in range(30):
        l1 = line_through(ProjPoint(rng.randint(-3, 3), rng.randint(-3, 3), 1),
                          ProjPoint(1, rng.randint(-3, 3), 0))
        curves = [l1, STANDARD_CONIC,
                  PlaneCurve(1, [rng.randint(1, 3), rng.randint(-2, 2), rng.randint(-2, 2)])]
        f = rng.choice(curves)
        g = rng.choice(curves)
        prod = f.multiply(g)
        for p in pts:
            assert mult_at(prod, p) == mult_at(f, p) + mult_at(g, p)


def test_incidence_profile_collinear_group():
    pts = [ProjPoint(1, a, 0) for a in range(4)]
    pts += [ProjPoint(0, 0, 1), ProjPoint(1, 1, 1), ProjPoint(1, 3, 2)]
    prof = incidence_profile(pts)
    assert prof.max_collinear == 4
    assert prof.witness_line == PlaneCurve(1, [0, 0, 1])


def test_incidence_profile_conic_group():
    fx = fixture("CONIC6+Q")
    prof = incidence_profile(fx.points)
    sizes = [len(members) for members, _ in prof.conic_subsets]
    assert 6 in sizes
    members, conic = next(g for g in prof.conic_subsets if len(g[0]) == 6)
    for i in members:
        assert contains(conic, fx.points[i])


def test_incidence_profile_two_points():
    prof = incidence_profile([ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)])
    assert prof.collinear_groups == []
    assert prof.max_collinear == 2


def test_concurrency_counts():
    fx = fixture("CONIC6-TYPE1")
    assert concurrency_count_at(fx.points[-1], fx.points[:-1]) == 3
    fx = fixture("CONIC8-CONC4")
    assert concurrency_count_at(fx.points[-1], fx.points[:-1]) == 4
    assert concurrency_count_at(ProjPoint(1, 0, 2),
                                [conic_point(t) for t in (0, 1, 2, 3, -1, -2)]) == 0


def test_q_collinear_set_families():
    fx = fixture("L4Q3-A")
    qs = fx.points[4:]
    picked = q_collinear_set(fx.points[:4], qs)
    assert set(picked) == {ProjPoint(1, -1, 0), ProjPoint(0, 1, 0), ProjPoint(1, 0, 0)}
    fx = fixture("L4Q3-D")
    assert q_collinear_set(fx.points[:4], fx.points[4:]) == []
    assert q_collinear_set([], qs) == []


def test_q_collinear_set_collinear_vertices_raises():
    qs = (ProjPoint(0, 0, 1), ProjPoint(0, 1, 1), ProjPoint(0, 2, 1))
    with pytest.raises(CollinearVerticesError):
        q_collinear_set([ProjPoint(1, 0, 0)], qs)


def test_cubic_with_double_point_on_fixture():
    fx = fixture("CONIC6+Q")
    cubic = cubic_with_double_point(fx.points[:6], fx.points[6])
    assert mult_at(cubic, fx.points[6]) >= 2
    for p in fx.points[:6]:
        assert mult_at(cubic, p) >= 1


def test_cubic_with_double_point_dbl_on_same_conic():
    simple = [conic_point(t) for t in (0, 1, 2, 3, -1, -2)]
    dbl = conic_point(4)
    cubic = cubic_with_double_point(simple, dbl)
    assert mult_at(cubic, dbl) >= 2
    for p in simple:
        assert mult_at(cubic, p) >= 1


def test_cubic_with_double_point_collinear_simple_points():
    simple = [ProjPoint(1, a, 0) for a in range(6)]
    dbl = ProjPoint(0, 0, 1)
    cubic = cubic_with_double_point(simple, dbl)
    assert mult_at(cubic, dbl) >= 2
    for p in simple:
        assert mult_at(cubic, p) >= 1


def test_smooth_cubic_detection():
    from waldschmidt.fixtures import CUBIC9_CURVE
    assert is_smooth_cubic(CUBIC9_CURVE)
    # x0^3 + x1^3 + x2^3 is smooth in characteristic zero
    fermat = PlaneCurve(3, [1, 0, 0, 0, 0, 0, 1, 0, 0, 1])
    assert is_smooth_cubic(fermat)
    # conic times line is singular at the crossings
    red = STANDARD_CONIC.multiply(PlaneCurve(1, [0, 0, 1]))
    assert not is_smooth_cubic(red)
    # cuspidal: x1^2*x2 = x0^3
    cusp = PlaneCurve(3, [1, 0, 0, 0, 0, 0, 0, -1, 0, 0])
    assert not is_smooth_cubic(cusp)


def test_projective_invariance_of_predicates():
    rng = random.Random(5)
    fx = fixture("CONIC6-TYPE1")
    base_pts = fx.points
    for _ in range(10):
        t = unimodular(rng)
        pts = transform_points(t, base_pts)
        assert concurrency_count_at(pts[-1], pts[:-1]) == 3
        prof = incidence_profile(pts)
        assert {len(m) for m, _ in prof.conic_subsets} == {6}
    fx = fixture("L4Q3-B")
    for _ in range(10):
        t = unimodular(rng)
        pts = transform_points(t, fx.points)
        qs = pts[4:]
        assert len(q_collinear_set(pts[:4], qs)) == 2


def test_transform_curve_compatible_with_points():
    rng = random.Random(9)
    for _ in range(20):
        t = unimodular(rng)
        p = conic_point(rng.randint(-5, 5))
        img = transform_point(t, p)
        curve = transform_curve(t, STANDARD_CONIC)
        assert contains(curve, img)
        assert mult_at(curve, img) == 1
