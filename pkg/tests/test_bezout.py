from fractions import Fraction

import pytest

from helpers import lp_min_t_by_vertices
from waldschmidt.bezout import (AuxCurveSet, LowerBoundCertificate,
                                ProportionalCurvesError, UnverifiedCurveError,
                                build_system, solve_min_ratio, verify_certificate)
from waldschmidt.fatpoints import FatPointScheme, alpha
from waldschmidt.fixtures import fixture
from waldschmidt.geometry import PlaneCurve, ProjPoint, line_through
from waldschmidt.golden import GOLDEN, golden_names

F = Fraction


def scheme_and_sides(name):
    fx = fixture(name)
    pts = fx.points
    qs = pts[-3:]
    sides = [line_through(qs[1], qs[2]), line_through(qs[0], qs[2]),
             line_through(qs[0], qs[1])]
    carrier = line_through(pts[0], pts[1])
    return FatPointScheme.uniform(pts, 1), sides, carrier


def test_build_system_l4q3d_shape():
    scheme, sides, carrier = scheme_and_sides("L4Q3-D")
    aux = AuxCurveSet.build(scheme, sides + [carrier],
                            labels=["L1", "L2", "L3", "L"])
    system = build_system(scheme, aux)
    assert system.var_names == ["L1", "L2", "L3", "L"]
    assert [c.label for c in system.constraints] == ["degree", "L1", "L2", "L3", "L"]
    by_label = {c.label: c for c in system.constraints}
    assert by_label["degree"].a_coeffs == (F(-1),) * 4
    # the carrier row reads t - a1 - a2 - a3 + 3*aL >= 4
    assert by_label["L"].a_coeffs == (F(-1), F(-1), F(-1), F(3))
    assert by_label["L"].rhs == 4
    # each side row reads t + a_self - aL >= 2
    assert by_label["L1"].a_coeffs == (F(1), F(0), F(0), F(-1))


def test_build_system_single_point_single_line():
    p = ProjPoint(0, 0, 1)
    scheme = FatPointScheme.uniform([p], 1)
    line = line_through(p, ProjPoint(1, 0, 1))
    aux = AuxCurveSet.build(scheme, [line], labels=["L"])
    system = build_system(scheme, aux)
    cert = solve_min_ratio(system)
    assert cert.bound == 1


def test_build_system_rejects_unverified_conic():
    scheme, sides, carrier = scheme_and_sides("L4Q3-D")
    degenerate = PlaneCurve(2, [0, 1, 0, 0, 0, 0])  # x0*x1, a line pair
    aux = AuxCurveSet.build(scheme, [carrier, degenerate])
    with pytest.raises(UnverifiedCurveError):
        build_system(scheme, aux)


def test_aux_set_rejects_proportional_curves():
    scheme, sides, carrier = scheme_and_sides("L4Q3-D")
    with pytest.raises(ProportionalCurvesError):
        AuxCurveSet.build(scheme, [carrier, PlaneCurve(1, [0, 0, 5])])


@pytest.mark.parametrize("name", golden_names())
def test_golden_systems_against_vertex_oracle(name):
    g = GOLDEN[name]
    cert = solve_min_ratio(g.system)
    oracle = lp_min_t_by_vertices(g.system)
    assert cert.bound == oracle
    if g.equality:
        assert cert.bound == g.bound
    else:
        assert cert.bound >= g.bound


@pytest.mark.parametrize("name", golden_names())
def test_golden_reference_multipliers_verify(name):
    g = GOLDEN[name]
    assert verify_certificate(g.certificate())


def test_scaled_multipliers_also_verify():
    g = GOLDEN["line7/one-side-point"]
    scaled = LowerBoundCertificate(g.bound, [d * F(1, 49) for d in g.duals], g.system)
    assert verify_certificate(scaled)


def test_negative_dual_rejected():
    g = GOLDEN["line7/no-side-point"]
    bad = LowerBoundCertificate(g.bound, [F(-1), F(3)], g.system)
    assert not verify_certificate(bad)


def test_mismatched_duals_rejected():
    a = GOLDEN["line7/three-side-points"]
    b = GOLDEN["line7/two-side-points"]
    cross = LowerBoundCertificate(b.bound, b.duals, a.system)
    res = verify_certificate(cross)
    assert not res and res.reasons


def test_wrong_bound_rejected():
    g = GOLDEN["conic6/three-concurrent-chords"]
    lying = LowerBoundCertificate(F(5, 2), g.duals, g.system)
    assert not verify_certificate(lying)


def test_complementary_slackness_at_optimum():
    for name in golden_names():
        g = GOLDEN[name]
        cert = solve_min_ratio(g.system)
        x = cert.primal
        for c, y in zip(g.system.constraints, cert.duals):
            lhs = c.t_coeff * x[0] + sum(a * v for a, v in zip(c.a_coeffs, x[1:]))
            if y > 0:
                assert lhs == c.rhs


def test_monotonicity_adding_curves():
    scheme, sides, carrier = scheme_and_sides("L4Q3-A")
    p4 = fixture("L4Q3-A").points[3]
    qs = fixture("L4Q3-A").points[4:]
    spokes = [line_through(p4, q) for q in qs]
    small = AuxCurveSet.build(scheme, sides + [carrier])
    big = AuxCurveSet.build(scheme, sides + [carrier] + spokes)
    bound_small = solve_min_ratio(build_system(scheme, small)).bound
    bound_big = solve_min_ratio(build_system(scheme, big)).bound
    assert bound_big >= bound_small
    assert bound_big == F(16, 7)


def test_scale_invariance_of_built_system():
    scheme, sides, carrier = scheme_and_sides("L4Q3-D")
    scaled = [PlaneCurve(1, [7 * c for c in ln.coeffs]) for ln in sides]
    aux1 = AuxCurveSet.build(scheme, sides + [carrier])
    aux2 = AuxCurveSet.build(scheme, scaled + [carrier])
    b1 = solve_min_ratio(build_system(scheme, aux1)).bound
    b2 = solve_min_ratio(build_system(scheme, aux2)).bound
    assert b1 == b2 == F(5, 2)


def test_grouped_matches_ungrouped_on_symmetric_system():
    scheme, sides, carrier = scheme_and_sides("L4Q3-A")
    p4 = fixture("L4Q3-A").points[3]
    qs = fixture("L4Q3-A").points[4:]
    spokes = [line_through(p4, q) for q in qs]
    aux = AuxCurveSet.build(scheme, sides + [carrier] + spokes)
    ungrouped = solve_min_ratio(build_system(scheme, aux)).bound
    grouped_system = build_system(scheme, aux, groups=[[0, 1, 2], [3], [4, 5, 6]])
    grouped = solve_min_ratio(grouped_system).bound
    assert ungrouped == grouped == F(16, 7)


def test_lp_soundness_against_alpha():
    for name, curves_of in (("L4Q3-D", "sides+carrier"), ("CONIC6-TYPE1", "chords")):
        fx = fixture(name)
        pts = fx.points
        scheme = FatPointScheme.uniform(pts, 1)
        if curves_of == "sides+carrier":
            _, sides, carrier = scheme_and_sides(name)
            curves = sides + [carrier]
        else:
            from waldschmidt.fixtures import STANDARD_CONIC, conic_chord
            curves = [conic_chord(2, F(1, 2)), conic_chord(3, F(1, 3)),
                      conic_chord(-2, F(-1, 2)), STANDARD_CONIC]
        aux = AuxCurveSet.build(scheme, curves)
        bound = solve_min_ratio(build_system(scheme, aux)).bound
        for m in (1, 2, 3):
            a = alpha(FatPointScheme.uniform(pts, m),
                      min_degree=max(1, -(-bound.numerator * m // bound.denominator)))
            assert F(a.alpha, m) >= bound


def test_certificate_json_roundtrip():
    g = GOLDEN["line7/two-side-points"]
    cert = solve_min_ratio(g.system)
    blob = cert.to_json()
    back = LowerBoundCertificate.parse(blob, g.system)
    assert back.bound == cert.bound
    assert back.duals == cert.duals
    assert verify_certificate(back)
