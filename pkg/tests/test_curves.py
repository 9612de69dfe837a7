import json

import pytest

from fqcurves.constructions import FcParams, QPlusOneParams, build_fc, build_qplus1, search_line_free_c
from fqcurves.curves import (
    EXCEPTION,
    NOT_APPLICABLE,
    WITHIN,
    CurveReport,
    PlaneCurve,
    count_points,
    curve_report,
    irreducibility_certificate,
    line_components,
    missing_points,
    singular_points_ext,
    sziklai_classify,
    sziklai_exception_quartic,
)
from fqcurves.errors import HasLineComponent, NotHomogeneous
from fqcurves.gf import field_make, parse_field
from fqcurves.projspace import ProjPoint, theta

F2, F3, F4 = field_make(2), field_make(3), parse_field("4")


def C(text, F):
    return PlaneCurve.parse(text, F)


def test_counts():
    assert count_points(sziklai_exception_quartic(F4)) == 14
    for q in (2, 3, 4, 5):
        F = parse_field(str(q))
        assert count_points(C(f"X^{q}*Y - X*Y^{q}", F)) == theta(q, 2)
    assert count_points(C("X*(Y-X)*(Z-X)", F2)) == 6


def test_line_components():
    assert len(line_components(C("X*Y*Z", F3))) == 3
    assert line_components(C("X^2+Y*Z", F2)) == []
    F = field_make(5)
    c = search_line_free_c(F, 7)
    assert line_components(build_fc(FcParams(F, 7, c=c))) == []


def test_missing_points():
    miss, col = missing_points(C("X^2*Y - X*Y^2", F2))
    assert len(miss) == 0 and col
    for q, d in ((4, 6), (5, 7), (5, 9)):
        F = parse_field(str(q))
        curve = build_fc(FcParams(F, d, c=search_line_free_c(F, d)))
        miss, col = missing_points(curve)
        assert len(miss) == 2 * q - d and col
        assert all(P.coords[2] == 0 for P in miss)
    miss, col = missing_points(C("X^2 + Y*Z", F3))
    assert len(miss) == 9 and not col


def test_sziklai_classify():
    assert sziklai_classify(sziklai_exception_quartic(F4)) == EXCEPTION
    F = field_make(5)
    assert sziklai_classify(build_fc(FcParams(F, 8, c=search_line_free_c(F, 8)))) == WITHIN
    assert sziklai_classify(C("X*Y*Z", F3)) == NOT_APPLICABLE


def test_irreducibility_certificate():
    for q, expected in ((2, False), (3, True), (4, True), (5, True)):
        F = parse_field(str(q))
        assert irreducibility_certificate(build_qplus1(QPlusOneParams.default(F))) is expected
    assert irreducibility_certificate(C("X^2 + X*Y + Y^2", F2)) is False  # one point
    with pytest.raises(HasLineComponent):
        irreducibility_certificate(C("X*Y*Z", F2))


def test_singular_points():
    assert singular_points_ext(C("X^2 + Y*Z", F3), 1) == []
    params = QPlusOneParams(F3, (1, 0, 0), (0, 1, 0))
    curve = build_qplus1(params)
    assert count_points(curve) == 9
    P0 = ProjPoint.of(params.singular_point(), F3).coords
    assert singular_points_ext(curve, 1) == [P0]
    assert len(singular_points_ext(curve, 2)) == 1
    # the node of the nodal cubic over F_5
    assert singular_points_ext(C("Y^2*Z - X^3 - X^2*Z", field_make(5)), 1) == [(0, 0, 1)]


def test_not_homogeneous():
    with pytest.raises(NotHomogeneous):
        C("X^2 + Y", F2)


def test_report_json_roundtrip():
    curve = build_qplus1(QPlusOneParams.default(F4))
    rep = curve_report(curve, singular_ext=(1, 2))
    text = json.dumps(rep.to_json(), sort_keys=False)
    again = CurveReport.from_json(json.loads(text))
    assert again == rep
    assert json.dumps(again.to_json()) == text
    assert rep.N == 16 and len(rep.singular_points[2]) == 1
