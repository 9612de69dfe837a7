import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fqcurves.constructions import FcParams, fc_poly
from fqcurves.errors import DegeneratePoints, NotLinear, ParseError
from fqcurves.gf import field_make, parse_field
from fqcurves.mpoly import (
    ANY,
    Poly,
    divides_linear,
    is_homogeneous,
    monomials_of_degree,
    parse_poly,
    partial_derivative,
    poly_arith,
    restrict_to_line,
    restriction_coeffs,
)

F2, F3, F4, F5 = field_make(2), field_make(3), parse_field("4"), field_make(5)


def P(text, F=F2):
    return parse_poly(text, F)


def test_eval_examples():
    assert P("X^3*Y - X*Y^3", F3).eval((1, 2, 0)) == 0
    assert P("X^2+Y*Z").eval((1, 1, 1)) == 0
    quartic = P("(X+Y+Z)^4 + (X*Y+Y*Z+Z*X)^2 + X*Y*Z*(X+Y+Z)", F4)
    assert quartic.eval((1, 0, 0)) == 1


def test_is_homogeneous():
    assert is_homogeneous(P("X^2*Y + Z^3")) == 3
    assert is_homogeneous(P("X^2 + X")) is None
    assert is_homogeneous(Poly.zero(F2, 3)) is ANY


def test_restrict_to_line():
    assert restrict_to_line(P("X"), (0, 1, 0), (0, 0, 1)).is_zero()
    r = restrict_to_line(P("X^2+Y*Z"), (1, 0, 0), (0, 1, 0))
    assert r == Poly(F2, 2, {(2, 0): 1})
    with pytest.raises(DegeneratePoints):
        restrict_to_line(P("X"), (1, 1, 0), (1, 1, 0))


def test_divides_linear():
    assert divides_linear(P("X"), P("X*(Y^2+Z^2)"))
    assert not divides_linear(P("X"), P("Y^3"))
    with pytest.raises(NotLinear):
        divides_linear(P("X^2"), P("X^3"))


def test_z_does_not_divide_fc():
    F = field_make(5)
    f = fc_poly(FcParams(F, 7))
    assert not divides_linear(parse_poly("Z", F), f)


def test_partial_derivatives():
    assert partial_derivative(P("X^2"), 0).is_zero()
    assert partial_derivative(P("X^3"), 0) == P("X^2")
    assert partial_derivative(P("X*Y+Z^2", F3), 1) == P("X", F3)


def test_monomials_of_degree():
    assert monomials_of_degree(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(monomials_of_degree(3, 2)) == 6
    assert len(monomials_of_degree(3, 4)) == 15


def test_poly_arith_examples():
    assert poly_arith(P("X+Y"), P("X+Y"), "add").is_zero()
    for F in (F2, F3, F4, F5):
        q = F.q
        X, Y, Z = Poly.gens(F, 3)
        assert X * (X ** (q - 1) - Z ** (q - 1)) == X**q - X * Z ** (q - 1)
    X, Y, _ = Poly.gens(F3, 3)
    assert (Y - X.scale(0)) * (Y - X.scale(1)) == P("Y^2 - X*Y", F3)


def test_text_roundtrip_over_extension():
    F = field_make(3, 2)
    f = parse_poly("X^2*Y + (1+t)*Z^3 - t*X*Y*Z", F)
    assert parse_poly(f.to_text(), F) == f
    assert parse_poly("(X + t*Y)^3", F) == parse_poly("X^3 + t^3*Y^3".replace("t^3", "(2*t)"), F)


def test_parse_errors():
    for bad in ("", "X +", "W", "X^", "(X", "X$Y"):
        with pytest.raises(ParseError):
            parse_poly(bad, F2)


def test_json_roundtrip():
    f = P("X^2*Y + (1+t)*Z^3", F4)
    assert Poly.from_json(F4, 3, f.to_json()) == f


@settings(max_examples=300)
@given(st.integers(0, 4), st.lists(st.integers(0, 4), min_size=3, max_size=3), st.lists(st.integers(0, 4), min_size=3, max_size=3), st.data())
def test_restriction_matches_substitution(d, Pt, Qt, data):
    coeffs = data.draw(st.lists(st.integers(0, 4), min_size=len(monomials_of_degree(3, d)), max_size=len(monomials_of_degree(3, d))))
    f = Poly(F5, 3, dict(zip(monomials_of_degree(3, d), coeffs)))
    dense = restriction_coeffs(f, Pt, Qt, d)
    for s in range(5):
        for t in range(5):
            pt = tuple(F5.add(F5.mul(s, a), F5.mul(t, b)) for a, b in zip(Pt, Qt))
            val = 0
            for j, c in enumerate(dense):
                val = F5.add(val, F5.mul(c, F5.mul(F5.pow(s, d - j), F5.pow(t, j))))
            assert val == f.eval(pt)
