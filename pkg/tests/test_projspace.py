import pytest

from fqcurves.errors import BadK
from fqcurves.gf import field_make, parse_field
from fqcurves.projspace import (
    PointSet,
    ProjPoint,
    affine_points,
    collinear,
    enumerate_lines_p2,
    enumerate_proj,
    linear_subspace_points,
    normalize,
    points_at_infinity,
    points_on,
    theta,
)

F2, F3 = field_make(2), field_make(3)


def test_theta():
    assert theta(2, 2) == 7
    assert theta(4, 2) == 21
    assert all(theta(q, 1) == q + 1 for q in (2, 3, 4, 5, 7))


def test_enumerate_proj():
    assert {P.coords for P in enumerate_proj(F2, 1)} == {(1, 0), (1, 1), (0, 1)}
    assert len(enumerate_proj(F3, 2)) == 13
    assert len(enumerate_proj(parse_field("4"), 2)) == 21
    for q in (2, 3, 4, 5):
        F = parse_field(str(q))
        for n in (1, 2, 3):
            pts = enumerate_proj(F, n)
            assert len(pts) == theta(q, n)
            assert all(normalize(P.coords, F) == P.coords for P in pts)


def test_linear_subspaces():
    assert [P.coords for P in linear_subspace_points(F3, 2, 1)] == [(1, 0, 0)]
    L = linear_subspace_points(F2, 2, 2)
    assert len(L) == 3 and all(P.coords[2] == 0 for P in L)
    assert len(linear_subspace_points(F3, 3, 2)) == 4
    with pytest.raises(BadK):
        linear_subspace_points(F2, 2, 0)


def test_lines_are_dual_and_each_has_q_plus_one_points():
    for q in (2, 3, 4):
        F = parse_field(str(q))
        lines = enumerate_lines_p2(F)
        assert len(lines) == theta(q, 2)
        P2 = enumerate_proj(F, 2)
        assert all(len(points_on(L, P2)) == q + 1 for L in lines)


def test_affine_and_infinity():
    assert len(affine_points(F2, 2)) == 4
    assert len(affine_points(field_make(5), 2)) == 25
    assert len(points_at_infinity(F3, 2)) == 4
    assert affine_points(F3, 2) | points_at_infinity(F3, 2) == enumerate_proj(F3, 2)


def test_collinear():
    assert collinear(PointSet(F2, 2, [(1, 0, 0), (0, 1, 0), (1, 1, 0)]))
    assert not collinear(PointSet(F2, 2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert collinear(PointSet(F2, 2, [(1, 1, 1)]))
    assert collinear(PointSet(F2, 2, []))


def test_projpoint_normalizes():
    assert ProjPoint.of((0, 2, 1), F3).coords == (0, 1, 2)
    with pytest.raises(ValueError):
        ProjPoint.of((0, 0, 0), F3)
