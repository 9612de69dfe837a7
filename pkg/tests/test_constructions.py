import pytest

from fqcurves.constructions import (
    FcParams,
    QPlusOneParams,
    binary_quadratic_has_root,
    build_fc,
    build_qplus1,
    build_remark_curve,
    default_multiplicities,
    fc_restriction_to_z0_roots,
    find_irreducible_quadratic,
    search_line_free_c,
    verify_construction,
)
from fqcurves.curves import count_points, line_components
from fqcurves.errors import AlphasNotDistinct, BadDegreeRange, BadMultiplicities, ReducibleQuadratic
from fqcurves.gf import field_make, parse_field
from fqcurves.mpoly import restrict_to_line
from fqcurves.projspace import theta
from fqcurves.batch import vector_block


def fq(q):
    return parse_field(str(q))


@pytest.mark.parametrize("q", [4, 5, 7])
def test_fc_count_is_independent_of_parameters(q):
    F = fq(q)
    for d in range(q + 2, 2 * q):
        for c in [(0,) * (d - q), (1,) * (d - q)]:
            curve = build_fc(FcParams(F, d, c=c))
            assert count_points(curve) == q * q + d - q + 1


def test_fc_example_q5_d7():
    F = field_make(5)
    assert count_points(build_fc(FcParams(F, 7, alphas=(0, 1, 2), c=(0, 0)))) == 28


def test_fc_meets_z0_in_the_alphas():
    F = field_make(5)
    params = FcParams(F, 8, alphas=(0, 2, 3, 4))
    assert sorted(fc_restriction_to_z0_roots(params)) == [0, 2, 3, 4]


def test_fc_validation():
    F = field_make(5)
    with pytest.raises(BadDegreeRange):
        FcParams(F, 6)
    with pytest.raises(BadDegreeRange):
        FcParams(F, 10)
    with pytest.raises(AlphasNotDistinct):
        FcParams(F, 7, alphas=(0, 0, 1))
    with pytest.raises(BadMultiplicities):
        FcParams(F, 10, multiplicities={0: 6})
    with pytest.raises(BadMultiplicities):
        FcParams(F, 10, multiplicities={0: 1, 1: 1, 2: 1, 3: 1, 4: 1})


def test_fc_restriction_to_affine_line_has_q_roots():
    # on Y = alpha X + rho Z the form is divisible by s^q t - s t^q
    F = field_make(5)
    curve = build_fc(FcParams(F, 7, c=(1, 2)))
    for a in range(5):
        for rho in range(5):
            r = restrict_to_line(curve.F, (1, a, 0), (0, rho, 1))
            assert all(r.eval((s, 1)) == 0 for s in range(5))


def test_search_examples():
    for q, d, N in ((4, 6, 19), (5, 7, 28)):
        F = fq(q)
        c = search_line_free_c(F, d)
        assert c is not None
        rep = verify_construction(build_fc(FcParams(F, d, c=c)), N, True)
        assert rep.passed


def test_search_small_q_records_outcome():
    # outside q > 3 nothing is guaranteed; the result must still be a
    # genuine line-free curve whenever one is returned
    for q, d in ((3, 5),):
        F = fq(q)
        c = search_line_free_c(F, d)
        if c is not None:
            assert line_components(build_fc(FcParams(F, d, c=c))) == []


def test_adversarial_c_fails_line_free_expectation():
    F = fq(4)
    bad = None
    for c in vector_block(4, 2, 0, 16):
        curve = build_fc(FcParams(F, 6, c=tuple(int(x) for x in c)))
        if line_components(curve):
            bad = curve
            break
    assert bad is not None
    rep = verify_construction(bad, 19, True)
    assert rep.N == 19 and not rep.passed


def test_search_is_lexicographically_first():
    F = fq(4)
    c = search_line_free_c(F, 6)
    for earlier in vector_block(4, 2, 0, 16):
        t = tuple(int(x) for x in earlier)
        if t == c:
            break
        assert line_components(build_fc(FcParams(F, 6, c=t)))


@pytest.mark.parametrize("q,d", [(4, 8), (5, 10), (4, 9)])
def test_remark_curves(q, d):
    F = fq(q)
    curve = build_remark_curve(F, d)
    assert count_points(curve) == theta(q, 2) - 1
    assert line_components(curve) == []


def test_default_multiplicities():
    F = fq(4)
    m = default_multiplicities(F, 9)
    assert sum(m.values()) == 9 - 4 + 1 and min(m.values()) == 1 and m[0] == 3


def test_irreducible_quadratics():
    assert find_irreducible_quadratic(field_make(2)) == (1, 1, 1)
    assert find_irreducible_quadratic(field_make(3)) == (1, 0, 1)
    F4 = fq(4)
    A, B, Cc = find_irreducible_quadratic(F4)
    assert not binary_quadratic_has_root(F4, A, B, Cc)
    assert binary_quadratic_has_root(F4, 1, 0, 1)


def test_qplus1_examples():
    F3 = field_make(3)
    curve = build_qplus1(QPlusOneParams(F3, (1, 0, 0), (0, 1, 0)))
    assert count_points(curve) == 9
    with pytest.raises(ReducibleQuadratic):
        QPlusOneParams(F3, (1, 0, 0), (0, 2, 0))  # s^2 - t^2
    for q in (2, 3, 4, 5, 7):
        rep = verify_construction(build_qplus1(QPlusOneParams.default(fq(q))), q * q, True)
        assert rep.passed
