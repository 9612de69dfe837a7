from math import comb

import pytest

from fqcurves.errors import BadK, BudgetExceeded, LocusMismatch, NotHomogeneous
from fqcurves.gf import field_make
from fqcurves.ideals import (
    GeneratorSet,
    complement_points,
    gens_affine,
    gens_complement,
    gens_full_projective,
    ideal_degree_dim,
    membership,
    min_degree_witness,
    minimal_degree_scan,
    vanishing_dim,
    verify_ideal_equals_vanishing,
    zero_locus,
)
from fqcurves.mpoly import Poly, parse_poly
from fqcurves.projspace import PointSet, affine_points, enumerate_proj

F2, F3 = field_make(2), field_make(3)


def test_full_projective_generators():
    assert len(gens_full_projective(F2, 1)) == 1
    G = gens_full_projective(F3, 2)
    assert len(G) == 3 and G.degrees() == [4, 4, 4]
    for q in (2, 3, 5):
        F = field_make(q)
        assert zero_locus(gens_full_projective(F, 2), enumerate_proj(F, 2)) == enumerate_proj(F, 2)


def test_complement_generators_q2():
    G = gens_complement(F2, 2, 1)
    assert len(G) == 4
    x0, x1, x2 = Poly.gens(F2, 3)
    assert G.gens[G.labels.index("product(0)")] == x0 * (x1 - x0) * (x2 - x0)
    assert G.degrees()[-1] == 3


def test_complement_base_case():
    for q in (2, 3, 5):
        F = field_make(q)
        G = gens_complement(F, 1, 1)
        x0, x1 = Poly.gens(F, 2)
        assert x0 * (x1 ** (q - 1) - x0 ** (q - 1)) in G.gens


def test_complement_k_equals_n():
    G = gens_complement(F3, 2, 2)
    prods = [g for g, lab in zip(G.gens, G.labels) if lab.startswith("product")]
    assert len(G) == 5 and len(prods) == 2
    assert all(g.degree() == 3 for g in prods)
    assert len(zero_locus(G, enumerate_proj(F3, 2))) == 9


def test_bad_k():
    for k in (0, 3):
        with pytest.raises(BadK):
            gens_complement(F2, 2, k)


def test_affine_generators():
    G = gens_affine(F2, 2)
    expected = {parse_poly("X*Z^1 - X^2", F2), parse_poly("Y*Z - Y^2", F2)}
    assert set(G.gens) == expected
    for q in (2, 3):
        F = field_make(q)
        assert zero_locus(gens_affine(F, 2), enumerate_proj(F, 2)) == affine_points(F, 2)


def test_zero_locus_six_points():
    S = zero_locus(gens_complement(F2, 2, 1), enumerate_proj(F2, 2))
    assert len(S) == 6 and (1, 0, 0) not in S


def test_degree_dims_basic():
    G = GeneratorSet(F2, 2, [parse_poly("x0", F2, 2)], ["x0"])
    assert ideal_degree_dim(G, 2) == 2
    assert ideal_degree_dim(gens_complement(F3, 2, 1), 2) == 0
    empty = PointSet(F3, 2, [])
    assert vanishing_dim(empty, 3) == comb(5, 2)
    one = PointSet(F3, 2, [(1, 0, 0)])
    assert vanishing_dim(one, 1) == 2


def test_membership():
    G = gens_complement(F3, 2, 1)
    assert all(membership(g, G) for g in G.gens)
    for d in (5, 6):
        assert membership(min_degree_witness(F3, 2, d), G)
    x0 = Poly.gens(F3, 3)[0]
    assert not membership(x0**3, G)
    with pytest.raises(NotHomogeneous):
        membership(parse_poly("X^2 + X", F3), G)


def test_verify_examples():
    rep = verify_ideal_equals_vanishing(gens_complement(F2, 2, 1), complement_points(F2, 2, 1), d_max=6)
    assert rep.passed and len(rep.per_degree) == 7
    assert set(rep.to_json()) == {"n", "k", "q", "locus_size", "per_degree"}
    assert verify_ideal_equals_vanishing(gens_complement(F3, 2, 2), complement_points(F3, 2, 2), d_max=8).passed


def test_dropping_the_product_breaks_equality():
    n, k, q = 2, 1, 2
    G = gens_complement(F2, n, k).without("product(0)")
    S = complement_points(F2, n, k)
    with pytest.raises(LocusMismatch):
        verify_ideal_equals_vanishing(G, S)
    rep = verify_ideal_equals_vanishing(G, S, strict_locus=False)
    assert not rep.passed
    assert rep.first_failure is not None and rep.first_failure <= (n - k + 1) * (q - 1) + 1


def test_minimal_degree_budget():
    with pytest.raises(BudgetExceeded):
        minimal_degree_scan(F3, 2, budget=1000)
