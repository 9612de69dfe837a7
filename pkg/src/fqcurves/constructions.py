"""Extremal plane-curve families.

* ``build_fc``: degree q+2 <= d <= 2q-1 curves with q^2 + (d-q+1) points,
  missing 2q-d collinear points on Z = 0.
* ``build_remark_curve``: the d >= 2q variant with multiplicities, missing
  only (0, 1, 0).
* ``build_qplus1``: degree q+1 curves whose F_q-points are exactly the
  affine plane Z != 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

import numpy as np

from .batch import LinearBatch, vector_block
from .curves import (
    PlaneCurve,
    _line_pairs,
    count_points,
    line_components,
)
from .errors import (
    AlphasNotDistinct,
    BadDegreeRange,
    BadMultiplicities,
    ReducibleQuadratic,
)
from .gf import FieldSpec
from .linalg import FqMatrix, solve
from .mpoly import Poly, restriction_coeffs
from .projspace import enumerate_lines_p2


def _affine_factors(field: FieldSpec) -> tuple[Poly, Poly]:
    """X^q - X Z^(q-1) and Y^q - Y Z^(q-1)."""
    X, Y, Z = Poly.gens(field, 3)
    q = field.q
    return X**q - X * Z ** (q - 1), Y**q - Y * Z ** (q - 1)


@dataclass
class FcParams:
    """Parameters of an F_c curve.

    Plain mode uses distinct ``alphas``; multiplicity mode uses
    ``multiplicities`` (e_alpha >= 1 for every alpha in F_q).  ``c`` has
    length d - q and defaults to zeros.
    """

    field: FieldSpec
    d: int
    alphas: tuple[int, ...] | None = None
    multiplicities: dict[int, int] | None = None
    c: tuple[int, ...] | None = None

    def __post_init__(self):
        q = self.field.q
        d = self.d
        if self.multiplicities is None:
            if not q + 2 <= d <= 2 * q - 1:
                raise BadDegreeRange(f"plain F_c needs q+2 <= d <= 2q-1, got q={q}, d={d}")
            if self.alphas is None:
                self.alphas = tuple(range(d - q + 1))
            self.alphas = tuple(self.alphas)
            if len(self.alphas) != d - q + 1:
                raise BadDegreeRange(f"need {d - q + 1} alphas, got {len(self.alphas)}")
            if len(set(self.alphas)) != len(self.alphas):
                raise AlphasNotDistinct(f"alphas must be distinct: {self.alphas}")
        else:
            if d < 2 * q:
                raise BadDegreeRange(f"multiplicity mode needs d >= 2q, got q={q}, d={d}")
            mult = {int(a): int(e) for a, e in self.multiplicities.items()}
            if set(mult) != set(range(q)) or min(mult.values()) < 1:
                raise BadMultiplicities("need e_alpha >= 1 for every alpha in F_q")
            if sum(mult.values()) != d - q + 1:
                raise BadMultiplicities(f"multiplicities must sum to d-q+1 = {d - q + 1}")
            self.multiplicities = mult
        if self.c is None:
            self.c = (0,) * (d - q)
        self.c = tuple(self.c)
        if len(self.c) != d - q:
            raise BadDegreeRange(f"c must have length d-q = {d - q}")

    @property
    def root_multiplicities(self) -> dict[int, int]:
        if self.multiplicities is not None:
            return dict(self.multiplicities)
        return {a: 1 for a in self.alphas}

    def betas(self) -> list[int]:
        """beta_0..beta_D with prod (Y - alpha X)^e = sum_i beta_(D-i) X^(D-i) Y^i."""
        F = self.field
        X, Y, _ = Poly.gens(F, 3)
        prod = Poly.const(F, 3)
        for a, e in sorted(self.root_multiplicities.items()):
            prod = prod * (Y - X.scale(a)) ** e
        D = self.d - F.q + 1
        return [prod.coeff((k, D - k, 0)) for k in range(D + 1)]


def default_multiplicities(field: FieldSpec, d: int) -> dict[int, int]:
    """e_alpha = 1 for all alpha, with the remainder placed on alpha = 0."""
    q = field.q
    if d < 2 * q:
        raise BadDegreeRange(f"multiplicity mode needs d >= 2q, got q={q}, d={d}")
    mult = {a: 1 for a in range(q)}
    mult[0] += d - q + 1 - q
    return mult


def _fc_parts(params: FcParams) -> tuple[Poly, list[Poly]]:
    """F_c = base + sum_i c_i * parts[i-1]."""
    F = params.field
    q, d = F.q, params.d
    X, Y, Z = Poly.gens(F, 3)
    ax, ay = _affine_factors(F)
    betas = params.betas()
    D = d - q + 1
    f0 = Poly.zero(F, 3)
    for i in range(d - q + 1):
        f0 = f0 + Poly.monomial(F, (d - q - i, i, 0), betas[D - i])
    base = ax * f0 + ay * Y ** (d - q)
    parts = [ax * Poly.monomial(F, (d - q - i, 0, i)) for i in range(1, d - q + 1)]
    return base, parts


def fc_poly(params: FcParams) -> Poly:
    base, parts = _fc_parts(params)
    out = base
    for ci, part in zip(params.c, parts):
        if ci:
            out = out + part.scale(ci)
    return out


def build_fc(params: FcParams) -> PlaneCurve:
    return PlaneCurve(fc_poly(params))


def _line_restriction_map(field: FieldSpec, d: int, polys: Sequence[Poly]) -> np.ndarray:
    """Row j: concatenated restriction coefficients of polys[j] to every line."""
    pairs = _line_pairs(field)
    rows = []
    for f in polys:
        row = []
        for P, Q in pairs:
            row.extend(restriction_coeffs(f, P, Q, d))
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def search_line_free_c(
    field: FieldSpec,
    d: int,
    alphas: Sequence[int] | None = None,
    multiplicities: Mapping[int, int] | None = None,
    block: int = 1 << 14,
) -> tuple[int, ...] | None:
    """Lexicographically first c giving an F_c curve with no F_q-line component.

    The restriction of F_c to any line is affine-linear in c, so a block of
    candidates is screened against all q^2+q+1 lines at once.
    """
    params = FcParams(field, d, alphas=alphas, multiplicities=dict(multiplicities) if multiplicities else None)
    base, parts = _fc_parts(params)
    nlines = len(enumerate_lines_p2(field))
    A = _line_restriction_map(field, d, parts)
    offset = _line_restriction_map(field, d, [base])[0]
    lin = LinearBatch(field, A, offset=offset)
    q, k = field.q, d - field.q
    total = q**k
    for start in range(0, total, block):
        C = vector_block(q, k, start, min(total, start + block))
        nz = lin.nonzero(C).reshape(C.shape[0], nlines, d + 1)
        line_free = nz.any(axis=2).all(axis=1)
        hit = np.flatnonzero(line_free)
        if hit.size:
            return tuple(int(x) for x in C[hit[0]])
    return None


def build_remark_curve(
    field: FieldSpec,
    d: int,
    multiplicities: Mapping[int, int] | None = None,
    c: Sequence[int] | None = None,
) -> PlaneCurve:
    """The multiplicity variant for d >= 2q; searches c when not given.

    Raises ``LookupError`` when no line-free c exists.
    """
    mult = dict(multiplicities) if multiplicities else default_multiplicities(field, d)
    if c is None:
        c = search_line_free_c(field, d, multiplicities=mult)
        if c is None:
            raise LookupError(f"no line-free c for q={field.q}, d={d}")
    return build_fc(FcParams(field, d, multiplicities=mult, c=tuple(c)))


# -- the d = q + 1 family ----------------------------------------------------


def binary_quadratic_has_root(field: FieldSpec, A: int, B: int, C: int) -> bool:
    """Whether A s^2 + B st + C t^2 vanishes somewhere on P^1(F_q)."""
    if A == 0:  # (1, 0) is a root
        return True
    add, mul = field._add, field._mul
    for x in range(field.q):  # points (x, 1)
        v = add[add[mul[A][mul[x][x]]][mul[B][x]]][C]
        if v == 0:
            return True
    return False


def find_irreducible_quadratic(field: FieldSpec) -> tuple[int, int, int]:
    """Lexicographically first (A, B, C) with A s^2 + B st + C t^2 irreducible."""
    q = field.q
    for A in range(q):
        for B in range(q):
            for C in range(q):
                if not binary_quadratic_has_root(field, A, B, C):
                    return A, B, C
    raise AssertionError("every finite field has an irreducible quadratic")  # pragma: no cover


@dataclass
class QPlusOneParams:
    """Matrix rows a = (a0, a1, a2), b = (b0, b1, b2)."""

    field: FieldSpec
    a: tuple[int, int, int]
    b: tuple[int, int, int]

    def __post_init__(self):
        self.a = tuple(self.a)
        self.b = tuple(self.b)
        if len(self.a) != 3 or len(self.b) != 3:
            raise ValueError("a and b need three entries each")
        if binary_quadratic_has_root(self.field, *self.quadratic()):
            raise ReducibleQuadratic(f"quadratic {self.quadratic()} has an F_q-root")

    def quadratic(self) -> tuple[int, int, int]:
        """Coefficients of a0 s^2 + (a1 + b0) st + b1 t^2."""
        return self.a[0], self.field.add(self.a[1], self.b[0]), self.b[1]

    @classmethod
    def default(cls, field: FieldSpec, a2: int = 0, b2: int = 0) -> QPlusOneParams:
        A, B, C = find_irreducible_quadratic(field)
        return cls(field, (A, B, a2), (0, C, b2))

    def singular_point(self) -> tuple[int, int, int]:
        """(x0, y0, 1) with [[a0, a1], [b0, b1]] (x0, y0) = -(a2, b2)."""
        F = self.field
        M = FqMatrix(F, [[self.a[0], self.a[1]], [self.b[0], self.b[1]]])
        sol = solve(M, [F.neg(self.a[2]), F.neg(self.b[2])])
        if sol is None:  # pragma: no cover - excluded by irreducibility
            raise ReducibleQuadratic("singular matrix")
        return sol[0], sol[1], 1


def build_qplus1(params: QPlusOneParams) -> PlaneCurve:
    F = params.field
    ax, ay = _affine_factors(F)
    la = Poly.linear(F, params.a)
    lb = Poly.linear(F, params.b)
    return PlaneCurve(ax * la + ay * lb)


# -- verification ------------------------------------------------------------


@dataclass
class ConstructionReport:
    label: str
    q: int
    d: int
    N: int
    expected_N: int
    line_components: list[str]
    expect_line_free: bool
    notes: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        ok = self.N == self.expected_N
        if self.expect_line_free:
            ok = ok and not self.line_components
        return ok

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "q": self.q,
            "d": self.d,
            "N": self.N,
            "expected_N": self.expected_N,
            "line_components": self.line_components,
            "expect_line_free": self.expect_line_free,
            "passed": self.passed,
            "notes": self.notes,
        }


def verify_construction(curve: PlaneCurve, expected_N: int, expect_line_free: bool, label: str = "") -> ConstructionReport:
    """Recount N_q and recompute line components from scratch."""
    fresh = PlaneCurve(curve.F)
    return ConstructionReport(
        label=label,
        q=curve.field.q,
        d=curve.d,
        N=count_points(fresh),
        expected_N=expected_N,
        line_components=[L.to_text() for L in line_components(fresh)],
        expect_line_free=expect_line_free,
    )


def fc_restriction_to_z0_roots(params: FcParams) -> list[int]:
    """alpha in F_q with X f(X,Y,0) + Y g(X,Y,0) vanishing at (1, alpha);
    (0, 1) is reported as -1."""
    F = params.field
    X, Y, _ = Poly.gens(F, 3)
    q, d = F.q, params.d
    betas = params.betas()
    D = d - q + 1
    f = Poly.zero(F, 3)
    for i in range(d - q + 1):
        f = f + Poly.monomial(F, (d - q - i, i, 0), betas[D - i])
    g = Y ** (d - q)
    h = X * f + Y * g
    roots = [a for a in range(F.q) if h.eval((1, a, 0)) == 0]
    if h.eval((0, 1, 0)) == 0:
        roots.append(-1)
    return roots

