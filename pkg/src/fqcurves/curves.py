"""Plane curves over F_q: point counts, F_q-line components, missing points,
Sziklai-bound classification and singular points over extensions."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .errors import BudgetExceeded, HasLineComponent, NotHomogeneous
from .gf import FieldSpec, extension
from .mpoly import (
    ANY,
    Poly,
    hyperplane_basis,
    is_homogeneous,
    parse_poly,
    partial_derivative,
    restriction_coeffs,
)
from .projspace import (
    PointSet,
    collinear,
    enumerate_lines_p2,
    enumerate_proj,
    proj_array,
)

SINGULAR_SCAN_BUDGET = 10_000_000


class PlaneCurve:
    """The curve {F = 0} in P^2 for a nonzero ternary form F."""

    __slots__ = ("field", "F", "d", "_N", "_lines")

    def __init__(self, F: Poly):
        if F.nvars != 3:
            raise ValueError("plane curves need a form in X, Y, Z")
        if F.is_zero():
            raise ValueError("zero form does not define a curve")
        d = is_homogeneous(F)
        if d is None or d is ANY:
            raise NotHomogeneous(f"{F} is not homogeneous")
        if d < 1:
            raise ValueError("curve degree must be >= 1")
        self.field = F.field
        self.F = F
        self.d = d
        self._N = None
        self._lines = None

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> PlaneCurve:
        return cls(parse_poly(text, field, 3))

    def __repr__(self) -> str:
        return f"PlaneCurve(d={self.d}, F_{self.field.q}: {self.F.to_text()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneCurve) and self.F == other.F

    def __hash__(self) -> int:
        return hash(self.F)

    @property
    def N(self) -> int:
        if self._N is None:
            self._N = count_points(self)
        return self._N


def _zero_mask(C: PlaneCurve) -> np.ndarray:
    return C.F.eval_array(proj_array(C.field, 2)) == 0


def count_points(C: PlaneCurve) -> int:
    """N_q(C): the number of F_q-points of C."""
    if C._N is None:
        C._N = int(np.count_nonzero(_zero_mask(C)))
    return C._N


def rational_points(C: PlaneCurve) -> PointSet:
    P2 = enumerate_proj(C.field, 2)
    mask = _zero_mask(C)
    return PointSet(C.field, 2, [P for P, z in zip(P2.points, mask) if z])


@lru_cache(maxsize=None)
def _line_pairs(field: FieldSpec) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    return tuple(tuple(tuple(v) for v in hyperplane_basis(L)) for L in enumerate_lines_p2(field))


def line_components(C: PlaneCurve) -> list[Poly]:
    """All F_q-lines dividing the curve's form, as canonical linear forms."""
    if C._lines is None:
        lines = enumerate_lines_p2(C.field)
        out = []
        for L, (P, Q) in zip(lines, _line_pairs(C.field)):
            if not any(restriction_coeffs(C.F, P, Q, C.d)):
                out.append(L)
        C._lines = out
    return list(C._lines)


def has_line_component(C: PlaneCurve) -> bool:
    return bool(line_components(C))


def missing_points(C: PlaneCurve) -> tuple[PointSet, bool]:
    """P^2(F_q) minus C(F_q), and whether those points are collinear."""
    P2 = enumerate_proj(C.field, 2)
    mask = _zero_mask(C)
    miss = PointSet(C.field, 2, [P for P, z in zip(P2.points, mask) if not z])
    return miss, collinear(miss)


WITHIN = "within"
EXCEEDS = "exceeds"
EXCEPTION = "exception-curve"
NOT_APPLICABLE = "not-applicable"


def sziklai_bound(d: int, q: int) -> int:
    return (d - 1) * q + 1


def sziklai_classify(C: PlaneCurve) -> str:
    if line_components(C):
        return NOT_APPLICABLE
    q, d, N = C.field.q, C.d, count_points(C)
    if N <= sziklai_bound(d, q):
        return WITHIN
    if q == 4 and d == 4 and N == 14:
        return EXCEPTION
    return EXCEEDS


def irreducibility_certificate(C: PlaneCurve) -> bool:
    """N_q >= (d-2)q + 3 for a line-free curve: sufficient for absolute
    irreducibility, inconclusive otherwise."""
    if line_components(C):
        raise HasLineComponent("certificate applies to curves without F_q-line components")
    return count_points(C) >= (C.d - 2) * C.field.q + 3


def sziklai_exception_quartic(field: FieldSpec) -> PlaneCurve:
    """(X+Y+Z)^4 + (XY+YZ+ZX)^2 + XYZ(X+Y+Z)."""
    X, Y, Z = Poly.gens(field, 3)
    s = X + Y + Z
    return PlaneCurve(s**4 + (X * Y + Y * Z + Z * X) ** 2 + X * Y * Z * s)


def singular_points_ext(C: PlaneCurve, m: int = 1, budget: int = SINGULAR_SCAN_BUDGET) -> list[tuple[int, ...]]:
    """Points of P^2(F_{q^m}) where F and all partials vanish.

    Points are canonical coordinate tuples of element indices in the field
    returned by ``extension(C.field, m)``.
    """
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    K, emb = extension(C.field, m)
    if K.q**2 > budget:
        raise BudgetExceeded(f"P^2(F_{K.q}) scan exceeds budget {budget}")
    pts = proj_array(K, 2)
    polys = [C.F] + [partial_derivative(C.F, i) for i in range(3)]
    alive = np.ones(len(pts), dtype=bool)
    for f in polys:
        if f.is_zero():
            continue
        alive &= f.eval_array(pts, field=K, embed=emb) == 0
    return [tuple(int(x) for x in row) for row in pts[alive]]


def embed_point(point, C: PlaneCurve, m: int) -> tuple[int, ...]:
    _, emb = extension(C.field, m)
    return tuple(emb(x) for x in point)


@dataclass
class CurveReport:
    q: int
    d: int
    poly: str
    N: int
    line_components: list[str]
    missing_points: list[list]
    collinear: bool
    sziklai: str
    irreducibility_certificate: bool | None
    singular_points: dict[int, list[list]] = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "poly": self.poly,
            "N": self.N,
            "line_components": list(self.line_components),
            "missing_points": [list(p) for p in self.missing_points],
            "collinear": self.collinear,
            "sziklai": self.sziklai,
            "irreducibility_certificate": self.irreducibility_certificate,
            "singular_points": {str(k): [list(p) for p in v] for k, v in self.singular_points.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> CurveReport:
        return cls(
            q=data["q"],
            d=data["d"],
            poly=data["poly"],
            N=data["N"],
            line_components=list(data["line_components"]),
            missing_points=[list(p) for p in data["missing_points"]],
            collinear=data["collinear"],
            sziklai=data["sziklai"],
            irreducibility_certificate=data["irreducibility_certificate"],
            singular_points={int(k): [list(p) for p in v] for k, v in data.get("singular_points", {}).items()},
        )


def curve_report(C: PlaneCurve, singular_ext: tuple[int, ...] = ()) -> CurveReport:
    miss, col = missing_points(C)
    lines = line_components(C)
    cert = None if lines else irreducibility_certificate(C)
    sing = {}
    for m in singular_ext:
        sing[m] = [list(P) for P in singular_points_ext(C, m)]
    return CurveReport(
        q=C.field.q,
        d=C.d,
        poly=C.F.to_text(),
        N=count_points(C),
        line_components=[L.to_text() for L in lines],
        missing_points=miss.to_json(),
        collinear=col,
        sziklai=sziklai_classify(C),
        irreducibility_certificate=cert,
        singular_points=sing,
    )


def apply_matrix(C: PlaneCurve, M) -> PlaneCurve:
    """The curve {F(M x) = 0} for an invertible 3x3 matrix M over F_q."""
    fld = C.field
    forms = [Poly.linear(fld, [M[i][j] for j in range(3)]) for i in range(3)]
    return PlaneCurve(C.F.substitute(forms))
