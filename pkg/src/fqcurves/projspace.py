"""Points of P^n(F_q) and A^n(F_q), lines of P^2, and theta_q(n)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BadK
from .gf import FieldSpec
from .mpoly import Poly


def theta(q: int, n: int) -> int:
    """Number of points of P^n(F_q)."""
    if q < 2 or n < 0:
        raise ValueError("need q >= 2 and n >= 0")
    return (q ** (n + 1) - 1) // (q - 1)


def normalize(coords: Sequence[int], field: FieldSpec) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1."""
    for x in coords:
        if x:
            row = field._mul[field.inv(x)]
            return tuple(row[c] for c in coords)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Canonical homogeneous coordinates (element indices)."""

    coords: tuple[int, ...]

    @classmethod
    def of(cls, coords: Sequence[int], field: FieldSpec) -> ProjPoint:
        return cls(normalize(coords, field))

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def to_json(self, field: FieldSpec) -> list:
        if field.e == 1:
            return list(self.coords)
        return [list(field.coeffs(c)) for c in self.coords]

    def format(self, field: FieldSpec) -> str:
        return "(" + ", ".join(field.format(c) for c in self.coords) + ")"


class PointSet:
    """A sorted, duplicate-free set of points of P^n(F_q)."""

    __slots__ = ("field", "n", "points", "_index")

    def __init__(self, field: FieldSpec, n: int, points: Iterable[ProjPoint | Sequence[int]] = ()):
        self.field = field
        self.n = n
        pts = set()
        for P in points:
            if not isinstance(P, ProjPoint):
                P = ProjPoint.of(P, field)
            if len(P) != n + 1:
                raise ValueError(f"point {P} is not in P^{n}")
            pts.add(P)
        self.points: tuple[ProjPoint, ...] = tuple(sorted(pts))
        self._index = None

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ProjPoint]:
        return iter(self.points)

    def __contains__(self, P) -> bool:
        if self._index is None:
            self._index = frozenset(self.points)
        if not isinstance(P, ProjPoint):
            P = ProjPoint.of(P, self.field)
        return P in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.field is other.field and self.n == other.n and self.points == other.points

    def __repr__(self) -> str:
        return f"PointSet(P^{self.n}(F_{self.field.q}), {len(self)} points)"

    def _same(self, other: PointSet) -> None:
        if other.field is not self.field or other.n != self.n:
            raise ValueError("point sets live in different spaces")

    def __sub__(self, other: PointSet) -> PointSet:
        self._same(other)
        drop = set(other.points)
        return PointSet(self.field, self.n, [P for P in self.points if P not in drop])

    def __or__(self, other: PointSet) -> PointSet:
        self._same(other)
        return PointSet(self.field, self.n, self.points + other.points)

    def __and__(self, other: PointSet) -> PointSet:
        self._same(other)
        keep = set(other.points)
        return PointSet(self.field, self.n, [P for P in self.points if P in keep])

    def array(self) -> np.ndarray:
        return np.array([P.coords for P in self.points], dtype=np.int64).reshape(len(self), self.n + 1)

    def to_json(self) -> list:
        return [P.to_json(self.field) for P in self.points]


@lru_cache(maxsize=None)
def _proj_points(field: FieldSpec, n: int) -> tuple[ProjPoint, ...]:
    q = field.q
    pts = []
    for lead in range(n + 1):
        for tail in product(range(q), repeat=n - lead):
            pts.append(ProjPoint((0,) * lead + (1,) + tail))
    return tuple(sorted(pts))


def enumerate_proj(field: FieldSpec, n: int) -> PointSet:
    ps = PointSet(field, n)
    ps.points = _proj_points(field, n)
    return ps


def proj_array(field: FieldSpec, n: int) -> np.ndarray:
    """Canonical points of P^n(F_q) as an index array, in sorted order."""
    return enumerate_proj(field, n).array()


def linear_subspace_points(field: FieldSpec, n: int, k: int) -> PointSet:
    """The F_q-points of {x_k = ... = x_n = 0}, a copy of P^{k-1}."""
    if not 1 <= k <= n:
        raise BadK(f"need 1 <= k <= n, got k={k}, n={n}")
    return PointSet(field, n, [P.coords + (0,) * (n + 1 - k) for P in _proj_points(field, k - 1)])


def affine_points(field: FieldSpec, n: int) -> PointSet:
    """Points with last coordinate nonzero, i.e. A^n(F_q) inside P^n."""
    return PointSet(field, n, [tail + (1,) for tail in product(range(field.q), repeat=n)])


def points_at_infinity(field: FieldSpec, n: int) -> PointSet:
    return PointSet(field, n, [P for P in _proj_points(field, n) if P.coords[-1] == 0])


@lru_cache(maxsize=None)
def _lines_p2(field: FieldSpec) -> tuple[Poly, ...]:
    return tuple(Poly.linear(field, P.coords) for P in _proj_points(field, 2))


def enumerate_lines_p2(field: FieldSpec) -> list[Poly]:
    """One canonical linear form per F_q-line of P^2 (by duality)."""
    return list(_lines_p2(field))


def line_coeffs(L: Poly) -> tuple[int, ...]:
    n = L.nvars
    return tuple(L.coeff(tuple(1 if k == i else 0 for k in range(n))) for i in range(n))


def points_on(L: Poly, within: PointSet) -> PointSet:
    return PointSet(within.field, within.n, [P for P in within if L.eval(P.coords) == 0])


def collinear(points: PointSet | Iterable[Sequence[int]], field: FieldSpec | None = None) -> bool:
    """Whether the points of P^2 lie on a single line (rank <= 2)."""
    from .linalg import FqMatrix, rank

    if isinstance(points, PointSet):
        field = points.field
        rows = [list(P.coords) for P in points]
    else:
        rows = [list(P) for P in points]
    if len(rows) <= 2:
        return True
    return rank(FqMatrix(field, rows)) <= 2
