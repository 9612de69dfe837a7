"""Generating sets of vanishing ideals of F_q-point sets in P^n.

Equality between the ideal generated by a set of homogeneous forms and
the full vanishing ideal of a point set is checked one degree at a time:
the degree-d slice of a homogeneous ideal is spanned by the products
``m * g`` with ``m`` a monomial of degree ``d - deg g``, so its dimension
is a matrix rank, and the slice of the vanishing ideal is the kernel of
an evaluation matrix.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field as dc_field
from math import comb

import numpy as np

from .batch import LinearBatch, class_block, class_count, monomial_matrix
from .errors import BadK, BudgetExceeded, LocusMismatch, NotHomogeneous
from .gf import FieldSpec
from .linalg import FqMatrix, rank
from .mpoly import ANY, Poly, is_homogeneous, monomials_of_degree
from .projspace import PointSet, enumerate_proj, linear_subspace_points, proj_array

DEFAULT_BUDGET = 20_000_000


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("FQC_BUDGET")
    return int(raw) if raw else default


@dataclass
class GeneratorSet:
    field: FieldSpec
    nvars: int
    gens: list[Poly]
    labels: list[str]

    def __post_init__(self):
        if len(self.gens) != len(self.labels):
            raise ValueError("one label per generator")
        for g in self.gens:
            if g.field is not self.field or g.nvars != self.nvars:
                raise ValueError("generator outside the ring")
            if g.is_zero():
                raise ValueError("zero generator")
            if is_homogeneous(g) in (None, ANY):
                raise NotHomogeneous(f"generator {g} is not homogeneous")

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def degrees(self) -> list[int]:
        return [g.degree() for g in self.gens]

    def without(self, label: str) -> GeneratorSet:
        keep = [(g, lab) for g, lab in zip(self.gens, self.labels) if lab != label]
        return GeneratorSet(self.field, self.nvars, [g for g, _ in keep], [lab for _, lab in keep])

    def to_json(self) -> list[dict]:
        return [{"label": lab, "poly": g.to_text(), "degree": g.degree()} for g, lab in zip(self.gens, self.labels)]


def _binomials(F: FieldSpec, n: int) -> tuple[list[Poly], list[str]]:
    x = Poly.gens(F, n + 1)
    q = F.q
    gens, labels = [], []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            gens.append(x[i] ** q * x[j] - x[i] * x[j] ** q)
            labels.append(f"binomial({i},{j})")
    return gens, labels


def gens_full_projective(F: FieldSpec, n: int) -> GeneratorSet:
    """x_i^q x_j - x_i x_j^q for i < j: the ideal of all of P^n(F_q)."""
    if n < 1:
        raise ValueError("need n >= 1")
    gens, labels = _binomials(F, n)
    return GeneratorSet(F, n + 1, gens, labels)


def complement_product(F: FieldSpec, n: int, k: int, s: int) -> Poly:
    """x_s * prod_{i=k}^{n} (x_i^(q-1) - x_s^(q-1))."""
    x = Poly.gens(F, n + 1)
    q = F.q
    out = x[s]
    for i in range(k, n + 1):
        out = out * (x[i] ** (q - 1) - x[s] ** (q - 1))
    return out


def gens_complement(F: FieldSpec, n: int, k: int) -> GeneratorSet:
    """Generators for the ideal of P^n(F_q) minus {x_k = ... = x_n = 0}."""
    if not 1 <= k <= n:
        raise BadK(f"need 1 <= k <= n, got k={k}, n={n}")
    gens, labels = _binomials(F, n)
    for s in range(k):
        gens.append(complement_product(F, n, k, s))
        labels.append(f"product({s})")
    return GeneratorSet(F, n + 1, gens, labels)


def gens_affine(F: FieldSpec, n: int) -> GeneratorSet:
    """x_s x_n^(q-1) - x_s^q for s < n: the ideal of A^n(F_q) = {x_n != 0}."""
    if n < 1:
        raise ValueError("need n >= 1")
    x = Poly.gens(F, n + 1)
    q = F.q
    gens = [x[s] * x[n] ** (q - 1) - x[s] ** q for s in range(n)]
    return GeneratorSet(F, n + 1, gens, [f"affine({s})" for s in range(n)])


def zero_locus(G: GeneratorSet, within: PointSet) -> PointSet:
    pts = within.array()
    if len(within) == 0:
        return PointSet(within.field, within.n)
    alive = np.ones(len(within), dtype=bool)
    for g in G:
        alive &= g.eval_array(pts) == 0
    return PointSet(within.field, within.n, [P for P, a in zip(within.points, alive) if a])


def slice_matrix(G: GeneratorSet, d: int) -> tuple[list[list[int]], list[tuple[int, ...]]]:
    """Rows: coefficient vectors of m*g spanning the degree-d slice of (G)."""
    monos = monomials_of_degree(G.nvars, d)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in G:
        dg = g.degree()
        if dg > d:
            continue
        for m in monomials_of_degree(G.nvars, d - dg):
            row = [0] * len(monos)
            for exps, c in g.terms.items():
                row[col[tuple(a + b for a, b in zip(exps, m))]] = c
            rows.append(row)
    return rows, monos


def ideal_degree_dim(G: GeneratorSet, d: int) -> int:
    if d < 0:
        raise ValueError("degree must be >= 0")
    rows, monos = slice_matrix(G, d)
    if not rows:
        return 0
    return rank(FqMatrix(G.field, rows, len(monos)))


def evaluation_matrix(S: PointSet, d: int) -> np.ndarray:
    monos = monomials_of_degree(S.n + 1, d)
    if len(S) == 0:
        return np.zeros((0, len(monos)), dtype=np.int64)
    return monomial_matrix(S.field, monos, S.array())


def vanishing_dim(S: PointSet, d: int) -> int:
    """Dimension of the degree-d forms vanishing on S."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    E = evaluation_matrix(S, d)
    ncols = comb(d + S.n, S.n)
    if E.shape[0] == 0:
        return ncols
    return ncols - rank(FqMatrix(S.field, E.tolist(), ncols))


def membership(f: Poly, G: GeneratorSet) -> bool:
    """Whether the homogeneous form f lies in the ideal generated by G."""
    d = is_homogeneous(f)
    if d is None:
        raise NotHomogeneous("membership is decided for homogeneous forms only")
    if d is ANY:
        return True
    rows, monos = slice_matrix(G, d)
    if not rows:
        return False
    col = {m: i for i, m in enumerate(monos)}
    target = [0] * len(monos)
    for exps, c in f.terms.items():
        target[col[exps]] = c
    r0 = rank(FqMatrix(G.field, rows, len(monos)))
    return rank(FqMatrix(G.field, rows + [target], len(monos))) == r0


def default_dmax(G: GeneratorSet) -> int:
    q = G.field.q
    return max(2 * q + 2, max(G.degrees()) + q)


@dataclass
class DegreeCheck:
    d: int
    ideal_dim: int
    vanishing_dim: int
    equal: bool


@dataclass
class IdealReport:
    n: int
    k: int | None
    q: int
    locus_size: int
    per_degree: list[DegreeCheck] = dc_field(default_factory=list)
    locus_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.locus_ok and all(c.equal for c in self.per_degree)

    @property
    def first_failure(self) -> int | None:
        return next((c.d for c in self.per_degree if not c.equal), None)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "locus_size": self.locus_size,
            "per_degree": [asdict(c) for c in self.per_degree],
        }
        return out


def verify_ideal_equals_vanishing(
    G: GeneratorSet,
    S: PointSet,
    d_max: int | None = None,
    k: int | None = None,
    strict_locus: bool = True,
) -> IdealReport:
    """Compare dim (G)_d with dim I(S)_d for all d <= d_max.

    With ``strict_locus`` the zero locus of G in P^n(F_q) must equal S,
    otherwise :class:`LocusMismatch` is raised before any degree is checked.
    """
    n = G.nvars - 1
    if d_max is None:
        d_max = default_dmax(G)
    locus = zero_locus(G, enumerate_proj(G.field, n))
    locus_ok = locus == S
    if strict_locus and not locus_ok:
        raise LocusMismatch(f"zero locus has {len(locus)} points, expected {len(S)}")
    report = IdealReport(n=n, k=k, q=G.field.q, locus_size=len(S), locus_ok=locus_ok)
    for d in range(d_max + 1):
        a = ideal_degree_dim(G, d)
        b = vanishing_dim(S, d)
        report.per_degree.append(DegreeCheck(d, a, b, a == b))
    return report


def complement_points(F: FieldSpec, n: int, k: int) -> PointSet:
    return enumerate_proj(F, n) - linear_subspace_points(F, n, k)


# -- minimal degree of a hypersurface missing exactly one point -------------


def min_degree_witness(F: FieldSpec, n: int, d: int) -> Poly:
    """x_0^(d-(q-1)n) * prod_{i=1}^n (x_i^(q-1) - x_0^(q-1))."""
    q = F.q
    if d < (q - 1) * n:
        raise ValueError("witness needs d >= (q-1)n")
    x = Poly.gens(F, n + 1)
    out = x[0] ** (d - (q - 1) * n)
    for i in range(1, n + 1):
        out = out * (x[i] ** (q - 1) - x[0] ** (q - 1))
    return out


@dataclass
class MinDegreeScan:
    d: int
    monomials: int
    classes_scanned: int
    hits: int
    linear_algebra_says_exists: bool


@dataclass
class MinDegreeReport:
    n: int
    q: int
    threshold: int
    scans: list[MinDegreeScan]
    witness: str
    witness_ok: bool

    @property
    def passed(self) -> bool:
        below = all(s.hits == 0 and not s.linear_algebra_says_exists for s in self.scans if s.d < self.threshold)
        at = all(s.hits > 0 and s.linear_algebra_says_exists for s in self.scans if s.d >= self.threshold)
        return below and at and self.witness_ok

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "threshold": self.threshold,
            "scans": [asdict(s) for s in self.scans],
            "witness": self.witness,
            "witness_ok": self.witness_ok,
            "passed": self.passed,
        }


def _scan_one_point_missing(F: FieldSpec, n: int, d: int, block: int = 1 << 16) -> MinDegreeScan:
    monos = monomials_of_degree(n + 1, d)
    pts = proj_array(F, n)
    # Index of P0 = (1, 0, ..., 0) in the sorted point list.
    p0 = next(i for i, row in enumerate(pts.tolist()) if row == [1] + [0] * n)
    A = monomial_matrix(F, monos, pts).T  # (nmonos, npts)
    lin = LinearBatch(F, A)
    others = np.ones(len(pts), dtype=bool)
    others[p0] = False
    N = len(monos)
    total = class_count(F.q, N)
    hits = 0
    for start in range(0, total, block):
        C = class_block(F.q, N, start, min(total, start + block))
        nz = lin.nonzero(C)
        hits += int(np.count_nonzero(nz[:, p0] & ~nz[:, others].any(axis=1)))
    # Independent route: some form vanishes on P^n minus P0 but not at P0
    # iff the vanishing spaces of the two point sets differ in dimension.
    full = enumerate_proj(F, n)
    minus = PointSet(F, n, [P for P in full if P.coords != (1,) + (0,) * n])
    exists = vanishing_dim(minus, d) > vanishing_dim(full, d)
    return MinDegreeScan(d, N, total, hits, exists)


def minimal_degree_scan(F: FieldSpec, n: int, budget: int | None = None, through: int | None = None) -> MinDegreeReport:
    """Exhaustively confirm the least degree of a hypersurface with
    F_q-points exactly P^n(F_q) minus (1, 0, ..., 0).

    Every scalar class of degree-d forms is tested for d below the claimed
    threshold (q-1)n+1, and at the threshold when it fits the budget.
    """
    budget = budget_from_env() if budget is None else budget
    q = F.q
    threshold = (q - 1) * n + 1
    through = threshold if through is None else through
    scans = []
    for d in range(1, through + 1):
        N = comb(d + n, n)
        if class_count(q, N) > budget:
            if d < threshold:
                raise BudgetExceeded(f"degree {d} needs {class_count(q, N)} classes, budget {budget}")
            break
        scans.append(_scan_one_point_missing(F, n, d))
    w = min_degree_witness(F, n, threshold)
    full = enumerate_proj(F, n)
    P0 = (1,) + (0,) * n
    zero = {P.coords for P in full if w.eval(P.coords) == 0}
    witness_ok = zero == {P.coords for P in full} - {P0}
    return MinDegreeReport(n, q, threshold, scans, w.to_text(), witness_ok)
