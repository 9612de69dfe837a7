"""Exhaustive census of plane curves of degree d over F_q.

Candidates are the scalar classes of nonzero coefficient vectors over the
graded-lex monomial basis, ranked lexicographically (see
:func:`fqcurves.batch.class_block`).  A census over a rank range is a pure
function of the range, so disjoint ranges can run in any order or in
parallel and merge to the same report.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb
from typing import Iterator

import numpy as np

from .batch import LinearBatch, class_block, class_count, monomial_matrix
from .curves import PlaneCurve, _line_pairs
from .errors import BadPartition, BudgetExceeded
from .gf import FieldSpec
from .ideals import budget_from_env
from .mpoly import Poly, monomials_of_degree, restriction_coeffs
from .projspace import proj_array, theta

FILTERS = ("all", "line-free", "line-free+irreducibility-certificate")
BLOCK = 1 << 16


@dataclass(frozen=True)
class CensusSpec:
    field: FieldSpec
    degree: int
    filter: str = "line-free"
    budget: int | None = None

    def __post_init__(self):
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {FILTERS}")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")

    @property
    def monomials(self) -> list[tuple[int, ...]]:
        return monomials_of_degree(3, self.degree)

    @property
    def candidates(self) -> int:
        return class_count(self.field.q, comb(self.degree + 2, 2))

    def check_budget(self) -> None:
        budget = budget_from_env() if self.budget is None else self.budget
        if self.candidates > budget:
            raise BudgetExceeded(f"{self.candidates} candidates exceed budget {budget}")


@dataclass
class CensusReport:
    q: int
    d: int
    filter: str
    scanned: int = 0
    spectrum: dict[int, int] = dc_field(default_factory=dict)
    witnesses: dict[int, int] = dc_field(default_factory=dict)  # N -> class rank

    @property
    def examined(self) -> int:
        """Curves that passed the filter (the spectrum total)."""
        return sum(self.spectrum.values())

    @property
    def M(self) -> int | None:
        return max(self.spectrum) if self.spectrum else None

    @property
    def M2(self) -> int | None:
        below = [n for n in self.spectrum if n < self.M] if self.spectrum else []
        return max(below) if below else None

    def merge(self, other: CensusReport) -> CensusReport:
        if (self.q, self.d, self.filter) != (other.q, other.d, other.filter):
            raise ValueError("cannot merge censuses of different specs")
        spectrum = dict(self.spectrum)
        for n, c in other.spectrum.items():
            spectrum[n] = spectrum.get(n, 0) + c
        witnesses = dict(self.witnesses)
        for n, r in other.witnesses.items():
            witnesses[n] = min(r, witnesses.get(n, r))
        return CensusReport(self.q, self.d, self.filter, self.scanned + other.scanned, spectrum, witnesses)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CensusReport):
            return NotImplemented
        return (
            (self.q, self.d, self.filter, self.scanned) == (other.q, other.d, other.filter, other.scanned)
            and self.spectrum == other.spectrum
            and self.witnesses == other.witnesses
        )

    def witness_poly(self, field: FieldSpec, N: int) -> Poly:
        return coefficients_to_poly(field, self.d, class_block(field.q, comb(self.d + 2, 2), self.witnesses[N], self.witnesses[N] + 1)[0])

    def to_json(self, field: FieldSpec | None = None) -> dict:
        out = {
            "q": self.q,
            "d": self.d,
            "filter": self.filter,
            "scanned": self.scanned,
            "examined": self.examined,
            "M": self.M,
            "M2": self.M2,
            "spectrum": {str(n): self.spectrum[n] for n in sorted(self.spectrum)},
            "witness_ranks": {str(n): self.witnesses[n] for n in sorted(self.witnesses)},
        }
        if field is not None:
            out["witnesses"] = {str(n): self.witness_poly(field, n).to_text() for n in sorted(self.witnesses)}
        return out

    def spectrum_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["N", "count"])
        for n in sorted(self.spectrum):
            w.writerow([n, self.spectrum[n]])
        return buf.getvalue()


def coefficients_to_poly(field: FieldSpec, d: int, coeffs) -> Poly:
    monos = monomials_of_degree(3, d)
    return Poly(field, 3, {m: int(c) for m, c in zip(monos, coeffs) if c})


class _Evaluator:
    """Point and line maps for one (field, degree)."""

    def __init__(self, field: FieldSpec, d: int):
        self.field = field
        self.d = d
        monos = monomials_of_degree(3, d)
        pts = proj_array(field, 2)
        self.points = LinearBatch(field, monomial_matrix(field, monos, pts).T)
        pairs = _line_pairs(field)
        self.nlines = len(pairs)
        rows = []
        for m in monos:
            mono = Poly.monomial(field, m)
            row = []
            for P, Q in pairs:
                row.extend(restriction_coeffs(mono, P, Q, d))
            rows.append(row)
        self.lines = LinearBatch(field, np.array(rows, dtype=np.int64))

    def counts(self, C: np.ndarray) -> np.ndarray:
        return (~self.points.nonzero(C)).sum(axis=1)

    def line_free(self, C: np.ndarray) -> np.ndarray:
        nz = self.lines.nonzero(C).reshape(C.shape[0], self.nlines, self.d + 1)
        return nz.any(axis=2).all(axis=1)


@lru_cache(maxsize=8)
def _evaluator(field: FieldSpec, d: int) -> _Evaluator:
    return _Evaluator(field, d)


def _filter_mask(spec: CensusSpec, ev: _Evaluator, C: np.ndarray, N: np.ndarray) -> np.ndarray:
    if spec.filter == "all":
        return np.ones(C.shape[0], dtype=bool)
    keep = ev.line_free(C)
    if spec.filter == "line-free+irreducibility-certificate":
        keep &= N >= (spec.degree - 2) * spec.field.q + 3
    return keep


def census_range(spec: CensusSpec, start: int, stop: int) -> CensusReport:
    q, d = spec.field.q, spec.degree
    ev = _evaluator(spec.field, d)
    nm = comb(d + 2, 2)
    rep = CensusReport(q, d, spec.filter)
    for lo in range(start, stop, BLOCK):
        hi = min(stop, lo + BLOCK)
        C = class_block(q, nm, lo, hi)
        N = ev.counts(C)
        keep = _filter_mask(spec, ev, C, N)
        rep.scanned += hi - lo
        Nk = N[keep]
        ranks = np.arange(lo, hi, dtype=np.int64)[keep]
        if Nk.size == 0:
            continue
        values, first_idx, counts = np.unique(Nk, return_index=True, return_counts=True)
        for n, i, c in zip(values.tolist(), first_idx.tolist(), counts.tolist()):
            rep.spectrum[n] = rep.spectrum.get(n, 0) + c
            if n not in rep.witnesses:
                rep.witnesses[n] = int(ranks[i])
    return rep


def partition_bounds(total: int, part_index: int, num_parts: int) -> tuple[int, int]:
    if num_parts < 1 or not 0 <= part_index < num_parts:
        raise BadPartition(f"need 0 <= part < parts, got part={part_index}, parts={num_parts}")
    return total * part_index // num_parts, total * (part_index + 1) // num_parts


def census_partition(spec: CensusSpec, part_index: int, num_parts: int) -> CensusReport:
    spec.check_budget()
    lo, hi = partition_bounds(spec.candidates, part_index, num_parts)
    return census_range(spec, lo, hi)


def _run_part(args):
    spec, i, n = args
    return census_partition(spec, i, n)


def census(spec: CensusSpec, jobs: int = 1) -> CensusReport:
    """Full spectrum; with ``jobs > 1`` blocks run in worker processes."""
    spec.check_budget()
    if jobs <= 1:
        return census_range(spec, 0, spec.candidates)
    parts = jobs * 4
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        reports = list(pool.map(_run_part, [(spec, i, parts) for i in range(parts)]))
    out = CensusReport(spec.field.q, spec.degree, spec.filter)
    for r in reports:
        out = out.merge(r)
    return out


def enumerate_curves(spec: CensusSpec) -> Iterator[PlaneCurve]:
    """Filtered candidate curves in rank order (slow path; small specs)."""
    spec.check_budget()
    q, d = spec.field.q, spec.degree
    ev = _evaluator(spec.field, d)
    nm = comb(d + 2, 2)
    for lo in range(0, spec.candidates, BLOCK):
        hi = min(spec.candidates, lo + BLOCK)
        C = class_block(q, nm, lo, hi)
        keep = _filter_mask(spec, ev, C, ev.counts(C))
        for row in C[keep]:
            yield PlaneCurve(coefficients_to_poly(spec.field, d, row))


# -- the M_q(d), 2M_q(d) table for d >= q+1, q > 3 ---------------------------


def max_and_second(q: int, d: int) -> tuple[int, int]:
    """(M_q(d), 2M_q(d)) from the piecewise formulas (q > 3, d >= q+1)."""
    if q <= 3:
        raise ValueError("the piecewise formulas are stated for q > 3")
    if d < q + 1:
        raise ValueError("formulas cover d >= q+1")
    th = theta(q, 2)
    if d == q + 1:
        return q * q + 1, q * q
    if d >= 2 * q - 1:
        return th, q * q + q
    return th, q * q + d - q + 1


def figure_data(q: int, d_min: int, d_max: int) -> list[tuple[int, int, str]]:
    """Rows (d, N, status) for d_min <= d <= d_max, N descending within d."""
    rows = []
    for d in range(max(d_min, q + 1), d_max + 1):
        M, M2 = max_and_second(q, d)
        rows.append((d, M, "attained-max"))
        for n in range(M - 1, M2, -1):
            rows.append((d, n, "forbidden-gap"))
        rows.append((d, M2, "attained-second"))
    return rows


def figure_csv(q: int, d_max: int, d_min: int | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["d", "N", "status"])
    for row in figure_data(q, q + 1 if d_min is None else d_min, d_max):
        w.writerow(row)
    return buf.getvalue()
