"""Sparse multivariate polynomials over F_q.

A :class:`Poly` maps exponent tuples to nonzero element indices of its
field.  Terms are displayed and serialised in graded lexicographic order
with x0 > x1 > ... > xn.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    ArityMismatch,
    DegeneratePoints,
    NotLinear,
    ParseError,
    RingMismatch,
)
from .gf import FieldSpec, FqElem

Monomial = tuple[int, ...]


class _Any:
    """Degree marker returned by :func:`is_homogeneous` for the zero form."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "ANY"


ANY = _Any()


def glex_key(exps: Monomial) -> tuple[int, Monomial]:
    return (sum(exps), exps)


def monomials_of_degree(nvars: int, d: int) -> list[Monomial]:
    """All degree-d monomials in ``nvars`` variables, graded-lex descending."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(reverse=True)
    return out


def _coerce(field: FieldSpec, c) -> int:
    if isinstance(c, FqElem):
        if c.field is not field:
            raise RingMismatch("coefficient from a different field")
        return c.value
    return int(c)


class Poly:
    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: FieldSpec, nvars: int, terms: Mapping[Monomial, int] | None = None):
        self.field = field
        self.nvars = nvars
        clean: dict[Monomial, int] = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(x) for x in exps)
                if len(exps) != nvars or min(exps, default=0) < 0:
                    raise ArityMismatch(f"monomial {exps} does not fit {nvars} variables")
                c = _coerce(field, c)
                if not 0 <= c < field.q:
                    raise ValueError(f"coefficient index {c} outside {field!r}")
                if c:
                    clean[exps] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> Poly:
        return cls(field, nvars)

    @classmethod
    def const(cls, field: FieldSpec, nvars: int, c: int = 1) -> Poly:
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, field: FieldSpec, nvars: int, i: int) -> Poly:
        exps = [0] * nvars
        exps[i] = 1
        return cls(field, nvars, {tuple(exps): 1})

    @classmethod
    def gens(cls, field: FieldSpec, nvars: int) -> tuple[Poly, ...]:
        return tuple(cls.var(field, nvars, i) for i in range(nvars))

    @classmethod
    def monomial(cls, field: FieldSpec, exps: Sequence[int], c: int = 1) -> Poly:
        return cls(field, len(exps), {tuple(exps): c})

    @classmethod
    def linear(cls, field: FieldSpec, coeffs: Sequence[int]) -> Poly:
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exps = [0] * n
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(field, n, terms)

    # -- basic protocol -----------------------------------------------------
    def _check(self, other: Poly) -> None:
        if not isinstance(other, Poly) or other.field is not self.field or other.nvars != self.nvars:
            raise RingMismatch("polynomials live in different rings")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.q, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda kv: glex_key(kv[0]), reverse=True)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coeff(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        add = self.field._add
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = add[out.get(m, 0)][c]
        return Poly(self.field, self.nvars, out)

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        sub = self.field._sub
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = sub[out.get(m, 0)][c]
        return Poly(self.field, self.nvars, out)

    def __neg__(self) -> Poly:
        neg = self.field._neg
        return Poly(self.field, self.nvars, {m: neg[c] for m, c in self.terms.items()})

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, FqElem)):
            return self.scale(_coerce(self.field, other))
        self._check(other)
        add, mul = self.field._add, self.field._mul
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            row = mul[c1]
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = add[out.get(m, 0)][row[c2]]
        return Poly(self.field, self.nvars, out)

    def __rmul__(self, other) -> Poly:
        return self.__mul__(other)

    def scale(self, c: int) -> Poly:
        row = self.field._mul[c]
        return Poly(self.field, self.nvars, {m: row[v] for m, v in self.terms.items()})

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.field, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exps: Sequence[int], c: int = 1) -> Poly:
        row = self.field._mul[c]
        return Poly(
            self.field,
            self.nvars,
            {tuple(a + b for a, b in zip(m, exps)): row[v] for m, v in self.terms.items()},
        )

    # -- evaluation ---------------------------------------------------------
    def eval(self, point: Sequence) -> int:
        """Value at ``point`` (element indices or :class:`FqElem`)."""
        if len(point) != self.nvars:
            raise ArityMismatch(f"point of length {len(point)} for {self.nvars} variables")
        F = self.field
        pt = [_coerce(F, x) for x in point]
        add, mul = F._add, F._mul
        cache: dict[tuple[int, int], int] = {}
        total = 0
        for exps, c in self.terms.items():
            v = c
            for i, k in enumerate(exps):
                if k:
                    key = (i, k)
                    pw = cache.get(key)
                    if pw is None:
                        pw = cache[key] = F.pow(pt[i], k)
                    v = mul[v][pw]
            total = add[total][v]
        return total

    def __call__(self, *point) -> FqElem:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return FqElem(self.field, self.eval(point))

    def eval_array(self, points: np.ndarray, field: FieldSpec | None = None, embed=None) -> np.ndarray:
        """Vectorised evaluation at each row of an index array.

        With ``field``/``embed`` given, coefficients are pushed into the
        larger field first and ``points`` are indices of that field.
        """
        K = field or self.field
        pts = np.asarray(points, dtype=np.int64)
        if pts.ndim != 2 or pts.shape[1] != self.nvars:
            raise ArityMismatch("points array must have shape (npts, nvars)")
        total = np.zeros(pts.shape[0], dtype=np.int64)
        powcache: dict[tuple[int, int], np.ndarray] = {}
        for exps, c in self.terms.items():
            cc = embed(c) if embed is not None else c
            v = np.full(pts.shape[0], cc, dtype=np.int64)
            for i, k in enumerate(exps):
                if k:
                    key = (i, k)
                    if key not in powcache:
                        powcache[key] = K.pow_array(pts[:, i], k)
                    v = K.mul_table[v, powcache[key]]
            total = K.add_table[total, v]
        return total

    def coerce(self, K: FieldSpec, embed) -> Poly:
        return Poly(K, self.nvars, {m: embed(c) for m, c in self.terms.items()})

    # -- structure ----------------------------------------------------------
    def is_homogeneous(self):
        return is_homogeneous(self)

    def partial(self, i: int) -> Poly:
        return partial_derivative(self, i)

    def substitute(self, forms: Sequence[Poly]) -> Poly:
        """Compose with ``forms`` (one polynomial per variable)."""
        if len(forms) != self.nvars:
            raise ArityMismatch("need one form per variable")
        if not forms:
            return self
        target = forms[0]
        for f in forms:
            if f.field is not self.field or f.nvars != target.nvars:
                raise RingMismatch("substituted forms must share a ring")
        powcache: dict[tuple[int, int], Poly] = {}
        result = Poly.zero(self.field, target.nvars)
        for exps, c in self.terms.items():
            term = Poly.const(self.field, target.nvars, c)
            for i, k in enumerate(exps):
                if k:
                    key = (i, k)
                    if key not in powcache:
                        powcache[key] = forms[i] ** k
                    term = term * powcache[key]
            result = result + term
        return result

    # -- text / json --------------------------------------------------------
    def var_names(self) -> list[str]:
        return default_var_names(self.nvars)

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = list(names or self.var_names())
        if not self.terms:
            return "0"
        F = self.field
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exps) if k
            )
            cs = F.format(c)
            if F.e > 1 and not cs.isdigit():
                cs = f"({cs})"
            if not mono:
                pieces.append(cs)
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{cs}*{mono}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.field.label}, {self.to_text()!r})"

    def to_json(self) -> list[dict]:
        return [{"exps": list(m), "coeff": list(self.field.coeffs(c))} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, field: FieldSpec, nvars: int, data: Iterable[Mapping]) -> Poly:
        terms: dict[Monomial, int] = {}
        add = field._add
        for item in data:
            coeff = item["coeff"]
            c = field.from_coeffs(coeff) if isinstance(coeff, list) else field.from_int(int(coeff))
            m = tuple(item["exps"])
            terms[m] = add[terms.get(m, 0)][c]
        return cls(field, nvars, terms)


def default_var_names(nvars: int) -> list[str]:
    if nvars == 3:
        return ["X", "Y", "Z"]
    return [f"x{i}" for i in range(nvars)]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    for num, name, sym in _TOKEN.findall(text):
        if num:
            out.append(("num", num))
        elif name:
            out.append(("name", name))
        elif sym.strip():
            if sym not in "+-*^()":
                raise ParseError(f"unexpected character {sym!r}")
            out.append(("sym", sym))
    return out


def parse_poly(text: str, field: FieldSpec, nvars: int = 3) -> Poly:
    """Parse ``"X^2*Y + 2*Z^3 - (1+t)*X*Y*Z"`` or ``"(X+Y+Z)^4 + X*Y*Z*(X+Y)"``.

    Variables are ``x0..xn``; for three variables ``X, Y, Z`` are aliases.
    Over an extension field ``t`` is the generator of the defining modulus.
    """
    names = {f"x{i}": i for i in range(nvars)}
    if nvars == 3:
        names.update({"X": 0, "Y": 1, "Z": 2})
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected {tok[1]!r} in {text!r}")
        pos += 1
        return tok[1]

    def expr() -> Poly:
        sign = "+"
        if peek() in (("sym", "+"), ("sym", "-")):
            sign = take()
        out = term()
        if sign == "-":
            out = -out
        while peek() in (("sym", "+"), ("sym", "-")):
            op = take()
            rhs = term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term() -> Poly:
        out = power()
        while True:
            tok = peek()
            if tok == ("sym", "*"):
                take()
            elif not (tok[0] in ("num", "name") or tok == ("sym", "(")):
                return out
            out = out * power()

    def power() -> Poly:
        base = atom()
        if peek() == ("sym", "^"):
            take()
            base = base ** int(take("num"))
        return base

    def atom() -> Poly:
        kind, val = peek()
        if kind == "num":
            take()
            return Poly.const(field, nvars, field.from_int(int(val)))
        if kind == "name":
            take()
            if val in names:
                return Poly.var(field, nvars, names[val])
            if val == "t" and field.e > 1:
                return Poly.const(field, nvars, field.p)
            raise ParseError(f"unknown name {val!r} in {text!r}")
        take("sym", "(")
        inner = expr()
        take("sym", ")")
        return inner

    result = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input {toks[pos][1]!r} in {text!r}")
    return result


# -- operations ----------------------------------------------------------


def poly_eval(F: Poly, point: Sequence) -> FqElem:
    return FqElem(F.field, F.eval(point))


def is_homogeneous(F: Poly):
    """The common degree of all terms, ``ANY`` for zero, else ``None``."""
    if not F.terms:
        return ANY
    degs = {sum(m) for m in F.terms}
    return degs.pop() if len(degs) == 1 else None


def partial_derivative(F: Poly, i: int) -> Poly:
    if not 0 <= i < F.nvars:
        raise ArityMismatch(f"variable index {i} out of range")
    fld = F.field
    out = {}
    for exps, c in F.terms.items():
        k = exps[i]
        if k % fld.p == 0:
            continue
        new = list(exps)
        new[i] -= 1
        out[tuple(new)] = fld.mul(c, fld.from_int(k))
    return Poly(fld, F.nvars, out)


def _binary_form_powers(field: FieldSpec, a: int, b: int, kmax: int) -> list[list[int]]:
    """Dense coefficients of (a*s + b*t)^k, index j = coefficient of s^(k-j) t^j."""
    add, mul = field._add, field._mul
    pows = [[1]]
    for _ in range(kmax):
        prev = pows[-1]
        nxt = [0] * (len(prev) + 1)
        for j, c in enumerate(prev):
            if c:
                nxt[j] = add[nxt[j]][mul[c][a]]
                nxt[j + 1] = add[nxt[j + 1]][mul[c][b]]
        pows.append(nxt)
    return pows


def restriction_coeffs(F: Poly, P: Sequence[int], Q: Sequence[int], d: int | None = None) -> list[int]:
    """Coefficients of the binary form F(sP + tQ), s^d first.

    ``F`` must be homogeneous of degree ``d`` (inferred when omitted).
    """
    fld = F.field
    if d is None:
        d = max(F.degree(), 0)
    add, mul = fld._add, fld._mul
    pows = [_binary_form_powers(fld, P[i], Q[i], d) for i in range(F.nvars)]
    out = [0] * (d + 1)
    for exps, c in F.terms.items():
        acc = [c]
        for i, k in enumerate(exps):
            if k:
                pk = pows[i][k]
                new = [0] * (len(acc) + len(pk) - 1)
                for u, x in enumerate(acc):
                    if x:
                        row = mul[x]
                        for v, y in enumerate(pk):
                            if y:
                                new[u + v] = add[new[u + v]][row[y]]
                acc = new
        for j, x in enumerate(acc):
            if x:
                out[j] = add[out[j]][x]
    return out


def _proportional(P: Sequence[int], Q: Sequence[int], field: FieldSpec) -> bool:
    if not any(P) or not any(Q):
        return True
    i = next(k for k, x in enumerate(P) if x)
    if Q[i] == 0:
        return False
    lam = field.div(Q[i], P[i])
    return all(field.mul(lam, a) == b for a, b in zip(P, Q))


def restrict_to_line(F: Poly, P: Sequence, Q: Sequence) -> Poly:
    """The binary form F(sP + tQ) in variables (s, t)."""
    fld = F.field
    P = [_coerce(fld, x) for x in P]
    Q = [_coerce(fld, x) for x in Q]
    if len(P) != F.nvars or len(Q) != F.nvars:
        raise ArityMismatch("points must have one coordinate per variable")
    if _proportional(P, Q, fld):
        raise DegeneratePoints("P and Q must be distinct projective points")
    d = is_homogeneous(F)
    if d is ANY:
        return Poly.zero(fld, 2)
    if d is None:
        raise ValueError("restrict_to_line needs a homogeneous form")
    coeffs = restriction_coeffs(F, P, Q, d)
    return Poly(fld, 2, {(d - j, j): c for j, c in enumerate(coeffs)})


def hyperplane_basis(L: Poly) -> list[list[int]]:
    """n vectors spanning the kernel of the linear form L."""
    fld = L.field
    n = L.nvars
    a = [L.coeff(tuple(1 if k == i else 0 for k in range(n))) for i in range(n)]
    j = next(i for i, c in enumerate(a) if c)
    inv = fld.inv(a[j])
    basis = []
    for i in range(n):
        if i == j:
            continue
        v = [0] * n
        v[i] = 1
        v[j] = fld.neg(fld.mul(a[i], inv))
        basis.append(v)
    return basis


def divides_linear(L: Poly, F: Poly) -> bool:
    """Whether the linear form L divides F."""
    if L.field is not F.field or L.nvars != F.nvars:
        raise RingMismatch("L and F live in different rings")
    if L.is_zero() or is_homogeneous(L) != 1:
        raise NotLinear("divisor must be a nonzero linear form")
    if F.is_zero():
        return True
    basis = hyperplane_basis(L)
    if F.nvars == 3:
        P, Q = basis
        if is_homogeneous(F) is not None:
            return not any(restriction_coeffs(F, P, Q))
    # General case: F vanishes on the hyperplane iff its pullback is zero.
    u = Poly.gens(F.field, len(basis))
    forms = []
    for i in range(F.nvars):
        f = Poly.zero(F.field, len(basis))
        for k, v in enumerate(basis):
            if v[i]:
                f = f + u[k].scale(v[i])
        forms.append(f)
    return F.substitute(forms).is_zero()


def poly_arith(F: Poly, G, op: str) -> Poly:
    if op == "add":
        return F + G
    if op == "sub":
        return F - G
    if op == "mul":
        return F * G
    if op == "scale":
        return F.scale(_coerce(F.field, G))
    raise ValueError(f"unknown op {op!r}")
