"""Finite fields F_q, q = p^e, in the polynomial basis over F_p.

Elements are stored as integer indices ``0 .. q-1``: the element
``c0 + c1*t + ... + c_{e-1}*t^{e-1}`` has index ``c0 + c1*p + ... ``, so
index order is the lexicographic order on coefficient vectors with the
constant term varying fastest.  Index 0 is zero and index 1 is one.  All
arithmetic goes through precomputed tables, so equal elements are equal
integers and can be used directly as dict keys.

Moduli are given low degree first: ``(1, 1, 1)`` is ``t^2 + t + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoDefaultModulus,
    NonPrime,
    ParseError,
    ReducibleModulus,
)

# (p, e) -> modulus, low degree first.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),  # t^3 + t + 1
    (3, 2): (1, 0, 1),  # t^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # t^4 + t + 1
    (5, 2): (2, 1, 1),  # t^2 + t + 2
    (3, 3): (1, 2, 0, 1),  # t^3 + 2t + 1
}

# Towers used by the singular-point search over F_{q^m}.
EXTENSION_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 5): (1, 0, 1, 0, 0, 1),  # t^5 + t^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # t^6 + t + 1
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),  # t^9 + t^4 + 1
    (3, 4): (2, 1, 0, 0, 1),  # t^4 + t + 2
    (3, 6): (2, 1, 0, 0, 0, 0, 1),  # t^6 + t + 2
    (5, 3): (1, 1, 0, 1),  # t^3 + t + 1
    (7, 2): (3, 1, 1),  # t^2 + t + 3
    (7, 3): (2, 0, 0, 1),  # t^3 + 2
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- polynomials over F_p as coefficient lists, low degree first ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    m = _trim([x % p for x in m])
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(a: Sequence[int], k: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        k >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (low degree first)."""
    f = _trim([c % p for c in modulus])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    frob = [x]  # frob[k] = x^(p^k) mod f
    for _ in range(n):
        frob.append(_ppowmod(frob[-1], p, f, p))
    if _psub(frob[n], x, p):
        return False
    for r in _prime_factors(n):
        g = _pgcd(_psub(frob[n // r], x, p), f, p)
        if len(g) != 1:
            return False
    return True


def has_root(modulus: Sequence[int], p: int) -> bool:
    return any(sum(c * pow(a, i, p) for i, c in enumerate(modulus)) % p == 0 for a in range(p))


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree e (constant fastest)."""
    for idx in range(p**e):
        low = [(idx // p**i) % p for i in range(e)]
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {e} over F_{p}")  # unreachable


def tower_modulus(p: int, e: int) -> tuple[int, ...]:
    """Modulus for F_{p^e}: built-in tables first, else the least irreducible."""
    if e == 1:
        return (0, 1)
    if (p, e) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(p, e)]
    if (p, e) in EXTENSION_MODULI:
        return EXTENSION_MODULI[(p, e)]
    return least_irreducible(p, e)


class FieldSpec:
    """The finite field F_{p^e} = F_p[t]/(modulus).

    Construct through :func:`field_make`, which caches instances so that a
    given ``(p, e, modulus)`` always yields the same object.
    """

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.modulus = modulus
        self.q = p**e
        q = self.q
        digits = np.array([[(i // p**u) % p for u in range(e)] for i in range(q)], dtype=np.int64)
        self._digits = digits
        weights = p ** np.arange(e, dtype=np.int64)
        self._weights = weights
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        self.add_table = add
        self.neg_table = neg
        self.sub_table = add[:, neg]
        self._build_mul_tables()
        # Python-list mirrors for scalar hot paths.
        self._add = add.tolist()
        self._sub = self.sub_table.tolist()
        self._mul = self.mul_table.tolist()
        self._neg = neg.tolist()
        self._inv = self.inv_table.tolist()

    def _build_mul_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        m = list(self.modulus)

        def as_poly(i: int) -> list[int]:
            return _trim([(i // p**u) % p for u in range(e)])

        def as_index(poly: Sequence[int]) -> int:
            return sum(c * p**u for u, c in enumerate(poly))

        # Find a generator of the multiplicative group by brute force.
        for g in range(1, q):
            gp = as_poly(g)
            exp = [1]
            cur = [1]
            ok = True
            for _ in range(q - 2):
                cur = _pmulmod(cur, gp, m, p)
                idx = as_index(cur)
                if idx == 1:
                    ok = False
                    break
                exp.append(idx)
            if ok:
                break
        else:  # pragma: no cover - every finite field has a generator
            raise ReducibleModulus("multiplicative group is not cyclic; modulus reducible")
        self.generator = g
        exp_arr = np.array(exp, dtype=np.int64)
        log_arr = np.zeros(q, dtype=np.int64)
        log_arr[exp_arr] = np.arange(q - 1, dtype=np.int64)
        self.exp_table = exp_arr
        self.log_table = log_arr
        la = log_arr[:, None] + log_arr[None, :]
        mul = exp_arr[la % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp_arr[(-log_arr[1:]) % (q - 1)]
        self.inv_table = inv

    # -- identity -----------------------------------------------------------
    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={format_poly_t(self.modulus)})"

    def __reduce__(self):
        return (field_make, (self.p, self.e, self.modulus))

    @property
    def label(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    # -- scalar arithmetic on indices ---------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._sub[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, k: int) -> int:
        """Square-and-multiply; negative exponents invert first."""
        if k < 0:
            a, k = self.inv(a), -k
        result, base = 1, a
        while k:
            if k & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            k >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p subset F_q."""
        return n % self.p

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._digits[a])

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return sum((c % self.p) * self.p**u for u, c in enumerate(coeffs))

    def elements(self) -> range:
        return range(self.q)

    def element(self, value: int) -> FqElem:
        return FqElem(self, value)

    # -- vectorised helpers -------------------------------------------------
    def pow_array(self, a: np.ndarray, k: int) -> np.ndarray:
        """Elementwise a**k for k >= 0 on an index array."""
        if k == 0:
            return np.ones_like(a)
        out = self.exp_table[(self.log_table[a] * k) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    # -- text ---------------------------------------------------------------
    def format(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        return format_poly_t(self.coeffs(a), trailing_monic=False) or "0"

    def parse(self, text: str) -> int:
        """Inverse of :meth:`format`; also accepts plain integers."""
        s = text.strip().replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if re.fullmatch(r"-?\d+", s):
            return self.from_int(int(s))
        if self.e == 1:
            raise ParseError(f"not an element of {self!r}: {text!r}")
        coeffs = [0] * self.e
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?t(?:\^(\d+))?|(\d+)", body)
            if not m:
                raise ParseError(f"bad element term {body!r}")
            if m.group(3) is not None:
                c, k = int(m.group(3)), 0
            else:
                c = int(m.group(1)) if m.group(1) else 1
                k = int(m.group(2)) if m.group(2) else 1
            if k >= self.e:
                raise ParseError(f"power t^{k} not reduced for degree {self.e}")
            coeffs[k] = (coeffs[k] + (-c if sign == "-" else c)) % self.p
        return self.from_coeffs(coeffs)


def format_poly_t(coeffs: Sequence[int], trailing_monic: bool = True) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "t" if k == 1 else f"t^{k}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts)


@dataclass(frozen=True)
class FqElem:
    """An element of a field, with operator overloading.

    The arithmetic-heavy code works on bare indices through the
    :class:`FieldSpec` methods; this wrapper is the public value type.
    """

    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not an element index of {self.field!r}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.field is not self.field:
                raise FieldMismatch("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FqElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FqElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FqElem(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FqElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FqElem(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return FqElem(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FqElem(self.field, self.field.pow(self.value, k))

    def inv(self) -> FqElem:
        return FqElem(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"FqElem({self.field.label}, {self.field.format(self.value)})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


@lru_cache(maxsize=None)
def _make(p: int, e: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, e, modulus)


def field_make(p: int, e: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Validated field F_{p^e}; the modulus defaults to the built-in table."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if e == 1:
        return _make(p, 1, (0, 1))
    if modulus is None:
        if (p, e) not in DEFAULT_MODULI:
            raise NoDefaultModulus(f"no built-in modulus for GF({p}^{e}); pass one explicitly")
        modulus = DEFAULT_MODULI[(p, e)]
    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != e + 1 or mod[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {e}: {mod}")
    if not is_irreducible(mod, p):
        raise ReducibleModulus(f"{format_poly_t(mod)} is reducible over F_{p}")
    return _make(p, e, mod)


def parse_field(text: str) -> FieldSpec:
    """Parse ``"p"``, ``"p^e"`` or a prime power such as ``"9"``."""
    s = text.strip()
    m = re.fullmatch(r"(\d+)(?:\^(\d+))?", s)
    if not m:
        raise ParseError(f"bad field string {text!r}")
    base = int(m.group(1))
    if m.group(2):
        return field_make(base, int(m.group(2)))
    if is_prime(base):
        return field_make(base)
    for p in range(2, base + 1):
        if base % p == 0:
            e, r = 0, base
            while r % p == 0:
                r //= p
                e += 1
            if r == 1:
                return field_make(p, e)
            break
    raise NonPrime(f"{base} is not a prime power")


def enumerate_field(F: FieldSpec) -> list[FqElem]:
    return [FqElem(F, i) for i in range(F.q)]


_OPS = {"add", "sub", "mul", "div", "inv", "pow"}


def fq_arith(a: FqElem, b: FqElem | int | None, op: str) -> FqElem:
    """Dispatch one field operation by name (``pow`` takes an int exponent)."""
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** int(b)
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op](b)


class Embedding:
    """A field embedding F_q -> F_{q^m} fixed by the image of t."""

    def __init__(self, small: FieldSpec, big: FieldSpec, root: int):
        self.small = small
        self.big = big
        self.root = root
        powers = [1]
        for _ in range(1, small.e):
            powers.append(big.mul(powers[-1], root))
        table = []
        for a in range(small.q):
            acc = 0
            for c, rp in zip(small.coeffs(a), powers):
                acc = big.add(acc, big.mul(big.from_int(c), rp))
            table.append(acc)
        self.table = table

    def __call__(self, a: int) -> int:
        return self.table[a]


@lru_cache(maxsize=None)
def extension(F: FieldSpec, m: int) -> tuple[FieldSpec, Embedding]:
    """F_{q^m} over F_p together with an embedding of F.

    F's generator t maps to the least root (by index) of F's modulus.
    """
    if m == 1:
        return F, Embedding(F, F, F.p if F.e > 1 else 0)
    deg = F.e * m
    big = _make(F.p, deg, tower_modulus(F.p, deg))
    if F.e == 1:
        return big, Embedding(F, big, 0)
    for r in range(big.q):
        val = 0
        rp = 1
        for c in F.modulus:
            val = big.add(val, big.mul(big.from_int(c), rp))
            rp = big.mul(rp, r)
        if val == 0:
            return big, Embedding(F, big, r)
    raise ReducibleModulus("modulus of F has no root in the extension")  # pragma: no cover
