"""Finite fields GF(p^n) as polynomials over Z_p modulo a fixed irreducible.

Elements are numbered by the base-p integer of their coefficient vector
(constant term as the least significant digit), so index 0 is zero and
index 1 is one.  Group constructions work with these indices directly
through the cached ``add_table``/``mul_table`` arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

DEFAULT_MAX_FIELD_ORDER = 2**16
_TABLE_LIMIT = 4096


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of ``num`` divided by the monic polynomial ``den`` over Z_p."""
    num = _trim([c % p for c in num])
    d = len(den) - 1
    while len(num) - 1 >= d:
        lead = num[-1]
        shift = len(num) - 1 - d
        for k, c in enumerate(den):
            num[shift + k] = (num[shift + k] - lead * c) % p
        _trim(num)
    return num


def _monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree, lexicographic in (c0, c1, ...)."""
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    n = len(poly) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(list(poly), f, p):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    for poly in _monic_polys(p, n):
        if n == 1 or is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {n} over Z_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldElement:
    field: Field = field(repr=False)
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.n or any(not 0 <= c < self.field.p for c in self.coeffs):
            raise FieldError(f"invalid coefficients {self.coeffs} for {self.field}")

    @property
    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldError("field mismatch")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self.field[self.field.add(self.index, other.index)]

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __neg__(self) -> FieldElement:
        return self.field[self.field.neg(self.index)]

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self.field[self.field.mul(self.index, other.index)]

    def __pow__(self, k: int) -> FieldElement:
        return self.field[self.field.power(self.index, k)]

    def inv(self) -> FieldElement:
        return self.field[self.field.inv(self.index)]

    def frobenius(self) -> FieldElement:
        return self.field[self.field.frobenius(self.index)]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __str__(self) -> str:
        return self.field.label(self.index)


@dataclass(frozen=True)
class Field:
    p: int
    n: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.n

    def __len__(self) -> int:
        return self.order

    def __getitem__(self, index: int) -> FieldElement:
        if not 0 <= index < self.order:
            raise IndexError(index)
        return FieldElement(self, self.coeffs(index))

    def __iter__(self):
        return (self[i] for i in range(self.order))

    def __str__(self) -> str:
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    @property
    def zero(self) -> FieldElement:
        return self[0]

    @property
    def one(self) -> FieldElement:
        return self[1]

    @property
    def gen(self) -> FieldElement:
        """The class of x (equal to zero in a prime field)."""
        return self[self.p % self.order] if self.n > 1 else self[0]

    def element(self, coeffs) -> FieldElement:
        return FieldElement(self, tuple(int(c) for c in coeffs))

    def coeffs(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            index, r = divmod(index, self.p)
            out.append(r)
        return tuple(out)

    def _index(self, coeffs) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def label(self, index: int) -> str:
        if self.n == 1:
            return str(index)
        terms = []
        for i, c in enumerate(self.coeffs(index)):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"

    # index-level arithmetic

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self._index((x + y) % self.p for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        if self.n == 1:
            return (-a) % self.p
        return self._index((-x) % self.p for x in self.coeffs(a))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a * b) % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        rem = _poly_mod(prod, self.modulus, self.p)
        return self._index(rem)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.power(a, self.order - 2)

    def frobenius(self, a: int) -> int:
        if self.p != 2:
            raise FieldError(f"x -> x^2 is only a field automorphism in characteristic 2, not in {self}")
        return self.mul(a, a)

    @cached_property
    def add_table(self) -> np.ndarray:
        return self._table(self.add)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return self._table(self.mul)

    def _table(self, op) -> np.ndarray:
        q = self.order
        if q > _TABLE_LIMIT:
            raise FieldError(f"refusing to tabulate a field of order {q}")
        t = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                t[a, b] = t[b, a] = op(a, b)
        return t


@lru_cache(maxsize=None)
def GF(p: int, n: int = 1, *, max_order: int = DEFAULT_MAX_FIELD_ORDER) -> Field:
    """The field of order p**n with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if n < 1:
        raise FieldError(f"extension degree must be >= 1, got {n}")
    if p**n > max_order:
        raise FieldError(f"field order {p}^{n} exceeds cap {max_order}")
    modulus = (0, 1) if n == 1 else smallest_irreducible(p, n)
    return Field(p, n, modulus)


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**n; raises FieldError if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            n = 0
            r = q
            while r % p == 0:
                r //= p
                n += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return p, n
    raise FieldError(f"{q} is not a prime power")  # pragma: no cover
