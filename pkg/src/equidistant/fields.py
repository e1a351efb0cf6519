"""Arithmetic in small finite fields GF(p^e).

Elements are polynomials over GF(p) of degree < e, stored little-endian
(``coeffs[i]`` is the coefficient of x^i).  Their canonical integer encoding
is ``sum(c_i * p**i)``; that integer is what appears as a symbol in codewords
and in JSON.

The modulus is the lexicographically smallest monic irreducible polynomial of
degree e, where "lexicographic" means smallest integer encoding of the full
coefficient vector (so x^3+x+1 beats x^3+x^2+1 over GF(2)).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .errors import DivisionByZero, FieldMismatch, InvalidParameters, NotPrimePower

# Above this order the add/mul tables are not materialised.
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q == p**e, or raise NotPrimePower."""
    if q < 2:
        raise InvalidParameters(f"field order must be >= 2, got {q}")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


# -- polynomials over GF(p), little-endian tuples ------------------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    a = _trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _trim(a)
    return a


def _monic_polys(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield tuple(reversed(tail)) + (1,)


def is_irreducible(poly, p) -> bool:
    """Brute-force irreducibility: no monic factor of degree 1..deg//2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    # tail encodings 0, 1, ... in increasing integer order
    for enc in range(p ** e):
        tail = [(enc // p ** i) % p for i in range(e)]
        poly = tuple(tail) + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


# -- field ---------------------------------------------------------------------

@dataclass(frozen=True)
class FieldOrder:
    p: int
    e: int
    modulus: tuple[int, ...] = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __repr__(self):
        return f"GF({self.q})"

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p ** i) % self.p for i in range(self.e))

    def encode(self, coeffs) -> int:
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def _check(self, a: int):
        if not 0 <= a < self.q:
            raise InvalidParameters(f"{a} is not an element of {self!r}")

    # Integer-encoded arithmetic.  The tables are only built for small q.

    @functools.cached_property
    def _tables(self):
        q = self.q
        add = [[self._add(a, b) for b in range(q)] for a in range(q)]
        mul = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        return add, mul

    def _add(self, a, b):
        return self.encode((x + y) % self.p for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def _mul(self, a, b):
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _poly_mod(prod, self.modulus, self.p)
        return self.encode(r)

    def add(self, a: int, b: int) -> int:
        if self.q <= _TABLE_LIMIT:
            return self._tables[0][a][b]
        return self._add(a, b)

    def mul(self, a: int, b: int) -> int:
        if self.q <= _TABLE_LIMIT:
            return self._tables[1][a][b]
        return self._mul(a, b)

    def neg(self, a: int) -> int:
        return self.encode((-c) % self.p for c in self.coeffs(a))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        # a^(q-2) by square-and-multiply
        result, base, k = 1, a, self.q - 2
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element(self, value: int) -> "FieldElement":
        self._check(value)
        return FieldElement(self, self.coeffs(value))


@functools.cache
def make_field(q: int) -> FieldOrder:
    p, e = prime_power(q)
    return FieldOrder(p, e, smallest_irreducible(p, e))


@dataclass(frozen=True)
class FieldElement:
    order: FieldOrder
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order.e or not all(0 <= c < self.order.p for c in self.coeffs):
            raise InvalidParameters(f"bad coefficient vector {self.coeffs} for {self.order!r}")

    def __int__(self):
        return self.order.encode(self.coeffs)

    def _same(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected a FieldElement, got {type(other).__name__}")
        if other.order != self.order:
            raise FieldMismatch(f"{self.order!r} vs {other.order!r}")
        return other

    def __add__(self, other):
        other = self._same(other)
        return self.order.element(self.order.add(int(self), int(other)))

    def __mul__(self, other):
        other = self._same(other)
        return self.order.element(self.order.mul(int(self), int(other)))

    def __neg__(self):
        return self.order.element(self.order.neg(int(self)))

    def __sub__(self, other):
        return self + (-self._same(other))

    def inverse(self):
        return self.order.element(self.order.inv(int(self)))

    def __repr__(self):
        return f"{int(self)}@{self.order!r}"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def one_dim_subspace_reps(order: FieldOrder, k: int) -> list[tuple[int, ...]]:
    """One vector per 1-dimensional subspace of GF(q)^k.

    The representative is normalised so its first nonzero coordinate is 1;
    the list is sorted lexicographically on integer encodings.
    """
    if k < 1:
        raise InvalidParameters(f"k must be >= 1, got {k}")
    reps = []
    for v in itertools.product(range(order.q), repeat=k):
        lead = next((c for c in v if c), None)
        if lead == 1:
            reps.append(v)
    return reps
