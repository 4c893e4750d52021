"""Finite fields GF(q) as dense lookup tables.

Elements are plain ints in ``range(q)``.  For q = p**n the element with
index ``c0 + c1*p + ... + c_{n-1}*p**(n-1)`` is the residue class of the
polynomial ``c0 + c1*x + ... + c_{n-1}*x**(n-1)`` modulo the field's
irreducible modulus.  0 and 1 are always the additive and multiplicative
identities.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, FieldTooLarge, NotPrimePower

DEFAULT_MAX_ORDER = 64


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, n)`` with ``q == p**n`` and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    n = 0
    while q % p == 0:
        q //= p
        n += 1
    return (p, n) if q == 1 else None


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


def prime_powers_upto(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if is_prime_power(q)]


# -- polynomials over GF(p): coefficient lists, lowest degree first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def _monic(code: int, degree: int, p: int) -> list[int]:
    coeffs = []
    for _ in range(degree):
        coeffs.append(code % p)
        code //= p
    return coeffs + [1]


def is_irreducible(m: list[int], p: int) -> bool:
    """Trial division of a monic polynomial by every monic of degree <= deg/2."""
    n = len(m) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for code in range(p ** d):
            if not _poly_mod(m, _monic(code, d, p), p):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> list[int]:
    """Lexicographically smallest monic irreducible polynomial of degree n over GF(p).

    Coefficients are compared from the highest non-leading degree down, which is
    the same as ordering by ``sum(c_i * p**i)``.
    """
    for code in range(p ** n):
        m = _monic(code, n, p)
        if is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")


class Field:
    """The finite field with q elements, backed by q x q numpy tables.

    Instances are immutable after construction.  Use :func:`gf` for a cached
    instance.
    """

    def __init__(self, q: int, max_order: int = DEFAULT_MAX_ORDER):
        pp = prime_power(q)
        if pp is None:
            raise NotPrimePower(f"{q} is not a prime power")
        if q > max_order:
            raise FieldTooLarge(f"GF({q}) exceeds the configured cap {max_order}")
        self.q = q
        self.p, self.n = pp
        p, n = pp
        if n == 1:
            self.modulus = [0, 1]
            idx = np.arange(q)
            add = (idx[:, None] + idx[None, :]) % q
            mul = (idx[:, None] * idx[None, :]) % q
        else:
            self.modulus = smallest_irreducible(p, n)
            digits = np.array([[(i // p ** t) % p for t in range(n)] for i in range(q)])
            weights = p ** np.arange(n)
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
            mul = np.zeros((q, q), dtype=np.int64)
            polys = [_trim(list(map(int, row))) for row in digits]
            for a in range(q):
                for b in range(a, q):
                    r = _poly_mod(_poly_mul(polys[a], polys[b], p), self.modulus, p)
                    mul[a, b] = mul[b, a] = sum(c * p ** t for t, c in enumerate(r))
        self.add_table = np.asarray(add, dtype=np.int64)
        self.mul_table = np.asarray(mul, dtype=np.int64)
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self._neg = [int(np.flatnonzero(self.add_table[a] == 0)[0]) for a in range(q)]
        self._inv = [0] + [int(np.flatnonzero(self.mul_table[a] == 1)[0]) for a in range(1, q)]

    def __repr__(self) -> str:
        return f"Field(q={self.q}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self) -> int:
        return hash((self.q, tuple(self.modulus)))

    def __len__(self) -> int:
        return self.q

    @property
    def elements(self) -> range:
        return range(self.q)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise ValueError(f"{x} is not an element of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        self._check(a)
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        for _ in range(e):
            out = int(self.mul_table[out, a])
        return out

    def element_to_poly(self, a: int) -> list[int]:
        """Coefficient list (lowest degree first, length n) of element a."""
        self._check(a)
        return [(a // self.p ** t) % self.p for t in range(self.n)]


@lru_cache(maxsize=None)
def gf(q: int, max_order: int = DEFAULT_MAX_ORDER) -> Field:
    return Field(q, max_order)
