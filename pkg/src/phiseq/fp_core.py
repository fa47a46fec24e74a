"""Exact arithmetic in F_p, multiplicative orders and prime iteration.

Scalars are plain Python ints reduced into ``[0, p)``.  :class:`FpElem` is a
thin operator-overloading wrapper for interactive use; every function here
accepts either form and returns ints.

Primes are capped below ``2**31`` so that the compiled search kernels can hold
any product of two residues in a signed 64-bit integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NotPrime, PrimeOutOfRange, ZeroBase, ZeroInverse, ZeroOrderInput

P_CAP = 2**31
SIEVE_LIMIT = 10**7

# Deterministic for every n < 3,215,031,751 > 2**31.
_MR_BASES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for ``n < 2**31`` (and trial division below 64)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61):
        if n % q == 0:
            return n == q
    if n < 64 * 64:
        return True
    if n >= 3_215_031_751:
        raise PrimeOutOfRange(f"deterministic primality only below 3215031751, got {n}")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization as ``((q, e), ...)`` with ascending q."""
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            out.append((q, e))
        q += 1 if q == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class PrimeContext:
    """A prime ``5 <= p < 2**31`` with the factorization of ``p - 1`` cached."""

    p: int
    factors_p_minus_1: tuple[tuple[int, int], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        p = self.p
        if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
            raise TypeError(f"p must be an integer, got {type(p).__name__}")
        p = int(p)
        object.__setattr__(self, "p", p)
        if p < 5 or p >= P_CAP:
            raise PrimeOutOfRange(f"p must satisfy 5 <= p < 2**31, got {p}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if not self.factors_p_minus_1:
            object.__setattr__(self, "factors_p_minus_1", factorize(p - 1))
        if math.prod(q**e for q, e in self.factors_p_minus_1) != p - 1:
            raise ValueError(f"factorization does not multiply to p-1 = {p - 1}")

    @property
    def prime_divisors(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors_p_minus_1)

    def __call__(self, value: int) -> FpElem:
        return FpElem(int(value) % self.p, self)


@lru_cache(maxsize=4096)
def get_context(p: int) -> PrimeContext:
    """Cached :class:`PrimeContext` constructor."""
    return PrimeContext(p)


def _v(a, p: int) -> int:
    return int(a) % p


def mod_pow(base, exp: int, ctx: PrimeContext) -> int:
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(_v(base, ctx.p), exp, ctx.p)


def mod_inv(a, ctx: PrimeContext) -> int:
    a = _v(a, ctx.p)
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {ctx.p}")
    return pow(a, -1, ctx.p)


def multiplicative_order(a, ctx: PrimeContext) -> int:
    """Order of ``a`` in F_p^*, found by stripping prime factors off ``p - 1``."""
    p = ctx.p
    a = _v(a, p)
    if a == 0:
        raise ZeroOrderInput("0 has no multiplicative order")
    m = p - 1
    for q, e in ctx.factors_p_minus_1:
        for _ in range(e):
            if pow(a, m // q, p) == 1:
                m //= q
            else:
                break
    return m


def is_primitive_root(b, ctx: PrimeContext) -> bool:
    p = ctx.p
    b = _v(b, p)
    if b == 0:
        return False
    return all(pow(b, (p - 1) // q, p) != 1 for q in ctx.prime_divisors)


def geometric_sum(x, ctx: PrimeContext) -> int:
    """Closed form of ``sum(x**n for n in range(p - 1))`` in F_p."""
    x = _v(x, ctx.p)
    if x == 0:
        raise ZeroBase("geometric sum over F_p^* needs x != 0")
    return ctx.p - 1 if x == 1 else 0


def sieve(limit: int) -> np.ndarray:
    """Boolean primality table for ``0..limit``."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    return flags


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes ``lo <= p <= hi`` in ascending order."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    lo = max(lo, 2)
    if hi < 2:
        return []
    if hi >= P_CAP:
        raise PrimeOutOfRange(f"range must stay below 2**31, got hi={hi}")
    if hi <= SIEVE_LIMIT:
        flags = sieve(hi)
        return [int(q) for q in np.flatnonzero(flags[lo:]) + lo]
    return [n for n in range(lo, hi + 1) if is_prime(n)]


@dataclass(frozen=True)
class FpElem:
    """Element of F_p bound to its context; supports the field operators."""

    value: int
    ctx: PrimeContext = field(repr=False)

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.p:
            raise ValueError(f"{self.value} not reduced mod {self.ctx.p}")

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.ctx.p != self.ctx.p:
                raise ValueError("elements of different fields")
            return other.value
        return int(other) % self.ctx.p

    def _new(self, v: int) -> FpElem:
        return FpElem(v % self.ctx.p, self.ctx)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, (FpElem, int)):
            return self.value == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.p))

    def __add__(self, o):
        return self._new(self.value + self._coerce(o))

    __radd__ = __add__

    def __sub__(self, o):
        return self._new(self.value - self._coerce(o))

    def __rsub__(self, o):
        return self._new(self._coerce(o) - self.value)

    def __mul__(self, o):
        return self._new(self.value * self._coerce(o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __truediv__(self, o):
        return self._new(self.value * mod_inv(self._coerce(o), self.ctx))

    def __rtruediv__(self, o):
        return self._new(self._coerce(o) * mod_inv(self.value, self.ctx))

    def __pow__(self, e: int):
        if e < 0:
            return self._new(pow(mod_inv(self.value, self.ctx), -e, self.ctx.p))
        return self._new(pow(self.value, e, self.ctx.p))

    def inverse(self) -> FpElem:
        return self._new(mod_inv(self.value, self.ctx))

    def order(self) -> int:
        return multiplicative_order(self.value, self.ctx)

    def is_primitive(self) -> bool:
        return is_primitive_root(self.value, self.ctx)

    def __repr__(self):
        return f"FpElem({self.value} mod {self.ctx.p})"
