"""Dense polynomials over F_p and roots of X^3 - X - 1.

Coefficients are stored lowest degree first, so ``coeffs[n]`` multiplies
``X**n``.  Division is schoolbook; degrees stay around ``p`` at most.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import LengthMismatch, NotPeriodic
from .fp_core import PrimeContext

if TYPE_CHECKING:
    from .phi_sequences import PhiSequence

# Largest p whose cubic roots are found by scanning every residue.
SCAN_LIMIT = 2000


@dataclass(frozen=True)
class FpPoly:
    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) % self.p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, p: int, n: int, coeff: int = 1) -> FpPoly:
        return cls(p, (0,) * n + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def _lift(self, other) -> FpPoly:
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        return FpPoly(self.p, (int(other),))

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return FpPoly(self.p, tuple(self[i] + o[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return FpPoly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return FpPoly(self.p)
        p = self.p
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return FpPoly(p, tuple(x % p for x in out))

    __rmul__ = __mul__

    def __divmod__(self, other):
        d = self._lift(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dc = d.coeffs
        dd = len(dc) - 1
        inv_lead = pow(dc[-1], -1, p)
        if len(rem) - 1 < dd:
            return FpPoly(p), self
        quot = [0] * (len(rem) - dd)
        # Sparse divisors such as 1 - X^(p-1) only touch their nonzero slots.
        nz = [(i, c) for i, c in enumerate(dc) if c]
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] % p
            if c == 0:
                continue
            q = c * inv_lead % p
            quot[k - dd] = q
            for i, ci in nz:
                rem[k - dd + i] -= q * ci
        return FpPoly(p, tuple(quot)), FpPoly(p, tuple(rem[:dd]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, tuple(n * c for n, c in enumerate(self.coeffs) if n))

    def monic(self) -> FpPoly:
        if self.is_zero():
            return self
        inv = pow(self.lead, -1, self.p)
        return FpPoly(self.p, tuple(c * inv for c in self.coeffs))

    def powmod(self, e: int, modulus: FpPoly) -> FpPoly:
        """``self**e mod modulus`` by square-and-multiply."""
        result = FpPoly(self.p, (1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __repr__(self):
        if self.is_zero():
            return f"FpPoly(0 mod {self.p})"
        terms = [f"{c}*X^{n}" if n else str(c) for n, c in enumerate(self.coeffs) if c]
        return f"FpPoly({' + '.join(terms)} mod {self.p})"


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def cubic(p: int) -> FpPoly:
    """f(X) = X^3 - X - 1."""
    return FpPoly(p, (-1, -1, 0, 1))


def poly_from_sequence(seq: PhiSequence) -> FpPoly:
    """Generating polynomial ``sum(a_n X^n for n in 0..p-2)``."""
    p = seq.ctx.p
    if len(seq.terms) != p - 1:
        raise LengthMismatch(f"expected {p - 1} terms, got {len(seq.terms)}")
    return FpPoly(p, tuple(seq.terms))


def recurrence_annihilator(kappa: int, coeffs: Sequence[int], p: int) -> FpPoly:
    """S(X) = 1 - s_{k-1} X - ... - s_1 X^{k-1} - s_0 X^k.

    ``coeffs[i]`` is ``s_i`` in ``a_{n+k} = sum(s_i a_{n+i})``.
    """
    if kappa < 1:
        raise ValueError("recurrence order must be positive")
    if len(coeffs) != kappa:
        raise LengthMismatch(f"need {kappa} recurrence coefficients, got {len(coeffs)}")
    out = [0] * (kappa + 1)
    out[0] = 1
    for i, s in enumerate(coeffs):
        out[kappa - i] = -s
    return FpPoly(p, tuple(out))


def phi_coefficients(kappa: int) -> tuple[int, ...]:
    """Recurrence coefficients of a_{n+k} = a_n + a_{n+1}."""
    return (1, 1) + (0,) * (kappa - 2)


def annihilation_quotient(terms: Sequence[int], annihilator: FpPoly) -> tuple[bool, FpPoly]:
    """Divide ``S(X) P(X)`` by ``1 - X^{len(terms)}``.

    Returns ``(remainder is zero, quotient)``.
    """
    p = annihilator.p
    period = len(terms)
    prod = annihilator * FpPoly(p, tuple(terms))
    divisor = FpPoly(p, (1,) + (0,) * (period - 1) + (-1,))
    q, r = divmod(prod, divisor)
    return r.is_zero(), q


def verify_annihilation_identity(seq: PhiSequence) -> tuple[bool, FpPoly]:
    if not seq.periodic:
        raise NotPeriodic("annihilation identity needs a sequence of period p-1")
    s = recurrence_annihilator(seq.kappa, phi_coefficients(seq.kappa), seq.ctx.p)
    return annihilation_quotient(seq.terms, s)


@dataclass(frozen=True)
class CubicProfile:
    """Roots of X^3 - X - 1 in F_p.

    ``roots`` holds ``(root, multiplicity)`` pairs in ascending root order;
    ``labeled`` is ``(alpha, beta, gamma)`` in that same order when there are
    three distinct roots.
    """

    ctx: PrimeContext
    roots: tuple[tuple[int, int], ...]

    @property
    def rho(self) -> int:
        return len(self.roots)

    @property
    def distinct(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.roots)

    @property
    def labeled(self) -> tuple[int, int, int] | None:
        if self.rho != 3:
            return None
        a, b, c = self.distinct
        return a, b, c


def _multiplicity(f: FpPoly, r: int) -> int:
    m = 0
    g = f
    lin = FpPoly(f.p, (-r, 1))
    while not g.is_zero() and g(r) == 0:
        g = g // lin
        m += 1
    return m


def _split(g: FpPoly, found: list[int]) -> None:
    """Collect the roots of a squarefree ``g`` that splits into linear factors."""
    p = g.p
    if g.degree <= 0:
        return
    if g.degree == 1:
        found.append((-g[0] * pow(g[1], -1, p)) % p)
        return
    # Deterministic equal-degree splitting with shifts X + delta.
    for delta in range(p):
        h = FpPoly(p, (delta, 1)).powmod((p - 1) // 2, g) - 1
        d = poly_gcd(h, g)
        if 0 < d.degree < g.degree:
            _split(d, found)
            _split(g // d, found)
            return
    raise RuntimeError("root splitting failed")  # unreachable for odd p


def roots_by_scan(f: FpPoly) -> list[int]:
    return [x for x in range(f.p) if f(x) == 0]


def roots_by_gcd(f: FpPoly) -> list[int]:
    """Distinct roots of ``f`` in F_p through ``gcd(X^p - X, f)``."""
    p = f.p
    x = FpPoly(p, (0, 1))
    xp = x.powmod(p, f)
    g = poly_gcd(xp - x, f)
    found: list[int] = []
    _split(g, found)
    return sorted(found)


def cubic_roots(ctx: PrimeContext, scan_limit: int = SCAN_LIMIT) -> CubicProfile:
    f = cubic(ctx.p)
    rs = roots_by_scan(f) if ctx.p <= scan_limit else roots_by_gcd(f)
    return CubicProfile(ctx, tuple((r, _multiplicity(f, r)) for r in rs))
