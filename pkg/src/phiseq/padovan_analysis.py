"""Order machinery for complete Padovan sequences when X^3 - X - 1 splits.

For an ordered pair of distinct roots ``(alpha, beta)`` with ratio
``rho = alpha/beta`` of order ``N``, ``I_k`` collects the ``j`` in ``[0, k]``
with ``alpha**j * beta**(k-j) == 1`` and ``I'_k`` the mirrored set.
``k_min`` is the least ``k`` with ``I_k`` nonempty and
``k_min = j0 + j0' + ell * N``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadExponent, NoNonemptyIk, WrongRootCount
from .fp_core import PrimeContext, get_context, is_primitive_root, mod_inv, multiplicative_order
from .phi_sequences import PhiSequence, exhaustive_search, generate
from .polyring import CubicProfile, FpPoly, cubic_roots, roots_by_scan


def _require_three(profile: CubicProfile) -> tuple[int, int, int]:
    if profile.rho != 3:
        raise WrongRootCount(f"p={profile.ctx.p} has {profile.rho} distinct roots, need 3")
    return profile.labeled


def abc_coefficients(profile: CubicProfile, b: int, c: int) -> tuple[int, int, int]:
    """Coefficients with ``a_n = A alpha^n + B beta^n + C gamma^n`` for ``(1, b, c)``."""
    roots = _require_three(profile)
    ctx = profile.ctx
    p = ctx.p
    return tuple((r * r * b + r * c + 1) * mod_inv(2 * r + 3, ctx) % p for r in roots)


def closed_form(profile: CubicProfile, coeffs: tuple[int, int, int], n: int) -> int:
    p = profile.ctx.p
    return sum(k * pow(r, n, p) for k, r in zip(coeffs, profile.labeled)) % p


def power_sum(seq: PhiSequence, k: int) -> int:
    """``sum(a_n**k for n in 0..p-2)``; zero for every complete sequence."""
    p = seq.ctx.p
    if not 1 <= k <= p - 2:
        raise BadExponent(f"k must lie in [1, {p - 2}], got {k}")
    return sum(pow(a, k, p) for a in seq.terms) % p


def cubic_sum_formula(profile: CubicProfile, b: int, c: int) -> int:
    """-6ABC, the value the cubic power sum must take for initial state ``(1, b, c)``."""
    a_, b_, c_ = abc_coefficients(profile, b, c)
    return -6 * a_ * b_ * c_ % profile.ctx.p


def monomials_avoid_one(profile: CubicProfile) -> bool:
    """``alpha^i beta^j gamma^k != 1`` for every ``i+j+k = 3`` other than (1,1,1)."""
    al, be, ga = _require_three(profile)
    p = profile.ctx.p
    for i, j in itertools.product(range(4), repeat=2):
        k = 3 - i - j
        if k < 0 or (i, j, k) == (1, 1, 1):
            continue
        if pow(al, i, p) * pow(be, j, p) * pow(ga, k, p) % p == 1:
            return False
    return True


def symmetric_functions(profile: CubicProfile) -> tuple[int, int, int]:
    """``(e1, e2, e3)`` of the three roots; expected ``(0, p-1, 1)``."""
    al, be, ga = _require_three(profile)
    p = profile.ctx.p
    return ((al + be + ga) % p, (al * be + al * ga + be * ga) % p, al * be * ga % p)


def two_term_root(seq: PhiSequence, profile: CubicProfile) -> int | None:
    """A root g with ``a_n = -g a_{n-1} - a_{n-2}/g`` throughout the window, if any."""
    p = seq.ctx.p
    t = seq.terms
    for g in profile.distinct:
        ginv = mod_inv(g, seq.ctx)
        if all((t[n] + g * t[n - 1] + ginv * t[n - 2]) % p == 0 for n in range(2, len(t))):
            return g
    return None


def fibonacci_roots(ctx: PrimeContext) -> tuple[int, int] | None:
    """The two distinct roots of ``x^2 = x + 1``, ascending, if they exist in F_p."""
    rs = roots_by_scan(FpPoly(ctx.p, (-1, -1, 1)))
    return (rs[0], rs[1]) if len(rs) == 2 else None


def fibonacci_fourth_power(ctx: PrimeContext, b: int) -> tuple[int, int]:
    """``(sum a_n^4, -6 A^2 B^2)`` for the Fibonacci sequence ``(1, b, ...)``.

    The two agree for every ``b`` once ``p >= 7`` and ``x^2 - x - 1`` splits.
    """
    if ctx.p < 7:
        raise ValueError("the fourth-power identity needs p >= 7")
    roots = fibonacci_roots(ctx)
    if roots is None:
        raise WrongRootCount(f"x^2 - x - 1 does not split mod {ctx.p}")
    p = ctx.p
    al, be = roots
    d = mod_inv(al - be, ctx)
    a_ = (b - be) * d % p
    b_ = (b - al) * (p - d) % p
    seq = generate(ctx, 2, [1, b])
    lhs = sum(pow(x, 4, p) for x in seq.terms) % p
    return lhs, -6 * a_ * a_ * b_ * b_ % p


@dataclass(frozen=True)
class RatioOrder:
    alpha: int
    beta: int
    N: int


def ratio_orders(profile: CubicProfile) -> tuple[list[RatioOrder], int]:
    """Orders of all six root ratios and ``N_p``, the smallest of them."""
    roots = _require_three(profile)
    ctx = profile.ctx
    pairs = [
        RatioOrder(a, b, multiplicative_order(a * mod_inv(b, ctx), ctx))
        for a, b in itertools.permutations(roots, 2)
    ]
    return pairs, min(r.N for r in pairs)


def compute_I_k(alpha: int, beta: int, k: int, ctx: PrimeContext) -> tuple[frozenset[int], frozenset[int]]:
    """``(I_k, I'_k)`` by one pass over j with ``x_j = beta^k (alpha/beta)^j``."""
    p = ctx.p
    if alpha % p == 0 or beta % p == 0 or (alpha - beta) % p == 0:
        raise ValueError("alpha, beta must be distinct and nonzero")
    if not 1 <= k <= p - 2:
        raise BadExponent(f"k must lie in [1, {p - 2}], got {k}")
    ratio = alpha * mod_inv(beta, ctx) % p
    x = pow(beta, k, p)
    found = []
    for j in range(k + 1):
        if x == 1:
            found.append(j)
        x = x * ratio % p
    return frozenset(found), frozenset(k - j for j in found)


@dataclass(frozen=True)
class OrderProfile:
    p: int
    alpha: int
    beta: int
    N: int
    k_min: int
    j0: int
    j0_prime: int
    ell: int
    size: int
    # Order of alpha^N (= order of beta^N); nonempty I_k occur only at its multiples.
    k_step: int

    @property
    def step(self) -> int:
        """``(p - 1) / N``."""
        return (self.p - 1) // self.N

    @property
    def singleton(self) -> bool:
        return self.size == 1

    @property
    def strong_ok(self) -> bool:
        return self.p <= self.N**2 + 1

    @property
    def weak_ok(self) -> bool:
        return self.p < self.N**2 + self.j0 * self.N + 1

    @property
    def exceptional(self) -> bool:
        return not self.strong_ok and self.k_min == self.step

    def reversed(self) -> OrderProfile:
        return OrderProfile(
            self.p, self.beta, self.alpha, self.N, self.k_min,
            self.j0_prime, self.j0, self.ell, self.size, self.k_step,
        )


def k_min_profile(alpha: int, beta: int, ctx: PrimeContext) -> OrderProfile:
    """Fill ``N, k_min, j0, j0', ell`` for the ordered pair ``(alpha, beta)``.

    Every k is tested in O(1): ``I_k`` is nonempty iff ``beta^-k`` is among
    ``ratio^0 .. ratio^k``, tracked in a first-occurrence table that grows
    with k.
    """
    p = ctx.p
    ratio = alpha * mod_inv(beta, ctx) % p
    n_order = multiplicative_order(ratio, ctx)
    k_step = multiplicative_order(pow(alpha, n_order, p), ctx)
    binv = mod_inv(beta, ctx)
    first = {1: 0}
    r_pow = 1
    target = 1
    for k in range(1, p - 1):
        r_pow = r_pow * ratio % p
        first.setdefault(r_pow, k)
        target = target * binv % p
        if target in first:
            break
    else:
        raise NoNonemptyIk(f"no nonempty I_k for k <= p-2 at p={p}, pair ({alpha}, {beta})")
    k_min = k
    I, I_prime = compute_I_k(alpha, beta, k_min, ctx)
    j0, j0p = min(I), min(I_prime)
    ell, rem = divmod(k_min - j0 - j0p, n_order)
    if rem or ell < 0:
        raise AssertionError(f"k_min - j0 - j0' not a non-negative multiple of N at p={p}")
    return OrderProfile(p, alpha, beta, n_order, k_min, j0, j0p, ell, len(I), k_step)


@dataclass(frozen=True)
class Conditions:
    strong_ok: bool
    weak_ok: bool
    exceptional: bool
    uncovered: bool


def condition_checks(profile: OrderProfile) -> Conditions:
    """Strong and weak hypotheses for one ordered pair.

    ``exceptional`` means the strong bound fails while ``k_min = (p-1)/N``;
    ``uncovered`` additionally has the weak bound failing.
    """
    return Conditions(
        strong_ok=profile.strong_ok,
        weak_ok=profile.weak_ok,
        exceptional=profile.exceptional,
        uncovered=profile.exceptional and not profile.weak_ok,
    )


@dataclass(frozen=True)
class PairSummary:
    """An unordered root pair, listed with ``alpha < beta``."""

    alpha: int
    beta: int
    N: int
    k_min: int
    step: int
    j0: int
    j0_prime: int
    ell: int
    singleton: bool
    strong_ok: bool
    weak_ok: bool
    exceptional: bool
    # True when the pair contains a primitive root, i.e. hosts a power sequence.
    hosts_power: bool
    # Whether the remaining root is itself a primitive root.
    third_primitive: bool
    lemma_order_ok: bool

    @property
    def weak_covered(self) -> bool:
        return self.exceptional and self.weak_ok


def pair_summaries(profile: CubicProfile) -> list[PairSummary]:
    """One summary per unordered root pair.

    The weak bound allows either orientation of the pair, so it is judged
    with ``max(j0, j0')``.
    """
    roots = _require_three(profile)
    ctx = profile.ctx
    prim = {r: is_primitive_root(r, ctx) for r in roots}
    out = []
    for a, b in itertools.combinations(roots, 2):
        third = next(r for r in roots if r not in (a, b))
        op = k_min_profile(a, b, ctx)
        weak = op.weak_ok or op.reversed().weak_ok
        out.append(PairSummary(
            alpha=a, beta=b, N=op.N, k_min=op.k_min, step=op.step,
            j0=op.j0, j0_prime=op.j0_prime, ell=op.ell, singleton=op.singleton,
            strong_ok=op.strong_ok, weak_ok=weak, exceptional=op.exceptional,
            hosts_power=prim[a] or prim[b], third_primitive=prim[third],
            lemma_order_ok=op.k_step == op.step,
        ))
    return out


# --- p = 23 ------------------------------------------------------------------


@dataclass(frozen=True)
class P23Result:
    linear_relation: tuple[int, int]  # (slope, intercept) with c = slope*b + intercept
    cubic_coeffs: tuple[int, ...]  # sum of a_n^3 as a polynomial in b, low degree first
    cubic_solutions: tuple[int, ...]
    three_nine_complete: bool
    ten_primitive: bool
    complete_generators: tuple[int, ...]


def _linear_terms(p: int, count: int) -> list[tuple[int, int, int]]:
    """Each a_n as ``u + v b + w c`` for the Padovan recurrence started at (1, b, c)."""
    a = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    while len(a) < count:
        x, y = a[-3], a[-2]
        a.append(tuple((s + t) % p for s, t in zip(x, y)))
    return a


def p23_case() -> P23Result:
    """Rebuild the two-root case at p = 23 from the recurrence alone."""
    ctx = get_context(23)
    p = 23
    lin = _linear_terms(p, p)
    u, v, w = lin[p - 1]
    lin = lin[: p - 1]
    # a_{22} = 1  =>  w c = 1 - u - v b
    winv = mod_inv(w, ctx)
    slope = -v * winv % p
    intercept = (1 - u) * winv % p
    total = FpPoly(p)
    for uu, vv, ww in lin:
        term = FpPoly(p, ((uu + ww * intercept), (vv + ww * slope)))
        total = total + term * term * term
    sols = tuple(roots_by_scan(total))
    seq = generate(ctx, 3, [1, 3, 9])
    profile = cubic_roots(ctx)
    found = exhaustive_search(ctx, 3)
    return P23Result(
        linear_relation=(slope, intercept),
        cubic_coeffs=total.coeffs,
        cubic_solutions=sols,
        three_nine_complete=seq.complete,
        ten_primitive=is_primitive_root(10, ctx) and 10 in profile.distinct,
        complete_generators=tuple(s.generator for s in found),
    )
