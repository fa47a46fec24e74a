"""Phi_kappa-sequences: generation, completeness, primitive roots and searches.

A Phi_kappa-sequence over F_p has ``a_0 = 1`` and ``a_{n+k} = a_n + a_{n+1}``.
It is stored as its window ``a_0 .. a_{p-2}`` plus a periodicity verdict;
that window is the canonical form, since periodic sequences are determined by
it and non-periodic candidates are only ever treated one-sided.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import BadInitial, BadKappa, BudgetExceeded, NotPeriodic, NotPrimitiveRoot, WrongRootCount
from .fp_core import PrimeContext, is_primitive_root, mod_inv
from .polyring import CubicProfile, cubic_roots

DEFAULT_STATE_BUDGET = 10**9


@dataclass(frozen=True)
class PhiSequence:
    ctx: PrimeContext
    kappa: int
    initial: tuple[int, ...]
    terms: tuple[int, ...]
    periodic: bool
    complete: bool

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def generator(self) -> int | None:
        """``b`` if ``a_n = b**n`` on the stored window, else None."""
        p = self.ctx.p
        b = self.terms[1]
        x = 1
        for t in self.terms:
            if t != x:
                return None
            x = x * b % p
        return b


def check_kappa(ctx: PrimeContext, kappa: int) -> None:
    if not 2 <= kappa <= ctx.p - 2:
        raise BadKappa(f"kappa must lie in [2, {ctx.p - 2}], got {kappa}")


def generate(ctx: PrimeContext, kappa: int, initial: Sequence[int]) -> PhiSequence:
    """Run the recurrence from ``initial`` and judge periodicity and completeness."""
    check_kappa(ctx, kappa)
    p = ctx.p
    init = tuple(int(x) % p for x in initial)
    if len(init) != kappa:
        raise BadInitial(f"need {kappa} initial values, got {len(init)}")
    if init[0] != 1:
        raise BadInitial("a_0 must be 1")
    a = list(init)
    for n in range(p - 1 + kappa - len(a)):
        a.append((a[n] + a[n + 1]) % p)
    terms = tuple(a[: p - 1])
    periodic = tuple(a[p - 1 : p - 1 + kappa]) == init
    complete = periodic and 0 not in terms and len(set(terms)) == p - 1
    return PhiSequence(ctx, kappa, init, terms, periodic, complete)


def power_sequence(ctx: PrimeContext, kappa: int, b: int) -> PhiSequence:
    """The Phi_kappa-sequence started from ``(1, b, ..., b**(k-1))``."""
    return generate(ctx, kappa, [pow(b, i, ctx.p) for i in range(kappa)])


def kappa_of(ctx: PrimeContext, b: int) -> int | None:
    """The k in [2, p-2] with ``b**k = b + 1``, if any (unique for primitive b)."""
    p = ctx.p
    target = (b + 1) % p
    x = b * b % p
    for k in range(2, p - 1):
        if x == target:
            return k
        x = x * b % p
    return None


def from_primitive_root(ctx: PrimeContext, b: int) -> tuple[int, PhiSequence]:
    b = int(b) % ctx.p
    if not is_primitive_root(b, ctx):
        raise NotPrimitiveRoot(f"{b} is not a primitive root mod {ctx.p}")
    kappa = kappa_of(ctx, b)
    if kappa is None:
        raise RuntimeError(f"no kappa for primitive root {b} mod {ctx.p}")
    return kappa, power_sequence(ctx, kappa, b)


def phi_kappa_primitive_roots(ctx: PrimeContext, kappa: int, profile: CubicProfile | None = None) -> list[int]:
    """Primitive roots ``b`` with ``b**k = b + 1``, ascending."""
    check_kappa(ctx, kappa)
    p = ctx.p
    if kappa == 3:
        profile = profile or cubic_roots(ctx)
        cands = list(profile.distinct)
    else:
        cands = [b for b in range(2, p) if pow(b, kappa, p) == (b + 1) % p]
    return [b for b in cands if is_primitive_root(b, ctx)]


def _to_sequences(ctx: PrimeContext, kappa: int, states: np.ndarray) -> list[PhiSequence]:
    rows = sorted({tuple(int(x) for x in row) for row in states})
    return [generate(ctx, kappa, row) for row in rows]


def exhaustive_search(ctx: PrimeContext, kappa: int, state_budget: int = DEFAULT_STATE_BUDGET) -> list[PhiSequence]:
    """Every complete Phi_kappa-sequence, by trying all ``p**(k-1)`` initial states."""
    check_kappa(ctx, kappa)
    required = ctx.p ** (kappa - 1)
    if required > state_budget:
        raise BudgetExceeded(required, state_budget)
    return _to_sequences(ctx, kappa, _kernels.exhaustive(ctx.p, kappa))


def guided_candidates(ctx: PrimeContext, profile: CubicProfile) -> np.ndarray:
    """Initial states ``(1, b, -g*b - 1/g)`` for each root g and each b != 0.

    These are exactly the states whose closed form has a vanishing coefficient
    on one of the three roots.
    """
    p = ctx.p
    b = np.arange(1, p, dtype=np.int64)
    blocks = []
    for g in profile.distinct:
        ginv = mod_inv(g, ctx)
        c = (-(g * b) - ginv) % p
        blocks.append(np.stack([np.ones_like(b), b, c], axis=1))
    return np.concatenate(blocks)


def guided_search_padovan(ctx: PrimeContext, profile: CubicProfile | None = None) -> list[PhiSequence]:
    """All complete Padovan sequences when X^3 - X - 1 has three roots.

    Any complete sequence has a vanishing coefficient in its closed form, so
    only ``3 (p - 1)`` candidates need checking.
    """
    profile = profile or cubic_roots(ctx)
    if profile.rho != 3:
        raise WrongRootCount(f"guided search needs three roots, p={ctx.p} has {profile.rho}")
    states = guided_candidates(ctx, profile)
    mask = _kernels.check_candidates(ctx.p, 3, states)
    return _to_sequences(ctx, 3, states[mask])


# --- periodic-subspace search -------------------------------------------------


def _mat_mul(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def _mat_pow(m: list[list[int]], e: int, p: int) -> list[list[int]]:
    k = len(m)
    result = [[int(i == j) for j in range(k)] for i in range(k)]
    while e:
        if e & 1:
            result = _mat_mul(result, m, p)
        m = _mat_mul(m, m, p)
        e >>= 1
    return result


def shift_matrix(kappa: int, p: int) -> list[list[int]]:
    """Maps the state ``(a_n, ..., a_{n+k-1})`` to ``(a_{n+1}, ..., a_{n+k})``."""
    m = [[0] * kappa for _ in range(kappa)]
    for i in range(kappa - 1):
        m[i][i + 1] = 1
    m[kappa - 1][0] = 1
    m[kappa - 1][1] = 1
    return m


def solve_affine(rows: list[list[int]], rhs: list[int], p: int) -> tuple[list[int], list[list[int]]] | None:
    """Solutions of ``rows @ x = rhs`` over F_p as ``(particular, null basis)``.

    Returns None when the system is inconsistent.
    """
    n = len(rows[0])
    aug = [[x % p for x in r] + [y % p] for r, y in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][col], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == len(aug):
            break
    if any(all(x == 0 for x in row[:n]) and row[n] for row in aug):
        return None
    particular = [0] * n
    for i, col in enumerate(pivots):
        particular[col] = aug[i][n]
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[free] = 1
        for i, col in enumerate(pivots):
            v[col] = -aug[i][free] % p
        basis.append(v)
    return particular, basis


def periodic_states(ctx: PrimeContext, kappa: int) -> tuple[list[int], list[list[int]]] | None:
    """Affine description of all initial states with ``a_0 = 1`` and period dividing p-1."""
    check_kappa(ctx, kappa)
    p = ctx.p
    t = _mat_pow(shift_matrix(kappa, p), p - 1, p)
    for i in range(kappa):
        t[i][i] = (t[i][i] - 1) % p
    first = [1] + [0] * (kappa - 1)
    return solve_affine(t + [first], [0] * kappa + [1], p)


def periodic_search(ctx: PrimeContext, kappa: int, state_budget: int = DEFAULT_STATE_BUDGET) -> list[PhiSequence]:
    """Every complete Phi_kappa-sequence, by enumerating only the periodic states.

    Completeness forces period p-1, so the initial state is a fixed point of
    the (p-1)-step shift; the fixed points form an affine space that is tiny
    unless X^k - X - 1 has many roots in F_p.
    """
    sol = periodic_states(ctx, kappa)
    if sol is None:
        return []
    particular, basis = sol
    p = ctx.p
    required = p ** len(basis)
    if required > state_budget:
        raise BudgetExceeded(required, state_budget)
    base = np.array(particular, dtype=np.int64)
    states = base[None, :].copy()
    for v in basis:
        vec = np.array(v, dtype=np.int64)
        t = np.arange(p, dtype=np.int64)
        states = ((states[:, None, :] + t[None, :, None] * vec[None, None, :]) % p).reshape(-1, kappa)
    mask = _kernels.check_candidates(p, kappa, states)
    return _to_sequences(ctx, kappa, states[mask])


def periodic_dimension(ctx: PrimeContext, kappa: int) -> int | None:
    """Dimension of the periodic affine space (None if empty)."""
    sol = periodic_states(ctx, kappa)
    return None if sol is None else len(sol[1])


# --- conjugation and the half-kappa cases ----------------------------------


def conjugate(seq: PhiSequence) -> PhiSequence:
    """The sequence ``a_{p-1-n}``, a Phi_{p-k}-sequence."""
    if not seq.periodic:
        raise NotPeriodic("conjugation needs a sequence of period p-1")
    p = seq.ctx.p
    reversed_terms = (seq.terms[0],) + tuple(reversed(seq.terms[1:]))
    kappa = p - seq.kappa
    out = generate(seq.ctx, kappa, reversed_terms[:kappa])
    if out.terms != reversed_terms:
        raise RuntimeError("reversed sequence does not satisfy the conjugate recurrence")
    return out


@dataclass(frozen=True)
class HalfKappa:
    kappa: int
    b_forced: int
    exists_complete: bool
    conjugate_kappa: int
    conjugate_b: int


def half_kappa_analysis(ctx: PrimeContext) -> HalfKappa:
    """The forced generators for k = (p-1)/2 and, by conjugation, k = (p+1)/2."""
    p = ctx.p
    b = p - 2
    return HalfKappa(
        kappa=(p - 1) // 2,
        b_forced=b,
        exists_complete=is_primitive_root(b, ctx),
        conjugate_kappa=(p + 1) // 2,
        conjugate_b=(p - 1) // 2,
    )
