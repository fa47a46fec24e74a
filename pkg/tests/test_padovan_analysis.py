from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from phiseq import published
from phiseq.errors import BadExponent, WrongRootCount
from phiseq.fp_core import get_context, is_primitive_root, primes_in_range
from phiseq.padovan_analysis import (
    abc_coefficients,
    closed_form,
    compute_I_k,
    condition_checks,
    cubic_sum_formula,
    fibonacci_fourth_power,
    fibonacci_roots,
    k_min_profile,
    monomials_avoid_one,
    p23_case,
    pair_summaries,
    power_sum,
    ratio_orders,
    symmetric_functions,
)
from phiseq.phi_sequences import generate
from phiseq.polyring import cubic_roots


def profile(p):
    return cubic_roots(get_context(p))


SPLIT_PRIMES = [p for p in primes_in_range(5, 10**4) if profile(p).rho == 3]


def test_split_prime_count():
    # primes up to 10^4 where X^3 - X - 1 splits, cross-checked by scanning
    assert SPLIT_PRIMES == [p for p in primes_in_range(5, 10**4) if len(oracles.cubic_roots(p)) == 3]
    assert SPLIT_PRIMES[:3] == [59, 101, 167]


# --- coefficients and power sums --------------------------------------------


def test_abc_power_sequence():
    prof = profile(101)
    assert pow(20, 2, 101) == 97
    assert abc_coefficients(prof, 20, 97) == (1, 0, 0)


@given(st.sampled_from([59, 101, 167, 173]), st.integers(0, 10**6), st.integers(0, 10**6))
def test_abc_reconstructs_initial_state(p, b, c):
    prof = profile(p)
    b, c = b % p, c % p
    coeffs = abc_coefficients(prof, b, c)
    seq = generate(prof.ctx, 3, [1, b, c])
    assert closed_form(prof, coeffs, 0) == 1
    assert [closed_form(prof, coeffs, n) for n in range(p - 1)] == list(seq.terms)


def test_abc_needs_three_roots():
    with pytest.raises(WrongRootCount):
        abc_coefficients(profile(23), 1, 1)


def test_power_sum_examples():
    seq = generate(get_context(7), 3, [1, 5, 4])
    assert power_sum(seq, 3) == 0
    assert sum(a**3 for a in seq.terms) == 441
    assert power_sum(seq, 1) == 0


def test_power_sum_bounds_at_p5():
    fib = generate(get_context(5), 2, [1, 3])
    # k = 4 = p - 1 lies outside [1, p - 2]; the raw sum is p - 1 = 4
    with pytest.raises(BadExponent):
        power_sum(fib, 4)
    assert sum(a**4 for a in fib.terms) % 5 == 4
    with pytest.raises(ValueError):
        fibonacci_fourth_power(get_context(5), 3)


def test_cubic_sum_identity_all_states():
    """sum a_n^3 = -6ABC for every (b, c), exhaustively at p = 59 and 101."""
    for p in (59, 101):
        prof = profile(p)
        assert monomials_avoid_one(prof)
        for b, c in itertools.product(range(p), repeat=2):
            t = generate(prof.ctx, 3, [1, b, c]).terms
            lhs = sum(x * x * x for x in t) % p
            assert lhs == cubic_sum_formula(prof, b, c), (p, b, c)


def test_fibonacci_fourth_power_identity():
    for p in primes_in_range(7, 200):
        c = get_context(p)
        if fibonacci_roots(c) is None:
            with pytest.raises(WrongRootCount):
                fibonacci_fourth_power(c, 1)
            continue
        for b in range(p):
            lhs, rhs = fibonacci_fourth_power(c, b)
            assert lhs == rhs, (p, b)


def test_root_identities():
    for p in SPLIT_PRIMES:
        prof = profile(p)
        assert symmetric_functions(prof) == (0, p - 1, 1)
        assert all((2 * r + 3) % p for r in prof.distinct)


# --- orders -----------------------------------------------------------------


def test_ratio_orders_examples():
    pairs, n_p = ratio_orders(profile(59))
    by_pair = {(r.alpha, r.beta): r.N for r in pairs}
    assert by_pair[(13, 42)] == by_pair[(42, 13)] == 29
    assert n_p == 29
    pairs, n_p = ratio_orders(profile(101))
    assert {20, 25} <= {r.N for r in pairs}
    assert len(pairs) == 6 and n_p == min(r.N for r in pairs)
    with pytest.raises(WrongRootCount):
        ratio_orders(profile(7))


def test_ratio_orders_symmetric():
    for p in SPLIT_PRIMES[:60]:
        by_pair = {(r.alpha, r.beta): r.N for r in ratio_orders(profile(p))[0]}
        assert all(by_pair[(a, b)] == by_pair[(b, a)] for a, b in by_pair)
        assert all(n > 3 for n in by_pair.values())


def test_compute_I_k_examples():
    c = get_context(59)
    assert compute_I_k(13, 42, 10, c) == ({7}, {3})
    assert compute_I_k(13, 42, 1, c) == (set(), set())


@settings(deadline=None)
@given(st.sampled_from(SPLIT_PRIMES[:40]), st.data())
def test_compute_I_k_matches_brute_force(p, data):
    a, b = data.draw(st.permutations(profile(p).distinct))[:2]
    k = data.draw(st.integers(1, p - 2))
    I, Ip = compute_I_k(a, b, k, get_context(p))
    assert I == oracles.I_k(a, b, k, p)
    assert Ip == {k - j for j in I}
    assert Ip == oracles.I_k(b, a, k, p)


def test_k_min_examples():
    op = k_min_profile(13, 42, get_context(59))
    assert (op.N, op.k_min, op.j0, op.j0_prime, op.ell, op.step) == (29, 10, 7, 3, 0, 2)
    op = k_min_profile(1114, 4251, get_context(5851))
    assert (op.N, op.k_min, op.j0, op.j0_prime, op.ell) == (39, 150, 4, 29, 3)
    op = k_min_profile(91411, 28406, get_context(98801))
    assert (op.N, op.k_min, op.j0, op.j0_prime, op.ell) == (52, 1900, 47, 33, 35)
    assert op.reversed().j0 == 33


def test_k_min_matches_brute_force():
    for p in SPLIT_PRIMES[:25]:
        for a, b in itertools.permutations(profile(p).distinct, 2):
            op = k_min_profile(a, b, get_context(p))
            assert op.k_min == oracles.k_min(a, b, p)
            assert op.N == oracles.order(a * oracles.inverse(b, p) % p, p)


def test_condition_examples():
    c307 = condition_checks(k_min_profile(157, 50, get_context(307)))
    assert (c307.strong_ok, c307.weak_ok, c307.exceptional, c307.uncovered) == (False, True, True, False)
    assert condition_checks(k_min_profile(13, 42, get_context(59))).strong_ok
    c5851 = condition_checks(k_min_profile(1114, 4251, get_context(5851)))
    assert c5851.exceptional and c5851.uncovered and not c5851.weak_ok


def test_lemma_predicates_up_to_10_4():
    """Order lemmas for every ordered root pair at every split prime <= 10^4."""
    for p in SPLIT_PRIMES:
        c = get_context(p)
        prof = profile(p)
        has_complete = any(is_primitive_root(r, c) for r in prof.distinct)
        _, n_p = ratio_orders(prof)
        for a, b in itertools.permutations(prof.distinct, 2):
            op = k_min_profile(a, b, c)
            I, Ip = compute_I_k(a, b, op.k_min, c)
            assert pow(a * pow(b, -1, p), op.N, p) == 1
            if has_complete:
                assert op.k_step == op.step, ("order of alpha^N", p, a, b)
            assert op.k_min % op.step == 0 or not has_complete, ("k multiple of (p-1)/N", p)
            assert op.k_min % op.k_step == 0
            assert (op.k_min - op.j0 - op.j0_prime) == op.ell * op.N and op.ell >= 0
            assert op.singleton == (len(I) == 1)
            if op.k_min < op.N + op.j0:
                assert I == {op.j0}
            if op.k_min > op.step:
                assert op.singleton
            if p <= n_p * n_p + 1:
                assert op.singleton
            assert min(I) == op.j0 and min(Ip) == op.j0_prime


def test_nonempty_I_k_only_at_multiples():
    for p in SPLIT_PRIMES[:12]:
        c = get_context(p)
        for a, b in itertools.permutations(profile(p).distinct, 2):
            op = k_min_profile(a, b, c)
            for k in range(1, p - 1):
                if compute_I_k(a, b, k, c)[0]:
                    assert k % op.k_step == 0


# --- tables -----------------------------------------------------------------


def _match(summary_rows, row):
    p, a, b, N, k_min, step, j0, j0p = row
    for s in summary_rows:
        if {s.alpha, s.beta} == {a, b}:
            return (s.N, s.k_min, s.step, {s.j0, s.j0_prime}) == (N, k_min, step, {j0, j0p})
    return False


@pytest.mark.parametrize("row", published.PAIR_TABLE, ids=lambda r: f"{r[0]}-{r[1]}-{r[2]}")
def test_pair_summaries_reproduce_table(row):
    assert _match(pair_summaries(profile(row[0])), row)


def test_pair_summary_flags_at_307():
    rows = {(s.alpha, s.beta): s for s in pair_summaries(profile(307))}
    s = rows[(50, 157)]
    assert s.exceptional and s.weak_ok and s.weak_covered and s.singleton
    assert not s.third_primitive and s.hosts_power and s.lemma_order_ok
    assert not rows[(50, 100)].exceptional


# --- p = 23 -----------------------------------------------------------------


def test_p23_case():
    r = p23_case()
    assert r.linear_relation == (13, 16)
    assert r.cubic_coeffs == (20, 0, 1, 10)
    assert r.cubic_solutions == (3, 10)
    assert not r.three_nine_complete
    assert r.ten_primitive
    assert r.complete_generators == (10,)
    assert 13 * 3 + 16 == 55 and 55 % 23 == 9
