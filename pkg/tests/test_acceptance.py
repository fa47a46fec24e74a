"""Acceptance criteria, each checked at its stated tolerance.

Every check records one ``PASS``/``FAIL`` line; the lines are printed as they
happen and repeated in the pytest terminal summary.  Run directly with
``python tests/test_acceptance.py`` or as part of ``pytest``.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import time

import pytest
from click.testing import CliRunner

from conftest import ACCEPTANCE_LINES
from phiseq import published
from phiseq.cli import main
from phiseq.fp_core import get_context
from phiseq.padovan_analysis import p23_case
from phiseq.phi_sequences import generate, power_sequence
from phiseq.polyring import verify_annihilation_identity
from phiseq.verifier import verify_conjecture, verify_fibonacci

from test_padovan_analysis import test_lemma_predicates_up_to_10_4 as lemma_suite
from test_padovan_analysis import test_root_identities as root_identity_suite
from test_phi_sequences import test_conjugation_involution_and_transfer as conjugation_suite
from test_phi_sequences import test_guided_equals_exhaustive_up_to_500 as guided_suite
from test_phi_sequences import test_power_sums_vanish_for_complete_sequences as power_sum_suite


def record(label: str, ok: bool, detail: str = "") -> bool:
    line = f"criterion {label}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def cli(*args) -> tuple[str, float, int]:
    t0 = time.perf_counter()
    r = CliRunner().invoke(main, [str(a) for a in args])
    return r.stdout, time.perf_counter() - t0, r.exit_code


def csv_rows(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def fmt_set(s) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


@pytest.fixture(scope="module")
def padovan_run():
    """``verify padovan --min 7 --max 1000`` as CSV, with its wall time."""
    out, dt, code = cli("verify", "padovan", "--min", 7, "--max", 1000, "--format", "csv", "--jobs", 1)
    assert code == 0
    return out, dt


def test_criterion_1_single_root_list(padovan_run):
    out, dt = padovan_run
    got = {int(r["p"]) for r in csv_rows(out) if r["rho"] in ("1", "2") and r["admits_complete"] == "1"}
    want = set(published.SINGLE_ROOT_PRIMES)
    same = got == want
    fast = dt < 5
    detail = f"{len(got)} primes vs {len(want)} listed, {dt:.2f} s"
    if not same:
        detail += f"; recomputed only {fmt_set(got - want)}, listed only {fmt_set(want - got)}"
    record("1 (fewer than three roots, p < 1000)", same and fast, detail)
    assert fast, f"runtime {dt:.2f} s"
    assert same, detail


def test_criterion_2_three_root_list_and_table(padovan_run):
    out, dt = padovan_run
    got = {int(r["p"]) for r in csv_rows(out) if r["rho"] == "3" and r["admits_complete"] == "1"}
    same = got == set(published.THREE_ROOT_PRIMES)
    table, dt_table, code = cli("table", "5-2", "--min", 7, "--max", 1000, "--format", "csv", "--jobs", 1)
    emitted = [tuple(int(v) for v in r.values()) for r in csv_rows(table)]

    def present(row):
        p, a, b, N, k_min, step, j0, j0p = row
        return any(
            e[0] == p and {e[1], e[2]} == {a, b} and (e[3], e[4], e[5]) == (N, k_min, step) and {e[6], e[7]} == {j0, j0p}
            for e in emitted
        )

    missing = [r for r in published.PAIR_TABLE if not present(r)]
    total = dt + dt_table
    ok = same and not missing and total < 30 and code == 0
    record(
        "2 (three roots, p < 1000, pair table)", ok,
        f"{len(got)} primes, {len(published.PAIR_TABLE) - len(missing)}/{len(published.PAIR_TABLE)} rows, {total:.2f} s",
    )
    assert same and not missing and total < 30


@pytest.fixture(scope="module")
def exceptional_run():
    out, dt, code = cli("verify", "padovan", "--max", 100000, "--exceptional-only", "--format", "json", "--jobs", 1)
    assert code == 0
    return json.loads(out), dt


def test_criterion_3_exceptional(exceptional_run):
    data, dt = exceptional_run
    recs = {r["p"]: r for r in data["records"]}
    want = set(published.EXCEPTIONAL_PRIMES)

    # 3a: published values for each listed prime, j0/j0' in either orientation
    bad_values = []
    for p, N, k_min, j0, j0p, ell in published.EXCEPTIONAL_TABLE:
        pairs = recs.get(p, {}).get("pairs", [])
        if not any(
            s["exceptional"] and (s["N"], s["k_min"], s["ell"]) == (N, k_min, ell) and {s["j0"], s["j0_prime"]} == {j0, j0p}
            for s in pairs
        ):
            bad_values.append(p)
    ok_a = record("3a (published N, k_min, j0, j0', ell)", not bad_values, f"mismatched {fmt_set(bad_values)}")

    # 3b: weak-bound coverage among the listed primes
    covered = {p for p in want if recs.get(p, {}).get("weak_covered")}
    ok_b = record("3b (weak-bound coverage)", covered == set(published.WEAK_COVERED_PRIMES), f"covered {fmt_set(covered)}")

    # 3c: guided uniqueness for all listed primes within 30 minutes
    statuses = {p: recs.get(p, {}).get("status") for p in want}
    ok_c = record(
        "3c (uniqueness confirmed, < 1800 s)",
        all(s == "exceptional-verified" for s in statuses.values()) and dt < 1800,
        f"{dt:.1f} s",
    )

    # 3d: exact prime set
    got = set(recs)
    ok_d = record(
        "3d (exceptional prime set)", got == want,
        f"recomputed {fmt_set(got)}; not listed {fmt_set(got - want)}" if got != want else fmt_set(got),
    )
    record("3 (exceptional primes < 10^5)", ok_a and ok_b and ok_c and ok_d)
    assert ok_a and ok_b and ok_c
    assert ok_d, f"recomputed {fmt_set(got)} != listed {fmt_set(want)}"


def test_criterion_4_p23():
    r = p23_case()
    ok = (
        r.linear_relation == (13, 16)
        and set(r.cubic_solutions) == {3, 10}
        and not r.three_nine_complete
        and r.ten_primitive
    )
    record("4 (p = 23)", ok, f"c = {r.linear_relation[0]}b + {r.linear_relation[1]}, solutions {set(r.cubic_solutions)}")
    assert ok


def test_criterion_5_fibonacci_sweep():
    t0 = time.perf_counter()
    rep = verify_fibonacci(5, 1000)
    dt = time.perf_counter() - t0
    exact = all(r.method == "exhaustive" and r.complete == r.witnesses for r in rep.records)
    ok = exact and not rep.counterexamples and dt < 10
    record("5 (Fibonacci sweep p <= 1000)", ok, f"{len(rep.records)} primes, {len(rep.counterexamples)} counterexamples, {dt:.2f} s")
    assert ok


def test_criterion_6_conjecture_slice():
    rep = verify_conjecture(5, 31, state_budget=10**7, periodic_kappa_max=0)
    needed = {(p, k) for p in (5, 7, 11, 13, 17, 19, 23, 29, 31) for k in range(2, p - 1) if p ** (k - 1) <= 10**7}
    done = {(r.p, r.kappa) for r in rep.records if r.method == "exhaustive" and r.status == "verified"}
    ok = needed <= done and not rep.counterexamples
    record("6 (conjecture, p <= 31, <= 10^7 states)", ok, f"{len(done & needed)}/{len(needed)} (p, kappa) verified")
    assert ok


def _annihilation_suite():
    checked = 0
    for mode, kappas in (("fibonacci", (2,)), ("padovan", (3,))):
        out, _, _ = cli("verify", mode, "--max", 1000, "--format", "csv", "--jobs", 1)
        for row in csv_rows(out):
            p = int(row["p"])
            for b in filter(None, row["complete"].split(";")):
                seq = power_sequence(get_context(p), kappas[0], int(b))
                holds, _ = verify_annihilation_identity(seq)
                assert holds, (p, b)
                checked += 1
    for r in verify_conjecture(5, 31, state_budget=10**6).records:
        for b in r.complete or []:
            assert verify_annihilation_identity(power_sequence(get_context(r.p), r.kappa, b))[0]
            checked += 1
    # a generic periodic sequence satisfies the identity too
    assert verify_annihilation_identity(generate(get_context(23), 3, [1, 3, 9]))[0]
    return checked


@pytest.mark.parametrize(
    "label, suite",
    [
        ("7a (root symmetric functions, p <= 10^4)", root_identity_suite),
        ("7b (order lemmas on all pairs, p <= 10^4)", lemma_suite),
        ("7c (annihilation identity, p <= 1000)", _annihilation_suite),
        ("7d (conjugation, p <= 500)", conjugation_suite),
        ("7e (power sums, p <= 500)", power_sum_suite),
        ("7f (guided = exhaustive, p <= 500)", guided_suite),
    ],
    ids=["roots", "lemmas", "annihilation", "conjugation", "power-sums", "guided"],
)
def test_criterion_7_property_suites(label, suite):
    try:
        suite()
    except AssertionError as e:
        record(label, False, str(e)[:120])
        raise
    record(label, True)


def test_criterion_8_determinism():
    args = ("verify", "padovan", "--min", 7, "--max", 1000, "--format", "csv")
    one, _, c1 = cli(*args, "--jobs", 1)
    eight, _, c8 = cli(*args, "--jobs", 8)
    ok = one == eight and c1 == c8 == 0 and len(one) > 0
    record("8 (jobs 1 vs 8 byte-identical CSV)", ok, f"{len(one)} bytes")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
