"""Campaigns that check complete Phi_kappa-sequences across prime ranges.

Each prime is an independent unit of work.  A worker returns the records for
one prime; the parent process writes them to an optional JSONL journal and
sorts everything by ``(p, kappa)`` before building the report, so the report
does not depend on the number of workers.

Statuses:

``verified``              the complete sequences found are exactly the power
                          sequences of the Phi_kappa-primitive roots
``exceptional-verified``  same, at a prime with an exceptional root pair
``witness-only``          witnesses computed, uniqueness not machine-verified
``counterexample``        a complete sequence that is not ``b**n`` for a witness b
``inconsistent``          a witness whose power sequence was not confirmed
``skipped:<reason>``      no search within budget
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from pathlib import Path

from .errors import BudgetExceeded
from .fp_core import PrimeContext, get_context, primes_in_range
from .padovan_analysis import PairSummary, fibonacci_fourth_power, fibonacci_roots, pair_summaries, ratio_orders
from .phi_sequences import (
    PhiSequence,
    conjugate,
    exhaustive_search,
    guided_search_padovan,
    half_kappa_analysis,
    periodic_search,
    phi_kappa_primitive_roots,
    power_sequence,
)
from .polyring import CubicProfile, cubic_roots
from . import published

MODES = ("fibonacci", "padovan", "conjecture", "half")
BAD_STATUSES = ("counterexample", "inconsistent")
JOURNAL_VERSION = 1


@dataclass
class CampaignConfig:
    mode: str
    lo: int = 5
    hi: int = 1000
    # Largest state count any single search may enumerate.
    state_budget: int = 10**7
    # Padovan: brute force only up to this many states; exact structured searches take over above it.
    exhaustive_limit: int = 10**5
    # Padovan with three roots: guided uniqueness check up to this p (exceptional primes always).
    guided_max: int = 10**4
    exceptional_only: bool = False
    kappa_max: int | None = None
    # Periodic-subspace search builds a kappa x kappa matrix power; keep kappa modest.
    periodic_kappa_max: int = 40

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.lo > self.hi:
            raise ValueError(f"empty range [{self.lo}, {self.hi}]")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerificationRecord:
    p: int
    kappa: int
    family: str
    status: str
    method: str
    # Phi_kappa-primitive roots b; each gives the complete sequence b**n.
    witnesses: list[int] = field(default_factory=list)
    # a_1 of every complete sequence found by search (None when no search ran).
    complete: list[int] | None = None
    rho: int | None = None
    roots: list[int] = field(default_factory=list)
    n_p: int | None = None
    pairs: list[PairSummary] = field(default_factory=list)
    exceptional: bool = False
    weak_covered: bool = False
    checks: dict[str, bool] = field(default_factory=dict)
    note: str = ""
    elapsed: float = field(default=0.0, compare=False)

    @property
    def complete_count(self) -> int | None:
        return None if self.complete is None else len(self.complete)

    @property
    def admits_complete(self) -> bool:
        return bool(self.witnesses) or bool(self.complete)

    def to_dict(self, with_elapsed: bool = False) -> dict:
        d = {
            "p": self.p,
            "kappa": self.kappa,
            "family": self.family,
            "status": self.status,
            "method": self.method,
            "witnesses": list(self.witnesses),
            "complete": None if self.complete is None else list(self.complete),
            "complete_count": self.complete_count,
            "rho": self.rho,
            "roots": list(self.roots),
            "n_p": self.n_p,
            "pairs": [asdict(s) for s in self.pairs],
            "exceptional": self.exceptional,
            "weak_covered": self.weak_covered,
            "checks": dict(sorted(self.checks.items())),
            "note": self.note,
        }
        if with_elapsed:
            d["elapsed"] = self.elapsed
        return d

    @classmethod
    def from_dict(cls, d: dict) -> VerificationRecord:
        d = dict(d)
        d.pop("complete_count", None)
        d["pairs"] = [PairSummary(**s) for s in d.get("pairs", [])]
        return cls(**d)


@dataclass
class CampaignReport:
    config: CampaignConfig
    records: list[VerificationRecord]
    primes_scanned: int

    @property
    def mode(self) -> str:
        return self.config.mode

    @property
    def totals(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for r in self.records:
            key = "skipped" if r.status.startswith("skipped") else r.status
            counts[key] = counts.get(key, 0) + 1
        return {
            "primes_scanned": self.primes_scanned,
            "records": len(self.records),
            "with_complete": sum(r.admits_complete for r in self.records),
            "exceptional": sum(r.exceptional for r in self.records),
            **{f"status_{k}": v for k, v in sorted(counts.items())},
        }

    @property
    def counterexamples(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.status in BAD_STATUSES]

    @property
    def elapsed(self) -> float:
        return sum(r.elapsed for r in self.records)

    def primes_where(self, pred) -> list[int]:
        return sorted({r.p for r in self.records if pred(r)})

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "range": [self.config.lo, self.config.hi],
            "config": self.config.to_dict(),
            "totals": self.totals,
            "records": [r.to_dict() for r in self.records],
        }


# --- per-prime work -----------------------------------------------------------


def _judge(ctx: PrimeContext, kappa: int, witnesses: list[int], found: list[PhiSequence] | None) -> str:
    for b in witnesses:
        if not power_sequence(ctx, kappa, b).complete:
            return "inconsistent"
    if found is None:
        return "witness-only"
    wit = set(witnesses)
    if any(s.generator not in wit for s in found):
        return "counterexample"
    if {s.generator for s in found} != wit:
        return "inconsistent"
    return "verified"


def _generic_search(ctx: PrimeContext, kappa: int, cfg: CampaignConfig) -> tuple[str, list[PhiSequence] | None]:
    """Exhaustive search within budget, else the periodic subspace when it is small."""
    p = ctx.p
    if p ** (kappa - 1) <= cfg.state_budget:
        return "exhaustive", exhaustive_search(ctx, kappa, cfg.state_budget)
    if kappa <= cfg.periodic_kappa_max:
        try:
            return "periodic", periodic_search(ctx, kappa, cfg.state_budget)
        except BudgetExceeded:
            pass
    return "none", None


def _record(ctx, kappa, family, witnesses, method, found, **extra) -> VerificationRecord:
    status = _judge(ctx, kappa, witnesses, found)
    complete = None if found is None else sorted(s.terms[1] for s in found)
    return VerificationRecord(
        p=ctx.p, kappa=kappa, family=family, status=status, method=method,
        witnesses=witnesses, complete=complete, **extra,
    )


def _fibonacci_prime(p: int, cfg: CampaignConfig) -> list[VerificationRecord]:
    ctx = get_context(p)
    witnesses = phi_kappa_primitive_roots(ctx, 2)
    found = exhaustive_search(ctx, 2, cfg.state_budget)
    checks = {}
    if p >= 7 and fibonacci_roots(ctx) is not None:
        # A complete sequence has vanishing fourth power sum, forcing A*B = 0.
        checks["fourth_power"] = all(
            fibonacci_fourth_power(ctx, s.terms[1]) == (0, 0) for s in found
        ) and len(set(fibonacci_fourth_power(ctx, 2))) == 1
    return [_record(ctx, 2, "fibonacci", witnesses, "exhaustive", found, checks=checks)]


def _padovan_exceptional(profile: CubicProfile, witnesses: list[int]) -> tuple[list[PairSummary], int, bool, bool]:
    pairs = pair_summaries(profile)
    _, n_p = ratio_orders(profile)
    exc = [s for s in pairs if s.exceptional]
    exceptional = bool(witnesses) and bool(exc)
    weak = exceptional and all(s.weak_ok for s in exc)
    return pairs, n_p, exceptional, weak


def _padovan_prime(p: int, cfg: CampaignConfig) -> list[VerificationRecord]:
    ctx = get_context(p)
    profile = cubic_roots(ctx)
    witnesses = phi_kappa_primitive_roots(ctx, 3, profile)
    extra = {"rho": profile.rho, "roots": list(profile.distinct)}
    exceptional = False
    if profile.rho == 3:
        pairs, n_p, exceptional, weak = _padovan_exceptional(profile, witnesses)
        extra.update(pairs=pairs, n_p=n_p, exceptional=exceptional, weak_covered=weak)
    if cfg.exceptional_only and not exceptional:
        return []

    if p * p <= min(cfg.state_budget, cfg.exhaustive_limit):
        method, found = "exhaustive", exhaustive_search(ctx, 3, cfg.state_budget)
    elif profile.rho == 0:
        # No root means the annihilator has no linear factor; nothing can be complete.
        method, found = "no-root", []
    elif profile.rho < 3:
        method, found = "periodic", periodic_search(ctx, 3, cfg.state_budget)
    elif p <= cfg.guided_max or exceptional:
        method, found = "guided", guided_search_padovan(ctx, profile)
    else:
        method, found = "witness", None
    rec = _record(ctx, 3, "padovan", witnesses, method, found, **extra)
    if rec.status == "verified" and exceptional:
        rec.status = "exceptional-verified"
    if rec.status == "witness-only":
        rec.note = "uniqueness not machine-verified"
    return [rec]


def _conjecture_prime(p: int, cfg: CampaignConfig) -> list[VerificationRecord]:
    ctx = get_context(p)
    top = p - 2 if cfg.kappa_max is None else min(p - 2, cfg.kappa_max)
    out = []
    for kappa in range(2, top + 1):
        witnesses = phi_kappa_primitive_roots(ctx, kappa)
        method, found = _generic_search(ctx, kappa, cfg)
        rec = _record(ctx, kappa, "conjecture", witnesses, method, found)
        if found is None:
            rec.status = "skipped:budget"
            rec.note = f"{p}^{kappa - 1} states exceed budget {cfg.state_budget}"
        out.append(rec)
    return out


def _half_prime(p: int, cfg: CampaignConfig) -> list[VerificationRecord]:
    ctx = get_context(p)
    h = half_kappa_analysis(ctx)
    forced = {h.kappa: h.b_forced, h.conjugate_kappa: h.conjugate_b}
    conj_ok = True
    if h.exists_complete:
        seq = power_sequence(ctx, h.kappa, h.b_forced)
        twin = conjugate(seq)
        conj_ok = seq.complete and twin.complete and twin.generator == h.conjugate_b
    out = []
    for kappa in sorted(forced):
        witnesses = phi_kappa_primitive_roots(ctx, kappa)
        expected = [forced[kappa]] if h.exists_complete else []
        method, found = _generic_search(ctx, kappa, cfg)
        checks = {"forced_generator": witnesses == expected, "conjugation": conj_ok}
        rec = _record(ctx, kappa, "half", witnesses, method if found is not None else "witness", found, checks=checks)
        if not all(checks.values()):
            rec.status = "inconsistent"
        elif rec.status == "witness-only":
            rec.note = "uniqueness not machine-verified"
        out.append(rec)
    return out


_WORKERS = {
    "fibonacci": _fibonacci_prime,
    "padovan": _padovan_prime,
    "conjecture": _conjecture_prime,
    "half": _half_prime,
}


def run_prime(p: int, cfg: CampaignConfig) -> list[VerificationRecord]:
    t0 = time.perf_counter()
    recs = _WORKERS[cfg.mode](p, cfg)
    dt = time.perf_counter() - t0
    for r in recs:
        r.elapsed = dt / len(recs)
    return recs


def _run_prime_dicts(p: int, cfg: CampaignConfig) -> tuple[int, list[dict]]:
    return p, [r.to_dict(with_elapsed=True) for r in run_prime(p, cfg)]


# --- journal ------------------------------------------------------------------


class Journal:
    """Line-delimited JSON: a header with the config, then one line per finished prime."""

    def __init__(self, path: str | os.PathLike, cfg: CampaignConfig, every: int = 50):
        self.path = Path(path)
        self.cfg = cfg
        self.every = max(1, every)
        self._pending: list[str] = []

    def _header(self) -> dict:
        return {"journal": JOURNAL_VERSION, "config": self.cfg.to_dict()}

    def load(self) -> dict[int, list[VerificationRecord]]:
        if not self.path.exists():
            return {}
        done: dict[int, list[VerificationRecord]] = {}
        with self.path.open() as fh:
            lines = fh.read().splitlines()
        if not lines:
            return {}
        if json.loads(lines[0]) != self._header():
            raise ValueError(f"checkpoint {self.path} was written with a different configuration")
        for line in lines[1:]:
            try:
                entry = json.loads(line)
            except json.JSONDecodeError:
                break  # torn final line from an interrupted run
            done[entry["p"]] = [VerificationRecord.from_dict(d) for d in entry["records"]]
        return done

    def open(self, resume: bool) -> None:
        if not resume or not self.path.exists() or self.path.stat().st_size == 0:
            with self.path.open("w") as fh:
                fh.write(json.dumps(self._header()) + "\n")

    def add(self, p: int, records: list[dict]) -> None:
        self._pending.append(json.dumps({"p": p, "records": records}))
        if len(self._pending) >= self.every:
            self.flush()

    def flush(self) -> None:
        if not self._pending:
            return
        with self.path.open("a") as fh:
            fh.write("\n".join(self._pending) + "\n")
        self._pending.clear()


# --- campaigns ----------------------------------------------------------------


def run_campaign(
    cfg: CampaignConfig,
    jobs: int = 1,
    checkpoint: str | os.PathLike | None = None,
    checkpoint_every: int = 50,
    progress=None,
) -> CampaignReport:
    """Run ``cfg`` over every prime in ``[max(lo, 5), hi]``."""
    primes = primes_in_range(max(cfg.lo, 5), cfg.hi) if cfg.hi >= 5 else []
    journal = Journal(checkpoint, cfg, checkpoint_every) if checkpoint else None
    done = journal.load() if journal else {}
    if journal:
        journal.open(resume=bool(done))
    todo = [p for p in primes if p not in done]

    work = partial(_run_prime_dicts, cfg=cfg)
    if jobs > 1 and len(todo) > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        chunk = max(1, len(todo) // (jobs * 8))
        results = pool.map(work, todo, chunksize=chunk)
    else:
        pool = None
        results = map(work, todo)
    try:
        for i, (p, dicts) in enumerate(results, 1):
            if journal:
                journal.add(p, dicts)
            done[p] = [VerificationRecord.from_dict(d) for d in dicts]
            if progress:
                progress(i, len(todo))
    finally:
        if journal:
            journal.flush()
        if pool:
            pool.shutdown()

    primeset = set(primes)
    records = [r for p in sorted(done) if p in primeset for r in done[p]]
    records.sort(key=lambda r: (r.p, r.kappa))
    return CampaignReport(cfg, records, len(primes))


def verify_fibonacci(lo: int = 5, hi: int = 1000, **kw) -> CampaignReport:
    return run_campaign(CampaignConfig("fibonacci", lo, hi, **_cfg(kw)), **_run(kw))


def verify_padovan(lo: int = 5, hi: int = 1000, **kw) -> CampaignReport:
    return run_campaign(CampaignConfig("padovan", lo, hi, **_cfg(kw)), **_run(kw))


def verify_conjecture(lo: int = 5, hi: int = 31, **kw) -> CampaignReport:
    return run_campaign(CampaignConfig("conjecture", lo, hi, **_cfg(kw)), **_run(kw))


def verify_half_kappa(lo: int = 5, hi: int = 1000, **kw) -> CampaignReport:
    return run_campaign(CampaignConfig("half", lo, hi, **_cfg(kw)), **_run(kw))


_RUN_KEYS = ("jobs", "checkpoint", "checkpoint_every", "progress")


def _cfg(kw: dict) -> dict:
    return {k: v for k, v in kw.items() if k not in _RUN_KEYS}


def _run(kw: dict) -> dict:
    return {k: v for k, v in kw.items() if k in _RUN_KEYS}


# --- tables -------------------------------------------------------------------

PAIR_COLUMNS = ("p", "alpha", "beta", "N", "k_min", "p_minus_1_over_N", "j0", "j0_prime")
EXCEPTIONAL_COLUMNS = ("p", "N", "k_min", "j0", "j0_prime", "ell")


def _oriented(p: int, s: PairSummary, match_paper: bool) -> tuple[int, int, int, int]:
    """``(alpha, beta, j0, j0')`` with alpha < beta, or in the published orientation."""
    if match_paper and published.pair_orientation(p, s.alpha, s.beta) == (s.beta, s.alpha):
        return s.beta, s.alpha, s.j0_prime, s.j0
    return s.alpha, s.beta, s.j0, s.j0_prime


def emit_table(report: CampaignReport, which: str, match_paper: bool = False) -> tuple[tuple[str, ...], list[tuple]]:
    """Columns and rows of the root-pair table (``5-2``) or the exceptional table (``5-3``).

    ``5-2`` has one row per unordered root pair at each prime with three roots
    and a complete sequence; ``5-3`` one row per exceptional pair.
    """
    if report.mode != "padovan":
        raise ValueError("tables are built from padovan campaigns")
    which = which.removeprefix("example-")
    rows: list[tuple] = []
    if which == "5-2":
        for r in report.records:
            if r.rho != 3 or not r.admits_complete:
                continue
            for s in r.pairs:
                a, b, j0, j0p = _oriented(r.p, s, match_paper)
                rows.append((r.p, a, b, s.N, s.k_min, s.step, j0, j0p))
        return PAIR_COLUMNS, rows
    if which == "5-3":
        for r in report.records:
            if not r.exceptional:
                continue
            for s in r.pairs:
                if not s.exceptional:
                    continue
                j0, j0p = s.j0, s.j0_prime
                if match_paper and published.exceptional_flip(r.p, s.N, j0, j0p):
                    j0, j0p = j0p, j0
                rows.append((r.p, s.N, s.k_min, j0, j0p, s.ell))
        return EXCEPTIONAL_COLUMNS, rows
    raise ValueError(f"unknown table {which!r}; expected 5-2 or 5-3")
