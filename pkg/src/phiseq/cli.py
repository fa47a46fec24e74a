"""Command-line front end: ``phiseq roots | search | verify | table``.

Data goes to stdout (or ``--out``); progress and summaries go to stderr.

Exit codes: 0 success, 2 invalid input, 3 search budget exceeded,
4 I/O failure, 5 counterexample or inconsistent record.
"""

from __future__ import annotations

import os
import sys
import time

import click

from .errors import BadKappa, BudgetExceeded, NotPrime, PrimeOutOfRange, WrongRootCount
from .fp_core import get_context, is_primitive_root
from .phi_sequences import DEFAULT_STATE_BUDGET, exhaustive_search, guided_search_padovan, periodic_search
from .polyring import cubic_roots
from .report import FORMATS, format_csv, format_json, format_text, render_report, render_table
from .verifier import MODES, CampaignConfig, emit_table, run_campaign

EXIT_BUDGET = 3
EXIT_IO = 4
EXIT_COUNTEREXAMPLE = 5

format_option = click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)


def _prime(ctx, param, value):
    try:
        return get_context(value)
    except (NotPrime, PrimeOutOfRange) as e:
        raise click.BadParameter(str(e)) from e


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as e:
        click.echo(f"error: cannot write {out}: {e}", err=True)
        sys.exit(EXIT_IO)


@click.group()
def main():
    """Complete Phi_kappa-sequences over F_p."""


@main.command()
@click.option("--p", "pctx", type=int, required=True, callback=_prime, help="Prime 5 <= p < 2**31.")
@format_option
def roots(pctx, fmt):
    """Roots of X^3 - X - 1 mod p and which of them are primitive."""
    profile = cubic_roots(pctx)
    rows = [(pctx.p, profile.rho, r, m, is_primitive_root(r, pctx)) for r, m in profile.roots]
    if fmt == "json":
        click.echo(format_json({
            "p": pctx.p,
            "rho": profile.rho,
            "roots": [{"root": r, "multiplicity": m, "primitive": prim} for _, _, r, m, prim in rows],
            "padovan_primitive_roots": [r for *_, r, _, prim in rows if prim],
        }), nl=False)
        return
    cols = ("p", "rho", "root", "multiplicity", "primitive")
    click.echo(format_csv(cols, rows) if fmt == "csv" else format_text(cols, rows), nl=False)


@main.command()
@click.option("--p", "pctx", type=int, required=True, callback=_prime)
@click.option("--kappa", type=int, required=True)
@click.option("--mode", type=click.Choice(["exhaustive", "guided", "periodic"]), default="exhaustive", show_default=True)
@click.option("--budget", type=int, default=DEFAULT_STATE_BUDGET, show_default=True, help="Maximum states to enumerate.")
@format_option
def search(pctx, kappa, mode, budget, fmt):
    """List every complete Phi_kappa-sequence mod p."""
    try:
        if mode == "exhaustive":
            found = exhaustive_search(pctx, kappa, budget)
        elif mode == "periodic":
            found = periodic_search(pctx, kappa, budget)
        else:
            if kappa != 3:
                raise click.BadParameter("guided search is for kappa = 3", param_hint="--kappa")
            found = guided_search_padovan(pctx)
    except BadKappa as e:
        raise click.BadParameter(str(e), param_hint="--kappa") from e
    except WrongRootCount as e:
        raise click.UsageError(str(e)) from e
    except BudgetExceeded as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_BUDGET)
    cols = ("p", "kappa", "initial", "generator")
    rows = [(pctx.p, kappa, list(s.initial), s.generator) for s in found]
    if fmt == "json":
        click.echo(format_json({"p": pctx.p, "kappa": kappa, "mode": mode, "results": [
            {"initial": list(s.initial), "generator": s.generator} for s in found
        ]}), nl=False)
    else:
        click.echo(format_csv(cols, rows) if fmt == "csv" else format_text(cols, rows), nl=False)


def _progress(label: str):
    last = [time.monotonic()]

    def report(i, n):
        now = time.monotonic()
        if i == n or now - last[0] > 5:
            last[0] = now
            click.echo(f"{label}: {i}/{n} primes", err=True)

    return report


def _config(**kw) -> CampaignConfig:
    try:
        return CampaignConfig(**kw)
    except ValueError as e:
        raise click.UsageError(str(e)) from e


def _campaign(cfg: CampaignConfig, jobs: int, checkpoint, checkpoint_every: int):
    t0 = time.perf_counter()
    try:
        report = run_campaign(cfg, jobs=jobs, checkpoint=checkpoint, checkpoint_every=checkpoint_every,
                              progress=_progress(cfg.mode))
    except OSError as e:
        click.echo(f"error: checkpoint I/O failed: {e}", err=True)
        sys.exit(EXIT_IO)
    except ValueError as e:
        raise click.UsageError(str(e)) from e
    totals = ", ".join(f"{k}={v}" for k, v in report.totals.items())
    click.echo(f"{cfg.mode} [{cfg.lo}, {cfg.hi}]: {totals} ({time.perf_counter() - t0:.2f} s)", err=True)
    return report


jobs_option = click.option("--jobs", type=click.IntRange(min=1), default=lambda: os.cpu_count() or 1,
                           show_default="available CPUs", help="Worker processes.")


@main.command()
@click.argument("mode", type=click.Choice(MODES))
@click.option("--min", "lo", type=int, default=5, show_default=True)
@click.option("--max", "hi", type=int, default=1000, show_default=True)
@format_option
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report here instead of stdout.")
@jobs_option
@click.option("--checkpoint", type=click.Path(dir_okay=False), default=None, help="Resumable JSONL journal.")
@click.option("--checkpoint-every", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--budget", type=int, default=10**7, show_default=True, help="Maximum states per search.")
@click.option("--exhaustive-limit", type=int, default=10**5, show_default=True,
              help="Padovan: brute-force search up to this many states.")
@click.option("--guided-max", type=int, default=10**4, show_default=True,
              help="Padovan: guided uniqueness check up to this p.")
@click.option("--kappa-max", type=int, default=None, help="Conjecture: largest kappa tried.")
@click.option("--exceptional-only", is_flag=True, help="Padovan: report exceptional primes only.")
def verify(mode, lo, hi, fmt, out, jobs, checkpoint, checkpoint_every, budget, exhaustive_limit,
           guided_max, kappa_max, exceptional_only):
    """Run a verification campaign over the primes in [--min, --max]."""
    cfg = _config(
        mode=mode, lo=lo, hi=hi, state_budget=budget, exhaustive_limit=exhaustive_limit,
        guided_max=guided_max, exceptional_only=exceptional_only, kappa_max=kappa_max,
    )
    report = _campaign(cfg, jobs, checkpoint, checkpoint_every)
    _emit(render_report(report, fmt), out)
    bad = report.counterexamples
    if bad:
        for r in bad:
            click.echo(f"{r.status}: p={r.p} kappa={r.kappa} witnesses={r.witnesses} complete={r.complete}", err=True)
        sys.exit(EXIT_COUNTEREXAMPLE)


@main.command()
@click.argument("which", type=click.Choice(["5-2", "5-3"]))
@click.option("--min", "lo", type=int, default=5, show_default=True)
@click.option("--max", "hi", type=int, default=1000, show_default=True)
@format_option
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@jobs_option
@click.option("--match-paper", is_flag=True, help="Orient root pairs as in the published tables.")
def table(which, lo, hi, fmt, out, jobs, match_paper):
    """Root-pair order data (5-2) or exceptional primes (5-3)."""
    cfg = _config(
        mode="padovan", lo=lo, hi=hi, exhaustive_limit=0, guided_max=0,
        exceptional_only=which == "5-3",
    )
    report = _campaign(cfg, jobs, None, 50)
    cols, rows = emit_table(report, which, match_paper=match_paper)
    _emit(render_table(which, cols, rows, fmt), out)


if __name__ == "__main__":
    main()
