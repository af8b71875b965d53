from typing import Tuple

import click

from verbclosure.commands.deps import bound_options, emit, json_option, library_errors, render_text
from verbclosure.schemas.probe import ProbeConfig
from verbclosure.schemas.report import Report
from verbclosure.services.closure import no_retraction_certificate, probe_verbal_closedness, scan_involutions_K
from verbclosure.services.corpus import run_corpus
from verbclosure.services.selfcheck import SUITES, run_selfcheck


@click.command("probe")
@json_option
@click.option("--maxlen", type=click.IntRange(min=0), default=4, show_default=True, help="Word length bound.")
@click.option("--word", "-w", "words", multiple=True, help="Probe these words instead of all reduced words.")
@click.option("--g-lmax", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--g-kmax", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--k-lmax", type=click.IntRange(min=0), default=4, show_default=True)
@click.option("--k-kmax", type=click.IntRange(min=0), default=8, show_default=True)
@click.option("--witnesses", type=click.IntRange(min=0), default=8, show_default=True,
              help="Sample transfers kept per word.")
@library_errors
def probe(as_json: bool, maxlen: int, words: Tuple[str, ...], g_lmax: int, g_kmax: int,
          k_lmax: int, k_kmax: int, witnesses: int):
    """Transfer every G-solution with value in K and cross-check the K-ball oracle."""
    config = ProbeConfig(
        max_len=maxlen,
        words=list(words) or None,
        g_lmax=g_lmax,
        g_kmax=g_kmax,
        k_lmax=k_lmax,
        k_kmax=k_kmax,
        witnesses_per_word=witnesses,
    )
    emit(probe_verbal_closedness(config), as_json)


@click.command("certify-no-retraction")
@json_option
@click.option("--scan-bound", type=click.IntRange(min=0), default=10, show_default=True,
              help="Also scan the K-ball |l|, |k| ≤ N for involutions.")
def certify(as_json: bool, scan_bound: int):
    """Certificate that no retraction G → K exists."""
    cert = no_retraction_certificate()
    involutions = scan_involutions_K(scan_bound)
    report = Report(
        command="certify-no-retraction",
        inputs={"scan_bound": scan_bound},
        result={"title": cert.title, "steps": len(cert.steps),
                "involutions": [str(g) for g in involutions]},
        witness={"certificate": cert.model_dump()},
    )
    report.check("certificate", cert.verify(), "every step holds and cites only earlier steps")
    report.check("involution-scan", [str(g) for g in involutions] == ["1"], f"|l|, |k| ≤ {scan_bound}")
    lines = [f"{cert.title}:"]
    for step in cert.steps:
        cited = f" (from {', '.join(str(d + 1) for d in step.depends_on)})" if step.depends_on else ""
        lines.append(f"  {step.index + 1}. [{'ok' if step.passed else 'FAILED'}] {step.claim}{cited}")
    emit(report, as_json, "\n".join(lines) + "\n" + render_text(report))


@click.command("run-corpus")
@json_option
@bound_options
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@library_errors
def corpus(as_json: bool, lmax: int, kmax: int, path: str):
    """Solve every equation of a JSON-lines corpus."""
    emit(run_corpus(path, lmax, kmax), as_json)


@click.command("selfcheck")
@json_option
@click.option("--profile", type=click.Choice(["quick", "full"]), default="quick", show_default=True)
@click.option("--suite", "suites", multiple=True, type=click.Choice(list(SUITES)),
              help="Run only these suites.")
def selfcheck(as_json: bool, profile: str, suites: Tuple[str, ...]):
    """Run the invariant suites at the profile's bounds."""
    report = run_selfcheck(profile, suites)
    lines = []
    for name, outcome in report.result["suites"].items():
        lines.append(f"{'PASS' if outcome['passed'] else 'FAIL'}  {name}  ({outcome['checks']} checks)")
    failed = [check for check in report.checks if not check.passed]
    lines.extend(f"  failed: {check.name}  {check.detail}" for check in failed)
    emit(report, as_json, "\n".join(lines))


commands = [probe, certify, corpus, selfcheck]
