from typing import Optional, Tuple

import click

from verbclosure.commands.deps import (
    bound_options,
    emit,
    group_option,
    json_option,
    library_errors,
    parse_in,
)
from verbclosure.core.grammar import parse_word
from verbclosure.models.ball import Ball
from verbclosure.models.carrier import Carrier
from verbclosure.models.equation import Equation
from verbclosure.schemas.report import Report
from verbclosure.schemas.transfer import NielsenOut, TransferOut
from verbclosure.services.closure import brute_force_solve, dihedral_solve, transfer_solution
from verbclosure.services.freewords import nielsen_normalize
from verbclosure.services.groups import evaluate_word


def _arity(word: str, nvars: Optional[int]):
    return parse_word(word, nvars) if nvars else parse_word(word)


@click.command("solve")
@group_option(choices=("K", "D", "G"))
@json_option
@bound_options
@click.option("--word", "-w", required=True)
@click.option("--target", "-t", required=True)
@click.option("--vars", "nvars", type=click.IntRange(1, 9), default=None, help="Number of unknowns.")
@library_errors
def solve(group: Carrier, as_json: bool, lmax: int, kmax: int, word: str, target: str, nvars: Optional[int]):
    """First solution in the ball, in lexicographic order. NotFound is ball-relative."""
    w = _arity(word, nvars)
    eq = Equation(w, group, parse_in(group, target))
    ball = Ball(group, lmax, kmax)
    solution = brute_force_solve(eq, ball, w.arity)
    report = Report(
        command="solve",
        inputs={"group": group.value, "word": word, "target": target, "vars": w.arity, "lmax": lmax, "kmax": kmax},
        result={"status": "not_found" if solution is None else "solved",
                "solution": None if solution is None else [str(v) for v in solution],
                "ball": str(ball)},
    )
    emit(report, as_json, f"NotFound in {ball}" if solution is None else str(solution))


@click.command("dihedral-solve")
@json_option
@click.option("--kmax", type=click.IntRange(min=0), default=5, show_default=True)
@click.option("--word", "-w", required=True)
@click.option("--target", "-t", required=True)
@click.option("--vars", "nvars", type=click.IntRange(1, 9), default=None)
@library_errors
def dihedral(as_json: bool, kmax: int, word: str, target: str, nvars: Optional[int]):
    """Solve w = h over D∞ by the trivial / reflection / rotation cases."""
    w = _arity(word, nvars)
    eq = Equation(w, Carrier.D, parse_in(Carrier.D, target))
    answer = dihedral_solve(eq, Ball(Carrier.D, 0, kmax))
    report = Report(
        command="dihedral-solve",
        inputs={"word": word, "target": target, "vars": w.arity, "kmax": kmax},
        result={
            "case": answer.case,
            "searched": answer.searched,
            "status": "solved" if answer.found else "not_found",
            "solution": [str(v) for v in answer.values] if answer.found else None,
        },
    )
    if answer.certificate is not None:
        report.witness = {"certificate": answer.certificate.model_dump()}
        report.check("rotation-chain", answer.certificate.verify(), answer.certificate.title)
    if answer.found:
        value = evaluate_word(w, answer.values, Carrier.D)
        report.check("solution", value == eq.target, f"w evaluates to {value}")
    text = f"{answer.case}: " + (str(answer.values) if answer.found else f"NotFound in |k| ≤ {kmax}")
    emit(report, as_json, text)


@click.command("transfer")
@json_option
@click.option("--word", "-w", required=True)
@click.option("--assign", "-a", "assignments", multiple=True, required=True,
              help="G-value of the next variable, in order.")
@library_errors
def transfer(as_json: bool, word: str, assignments: Tuple[str, ...]):
    """Move a G-solution of w = h, h ∈ K, to a K-solution."""
    w = parse_word(word)
    values = [parse_in(Carrier.G, text) for text in assignments]
    result = transfer_solution(w, values)
    out = TransferOut.from_report(result)
    report = Report(command="transfer", inputs={"word": word, "assign": list(assignments)}, result=out.model_dump())
    report.check("verified", result.verified, f"w(K-solution) = {result.target}")
    for name, holds in result.bookkeeping:
        report.check(name, holds)
    emit(report, as_json)


@click.command("nielsen")
@json_option
@click.option("--word", "-w", required=True)
@click.option("--vars", "nvars", type=click.IntRange(1, 9), default=None)
@library_errors
def nielsen(as_json: bool, word: str, nvars: Optional[int]):
    """Normal form alpha(w) = x^m·u with u in the commutator subgroup."""
    w = _arity(word, nvars)
    m, u, alpha = nielsen_normalize(w)
    out = NielsenOut(m=m, u=str(u), alpha=str(alpha), moves=[str(move) for move in alpha.moves])
    report = Report(command="nielsen", inputs={"word": word, "vars": w.arity}, result=out.model_dump())
    emit(report, as_json)


commands = [solve, dihedral, transfer, nielsen]
