"""JSON-lines equation corpus runner."""
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import orjson
from pydantic import ValidationError

from verbclosure.core.errors import CorpusLineError, VerbClosureError
from verbclosure.core.grammar import parse_element, parse_word
from verbclosure.models.ball import Ball
from verbclosure.models.carrier import Carrier
from verbclosure.models.equation import Equation
from verbclosure.schemas.corpus import CorpusLine
from verbclosure.schemas.report import Report
from verbclosure.services.closure import brute_force_solve, dihedral_solve, transfer_solution
from verbclosure.services.maps import decompose_K

logger = logging.getLogger(__name__)


def decode_line(raw: Union[str, bytes]) -> CorpusLine:
    try:
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        return CorpusLine.model_validate(orjson.loads(raw))
    except UnicodeDecodeError as exc:
        raise CorpusLineError(f"line is not valid UTF-8: {exc.reason} at byte {exc.start}") from exc
    except orjson.JSONDecodeError as exc:
        raise CorpusLineError(f"invalid JSON: {exc}") from exc
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(str(p) for p in e['loc']) or 'line'}: {e['msg']}" for e in exc.errors())
        raise CorpusLineError(problems) from exc


def solve_line(line: CorpusLine, lmax: int, kmax: int) -> Dict[str, Any]:
    carrier = Carrier(line.group)
    word = parse_word(line.word, line.vars)
    target = parse_element(line.target, carrier)
    eq = Equation(word, carrier, target)
    entry: Dict[str, Any] = {"equation": str(eq)}

    if carrier is Carrier.D:
        answer = dihedral_solve(eq, Ball(Carrier.D, 0, kmax))
        entry["case"] = answer.case
        entry["searched"] = answer.searched
        solution = answer.values
    else:
        ball = Ball(carrier, lmax, kmax)
        entry["ball"] = str(ball)
        solution = brute_force_solve(eq, ball, line.vars)

    if solution is None:
        entry["status"] = "not_found"
        entry["solution"] = None
        return entry

    entry["status"] = "solved"
    entry["solution"] = [str(v) for v in solution]
    if carrier is Carrier.G and decompose_K(target) is not None:
        transfer = transfer_solution(word, solution)
        entry["k_solution"] = [str(v) for v in transfer.k_solution]
        entry["verified"] = transfer.verified
    return entry


def run_corpus(path: Union[str, Path], lmax: int = 2, kmax: int = 2) -> Report:
    """
    One entry per non-blank line, in file order. NotFound is a result; a
    line that cannot be decoded, parsed or solved is an error entry and
    fails the `lines` check.
    """
    path = Path(path)
    report = Report(command="run-corpus", inputs={"path": str(path), "lmax": lmax, "kmax": kmax})
    entries = []
    counts = {"lines": 0, "solved": 0, "not_found": 0, "errors": 0}

    for number, raw in enumerate(path.read_bytes().splitlines(), 1):
        if not raw.strip():
            continue
        counts["lines"] += 1
        error: Optional[VerbClosureError] = None
        try:
            entry = solve_line(decode_line(raw), lmax, kmax)
        except VerbClosureError as exc:
            error = exc
            logger.info("corpus line %d rejected: %s", number, exc)
            entry = {"status": "error", "error": exc.name, "detail": exc.detail}
        entry["line"] = number
        if error is None:
            counts[entry["status"]] += 1
        else:
            counts["errors"] += 1
        entries.append(entry)

    report.result = {"summary": counts, "entries": entries}
    report.check("lines", counts["errors"] == 0, f"{counts['errors']} of {counts['lines']} lines rejected")
    unverified = [e["line"] for e in entries if e.get("verified") is False]
    report.check("transfers", not unverified, "transfers verified" if not unverified else f"lines {unverified}")
    return report
