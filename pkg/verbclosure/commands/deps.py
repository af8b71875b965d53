"""Shared options, report output and error conversion for the commands."""
import functools
import logging
from typing import Any, Callable, Optional

import click

from verbclosure.core.config import settings
from verbclosure.core.errors import VerbClosureError
from verbclosure.core.grammar import parse_element
from verbclosure.models.carrier import Carrier
from verbclosure.schemas.report import Report

logger = logging.getLogger(__name__)


class CommandError(click.ClickException):
    """A library error surfaced at the command line with its own exit code."""

    def __init__(self, error: VerbClosureError):
        super().__init__(str(error))
        self.exit_code = error.exit_code


def library_errors(fn: Callable) -> Callable:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except VerbClosureError as exc:
            logger.debug("command %s failed", fn.__name__, exc_info=True)
            raise CommandError(exc) from exc
    return wrapper


def _to_carrier(ctx, param, value: Optional[str]) -> Optional[Carrier]:
    return Carrier(value) if value is not None else None


def group_option(default: str = "K", choices=("K", "D", "G", "ZD")) -> Callable:
    return click.option(
        "--group", "-g",
        type=click.Choice(list(choices)),
        default=default,
        show_default=True,
        callback=_to_carrier,
        help="Group the operands live in.",
    )


json_option = click.option("--json", "as_json", is_flag=True, help="Print the JSON report.")


def bound_options(fn: Callable) -> Callable:
    fn = click.option("--kmax", type=click.IntRange(min=0), default=settings.SOLVE_KMAX, show_default=True,
                      help="Ball bound on a-exponents.")(fn)
    fn = click.option("--lmax", type=click.IntRange(min=0), default=settings.SOLVE_LMAX, show_default=True,
                      help="Ball bound on b-exponents.")(fn)
    return fn


def parse_in(carrier: Carrier, text: str):
    return parse_element(text, carrier)


def render_text(report: Report) -> str:
    lines = [f"{report.command}:"]
    for key, value in report.result.items():
        lines.append(f"  {key}: {_render_value(value)}")
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"  [{status}] {check.name}" + (f"  {check.detail}" if check.detail else ""))
    return "\n".join(lines)


def _render_value(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_render_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_render_value(v)}" for k, v in value.items()) + "}"
    return str(value)


def emit(report: Report, as_json: bool, text: Optional[str] = None) -> None:
    """Print the report and exit with its status (0 iff every check passed)."""
    click.echo(report.to_json() if as_json else (text if text is not None else render_text(report)))
    click.get_current_context().exit(report.exit_status)
