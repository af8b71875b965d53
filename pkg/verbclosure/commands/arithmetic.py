from typing import Tuple

import click

from verbclosure.commands.deps import emit, group_option, json_option, library_errors, parse_in
from verbclosure.core.grammar import parse_word
from verbclosure.models.carrier import Carrier
from verbclosure.schemas.report import Report
from verbclosure.services import groups


@click.command("mul")
@group_option()
@json_option
@click.argument("operands", nargs=-1, required=True)
@library_errors
def mul(group: Carrier, as_json: bool, operands: Tuple[str, ...]):
    """Multiply elements left to right and print the normal form."""
    values = [parse_in(group, text) for text in operands]
    result = values[0]
    for value in values[1:]:
        result = groups.mul(result, value)
    report = Report(command="mul", inputs={"group": group.value, "operands": list(operands)},
                    result={"value": str(result)})
    emit(report, as_json, str(result))


@click.command("inv")
@group_option()
@json_option
@click.argument("element")
@library_errors
def inv(group: Carrier, as_json: bool, element: str):
    """Inverse of an element."""
    result = groups.inv(parse_in(group, element))
    report = Report(command="inv", inputs={"group": group.value, "element": element}, result={"value": str(result)})
    emit(report, as_json, str(result))


@click.command("pow")
@group_option()
@json_option
@click.option("--exponent", "-n", type=int, required=True, help="Integer exponent; may be negative.")
@click.argument("element")
@library_errors
def power(group: Carrier, as_json: bool, exponent: int, element: str):
    """g^n by the closed form of the group."""
    result = groups.pow(parse_in(group, element), exponent)
    report = Report(command="pow", inputs={"group": group.value, "element": element, "exponent": exponent},
                    result={"value": str(result)})
    emit(report, as_json, str(result))


@click.command("eval")
@group_option()
@json_option
@click.option("--word", "-w", required=True, help="Word in x, y, z, t (or x1..x9).")
@click.option("--assign", "-a", "assignments", multiple=True, help="Value of the next variable, in order.")
@library_errors
def evaluate(group: Carrier, as_json: bool, word: str, assignments: Tuple[str, ...]):
    """Evaluate a word on a tuple of elements."""
    w = parse_word(word)
    values = [parse_in(group, text) for text in assignments]
    result = groups.evaluate_word(w, values, group)
    report = Report(command="eval", inputs={"group": group.value, "word": word, "assign": list(assignments)},
                    result={"value": str(result)})
    emit(report, as_json, str(result))


@click.command("order")
@group_option()
@json_option
@click.argument("element")
@library_errors
def order(group: Carrier, as_json: bool, element: str):
    """Order of an element; "inf" when it has infinite order."""
    n = groups.order_of(parse_in(group, element))
    report = Report(command="order", inputs={"group": group.value, "element": element}, result={"order": n})
    emit(report, as_json, "inf" if n is None else str(n))


@click.command("sqrt")
@json_option
@click.argument("element")
@library_errors
def sqrt(as_json: bool, element: str):
    """Unique square root in K of an element of ⟨a², b⁴⟩."""
    root = groups.unique_sqrt_K(parse_in(Carrier.K, element))
    report = Report(command="sqrt", inputs={"element": element}, result={"root": str(root)})
    emit(report, as_json, str(root))


commands = [mul, inv, power, evaluate, order, sqrt]
