import click

from verbclosure.commands.deps import emit, json_option, library_errors, parse_in
from verbclosure.models.carrier import Carrier
from verbclosure.schemas.report import Report
from verbclosure.services import maps


@click.command("phi")
@json_option
@click.option("--inverse", is_flag=True, help="Read a ℤ×D∞ pair and map it back into K.")
@click.argument("element")
@library_errors
def phi(as_json: bool, inverse: bool, element: str):
    """Φ(g) = (deg g, f(g)), or its inverse on the fibred product."""
    if inverse:
        z = parse_in(Carrier.ZD, element)
        value = maps.phi_inv_on_K(z)
        result = {"value": str(value), "in_G": str(maps.embed_K(value))}
    else:
        g = parse_in(Carrier.G, element)
        z = maps.phi(g)
        result = {"value": str(z), "deg": maps.deg_hom(g), "f": str(maps.f_hom(g)),
                  "in_fibred_product": maps.in_fibred_product(z)}
    report = Report(command="phi", inputs={"element": element, "inverse": inverse}, result=result)
    emit(report, as_json, result["value"])


@click.command("retract")
@json_option
@click.argument("element")
@library_errors
def retract(as_json: bool, element: str):
    """ρ(g) for g in the index-two subgroup Φ⁻¹(Φ(K))."""
    value = maps.rho_retract(parse_in(Carrier.G, element))
    report = Report(command="retract", inputs={"element": element}, result={"value": str(value)})
    emit(report, as_json, str(value))


commands = [phi, retract]
