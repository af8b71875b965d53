import logging

import click

from verbclosure.commands.arithmetic import commands as arithmetic_commands
from verbclosure.commands.equations import commands as equation_commands
from verbclosure.commands.maps import commands as map_commands
from verbclosure.commands.verification import commands as verification_commands
from verbclosure.core.config import settings


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=settings.LOG_LEVEL,
    show_default=True,
)
def cli(log_level: str):
    """Exact arithmetic and equation tools for K, D∞, G and ℤ×D∞."""
    logging.basicConfig(
        level=log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


for command in arithmetic_commands + equation_commands + map_commands + verification_commands:
    cli.add_command(command)


def main() -> None:
    cli(prog_name="verbclosure")


if __name__ == "__main__":
    main()
