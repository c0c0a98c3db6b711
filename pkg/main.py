import logging
import sys

import click

from commands import check, divisor, enumeration, partition, schema, series, tables
from commands.common import CommandError
from config import load_config


@click.group()
@click.option("--log-level", default=None, help="Logging level on stderr (default HILBERT_LOG_LEVEL).")
@click.pass_context
def cli(ctx: click.Context, log_level):
    """Hilbert series and Betti numbers of Cohen-Macaulay curve modules over 3-dimensional regular algebras."""
    try:
        settings = load_config().with_overrides(log_level=log_level)
    except ValueError as e:
        raise CommandError(f"invalid HILBERT_* setting: {e}", "invalid-config")
    logging.basicConfig(
        level=settings.log_level.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = settings


cli.add_command(series.series)
cli.add_command(check.check)
cli.add_command(enumeration.enumerate_cmd)
cli.add_command(enumeration.count)
cli.add_command(tables.tables)
cli.add_command(partition.partition_identity_cmd)
cli.add_command(divisor.divisor)
cli.add_command(schema.schema)


if __name__ == "__main__":
    cli()
