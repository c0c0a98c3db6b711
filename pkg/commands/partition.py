from typing import Optional

import click

from commands.common import EXIT_FAIL, emit, output_option, settings_for
from models.responses import PartitionIdentityResponse
from services.hilbert_enum import partition_identity
from services.rendering import render_partition_rows


@click.command("partition-identity")
@output_option
@click.option("--m-max", type=click.IntRange(min=1), default=20, show_default=True)
@click.pass_context
def partition_identity_cmd(ctx: click.Context, output: Optional[str], m_max: int):
    """Check that distinct-part partitions with parts below m number 2^(m-1) in total."""
    settings = settings_for(ctx, output=output)
    rows = partition_identity(m_max)
    ok = all(row.ok for row in rows)
    emit(settings, PartitionIdentityResponse(m_max=m_max, rows=rows, ok=ok), render_partition_rows(rows))
    if not ok:
        ctx.exit(EXIT_FAIL)
