import difflib
import logging
import os
from typing import List, Optional

import click

from commands.common import EXIT_FAIL, CommandError, check_cap, emit, kind_option, library_errors, output_option, settings_for
from models.algebra import AlgebraKind, AlgebraParams
from models.hilbert import AppendixReport, EpsilonTable
from models.responses import TablesResponse
from services.hilbert_enum import appendix_tables
from services.rendering import render_appendix

logger = logging.getLogger(__name__)

GOLDEN_EPS_MAX = 4


def golden_path(golden_dir: str, kind: AlgebraKind) -> str:
    return os.path.join(golden_dir, f"appendix_{kind.value}.txt")


def _flatten(reports: List[AppendixReport]) -> List[EpsilonTable]:
    return [table for report in reports for table in report.tables]


@click.command("tables")
@kind_option
@output_option
@click.option("--eps-max", type=int, default=GOLDEN_EPS_MAX, show_default=True)
@click.option("--golden-check", is_flag=True, help="Diff against the shipped golden tables.")
@click.option("--workers", type=int, default=None, help="Worker processes for candidate checks (default HILBERT_WORKERS).")
@click.pass_context
def tables(
    ctx: click.Context,
    kind: Optional[str],
    output: Optional[str],
    eps_max: int,
    golden_check: bool,
    workers: Optional[int],
):
    """Hilbert series and critical resolutions for every epsilon up to --eps-max."""
    settings = settings_for(ctx, output=output, workers=workers)
    if golden_check and eps_max != GOLDEN_EPS_MAX:
        raise CommandError(f"golden tables cover epsilon <= {GOLDEN_EPS_MAX}")
    if kind is not None:
        kinds = [AlgebraKind(kind)]
    elif golden_check:
        kinds = list(AlgebraKind)
    else:
        kinds = [settings.kind]

    with library_errors():
        check_cap(settings, eps_max)
        reports = [
            appendix_tables(AlgebraParams.for_kind(k), eps_max, workers=settings.workers) for k in kinds
        ]
    rendered = [render_appendix(report) for report in reports]

    if not golden_check:
        emit(settings, TablesResponse(tables=_flatten(reports)), "\n".join(rendered).rstrip("\n"))
        return

    diffs: List[str] = []
    for report, text in zip(reports, rendered):
        path = golden_path(settings.golden_dir, report.kind)
        try:
            with open(path, encoding="utf-8") as handle:
                golden = handle.read()
        except OSError as e:
            raise CommandError(f"cannot read golden table {path}: {e.strerror}", "missing-golden")
        if golden == text:
            logger.info("%s matches", path)
            continue
        diffs.extend(
            difflib.unified_diff(
                golden.splitlines(keepends=True),
                text.splitlines(keepends=True),
                fromfile=path,
                tofile=f"generated ({report.kind.value})",
            )
        )
    match = not diffs
    summary = "golden tables match" if match else "".join(diffs).rstrip("\n")
    emit(settings, TablesResponse(tables=_flatten(reports), golden_match=match), summary)
    if not match:
        ctx.exit(EXIT_FAIL)
