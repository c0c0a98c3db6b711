from typing import Optional

import click

from commands.common import EXIT_FAIL, emit, kind_option, library_errors, load_betti, output_option, settings_for
from models.betti import CheckForm, ShapeMode
from models.responses import CheckResponse
from services.betti_conditions import generic_shape, violation_cm, violation_critical
from services.rendering import render_shape, render_violation


@click.command("check")
@kind_option
@output_option
@click.option("--betti", required=True, help="Betti data as JSON or @file.")
@click.option("--critical", is_flag=True, help="Decide the critical conditions instead of Cohen-Macaulay.")
@click.option(
    "--form",
    type=click.Choice([f.value for f in CheckForm]),
    default=CheckForm.LADDER.value,
    show_default=True,
    help="Equivalent condition set to evaluate.",
)
@click.option(
    "--shape",
    type=click.Choice([m.value for m in ShapeMode]),
    default=None,
    help="On PASS, also print the generic presentation matrix shape.",
)
@click.pass_context
def check(
    ctx: click.Context,
    kind: Optional[str],
    output: Optional[str],
    betti: str,
    critical: bool,
    form: str,
    shape: Optional[str],
):
    """Decide whether Betti numbers occur for a (critical) Cohen-Macaulay module."""
    settings = settings_for(ctx, kind=kind, output=output)
    params = settings.params
    pair = load_betti(betti)
    decide = violation_critical if critical else violation_cm
    violation = decide(params, pair, CheckForm(form))

    grid = None
    if violation is None and shape is not None:
        with library_errors():
            grid = generic_shape(pair, ShapeMode(shape), params)

    payload = CheckResponse(
        kind=params.kind,
        critical=critical,
        form=CheckForm(form),
        verdict="FAIL" if violation else "PASS",
        violation=violation,
        shape=grid,
    )
    if violation:
        text = f"FAIL {render_violation(violation)}"
    else:
        text = "PASS" if grid is None else f"PASS\n{render_shape(grid)}"
    emit(settings, payload, text)
    if violation:
        ctx.exit(EXIT_FAIL)
