from typing import Optional

import click

from commands.common import CommandError, emit, kind_option, library_errors, load_betti, output_option, settings_for
from models.hilbert import HilbertClass, SPoly
from models.responses import SeriesResponse
from services.hilbert_enum import class_char_poly, hilbert_class_of, s_to_hilbert
from services.rendering import render_classification, render_coefficients
from services.series import gk_and_multiplicity, series_from_resolution


@click.command("series")
@kind_option
@output_option
@click.option("--n-terms", type=int, default=None, help="Number of coefficients (default HILBERT_N_TERMS).")
@click.option("--eps", "epsilon", type=int, default=None, help="Normalized multiplicity epsilon.")
@click.option("--s", "s_text", default=None, help='Coefficients of s(t), e.g. "3,2,1".')
@click.option("--betti", default=None, help="Betti data as JSON or @file.")
@click.pass_context
def series(
    ctx: click.Context,
    kind: Optional[str],
    output: Optional[str],
    n_terms: Optional[int],
    epsilon: Optional[int],
    s_text: Optional[str],
    betti: Optional[str],
):
    """Hilbert series from (epsilon, s) or from Betti numbers, with its classification."""
    settings = settings_for(ctx, kind=kind, output=output, n_terms=n_terms)
    if (epsilon is None) == (betti is None):
        raise CommandError("give exactly one of --eps/--s or --betti")
    if betti is not None and s_text is not None:
        raise CommandError("--s belongs with --eps, not --betti")
    params = settings.params

    with library_errors():
        if epsilon is not None:
            s = SPoly.parse(s_text or "")
            hc = HilbertClass(params=params, epsilon=epsilon, s=s, critical=False)
            h = s_to_hilbert(hc, settings.n_terms)
            multiplicity = gk_and_multiplicity(params, class_char_poly(hc))
            shift = 0
        else:
            pair = load_betti(betti)
            h = series_from_resolution(params, pair, settings.n_terms)
            classified = hilbert_class_of(params, pair)
            hc, shift = classified.hilbert_class, classified.shift
            multiplicity = gk_and_multiplicity(params, class_char_poly(hc))

    coefficients = h.head(settings.n_terms)
    payload = SeriesResponse(
        kind=params.kind,
        offset=h.offset,
        coeffs=coefficients,
        trunc_order=h.trunc_order,
        epsilon=hc.epsilon,
        s=list(hc.s.coeffs),
        shift=shift,
        e=str(multiplicity.e),
        gkdim=multiplicity.gkdim,
    )
    text = "\n".join(
        [render_coefficients(coefficients), render_classification(hc.epsilon, hc.s, shift, multiplicity)]
    )
    emit(settings, payload, text)
