from typing import Optional

import click

from commands.common import (
    EXIT_FAIL,
    CommandError,
    check_cap,
    emit,
    kind_option,
    library_errors,
    output_option,
    settings_for,
)
from models.hilbert import SPoly
from models.responses import BettiListing, CountResponse, HilbertListing
from services.hilbert_enum import (
    count_betti_closed,
    count_hilbert_closed,
    count_hilbert_cm_bounded,
    enumerate_betti,
    enumerate_s,
)
from services.rendering import render_resolution


def enumeration_options(fn):
    fn = click.option("--workers", type=int, default=None, help="Worker processes for candidate checks (default HILBERT_WORKERS).")(fn)
    fn = click.option("--max-degree", type=int, default=None, help="Bound on deg s(t); required for Cohen-Macaulay Hilbert mode.")(fn)
    fn = click.option("--mode", type=click.Choice(["hilbert", "betti"]), default="hilbert", show_default=True)(fn)
    fn = click.option("--critical", is_flag=True, help="Critical modules instead of Cohen-Macaulay ones.")(fn)
    fn = click.option("--s", "s_text", default=None, help='s(t) for betti mode, e.g. "2".')(fn)
    fn = click.option("--eps", "epsilon", type=int, required=True, help="Normalized multiplicity epsilon.")(fn)
    fn = output_option(fn)
    fn = kind_option(fn)
    return fn


def _betti_s(mode: str, s_text: Optional[str]) -> Optional[SPoly]:
    if mode != "betti":
        return None
    if s_text is None:
        raise CommandError("--mode betti needs --s")
    return SPoly.parse(s_text)


@click.command("enumerate")
@enumeration_options
@click.pass_context
def enumerate_cmd(ctx, kind, output, epsilon, s_text, critical, mode, max_degree, workers):
    """List admissible s(t), or the Betti numbers of one Hilbert class."""
    settings = settings_for(ctx, kind=kind, output=output, workers=workers)
    params = settings.params
    with library_errors():
        check_cap(settings, epsilon)
        s = _betti_s(mode, s_text)
        if s is None:
            polys = enumerate_s(params, epsilon, critical, max_degree)
            payload = HilbertListing(
                kind=params.kind,
                epsilon=epsilon,
                critical=critical,
                max_degree=max_degree,
                polys=[list(p.coeffs) for p in polys],
                count=len(polys),
            )
            text = "\n".join(p.display() for p in polys)
        else:
            pairs = enumerate_betti(params, epsilon, s, critical, workers=settings.workers)
            payload = BettiListing(
                kind=params.kind,
                epsilon=epsilon,
                s=list(s.coeffs),
                critical=critical,
                resolutions=pairs,
                count=len(pairs),
            )
            text = "\n".join(render_resolution(pair) for pair in pairs)
    emit(settings, payload, text)


@click.command("count")
@enumeration_options
@click.option("--verify", is_flag=True, help="Re-count by enumeration and fail on disagreement.")
@click.pass_context
def count(ctx, kind, output, epsilon, s_text, critical, mode, max_degree, workers, verify):
    """Closed-form counts of Hilbert series or of Betti numbers per Hilbert class."""
    settings = settings_for(ctx, kind=kind, output=output, workers=workers)
    params = settings.params
    verified = None
    with library_errors():
        check_cap(settings, epsilon)
        s = _betti_s(mode, s_text)
        if s is not None:
            total = count_betti_closed(params, epsilon, s, critical)
            if verify:
                verified = total == len(enumerate_betti(params, epsilon, s, critical, workers=settings.workers))
        elif critical:
            total = count_hilbert_closed(params, epsilon)
            if verify:
                verified = total == len(enumerate_s(params, epsilon, True))
        else:
            if max_degree is None:
                raise CommandError("Cohen-Macaulay Hilbert counts need --max-degree")
            total = count_hilbert_cm_bounded(epsilon, max_degree)
            if verify:
                verified = total == len(enumerate_s(params, epsilon, False, max_degree))

    payload = CountResponse(
        kind=params.kind, epsilon=epsilon, mode=mode, critical=critical, count=total, verified=verified
    )
    emit(settings, payload, str(total))
    if verified is False:
        raise CommandError(f"closed form gives {total} but enumeration disagrees", "count-mismatch", EXIT_FAIL)
