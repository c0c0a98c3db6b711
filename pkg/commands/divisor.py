import click

from commands.common import CommandError, emit, kind_option, library_errors, load_json, output_option, settings_for
from models.algebra import AlgebraParams
from models.divisor import CurveDescriptor, FormalDivisor, PointModel, divisor_json
from models.responses import DivisorResponse
from services import divisor_calc
from services.rendering import render_divisor, render_point


def _divisor(text: str) -> FormalDivisor:
    data = load_json(text)
    with library_errors():
        return FormalDivisor.model_validate(data)


def _point(text: str) -> PointModel:
    try:
        x, y = (int(part) for part in text.split(","))
    except ValueError:
        raise CommandError(f'a point is written "x,y", got {text!r}', "invalid-point")
    return PointModel(x=x, y=y)


@click.group("divisor")
def divisor():
    """Formal divisor bookkeeping on the point model Z^2 of E, sigma = translation by (0, 1)."""


@divisor.command("degree")
@output_option
@click.option("--div", "div_text", required=True, help="Divisor as [[x, y, mult], ...] or @file.")
@click.pass_context
def degree_cmd(ctx, output, div_text):
    settings = settings_for(ctx, output=output)
    value = divisor_calc.degree(_divisor(div_text))
    emit(settings, DivisorResponse(operation="degree", value=value), str(value))


@divisor.command("sum")
@output_option
@click.option("--div", "div_text", required=True)
@click.pass_context
def sum_cmd(ctx, output, div_text):
    settings = settings_for(ctx, output=output)
    point = divisor_calc.group_sum(_divisor(div_text))
    emit(settings, DivisorResponse(operation="sum", point=point.as_pair()), render_point(point))


@divisor.command("equiv")
@output_option
@click.option("--div", "div_text", required=True)
@click.option("--other", "other_text", required=True)
@click.pass_context
def equiv_cmd(ctx, output, div_text, other_text):
    settings = settings_for(ctx, output=output)
    equivalent = divisor_calc.lin_equiv(_divisor(div_text), _divisor(other_text))
    emit(settings, DivisorResponse(operation="equiv", equivalent=equivalent), str(equivalent).lower())


@divisor.command("shift")
@output_option
@click.option("--div", "div_text", required=True)
@click.option("--n", type=int, required=True, help="Apply sigma^n.")
@click.pass_context
def shift_cmd(ctx, output, div_text, n):
    settings = settings_for(ctx, output=output)
    shifted = divisor_calc.sigma_shift(_divisor(div_text), n)
    emit(settings, DivisorResponse(operation="shift", divisor=divisor_json(shifted)), render_divisor(shifted))


@divisor.command("add")
@kind_option
@output_option
@click.option("--eps", "epsilon", type=int, required=True)
@click.option("--div", "div_text", required=True)
@click.option("--other-kind", type=click.Choice(["quadratic", "cubic"]), default=None)
@click.option("--other-eps", type=int, required=True)
@click.option("--other", "other_text", required=True)
@click.pass_context
def add_cmd(ctx, kind, output, epsilon, div_text, other_kind, other_eps, other_text):
    """Descriptor of an extension of two curve modules."""
    settings = settings_for(ctx, kind=kind, output=output)
    other_params = AlgebraParams.for_kind(other_kind) if other_kind else settings.params
    with library_errors():
        first = CurveDescriptor(params=settings.params, epsilon=epsilon, div=_divisor(div_text))
        second = CurveDescriptor(params=other_params, epsilon=other_eps, div=_divisor(other_text))
        total = divisor_calc.exact_sequence_add(first, second)
    payload = DivisorResponse(operation="add", divisor=divisor_json(total.div), epsilon=total.epsilon)
    emit(settings, payload, f"epsilon = {total.epsilon}, div = {render_divisor(total.div)}")


@divisor.command("quotient")
@kind_option
@output_option
@click.option("--eps", "epsilon", type=int, required=True)
@click.option("--div", "div_text", required=True)
@click.option("--point", "point_text", required=True, help='Point "x,y" of the support.')
@click.pass_context
def quotient_cmd(ctx, kind, output, epsilon, div_text, point_text):
    """Divisor of the kernel of M -> P for a point module P at the given point."""
    settings = settings_for(ctx, kind=kind, output=output)
    with library_errors():
        descriptor = CurveDescriptor(params=settings.params, epsilon=epsilon, div=_divisor(div_text))
        kernel = divisor_calc.point_quotient(descriptor, _point(point_text))
    payload = DivisorResponse(operation="quotient", divisor=divisor_json(kernel.div), epsilon=kernel.epsilon)
    emit(settings, payload, f"epsilon = {kernel.epsilon}, div = {render_divisor(kernel.div)}")


@divisor.command("sections")
@kind_option
@output_option
@click.option("--n", type=click.IntRange(min=1), required=True, help="Degree of the forms in B_n.")
@click.option("--deg", "deg_d", type=click.IntRange(min=0), required=True, help="Degree of the divisor D.")
@click.pass_context
def sections_cmd(ctx, kind, output, n, deg_d):
    """Dimension of the forms in B_n vanishing on D."""
    settings = settings_for(ctx, kind=kind, output=output)
    with library_errors():
        dim = divisor_calc.section_space_dim(settings.params, n, deg_d)
    emit(settings, DivisorResponse(operation="sections", section_dim=dim), dim.display())


@divisor.command("complete")
@output_option
@click.option("--div", "div_text", required=True)
@click.option("--reference", "reference_text", required=True)
@click.pass_context
def complete_cmd(ctx, output, div_text, reference_text):
    """The point q with D + (q) linearly equivalent to the reference divisor."""
    settings = settings_for(ctx, output=output)
    with library_errors():
        point = divisor_calc.completing_point(_divisor(div_text), _divisor(reference_text))
    emit(settings, DivisorResponse(operation="complete", point=point.as_pair()), render_point(point))
