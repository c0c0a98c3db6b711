import json
from contextlib import contextmanager
from typing import Callable, Optional

import click
from pydantic import BaseModel, ValidationError

from config import CliConfig, OutputFormat
from models.algebra import AlgebraKind
from models.betti import BettiPair
from services.errors import CapExceeded, HilbertError

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class CommandError(click.ClickException):
    """A failed command: exit code plus a JSON ``{"error", "detail"}`` payload on stderr."""

    def __init__(self, detail: str, code: str = "usage", exit_code: int = EXIT_USAGE):
        super().__init__(detail)
        self.code = code
        self.exit_code = exit_code

    def show(self, file=None) -> None:
        payload = {"error": self.code, "detail": self.format_message()}
        click.echo(json.dumps(payload), err=True)


@contextmanager
def library_errors():
    try:
        yield
    except CapExceeded as e:
        raise CommandError(e.detail, e.code, EXIT_CAP)
    except HilbertError as e:
        raise CommandError(e.detail, e.code, EXIT_USAGE)
    except ValueError as e:
        raise CommandError(str(e), "invalid-input", EXIT_USAGE)


def kind_option(fn: Callable) -> Callable:
    return click.option(
        "--kind",
        type=click.Choice([k.value for k in AlgebraKind]),
        default=None,
        help="Algebra kind (default HILBERT_KIND).",
    )(fn)


def output_option(fn: Callable) -> Callable:
    return click.option(
        "--output",
        type=click.Choice([o.value for o in OutputFormat]),
        default=None,
        help="text or json (default HILBERT_OUTPUT).",
    )(fn)


def settings_for(ctx: click.Context, **flags) -> CliConfig:
    try:
        return ctx.obj.with_overrides(**flags)
    except ValidationError as e:
        problems = []
        for err in e.errors():
            flag = "-".join(map(str, err["loc"])).replace("_", "-")
            problems.append(f"--{flag}: {err['msg']}")
        raise CommandError("; ".join(problems), "invalid-input")


def read_argument(text: str) -> str:
    """Inline value, or the contents of a file when written as ``@path``."""
    if not text.startswith("@"):
        return text
    path = text[1:]
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise CommandError(f"cannot read {path}: {e.strerror}", "unreadable-input")


def load_json(text: str):
    try:
        return json.loads(read_argument(text))
    except json.JSONDecodeError as e:
        raise CommandError(f"invalid JSON: {e.msg}", "invalid-json")


def load_betti(text: str) -> BettiPair:
    data = load_json(text)
    with library_errors():
        return BettiPair.model_validate(data)


def check_cap(settings: CliConfig, epsilon: int) -> None:
    if epsilon > settings.eps_cap:
        raise CapExceeded(f"epsilon = {epsilon} exceeds the cap {settings.eps_cap} (HILBERT_EPS_CAP)")


def emit(settings: CliConfig, payload: BaseModel, text: Optional[str]) -> None:
    if settings.output == OutputFormat.JSON:
        click.echo(payload.model_dump_json())
    elif text:
        click.echo(text)
