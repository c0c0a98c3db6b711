import os
from enum import Enum

from decouple import config
from pydantic import BaseModel, Field

from models.algebra import AlgebraKind, AlgebraParams


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


DEFAULT_GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


class CliConfig(BaseModel):
    kind: AlgebraKind = AlgebraKind.QUADRATIC
    output: OutputFormat = OutputFormat.TEXT
    n_terms: int = Field(default=32, ge=1)
    eps_cap: int = Field(default=24, ge=1)
    workers: int = Field(default=1, ge=1)
    log_level: str = "WARNING"
    golden_dir: str = DEFAULT_GOLDEN_DIR

    @property
    def params(self) -> AlgebraParams:
        return AlgebraParams.for_kind(self.kind)

    def with_overrides(self, **flags) -> "CliConfig":
        """Apply command-line flags; ``None`` means the flag was not given."""
        updates = {k: v for k, v in flags.items() if v is not None}
        return self.model_validate({**self.model_dump(), **updates})


def load_config() -> CliConfig:
    """Environment first, then .env / settings.ini, then the coded defaults."""
    return CliConfig(
        kind=config("HILBERT_KIND", default="quadratic"),
        output=config("HILBERT_OUTPUT", default="text"),
        n_terms=config("HILBERT_N_TERMS", default=32, cast=int),
        eps_cap=config("HILBERT_EPS_CAP", default=24, cast=int),
        workers=config("HILBERT_WORKERS", default=1, cast=int),
        log_level=config("HILBERT_LOG_LEVEL", default="WARNING"),
        golden_dir=config("HILBERT_GOLDEN_DIR", default=DEFAULT_GOLDEN_DIR),
    )
