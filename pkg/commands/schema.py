import json

import click

from models.responses import RESPONSE_MODELS


@click.command("schema")
@click.argument("name", type=click.Choice(sorted(RESPONSE_MODELS)))
def schema(name: str):
    """JSON schema of a command's --output json payload."""
    click.echo(json.dumps(RESPONSE_MODELS[name].model_json_schema(), indent=2, sort_keys=True))
