"""Set operations on bipolar neutrosophic sets stored as JSON."""
from pathlib import Path

import click

from bnnctl.lib.decorators import data_errors
from bnnctl.lib.sets import (
    complement,
    dump_set_json,
    intersection,
    is_subset,
    load_set_json,
    set_equals,
    union,
)

BINARY_SET_OPS = {"union": union, "intersection": intersection}
PREDICATES = {"subset": is_subset, "equals": set_equals}
OPERATIONS = ["union", "intersection", "complement", "subset", "equals"]


def _read_set(path):
    return load_set_json(Path(path).read_bytes())


@click.command()
@click.argument('operation', type=click.Choice(OPERATIONS))
@click.option('--a', 'a_path', required=True, type=click.Path(dir_okay=False), help='First set (JSON).')
@click.option('--b', 'b_path', type=click.Path(dir_okay=False), help='Second set (JSON); required for every operation except complement.')
@data_errors
def setop(operation, a_path, b_path):
    """Apply OPERATION to bipolar neutrosophic sets.

    union, intersection and complement print the resulting set as JSON;
    subset (A ⊆ B) and equals print true or false.
    """
    if operation != "complement" and b_path is None:
        raise click.UsageError(
            f"'{operation}' needs a second set: --b FILE", ctx=click.get_current_context()
        )

    a = _read_set(a_path)
    if operation == "complement":
        if b_path is not None:
            click.echo("Warning: --b is ignored by complement.", err=True)
        click.echo(dump_set_json(complement(a)).decode("utf-8"), nl=False)
        return

    b = _read_set(b_path)
    if operation in PREDICATES:
        click.echo("true" if PREDICATES[operation](a, b) else "false")
    else:
        click.echo(dump_set_json(BINARY_SET_OPS[operation](a, b)).decode("utf-8"), nl=False)
