import click

from bnnctl.formats.factory import create_format, get_available_formats
from bnnctl.lib.decorators import load_problem


@click.command()
@click.option('-i', '--input', 'input_path', required=True, type=click.Path(dir_okay=False), help='Decision problem file (.json or .csv).')
@click.option('-f', '--format', 'input_format', type=click.Choice(get_available_formats()), help='Input format; guessed from the file suffix by default.')
@click.option('-t', '--to', 'target', required=True, type=click.Choice(get_available_formats()), help='Output format.')
@click.option('-n', '--normalize-weights', 'normalize_weights', is_flag=True, default=False, help='Rescale weights to sum to 1 instead of rejecting them.')
@load_problem
def convert(problem, target):
    """Validate a decision problem and write it in another format."""
    click.echo(create_format(target).render(problem).decode("utf-8"), nl=False)
