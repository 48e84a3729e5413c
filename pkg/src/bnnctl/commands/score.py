import click

from bnnctl.config import DEFAULT_SCORE_PRECISION
from bnnctl.lib.bnn import parse_bnn
from bnnctl.lib.decorators import data_errors
from bnnctl.lib.display import render_summary


@click.command()
@click.option('-b', '--bnn', 'text', required=True, metavar='"t+,i+,f+,t-,i-,f-"', help='The six components, comma separated.')
@click.option('-p', '--precision', type=click.IntRange(0, 17), default=DEFAULT_SCORE_PRECISION, show_default=True, help='Decimals shown.')
@data_errors
def score(text, precision):
    """Print the score, accuracy and certainty of a single number."""
    click.echo(render_summary(parse_bnn(text), precision))
