import click

from bnnctl.formats.factory import get_available_formats
from bnnctl.lib.aggregation import Operator
from bnnctl.lib.decorators import load_problem
from bnnctl.lib.display import REPORT_STYLES, render_report
from bnnctl.lib.mcdm import rank as rank_problem
from bnnctl.lib.settings import load_settings


@click.command()
@click.option('-i', '--input', 'input_path', required=True, type=click.Path(dir_okay=False), help='Decision problem file (.json or .csv).')
@click.option('-f', '--format', 'input_format', type=click.Choice(get_available_formats()), help='Input format; guessed from the file suffix by default.')
@click.option('--operator', type=click.Choice(['avg', 'geo'], case_sensitive=False), help='Aggregate with the weighted average (avg) or weighted geometric (geo) operator.')
@click.option('--output', 'output_style', type=click.Choice(REPORT_STYLES), help='Report as an aligned table or full-precision JSON.')
@click.option('-p', '--precision', type=click.IntRange(0, 17), help='Decimals shown in table output.')
@click.option('-n', '--normalize-weights', 'normalize_weights', is_flag=True, default=False, help='Rescale weights to sum to 1 instead of rejecting them.')
@load_problem
def rank(problem, operator, output_style, precision):
    """Aggregate, score and rank the alternatives of a decision problem."""
    settings = load_settings()
    operator = Operator.from_name(operator or settings["operator"])
    style = output_style or settings["output"]
    precision = settings["precision"] if precision is None else precision

    report = rank_problem(problem, operator, settings["tie_tolerance"])
    click.echo(render_report(report, style, precision).decode("utf-8"), nl=False)
