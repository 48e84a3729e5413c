from functools import wraps

import click

from bnnctl.formats.factory import load_document
from bnnctl.lib.errors import BnnError


class DataError(click.ClickException):
    """Bad input data or an unreadable file; exits with status 2."""
    exit_code = 2


def data_errors(f):
    """
    A decorator that reports library data errors and file errors as a
    DataError instead of a traceback.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except BnnError as e:
            raise DataError(str(e)) from e
        except OSError as e:
            name = getattr(e, "filename", None)
            reason = e.strerror or str(e)
            raise DataError(f"{name}: {reason}" if name else reason) from e
    return decorated_function


def load_problem(f):
    """
    A decorator that reads and validates the --input problem file and
    provides the DecisionProblem to the command.
    """
    @wraps(f)
    @data_errors
    def decorated_function(*args, input_path, input_format, normalize_weights, **kwargs):
        document = load_document(input_path, input_format, normalize_weights)
        problem = document.parsed

        rescaled_from = problem.weights.rescaled_from
        if rescaled_from is not None:
            click.echo(f"Warning: weights summed to {rescaled_from:g}; normalized to 1.", err=True)

        # Pass the problem object to the command
        return f(problem, *args, **kwargs)
    return decorated_function
