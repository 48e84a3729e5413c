import click

from .. import __version__


@click.command()
def version():
    """Show the version of bnnctl."""
    click.echo(f"bnnctl {__version__}")
