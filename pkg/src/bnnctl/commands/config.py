"""Settings management commands."""

import click

from bnnctl.lib.decorators import data_errors
from bnnctl.lib.settings import PARSERS, load_settings, set_setting, unset_setting


@click.group()
def config():
    """Manage default option values.

    Settings fill in options left off the command line:

      bnnctl config set precision 4

      bnnctl config set operator geo
    """


@config.command(name="show")
@data_errors
def config_show():
    """Show the effective settings."""
    for key, value in sorted(load_settings().items()):
        click.echo(f"  {key} = {value}")


@config.command(name="set")
@click.argument("key", type=click.Choice(list(PARSERS)))
@click.argument("value")
@data_errors
def config_set(key, value):
    """Set KEY to VALUE."""
    stored = set_setting(key, value)
    click.echo(f"Setting '{key}' = {stored} saved.")


@config.command(name="unset")
@click.argument("key")
def config_unset(key):
    """Remove KEY, restoring its default."""
    try:
        unset_setting(key)
        click.echo(f"Setting '{key}' removed.")
    except KeyError:
        click.echo(f"Error: '{key}' is not set.", err=True)
