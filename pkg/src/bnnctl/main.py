import sys

import click

from . import __version__
from .commands.config import config
from .commands.convert import convert
from .commands.rank import rank
from .commands.score import score
from .commands.setop import setop
from .commands.version import version

USAGE_ERROR = 1


class BnnGroup(click.Group):
    """Command group that exits with 1 on usage errors instead of click's 2.

    Status 2 is reserved for data and validation errors (see DataError).
    """

    def main(self, *args, standalone_mode=True, **kwargs):
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(USAGE_ERROR)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


@click.group(cls=BnnGroup, invoke_without_command=True)
@click.option("-v", "--version", is_flag=True, help="Show the version and exit.")
@click.pass_context
def cli(ctx, version):
    """Bipolar neutrosophic number algebra and decision ranking."""
    if version:
        click.echo(f"bnnctl {__version__}")
        return
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


cli.add_command(rank)
cli.add_command(score)
cli.add_command(setop)
cli.add_command(convert)
cli.add_command(config)
cli.add_command(version)

if __name__ == "__main__":
    cli()
