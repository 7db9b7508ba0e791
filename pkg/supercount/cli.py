"""
The supercount command line: the group every subcommand is registered onto, and
the single place where library errors become exit codes.
"""
import json
import typing as t

import click

from . import __version__, create_app
from .commands import commands
from .exceptions import AmbiguousLift, SuperCountError

#: Exit codes for errors that do not exit with 1.
EXIT_CODES: t.Dict[t.Type[SuperCountError], int] = {AmbiguousLift: 2}


def handle_error(error: SuperCountError) -> int:
    """Writes an error to stderr as JSON and picks the exit code.

    Args:
        error (:obj:`~supercount.exceptions.SuperCountError`): The error.

    Returns:
        :obj:`int`: 2 for an ambiguous lift, 1 for everything else.
    """
    click.echo(json.dumps(error.to_json()), err=True)
    for error_type, exit_code in EXIT_CODES.items():
        if isinstance(error, error_type):
            return exit_code
    return 1


class SuperCountGroup(click.Group):
    """A click group that reports :obj:`SuperCountError` through its handler."""

    error_handler: t.Callable[[SuperCountError], int] = staticmethod(handle_error)

    def invoke(self, ctx: click.Context) -> t.Any:
        try:
            return super().invoke(ctx)
        except SuperCountError as error:
            ctx.exit(self.error_handler(error))
        return None


@click.group(cls=SuperCountGroup)
@click.option(
    "--env",
    type=click.Choice(["production", "development", "testing"]),
    default="production",
    envvar="SUPERCOUNT_ENV",
    help="Which .env.* file to load.",
)
@click.version_option(__version__)
@click.pass_context
def cli(ctx: click.Context, env: str):
    """Exact point counts of superelliptic curves y^a = x^b f(x) over F_p."""
    if ctx.obj is None:
        try:
            ctx.obj = create_app(env)  # type: ignore[arg-type]
        except ValueError as error:
            raise click.ClickException(str(error)) from error


def register_commands(group: click.Group) -> None:
    """Registers every subcommand onto a group.

    Args:
        group (:obj:`click.Group`): The group.
    """
    for command in commands:
        group.add_command(command)


def register_error_handlers(
    group: SuperCountGroup, handler: t.Callable[[SuperCountError], int] = handle_error
) -> None:
    """Sets the handler that maps library errors to exit codes.

    Args:
        group (:obj:`SuperCountGroup`): The group.
        handler (:obj:`Callable`, optional): Writes the diagnostic and returns the
            exit code. Defaults to :obj:`handle_error`.
    """
    group.error_handler = handler  # type: ignore[assignment]


register_commands(cli)
register_error_handlers(cli)


def main() -> None:
    """Entry point of the ``supercount`` script."""
    cli(prog_name="supercount")  # pylint: disable=no-value-for-parameter
