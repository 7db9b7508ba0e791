"""Testing utils for invoking the supercount command line."""
import json
import typing as t

from click.testing import CliRunner, Result
from supercount import SuperCountApp
from supercount.cli import cli


def invoke(runner: CliRunner, app: SuperCountApp, *args: str) -> Result:
    """supercount <args>

    Runs a subcommand with the testing app instead of building one from .env files.

    Args:
        runner (:obj:`~click.testing.CliRunner`): The runner fixture.
        app (:obj:`~supercount.SuperCountApp`): The app fixture.
        *args: Command line arguments.

    Returns:
        :obj:`~click.testing.Result`: The result of the invocation.
    """
    result: Result = runner.invoke(cli, list(args), obj=app)
    return result


def count(
    runner: CliRunner, app: SuperCountApp, curve: str, p: int, method: str = "auto"
) -> Result:
    """supercount count --curve <curve> --p <p> --method <method>"""
    return invoke(runner, app, "count", "--curve", curve, "--p", str(p), "--method", method)


def stdout_json(result: Result) -> t.Any:
    """The JSON document a command printed on stdout."""
    return json.loads(result.stdout)


def stderr_json(result: Result) -> t.Any:
    """The JSON diagnostic a command printed on stderr."""
    return json.loads(result.stderr)
