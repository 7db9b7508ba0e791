"""Options and helpers shared by the supercount commands."""
import json
import typing as t

import click

from ..curve import CurveFamily, CurveSpec, parse_curve, parse_family
from ..exceptions import CurveSyntaxError


class RunRequest:
    """What one command invocation was asked to do.

    Args:
        subcommand (:obj:`str`): The command name.
        curve_text (:obj:`str`): Curve text as given on the command line.
        p (:obj:`int`, optional): The prime.
        bound (:obj:`int`, optional): Largest prime of a batch sweep.
        method (:obj:`str`, optional): Requested method. Defaults to "auto".
        output_format (:obj:`str`, optional): "json" or "csv". Defaults to "json".
        seed (:obj:`int`, optional): Seed for probabilistic strategies.
    """

    def __init__(
        self,
        subcommand: str,
        curve_text: str,
        p: t.Optional[int] = None,
        bound: t.Optional[int] = None,
        method: str = "auto",
        output_format: str = "json",
        seed: t.Optional[int] = None,
    ) -> None:
        self.subcommand = subcommand
        self.curve_text = curve_text
        self.p = p
        self.bound = bound
        self.method = method
        self.output_format = output_format
        self.seed = seed

    def spec(self) -> CurveSpec:
        """The curve over F_p.

        Raises:
            :obj:`~supercount.exceptions.CurveSyntaxError`: If the curve text is
                malformed or no prime is known.
        """
        return parse_curve(self.curve_text, self.p)

    def family(self) -> CurveFamily:
        """The curve shape of a sweep.

        Raises:
            :obj:`~supercount.exceptions.CurveSyntaxError`: If the curve text is
                malformed or pins a prime.
        """
        family, text_p = parse_family(self.curve_text)
        if text_p is not None:
            raise CurveSyntaxError("a sweep curve must not carry p=")
        return family

    def __repr__(self) -> str:
        return f"RunRequest({self.subcommand!r}, {self.curve_text!r}, p={self.p})"


def emit_json(data: t.Any) -> None:
    """Writes one JSON document to stdout."""
    click.echo(json.dumps(data))


curve_option = click.option(
    "--curve", "curve_text", required=True, help='Curve text, e.g. "a=2 b=0 m=[1,1,0,1]".'
)
prime_option = click.option(
    "--p", "p", type=click.IntRange(min=2), default=None, help="The prime."
)
seed_option = click.option(
    "--seed", type=int, default=None, help="Seed for probabilistic square roots."
)
