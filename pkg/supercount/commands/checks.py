"""Command definitions for validate and oracle"""
import typing as t

import click

from .. import SuperCountApp, oracle
from ..curve import validate
from ..representations import json_number
from .common import RunRequest, curve_option, emit_json, prime_option, seed_option

ORACLE_KINDS = ("smooth", "affine", "naive", "diophantine", "fp2", "fp3", "jacobian")


@click.command("validate")
@curve_option
@prime_option
@click.pass_obj
def validate_command(app: SuperCountApp, curve_text: str, p: t.Optional[int]):
    """Checks the standing hypotheses; exits 1 listing every violated one."""
    request = RunRequest("validate", curve_text, p=p)
    spec = validate(request.spec())
    app.logger.debug("%r is valid", spec)
    emit_json(
        {
            "schema": "1",
            "valid": True,
            "p": json_number(spec.p),
            "genus": spec.genus,
            "basis": spec.basis.to_json(),
        }
    )


@click.command("oracle")
@curve_option
@prime_option
@click.option("--kind", type=click.Choice(ORACLE_KINDS), default="smooth")
@seed_option
@click.pass_obj
def oracle_command(
    app: SuperCountApp,
    curve_text: str,
    p: t.Optional[int],
    kind: str,
    seed: t.Optional[int],
):
    """Brute-force counts for small p.

    Kinds: ``smooth`` (#C(F_p)), ``affine``, ``naive`` and ``diophantine``
    (affine solutions three ways), ``fp2`` and ``fp3`` (affine solutions over F_p^2
    and F_p^3) and ``jacobian`` (#J(F_p) of a genus 2 or genus 3 curve).
    """
    request = RunRequest("oracle", curve_text, p=p, seed=seed)
    spec = request.spec()
    config = app.config
    value: int
    if kind == "smooth":
        value = oracle.smooth_count(spec, config.ORACLE_CAP)
    elif kind == "affine":
        value = oracle.affine_count(spec, config.ORACLE_CAP)
    elif kind == "naive":
        value = oracle.affine_count_naive(spec, config.ORACLE_CAP)
    elif kind == "diophantine":
        value = oracle.diophantine_count(spec, config.ORACLE_CAP)
    elif kind == "fp2":
        value = oracle.affine_count_fp2(spec, config.JACOBIAN_ORACLE_CAP, app.strategy(seed))
    elif kind == "fp3":
        value = oracle.affine_count_fp3(spec, config.CUBIC_ORACLE_CAP)
    elif spec.genus == 3:
        value = oracle.jacobian_order_g3(spec, config.CUBIC_ORACLE_CAP, app.strategy(seed))
    else:
        value = oracle.jacobian_order_g2(spec, config.JACOBIAN_ORACLE_CAP, app.strategy(seed))
    emit_json({"schema": "1", "p": json_number(spec.p), "kind": kind, "value": json_number(value)})
