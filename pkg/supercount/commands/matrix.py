"""Command definitions for hasse-witt, charpoly and jacobian"""
import typing as t

import click

from .. import SuperCountApp
from ..curve import CurveSpec, validate
from ..exceptions import NotApplicable, PreconditionFailed
from ..hasse_witt import char_poly_mod_p, jacobian_mod_p
from ..lift import jacobian_candidates_g2, jacobian_candidates_g3
from ..methods import MATRIX_METHODS, hasse_witt_matrix
from ..trinomial import jacobian_mod_p_diagonal
from .common import RunRequest, curve_option, emit_json, prime_option, seed_option

method_option = click.option(
    "--method", type=click.Choice(MATRIX_METHODS), default="auto"
)


@click.command("hasse-witt")
@curve_option
@prime_option
@method_option
@click.pass_obj
def hasse_witt_command(
    app: SuperCountApp, curve_text: str, p: t.Optional[int], method: str
):
    """The Hasse-Witt matrix mod p, entries as decimal strings."""
    request = RunRequest("hasse-witt", curve_text, p=p, method=method)
    matrix = hasse_witt_matrix(request.spec(), request.method, app.config.DIRECT_CAP)
    emit_json(matrix.to_json())


@click.command("charpoly")
@curve_option
@prime_option
@method_option
@click.pass_obj
def charpoly_command(
    app: SuperCountApp, curve_text: str, p: t.Optional[int], method: str
):
    """The characteristic polynomial of Frobenius mod p, ascending coefficients."""
    request = RunRequest("charpoly", curve_text, p=p, method=method)
    matrix = hasse_witt_matrix(request.spec(), request.method, app.config.DIRECT_CAP)
    emit_json(char_poly_mod_p(matrix).to_json())


def _jacobian_residue(
    app: SuperCountApp, spec: CurveSpec, method: str, seed: t.Optional[int]
):
    # the diagonal product needs no matrix at all when it applies
    try:
        return jacobian_mod_p_diagonal(spec, app.strategy(seed))
    except NotApplicable as error:
        app.logger.debug("diagonal Jacobian formula does not apply: %s", error)
    return jacobian_mod_p(hasse_witt_matrix(spec, method, app.config.DIRECT_CAP))


@click.command("jacobian")
@curve_option
@prime_option
@click.option("--g", "genus", type=click.IntRange(2, 3), default=None, help="Expected genus.")
@method_option
@seed_option
@click.pass_obj
def jacobian_command(
    app: SuperCountApp,
    curve_text: str,
    p: t.Optional[int],
    genus: t.Optional[int],
    method: str,
    seed: t.Optional[int],
):
    """Candidates for #J(F_p) of a genus 2 or genus 3 curve.

    Genus 2 lifts a_1 and lists at most five orders; genus 3 reports #J(F_p) mod p
    and the Hasse-Weil interval, listing candidates when there are few enough.
    """
    request = RunRequest("jacobian", curve_text, p=p, method=method, seed=seed)
    spec = validate(request.spec())
    if genus is not None and genus != spec.genus:
        raise PreconditionFailed(f"--g {genus} given but the curve has genus {spec.genus}")
    if spec.genus == 2:
        matrix = hasse_witt_matrix(spec, request.method, app.config.DIRECT_CAP)
        candidates = jacobian_candidates_g2(char_poly_mod_p(matrix))
    elif spec.genus == 3:
        candidates = jacobian_candidates_g3(
            _jacobian_residue(app, spec, request.method, seed),
            spec.p,
            app.config.MATERIALIZE_LIMIT,
        )
    else:
        raise PreconditionFailed(f"Jacobian candidates need genus 2 or 3, got {spec.genus}")
    emit_json(candidates.to_json())
