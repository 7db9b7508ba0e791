"""Command definitions for count and batch"""
import csv
import logging
import typing as t

import click

from .. import SuperCountApp
from ..bigmod import primes_between
from ..exceptions import CapExceeded
from ..extensions import rq_queue
from ..jobs import count_row
from ..methods import COUNT_METHODS, count_points
from ..representations import BatchRow
from .common import RunRequest, curve_option, emit_json, prime_option, seed_option

logger = logging.getLogger(__name__)


@click.command("count")
@curve_option
@prime_option
@click.option("--method", type=click.Choice(COUNT_METHODS), default="auto")
@seed_option
@click.pass_obj
def count_command(
    app: SuperCountApp,
    curve_text: str,
    p: t.Optional[int],
    method: str,
    seed: t.Optional[int],
):
    """Exact number of points on the smooth projective model over F_p.

    Prints {"p", "count", "trace", "method", "genus", "ms"} as JSON.
    """
    request = RunRequest("count", curve_text, p=p, method=method, seed=seed)
    result = count_points(
        request.spec(), request.method, app.strategy(seed), app.config.DIRECT_CAP
    )
    emit_json(result.to_json())


@click.command("batch")
@curve_option
@click.option(
    "--n", "bound", type=click.IntRange(min=0), required=True, help="Largest prime."
)
@click.option(
    "--from",
    "start",
    type=click.IntRange(min=0),
    default=5,
    help="Smallest prime to count, for resuming a sweep.",
)
@click.option("--method", type=click.Choice(COUNT_METHODS), default="auto")
@seed_option
@click.option("--output", type=click.File("w"), default="-", help="CSV destination.")
@click.pass_obj
def batch_command(
    app: SuperCountApp,
    curve_text: str,
    bound: int,
    start: int,
    method: str,
    seed: t.Optional[int],
    output: t.TextIO,
):
    """One CSV row p,e,trace,count,method,skipped_reason per prime 3 < p <= N.

    Rows are computed as queue jobs and written in ascending p, each flushed as
    soon as it is known.
    """
    request = RunRequest(
        "batch", curve_text, bound=bound, method=method, output_format="csv", seed=seed
    )
    if bound > app.config.BATCH_CAP:
        raise CapExceeded(f"batch bound is capped at {app.config.BATCH_CAP}, got {bound}")
    family = request.family()
    primes = primes_between(max(3, start - 1), bound)
    sweep_seed = app.config.SEED if seed is None else seed
    jobs = [
        rq_queue.add_job(
            count_row,
            family.to_text(),
            prime,
            method,
            sweep_seed,
            app.config.SQRT_STRATEGY,
            app.config.DIRECT_CAP,
            job_timeout=-1,
        )
        for prime in primes
    ]
    logger.info("queued %d rows for %s", len(jobs), family.to_text())
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(BatchRow.HEADER)
    output.flush()
    for job in jobs:
        row = BatchRow.from_json(rq_queue.wait_for(job))
        writer.writerow(row.to_csv_row())
        output.flush()
