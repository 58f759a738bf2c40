import logging
import warnings
from typing import Optional

import click

from paraferm.cli.config import FORMATS, RunConfig
from paraferm.cli.report import emit_report, run
from paraferm.constants import DEFAULT_CUTOFF, DEFAULT_WORKERS, ENGINE_VERSION, WORKERS_ENV_VAR
from paraferm.exceptions import InvalidArgumentError, InvalidConfigError


@click.command()
@click.option('--algebra', default='osp', show_default=True,
              help='osp, ospN (rank N) or sl2')
@click.option('--n', 'n', default=1, type=int, show_default=True,
              help='Rank n of osp(1|2n)')
@click.option('--k', 'level', default=1, type=int, show_default=True,
              help='Positive integer level')
@click.option('--cutoff', default=DEFAULT_CUTOFF, type=int, show_default=True,
              help='Report cutoff W on conformal weight')
@click.option('--headroom', default=None, type=int,
              help='Extra working weight above the cutoff  [default: k+1]')
@click.option('--checks', default='all', show_default=True,
              help='Comma separated check ids, or all')
@click.option('--out', 'output', type=click.Path(dir_okay=False, writable=True),
              help='Write the report here instead of standard output')
@click.option('--format', 'fmt', default='json', type=click.Choice(FORMATS), show_default=True)
@click.option('--workers', default=DEFAULT_WORKERS, type=int, envvar=WORKERS_ENV_VAR, show_default=True,
              help='Checks run concurrently')
@click.option('--verbose', is_flag=True, help='Log progress to standard error')
@click.version_option(ENGINE_VERSION)
@click.pass_context
def main(
        ctx: click.Context,
        algebra: str,
        n: int,
        level: int,
        cutoff: int,
        headroom: Optional[int],
        checks: str,
        output: Optional[str],
        fmt: str,
        workers: int,
        verbose: bool
) -> None:
    """Verifies structural statements about parafermion vertex algebras of osp(1|2n) up to a weight cutoff."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)
    if not verbose:
        warnings.simplefilter("ignore")

    try:
        config = RunConfig(
            algebra=algebra, n=n, level=level, cutoff=cutoff, headroom=headroom,
            checks=checks, output=output, format=fmt, workers=workers,
        )
    except (InvalidConfigError, InvalidArgumentError) as error:
        raise click.UsageError(str(error), ctx=ctx)

    report = run(config)
    payload = emit_report(report, config.format)
    if output is None:
        click.echo(payload.decode("utf-8"), nl=False)
    else:
        try:
            with open(output, "wb") as handle:
                handle.write(payload)
        except OSError as error:
            raise click.FileError(output, hint=str(error))

    if output is not None:
        for check in report.checks:
            click.echo("{}: {}".format(check.check_id, check.verdict.value))
    if report.failed:
        ctx.exit(1)
