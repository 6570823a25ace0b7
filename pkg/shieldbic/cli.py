import logging
import sys
from typing import List, Optional

import click

from shieldbic.core.back.writer import write_comparison, write_report
from shieldbic.core.error import ConfigError, ShieldbicError
from shieldbic.core.front.reader import load_matrix
from shieldbic.core.pipeline import compare_strategies, discover_all
from shieldbic.core.rep.params import (DEFAULT_ALPHA, DEFAULT_DELTA, DEFAULT_IMPUTE_RANGE, DEFAULT_K,
                                       DEFAULT_PHI, DEFAULT_REPEATS, DEFAULT_SENTINEL, DatasetSpec,
                                       MatrixFormat, RunConfig, Strategy)

logger: logging.Logger = logging.getLogger(__name__)

PROG = "shieldbic"


def _configure_logger(verbosity: str) -> None:
    logging.basicConfig(
        level=getattr(logging, verbosity.upper()),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _check_phi(ctx, param, value):
    if value < 1:
        raise click.BadParameter("shielding factor must satisfy phi >= 1, got %g" % value)
    return value


def _check_alpha(ctx, param, value):
    if value <= 1:
        raise click.BadParameter("deletion threshold must satisfy alpha > 1, got %g" % value)
    return value


def _shared_options(func):
    options = [
        click.option("-i", "--input", "input_path", required=True,
                     type=click.Path(exists=True, dir_okay=False),
                     help="Expression matrix file."),
        click.option("--format", "fmt", type=click.Choice([f.value for f in MatrixFormat]),
                     default=MatrixFormat.YEAST_RAW.value, show_default=True,
                     help="yeast-raw: whitespace separated integers, one gene per line."),
        click.option("--delta", type=click.FloatRange(min=0), default=DEFAULT_DELTA, show_default=True,
                     help="MSR budget of a bi-cluster."),
        click.option("--alpha", type=float, default=DEFAULT_ALPHA, show_default=True,
                     callback=_check_alpha, help="Multiple node deletion threshold (> 1)."),
        click.option("--phi", type=float, default=DEFAULT_PHI, show_default=True,
                     callback=_check_phi, help="Shielding factor (>= 1)."),
        click.option("--k", "k_target", type=click.IntRange(min=1), default=DEFAULT_K, show_default=True,
                     help="Number of bi-clusters to discover per repeat."),
        click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True,
                     help="Seed of every random stream (imputation, masking)."),
        click.option("--repeats", type=click.IntRange(min=1), default=DEFAULT_REPEATS, show_default=True,
                     help="Number of independent repeats."),
        click.option("--missing-sentinel", type=float, default=DEFAULT_SENTINEL, show_default=True,
                     help="Value marking a missing entry."),
        click.option("--impute-low", type=float, default=DEFAULT_IMPUTE_RANGE[0], show_default=True),
        click.option("--impute-high", type=float, default=DEFAULT_IMPUTE_RANGE[1], show_default=True),
        click.option("-o", "--out-dir", type=click.Path(file_okay=False), default=".",
                     help="Directory to write results to. Defaults to the current directory."),
        click.option("--log_warning", "verbosity", flag_value="warning", default=True,
                     help="Log only warnings or higher."),
        click.option("--log_info", "verbosity", flag_value="info",
                     help="Log progress information as well as warnings."),
        click.option("--log_debug", "verbosity", flag_value="debug",
                     help="Log every search step."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _prepare(input_path, fmt, missing_sentinel, impute_low, impute_high, seed, verbosity, **params):
    _configure_logger(verbosity)
    spec = DatasetSpec.build(path=input_path, format=fmt, missing_sentinel=missing_sentinel,
                             impute_low=impute_low, impute_high=impute_high)
    config = RunConfig.build(seed=seed, **params)
    return load_matrix(spec, seed), config


class _DefaultGroup(click.Group):
    """Group that runs ``run`` when the first argument names no command."""

    default_command = "run"

    def parse_args(self, ctx, args):
        if args and args[0] not in self.commands and args[0] not in ctx.help_option_names:
            args = [self.default_command, *args]
        return super().parse_args(ctx, args)


@click.group(name=PROG, cls=_DefaultGroup)
def cli():
    """Greedy delta-bi-cluster discovery with shielded sub-matrices.

    Options given without a command go to ``run``.
    """


@cli.command(name="run")
@_shared_options
@click.option("--strategy", type=click.Choice([s.value for s in Strategy]),
              default=Strategy.SHIELD.value, show_default=True,
              help="How found bi-clusters are hidden from later searches.")
def run_command(out_dir, strategy, **kwargs):
    """Discover K delta-bi-clusters per repeat and write the report files."""
    matrix, config = _prepare(strategy=strategy, **kwargs)
    report = discover_all(matrix, config)
    write_report(report, out_dir)


@cli.command(name="compare")
@_shared_options
def compare_command(out_dir, **kwargs):
    """Run both strategies on identical seeds and write paired results."""
    matrix, config = _prepare(**kwargs)
    comparison = compare_strategies(matrix, config)
    write_comparison(comparison, out_dir)


def _usage():
    with click.Context(cli, info_name=PROG) as ctx:
        click.echo(cli.get_help(ctx), err=True)


def main(args: Optional[List[str]] = None) -> int:
    args = list(sys.argv[1:] if args is None else args)
    if not args:
        _usage()
        return 2
    try:
        result = cli.main(args=args, prog_name=PROG, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 2
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except ConfigError as e:
        click.echo("%s: usage error: %s" % (PROG, e), err=True)
        return 2
    except (ShieldbicError, OSError) as e:
        click.echo("%s: error: %s" % (PROG, e), err=True)
        return 1
    return result if isinstance(result, int) else 0
