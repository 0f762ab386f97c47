import functools
import importlib
import sys

import click

import gonality as gon
import metric_lab as ml
import sequence_lab as sl
from graph_loader import load_divisor, load_graph
from rank_engine import format_trace, rank_complete_fast, rank_oracle
from reduction import reduce
from utils.errors import InternalError, ResourceLimitError


def _fail(message, code):
    click.echo("error: {:s}".format(message), err=True)
    sys.exit(code)


def handle_errors(command):
    """Exit 2 on bad input, 1 on a failed internal certificate."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except InternalError as err:
            _fail(str(err), 1)
        except (ValueError, ResourceLimitError) as err:
            _fail(str(err), 2)
    return wrapper


def load_config(config_name):
    # load config module to use
    config_path = 'configs.' + config_name
    try:
        config = importlib.import_module(config_path)
    except ImportError:
        raise click.BadParameter("no config named '{:s}'".format(config_name))
    return config.Config()


def _check_d(d, limit, slow_limit, slow):
    if d < 4:
        raise click.BadParameter("d must be at least 4, got {:d}".format(d))
    if slow and d > slow_limit:
        raise click.BadParameter("d = {:d} is above the slow limit {:d}".format(d, slow_limit))
    if not slow and d > limit:
        raise click.BadParameter("d = {:d} needs --slow (limit {:d})".format(d, limit))


def _dash(x):
    return '-' if x is None else str(x)


@click.group()
@click.option('--config', 'config_name', default='default', show_default=True,
              help="Settings module under configs/.")
@click.pass_context
def cli(ctx, config_name):
    """Chip-firing on graphs: reduced divisors, ranks and the gonality of K_d."""
    ctx.obj = load_config(config_name)


@cli.command('reduce')
@click.option('-g', 'graph_file', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('-D', 'divisor_file', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('-v', 'base', type=int, required=True, help="Base vertex (0-based).")
@handle_errors
def reduce_command(graph_file, divisor_file, base):
    """Print the v-reduced divisor and its firing script."""
    graph, _ = load_graph(graph_file)
    D = load_divisor(divisor_file, graph)
    if not 0 <= base < graph.n_vertices:
        raise ValueError("base vertex {:d} outside [0, {:d}]".format(base, graph.n_vertices - 1))
    result = reduce(graph, D, base)
    click.echo("divisor {}".format(result.divisor))
    click.echo("script {}".format(result.script))
    if result.ordering is not None:
        click.echo("ordering {}".format(" ".join(str(v) for v in result.ordering)))


@cli.command('rank')
@click.option('-g', 'graph_file', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('-D', 'divisor_file', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--fast-complete', is_flag=True, help="Use the decrement algorithm (K_d only).")
@handle_errors
def rank_command(graph_file, divisor_file, fast_complete):
    """Print the rank of a divisor and a divisor E with |D - E| empty."""
    graph, _ = load_graph(graph_file)
    D = load_divisor(divisor_file, graph)
    if fast_complete:
        result = rank_complete_fast(graph.n_vertices, D)
    else:
        result = rank_oracle(graph, D)
    click.echo("rank {:d}".format(result.rank))
    witness = result.negative_witness
    click.echo("witness {}".format('-' if witness is None else witness))
    for line in format_trace(result.decrement_trace):
        click.echo(line)


@cli.command('gonality')
@click.option('-d', 'd', type=int, required=True)
@click.option('--max-r', type=int, default=None, help="Last r (default g).")
@click.option('--slow', is_flag=True, help="Allow the slow sizes.")
@click.pass_obj
@handle_errors
def gonality_command(config, d, max_r, slow):
    """CSV of the gonality sequence: formula against brute force."""
    _check_d(d, config.gonality_max_d, config.gonality_max_d_slow, slow)
    rows = gon.gonality_table(d, max_r, verbose=config.verbose)
    click.echo("r,k,h,gamma_formula,gamma_bruteforce")
    for row in rows:
        click.echo(",".join(_dash(x) for x in row))


@cli.command('verify-theorem')
@click.option('-d', 'd', type=int, required=True)
@click.option('--max-r', type=int, default=None, help="Last r for the brute force (default g+2).")
@click.option('--slow', is_flag=True)
@click.pass_obj
@handle_errors
def verify_theorem_command(config, d, max_r, slow):
    """Re-check the gonality theorem for K_d."""
    _check_d(d, config.gonality_max_d, config.gonality_max_d_slow, slow)
    checks = gon.verify_theorem(d, max_r, verbose=config.verbose)
    for check in checks:
        click.echo(str(check))
    if not all(check.passed for check in checks):
        sys.exit(1)


@cli.command('verify-claim')
@click.option('-d', 'd', type=int, required=True)
@click.option('-k', 'k', type=int, default=None, help="Single k (default: every 1 <= k <= d-3).")
@click.option('--slow', is_flag=True)
@click.pass_obj
@handle_errors
def verify_claim_command(config, d, k, slow):
    """Exhaustive check of min(t1, t2) <= k(k+1)/2; prints 'd k checked failures'."""
    _check_d(d, config.claim_max_d, config.claim_max_d_slow, slow)
    if k is not None and not 1 <= k <= d - 3:
        raise click.BadParameter("k must lie in [1, {:d}], got {:d}".format(d - 3, k))
    ks = range(1, d - 2) if k is None else [k]
    failed = False
    for k_value in ks:
        report = sl.verify_claim(d, k_value, verbose=config.verbose)
        click.echo(report.summary_line())
        failed = failed or not report.ok
    if failed:
        sys.exit(1)


@cli.command('metric-rank')
@click.option('-g', 'graph_file', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('-D', 'divisor_file', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--cap', type=int, default=None, help="Subdivision vertex cap.")
@click.option('--full-support', is_flag=True, help="Test divisors on every subdivision vertex.")
@click.pass_obj
@handle_errors
def metric_rank_command(config, graph_file, divisor_file, cap, full_support):
    """Rank of a divisor on the metric graph given by the length column."""
    graph, lengths = load_graph(graph_file)
    D = load_divisor(divisor_file, graph)
    cap = config.subdivision_cap if cap is None else cap
    click.echo("rank {:d}".format(ml.metric_graph_rank(graph, lengths, D, cap, full_support)))


@cli.command('metric-experiment')
@click.option('-d', 'd', type=int, required=True)
@click.option('--trials', type=int, default=None, help="Trials per experiment.")
@click.option('--seed', type=int, default=None)
@click.option('--cap', type=int, default=None, help="Subdivision vertex cap.")
@click.option('--invariance', is_flag=True, help="Also run the subdivision invariance check.")
@click.pass_obj
@handle_errors
def metric_experiment_command(config, d, trials, seed, cap, invariance):
    """Random edge-length experiments on K_d(l); one row per trial."""
    if d < 4:
        raise ValueError("metric experiments need d >= 4, got {:d}".format(d))
    seed = config.seed if seed is None else seed
    cap = config.subdivision_cap if cap is None else cap
    choices = config.metric_length_choices

    rows = []
    if d >= 5:
        rows += ml.proposition_battery(d, config.metric_trials if trials is None else trials,
                                       seed, choices, cap, config.verbose)
    rows += ml.lemma_battery(d, config.lemma_trials if trials is None else trials,
                             seed, choices, cap, config.verbose)
    if invariance:
        rows += ml.subdivision_invariance_battery(d, trials=config.invariance_trials if trials is None else trials,
                                                  seed=seed, cap=cap, verbose=config.verbose)

    click.echo("experiment d k trial lengths value expected status")
    for row in rows:
        click.echo(str(row))
    if not all(row.passed for row in rows):
        sys.exit(1)


if __name__ == '__main__':
    cli()
