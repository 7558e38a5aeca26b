"""Command-line surface: `rt <command>` or `flask rt <command>`"""
import json
import logging
import sys

import click

from app import configure_logging
from app.config import Config
from app.errors import ConsistencyError, ParseError, RichardsonError
from app.services import report_service
from app.utils import (
    format_rows,
    parse_partition,
    parse_permutation,
    parse_subset,
    parse_word,
)

logger = logging.getLogger(__name__)

json_option = click.option('--json', 'as_json', is_flag=True, help='Emit JSON on stdout.')


def emit(report, as_json, render):
    """Print a report as versioned JSON or through its text renderer"""
    if as_json:
        payload = {'schema': Config.JSON_SCHEMA_VERSION}
        payload.update(report)
        click.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in render(report):
            click.echo(line)


def _yes(flag):
    return 'true' if flag else 'false'


@click.group(name='rt')
@click.option('--log-level', default=None, help='Logging level for diagnostics on stderr.')
def cli(log_level):
    """Richardson tableaux toolkit."""
    configure_logging((log_level or Config.LOG_LEVEL).upper())


@cli.command()
@click.argument('word')
@json_option
def check(word, as_json):
    """Run every Richardson characterization on WORD."""
    report = report_service.check_report(parse_word(word))

    def render(r):
        yield f"tableau {format_rows(r['tableau']['rows'])}"
        for name, verdict in r['characterizations'].items():
            yield f"  {name:<12} {_yes(verdict)}"
        yield f"verdict {r['verdict']}"

    emit(report, as_json, render)
    if not report['consistent']:
        raise ConsistencyError(f"Characterizations disagree on {word}")


@cli.command()
@click.argument('word')
@click.option('--paths', is_flag=True, help='Show every slide path.')
@json_option
def evacuate(word, paths, as_json):
    """Evacuate the tableau with lattice word WORD."""
    report = report_service.evacuate_report(parse_word(word), paths=paths)

    def render(r):
        yield f"{r['evacuation']['word']}  {format_rows(r['evacuation']['rows'])}"
        for index, path in enumerate(r.get('paths', []), start=1):
            cells = ' '.join(f"({a},{b})" for a, b in path['cells'])
            yield f"  slide {index}: {cells}{'  L' if path['L'] else ''}"

    emit(report, as_json, render)


@cli.command()
@click.argument('word')
@json_option
def decompose(word, as_json):
    """Prime decomposition of a Richardson word."""
    report = report_service.decompose_report(parse_word(word))
    emit(report, as_json, lambda r: [' ∘ '.join(r['factors']) or 'ε'])


@cli.command()
@click.argument('word')
@json_option
def psi(word, as_json):
    """Apply Ψ to a prime Richardson word."""
    report = report_service.psi_report(parse_word(word))
    emit(report, as_json, lambda r: [r['psi'] or 'ε'])


@cli.command('psi-inv')
@click.argument('word')
@click.argument('ell', type=int)
@json_option
def psi_inv(word, ell, as_json):
    """Invert Ψ onto prime words with largest letter ELL."""
    report = report_service.psi_inverse_report(parse_word(word), ell)
    emit(report, as_json, lambda r: [r['psi_inverse']])


@cli.command()
@click.argument('partition')
@click.option('--q', 'with_q', is_flag=True, help='Also print the q-count.')
@json_option
def count(partition, with_q, as_json):
    """Number of Richardson tableaux of shape PARTITION."""
    report = report_service.count_report(parse_partition(partition), q=with_q)

    def render(r):
        yield str(r['count'])
        if 'q_count_text' in r:
            yield r['q_count_text']

    emit(report, as_json, render)


@cli.command()
@click.argument('n', type=click.IntRange(min=0))
@json_option
def motzkin(n, as_json):
    """The Motzkin number M_N."""
    emit(report_service.motzkin_report(n), as_json, lambda r: [str(r['motzkin'])])


@cli.command()
@click.argument('n', type=click.IntRange(min=0))
@json_option
def refine(n, as_json):
    """Richardson counts per partition of N, summing to M_N."""
    report = report_service.refine_report(n)

    def render(r):
        for entry in r['partitions']:
            yield f"{','.join(map(str, entry['partition'])) or '()'}\t{entry['count']}"
        yield f"total\t{r['total']}"

    emit(report, as_json, render)


@cli.command()
@click.argument('n', type=click.IntRange(min=0))
@json_option
def proportion(n, as_json):
    """Exact proportion M_N / T_N of Richardson tableaux."""
    emit(report_service.proportion_report(n), as_json, lambda r: [r['proportion']])


@cli.command()
@click.argument('word')
@json_option
def envelope(word, as_json):
    """The pair (v_σ, w_σ) with its length gap and n(λ)."""
    report = report_service.envelope_report(parse_word(word))
    emit(report, as_json, lambda r: [f"v={r['v']} w={r['w']} gap={r['gap']} n(λ)={r['n_lambda']}"])


@cli.command()
@click.argument('partition')
@click.option('--top', is_flag=True, help='Only top-dimensional cells.')
@json_option
def cells(partition, top, as_json):
    """Cells (v, w) of Z_λ for PARTITION."""
    report = report_service.cells_report(parse_partition(partition), top=top)

    def render(r):
        for cell in r['cells']:
            suffix = '\ttop' if cell['top'] else ''
            yield f"{cell['dim']}\t{cell['v']}\t{cell['w']}{suffix}"

    emit(report, as_json, render)


@cli.command()
@click.argument('v')
@click.argument('w')
@json_option
def smooth(v, w, as_json):
    """Deodhar smoothness certificate for the Richardson variety of (V, W)."""
    report = report_service.smooth_report(parse_permutation(v), parse_permutation(w))

    def render(r):
        def pairs(items):
            return ' '.join(f"({i},{j})" for i, j in items) or '-'
        yield f"gap {r['gap']}"
        yield f"schubert {pairs(r['schubert_reflections'])}  smooth={_yes(r['schubert_smooth'])}"
        yield f"opposite {pairs(r['opposite_reflections'])}  smooth={_yes(r['opposite_smooth'])}"
        yield f"richardson_smooth {_yes(r['richardson_smooth'])}"

    emit(report, as_json, render)


@cli.command()
@click.argument('word')
@json_option
def guemes(word, as_json):
    """Schubert expansion of a hook-shaped component."""
    report = report_service.guemes_report(parse_word(word))
    emit(report, as_json, lambda r: [' + '.join(f"S_{u}" for u in r['expansion'])])


@cli.command()
@click.argument('n', type=click.IntRange(min=1))
@click.argument('subset', required=False, default=None)
@click.option('--all', 'every', is_flag=True, help='List σ(I) for every class {I, [n] minus I}.')
@json_option
def kcomp(n, subset, every, as_json):
    """The K-component tableau σ(I) for I = SUBSET of [N]."""
    if subset is None and not every:
        raise click.UsageError('Give a SUBSET or --all')
    chosen = None if every else parse_subset(subset)
    report = report_service.kcomp_report(n, chosen)

    def render(r):
        for comp in r['components']:
            label = ','.join(map(str, comp['subset'])) or '∅'
            yield f"{{{label}}}\t{comp['tableau']['word']}\t{format_rows(comp['tableau']['rows'])}"

    emit(report, as_json, render)


@cli.command()
@click.option('--max-n', type=click.IntRange(min=0), default=None, help='Largest size to sweep.')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Parallel suites.')
@json_option
def selftest(max_n, workers, as_json):
    """Run every oracle cross-check."""
    report = report_service.selftest_report(max_n=max_n, workers=workers)

    def render(r):
        for name, suite in r['suites'].items():
            status = 'ok' if suite['failed'] == 0 else 'FAIL'
            yield f"{name:<20} {suite['checks']:>8} checks  {suite['failed']:>4} failed  {status}"
            for failure in suite['failures']:
                yield f"    {failure}"
        yield f"total {r['checks']} checks, {r['failed']} failed"

    emit(report, as_json, render)
    if not report['passed']:
        raise ConsistencyError(f"{report['failed']} selftest checks failed")


def run(argv=None):
    """Run the CLI and map outcomes onto exit codes 0/1/2/3"""
    try:
        result = cli.main(args=argv, prog_name='rt', standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 2
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.Abort:
        click.echo('Aborted', err=True)
        return 2
    except ParseError as e:
        click.echo(f"{e.name}: {e}", err=True)
        return 2
    except ConsistencyError as e:
        click.echo(f"{e.name}: {e}", err=True)
        return 3
    except RichardsonError as e:
        logger.debug("Domain error in %s", argv, exc_info=True)
        click.echo(f"{e.name}: {e}", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main():
    sys.exit(run(sys.argv[1:]))
