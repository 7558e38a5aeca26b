"""Assemble JSON-ready result documents shared by the CLI and the HTTP API"""
from app.config import get_limit
from app.services import (
    enumeration_service,
    evacuation_service,
    guemes_service,
    richardson_service,
    selftest_service,
    springer_service,
    tableau_service,
)
from app.utils import format_permutation, format_qpolynomial, format_word


def _tableau(sigma):
    return {'word': format_word(sigma.word), 'rows': [list(r) for r in sigma.rows],
            'shape': list(sigma.shape.parts)}


def check_report(word):
    sigma = tableau_service.tableau_from_word(word)
    verdicts = richardson_service.characterizations(sigma)
    consistent = len(set(verdicts.values())) == 1
    if not consistent:
        verdict = 'INCONSISTENT'
    elif verdicts['definition']:
        verdict = 'RICHARDSON'
    else:
        verdict = 'NOT_RICHARDSON'
    return {'tableau': _tableau(sigma), 'characterizations': verdicts,
            'consistent': consistent, 'verdict': verdict}


def evacuate_report(word, paths=False):
    sigma = tableau_service.tableau_from_word(word)
    trace = evacuation_service.evacuate(sigma)
    report = {'tableau': _tableau(sigma), 'evacuation': _tableau(trace.result)}
    if paths:
        report['paths'] = [
            {'cells': path.to_list(), 'L': evacuation_service.is_L_slide(path)}
            for path in trace.paths
        ]
    return report


def decompose_report(word):
    factors = richardson_service.prime_decomposition(word)
    return {'word': format_word(word), 'factors': [format_word(f) for f in factors]}


def psi_report(word):
    image = richardson_service.psi(word)
    return {'word': format_word(word), 'psi': format_word(image)}


def psi_inverse_report(word, ell):
    preimage = richardson_service.psi_inverse(word, ell)
    return {'word': format_word(word), 'ell': ell, 'psi_inverse': format_word(preimage)}


def count_report(shape, q=False):
    report = {'partition': list(shape.parts),
              'count': enumeration_service.count_richardson(shape)}
    if q:
        poly = enumeration_service.q_count_richardson(shape)
        report['q_count'] = poly.to_dict()
        report['q_count_text'] = format_qpolynomial(poly)
    return report


def motzkin_report(n):
    return {'n': n, 'motzkin': enumeration_service.motzkin(n)}


def refine_report(n):
    counts, total = enumeration_service.motzkin_refinement_check(n)
    return {'n': n,
            'partitions': [{'partition': list(shape.parts), 'count': c} for shape, c in counts],
            'total': total, 'motzkin': enumeration_service.motzkin(n)}


def proportion_report(n):
    ratio = enumeration_service.richardson_proportion(n)
    return {'n': n, 'motzkin': enumeration_service.motzkin(n),
            'involutions': enumeration_service.involutions(n),
            'proportion': f'{ratio.numerator}/{ratio.denominator}'}


def envelope_report(word):
    sigma = tableau_service.tableau_from_word(word)
    cell = springer_service.richardson_envelope(sigma)
    return {'tableau': _tableau(sigma),
            'v': format_permutation(cell.v), 'w': format_permutation(cell.w),
            'gap': cell.dim, 'n_lambda': tableau_service.n_lambda(sigma.shape)}


def cells_report(shape, top=False):
    top_dim = tableau_service.n_lambda(shape)
    cells = springer_service.enumerate_cells(shape)
    if top:
        cells = [c for c in cells if c.dim == top_dim]
    return {'partition': list(shape.parts), 'n_lambda': top_dim,
            'cells': [c.to_dict(top=c.dim == top_dim) for c in cells]}


def smooth_report(v, w):
    cert = springer_service.deodhar_certificate(v, w)
    return {
        'v': format_permutation(v), 'w': format_permutation(w), 'gap': cert['gap'],
        'schubert_reflections': [list(p) for p in cert['schubert']],
        'opposite_reflections': [list(p) for p in cert['opposite']],
        'schubert_smooth': cert['schubert_smooth'],
        'opposite_smooth': cert['opposite_smooth'],
        'richardson_smooth': cert['schubert_smooth'] and cert['opposite_smooth'],
    }


def guemes_report(word):
    sigma = tableau_service.tableau_from_word(word)
    reduced = guemes_service.reduced_guemes_tableaux(sigma)
    return {'tableau': _tableau(sigma),
            'first_row': list(guemes_service.pinned_first_row(sigma)),
            'tableaux': [tau.to_list() for tau in reduced],
            'expansion': [format_permutation(u) for u in guemes_service.hook_expansion(sigma)]}


def kcomp_report(n, subset=None):
    subsets = springer_service.k_component_classes(n) if subset is None else [subset]
    components = []
    for chosen in subsets:
        dual = springer_service.k_component_dual(chosen, n)
        sigma = evacuation_service.evacuate(dual).result
        components.append({'subset': sorted(chosen), 'dual': _tableau(dual),
                           'tableau': _tableau(sigma)})
    return {'n': n, 'components': components}


def selftest_report(max_n=None, workers=None):
    max_n = get_limit('SELFTEST_MAX_N') if max_n is None else max_n
    tallies = selftest_service.run_selftest(max_n=max_n, workers=workers)
    suites = {name: tally.to_dict() for name, tally in tallies.items()}
    failed = sum(s['failed'] for s in suites.values())
    return {'max_n': max_n, 'suites': suites,
            'checks': sum(s['checks'] for s in suites.values()),
            'failed': failed, 'passed': failed == 0}

