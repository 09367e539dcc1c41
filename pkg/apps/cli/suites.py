"""
Verification suites behind ``manage.py verify``.

Each suite maps a validated run config to a list of Reports. Shapes and
series default to every case the suite covers when the run names none.
"""

import logging

from apps.bmw.relations import discrepancy_report, verify_bmw
from apps.bmw.series import SeriesParams
from apps.core.timing import Stopwatch
from apps.coupling.tableaux import min_alphabet
from apps.hecke.identities import verify_hecke, verify_quadratic22, verify_quadratic41_float
from apps.rmatrix.checks import intertwiner_check, n_independence_check, ybe_check
from apps.rmatrix.golden import golden_compare

from .serializers import DEFAULT_ALPHABET

logger = logging.getLogger(__name__)

ALL_SHAPES = ('1', '2', '11', '21')

# Rank-two series whose contraction eigenvalue is reported by default.
DEFAULT_DISCREPANCIES = (('B', 2), ('C', 2), ('D', 2))

# (alphabet, sites) pairs of the hecke suite when the run names no alphabet.
HECKE_SPACES = ((3, 5), (2, 6))

# Four-letter patterns first occur at n=4.
N_INDEPENDENCE_ALPHABET = 4


def _shapes(cfg, allowed=ALL_SHAPES):
    return (cfg['shape'],) if cfg.get('shape') else allowed


def _alphabet(cfg, shape):
    return cfg.get('n') or max(DEFAULT_ALPHABET, min_alphabet(shape))


def hecke_suite(cfg):
    if cfg.get('n'):
        return verify_hecke(cfg['n'], 5)
    reports = []
    for n, sites in HECKE_SPACES:
        reports.extend(verify_hecke(n, sites))
    return reports


def quad22_suite(cfg):
    return list(verify_quadratic22(cfg.get('n') or 3))


def quad41_suite(cfg):
    reports = []
    for q in cfg['q']:
        reports.extend(verify_quadratic41_float(cfg.get('n') or 3, q, cfg['tol'], exact=cfg['exact']))
        if cfg['exact']:
            break
    return reports


def ybe_suite(cfg):
    reports = []
    for shape in _shapes(cfg):
        n = _alphabet(cfg, shape)
        if cfg['exact']:
            reports.append(ybe_check(shape, n, mode='exact'))
        else:
            reports.extend(ybe_check(shape, n, mode='float', q=q, tol=cfg['tol']) for q in cfg['q'])
    return reports


def intertwiner_suite(cfg):
    reports = []
    for shape in _shapes(cfg, ('2', '11', '21')):
        reports.extend(intertwiner_check(shape, n=_alphabet(cfg, shape), q=cfg['q'][0], tol=cfg['tol']))
    return reports


def golden_suite(cfg):
    return [
        golden_compare(shape, n=cfg.get('n'), q_samples=cfg['q'], tol=cfg['tol'])
        for shape in _shapes(cfg)
    ]


def n_independence_suite(cfg):
    reports = []
    for shape in _shapes(cfg, ('1', '2', '11')):
        n1 = cfg.get('n') or max(N_INDEPENDENCE_ALPHABET, min_alphabet(shape))
        reports.append(n_independence_check(shape, n1, n1 + 1))
    return reports


def bmw_suite(cfg):
    """
    Relations of the requested series (B1 by default) plus the contraction
    eigenvalue report of each rank-two series. The braid relation is
    checked with --exact only.
    """
    if cfg.get('series'):
        params = [SeriesParams(cfg['series'], cfg['rank'], cfg['weights'])]
        discrepancies = [(cfg['series'], cfg['rank'])]
    else:
        params = [SeriesParams('B', 1)]
        discrepancies = DEFAULT_DISCREPANCIES
    reports = []
    for p in params:
        reports.extend(verify_bmw(p, mode='exact', braid=cfg['exact']))
        for q in cfg['q']:
            reports.extend(verify_bmw(p, mode='float', q=q, tol=cfg['tol'], braid=False))
    reports.extend(discrepancy_report(series, n, cfg['q'][0]) for series, n in discrepancies)
    return reports


SUITES = {
    'hecke': hecke_suite,
    'quad22': quad22_suite,
    'quad41': quad41_suite,
    'ybe': ybe_suite,
    'intertwiner': intertwiner_suite,
    'golden': golden_suite,
    'n-indep': n_independence_suite,
    'bmw': bmw_suite,
}


def run_suites(cfg):
    names = list(SUITES) if cfg['suite'] == 'all' else [cfg['suite']]
    reports = []
    for name in names:
        with Stopwatch(name):
            reports.extend(SUITES[name](cfg))
    logger.info("Ran %s: %d reports", ', '.join(names), len(reports))
    return reports
