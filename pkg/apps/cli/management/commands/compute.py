from apps.bmw.relations import bmw_matrix
from apps.bmw.series import SeriesParams
from apps.cli.base import RunCommand
from apps.cli.writers import render_matrix
from apps.rmatrix.matrix import compute_rmatrix


class Command(RunCommand):
    help = 'Compute the exact R matrix of a shape, or the g1 matrix of a B/C/D series.'
    command = 'compute'

    def run(self, cfg):
        if cfg.get('shape'):
            matrix = compute_rmatrix(cfg['shape'], cfg['n'])
        else:
            matrix = bmw_matrix(SeriesParams(cfg['series'], cfg['rank'], cfg['weights']))
        return render_matrix(matrix, cfg['format']), False
