from apps.bmw.relations import bmw_matrix
from apps.bmw.serializers import ket_text
from apps.bmw.series import SeriesParams
from apps.cli.base import RunCommand
from apps.cli.writers import NumericMatrix, render_numeric
from apps.rmatrix.matrix import compute_rmatrix, pair_text


class Command(RunCommand):
    help = 'Evaluate an exact matrix numerically at each q sample.'
    command = 'eval'
    default_format = 'csv'

    def run(self, cfg):
        if cfg.get('shape'):
            matrix = compute_rmatrix(cfg['shape'], cfg['n'])
            singles = matrix.single_labels()
            labels = [pair_text((a, b)) for a in singles for b in singles]
            samples = [NumericMatrix(q, labels, matrix.to_numpy(q)) for q in cfg['q']]
        else:
            operator = bmw_matrix(SeriesParams(cfg['series'], cfg['rank'], cfg['weights']))
            labels = [ket_text(ket) for ket in operator.kets()]
            samples = [NumericMatrix(q, labels, operator.to_dense(q)) for q in cfg['q']]
        return render_numeric(samples, cfg['format']), False
