"""
Shared plumbing of the compute, verify and eval commands.

Flags are taken as plain strings and validated by RunConfigSerializer, so
every usage error (bad choice, bad number, bad q) exits with code 2.
"""

import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from apps.core.exceptions import RMatrixError

from .config import merge_options
from .serializers import RunConfigSerializer

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
VERIFICATION_FAILED = 1


def _flatten(detail):
    if isinstance(detail, dict):
        return '; '.join(f"{key}: {_flatten(value)}" for key, value in detail.items())
    if isinstance(detail, list):
        return ' '.join(_flatten(value) for value in detail)
    return str(detail)


class RunCommand(BaseCommand):
    """
    Base class: parse flags, merge the config file, validate, run, write.

    Subclasses set ``command`` and implement ``run(cfg)`` returning
    (text, failed).
    """
    command = None
    default_format = 'json'

    def add_arguments(self, parser):
        parser.add_argument('--shape', help='Young shape: 1, 2, 11 or 21')
        parser.add_argument('--n', help='Alphabet size (number of letters)')
        parser.add_argument('--series', help='B, C or D')
        parser.add_argument('--rank', help='Rank of the series')
        parser.add_argument('--weights', help='Contraction weights: literal or balanced')
        parser.add_argument('--suite', help='Verification suite')
        parser.add_argument('--q', action='append', help='q sample (repeatable)')
        parser.add_argument('--tol', help='Float tolerance')
        parser.add_argument('--exact', action='store_true', help='Use exact arithmetic where optional')
        parser.add_argument('--format', help='json, csv or latex')
        parser.add_argument('--output', help='Output file (default: stdout)')
        parser.add_argument('--config', help='key=value config file; flags override it')

    def load_config(self, options):
        data = merge_options(self.command, options)
        data.setdefault('format', self.default_format)
        serializer = RunConfigSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def run(self, cfg):
        raise NotImplementedError

    def write(self, text, cfg):
        output = cfg.get('output')
        if not output:
            self.stdout.write(text, ending='')
            return
        path = Path(output)
        if not path.is_absolute():
            path = Path(settings.RMATRIX_OUTPUT_DIR) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info("Wrote %s", path)

    def handle(self, *args, **options):
        try:
            cfg = self.load_config(options)
            text, failed = self.run(cfg)
        except serializers.ValidationError as exc:
            raise CommandError(_flatten(exc.detail), returncode=USAGE_ERROR)
        except RMatrixError as exc:
            raise CommandError(f"{exc.code}: {exc}", returncode=USAGE_ERROR)
        self.write(text, cfg)
        if failed:
            raise CommandError('Verification failed.', returncode=VERIFICATION_FAILED)
