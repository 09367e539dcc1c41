import logging

from apps.cli.base import RunCommand
from apps.cli.suites import run_suites
from apps.cli.writers import render_reports
from apps.core.reports import all_ok

logger = logging.getLogger(__name__)


class Command(RunCommand):
    help = 'Run verification suites; exit 1 on any unexplained failure.'
    command = 'verify'

    def run(self, cfg):
        reports = run_suites(cfg)
        for report in reports:
            if not report.passed:
                logger.warning(report.summary())
        return render_reports(reports, cfg['format']), not all_ok(reports)
