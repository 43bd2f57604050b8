"""
Smoke test of every verification suite at the smallest sizes.

Usage:
    python manage.py selftest
"""
import logging

from qcount.exceptions import VerificationFailedError
from qcount.serializers import ReportSerializer
from qcount.services import SelfTestService

from ._base import QCountCommand

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Run all verification suites on small instances"

    def add_arguments(self, parser):
        self.add_json_argument(parser)

    def run(self, **options):
        reports = SelfTestService.run()
        data = [dict(ReportSerializer(r.as_dict()).data) for r in reports]
        total = sum(r.checks for r in reports)
        logger.info("selftest: %d suites, %d checks", len(reports), total)
        text = "\n".join(f"{r.suite}: {'ok' if r.passed else 'FAILED'} ({r.checks} checks)" for r in reports)
        self.emit({"reports": data}, text, options["json_path"])
        for r in reports:
            if not r.passed:
                raise VerificationFailedError(r.suite, r.first_counterexample)
        self.stdout.write(self.style.SUCCESS(f"selftest passed ({total} checks)"))
