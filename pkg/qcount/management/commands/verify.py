"""
Run a verification suite and print a machine-readable report.

Exit code 3 when any check fails, 4 when the enumeration budget is exceeded.

Usage:
    python manage.py verify identities --max-n 5
    python manage.py verify sigma --max-n 3 --primes 2,3
    python manage.py verify krylov --max-n 2 --primes 2
"""
import json
import logging

from qcount.exceptions import VerificationFailedError
from qcount.serializers import ReportSerializer
from qcount.services import VerificationService

from ._base import QCountCommand, parse_primes

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Compare formulas against the finite-field oracle or check symbolic identities"

    def add_arguments(self, parser):
        parser.add_argument("suite", choices=VerificationService.SUITES)
        parser.add_argument("--max-n", dest="max_n", type=int, default=3)
        parser.add_argument("--primes", help="comma-separated primes, defaults to QCOUNT_DEFAULT_PRIMES")
        self.add_json_argument(parser)

    def run(self, **options):
        primes = parse_primes(options["primes"]) if options["primes"] else None
        report = VerificationService.run(options["suite"], options["max_n"], primes)
        data = ReportSerializer(report.as_dict()).data
        self.emit(dict(data), json.dumps(data, default=str), options["json_path"])
        if not report.passed:
            raise VerificationFailedError(report.suite, report.first_counterexample)
        self.stdout.write(self.style.SUCCESS(f"{report.suite}: {report.checks} checks passed"))
