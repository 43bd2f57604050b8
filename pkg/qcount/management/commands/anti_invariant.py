"""
Number of m-dimensional subspaces W with W, AW, ..., A^fold W independent.

Usage:
    python manage.py anti_invariant --type '{"blocks":[{"d":1,"lambda":[2]}]}' --m 1 --fold 1
"""
import logging

from qcount.profiles import anti_invariant_count
from qcount.serializers import RatFuncField
from qcount.services import ProfileService

from ._base import QCountCommand, parse_type

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Print the number of fold-fold anti-invariant subspaces of dimension m"

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="type_json", required=True)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--fold", type=int, default=1)
        parser.add_argument("--at-prime", dest="at_prime", type=int)
        self.add_json_argument(parser)

    def run(self, **options):
        tau = parse_type(options["type_json"])
        if options["at_prime"] is not None:
            tau.check_realizable(options["at_prime"])
        value = anti_invariant_count(options["m"], options["fold"], tau)
        logger.info("anti_invariant: m=%d fold=%d for type %s", options["m"], options["fold"], tau)
        result = ProfileService.evaluate(value, options["at_prime"])
        payload = {
            "type": str(tau),
            "m": options["m"],
            "fold": options["fold"],
            "value": RatFuncField().to_representation(value),
        }
        if options["at_prime"] is not None:
            payload.update({"p": options["at_prime"], "count": str(result)})
        self.emit(payload, str(result), options["json_path"])
