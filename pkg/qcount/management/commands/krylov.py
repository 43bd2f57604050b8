"""
Probability that k random vectors generate F_q^n under l-step Krylov iteration.

Usage:
    python manage.py krylov --type '{"blocks":[{"d":1,"lambda":[2]}]}' --k 1 --l 2 --at-prime 2
"""
import logging

from qcount.profiles import krylov_prob
from qcount.serializers import RatFuncField
from qcount.services import ProfileService

from ._base import QCountCommand, parse_type

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Print the Krylov generation probability psi_{k,l}(tau)"

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="type_json", required=True)
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--l", dest="ell", type=int, required=True)
        parser.add_argument("--at-prime", dest="at_prime", type=int)
        self.add_json_argument(parser)

    def run(self, **options):
        tau = parse_type(options["type_json"])
        if options["at_prime"] is not None:
            tau.check_realizable(options["at_prime"])
        value = krylov_prob(options["k"], options["ell"], tau)
        logger.info("krylov: k=%d l=%d for type %s", options["k"], options["ell"], tau)
        result = ProfileService.evaluate(value, options["at_prime"])
        payload = {
            "type": str(tau),
            "k": options["k"],
            "l": options["ell"],
            "value": RatFuncField().to_representation(value),
        }
        if options["at_prime"] is not None:
            payload.update({"p": options["at_prime"], "probability": str(result)})
        self.emit(payload, str(result), options["json_path"])
