"""
Number of subspaces with a given partial profile.

Usage:
    python manage.py partial --type '{"blocks":[{"d":1,"lambda":[3]}]}' --rho "[1,1]"
"""
import logging

from qcount.profiles import pi_partial
from qcount.serializers import RatFuncField
from qcount.services import ProfileService

from ._base import QCountCommand, parse_profile, parse_type

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Print pi(rho, tau) for a partial profile rho"

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="type_json", required=True)
        parser.add_argument("--rho", required=True, help="partial profile as a JSON array")
        parser.add_argument("--at-prime", dest="at_prime", type=int)
        self.add_json_argument(parser)

    def run(self, **options):
        tau = parse_type(options["type_json"])
        rho = parse_profile(options["rho"], "rho")
        if options["at_prime"] is not None:
            tau.check_realizable(options["at_prime"])
        value = pi_partial(rho, tau)
        logger.info("partial: pi(%s) for type %s", list(rho), tau)
        result = ProfileService.evaluate(value, options["at_prime"])
        payload = {"type": str(tau), "rho": list(rho), "value": RatFuncField().to_representation(value)}
        if options["at_prime"] is not None:
            payload.update({"p": options["at_prime"], "count": str(result)})
        self.emit(payload, str(result), options["json_path"])
