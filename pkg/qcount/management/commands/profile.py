"""
Number of subspaces with a given profile under a matrix of a given type.

Usage:
    python manage.py profile --type '{"blocks":[{"d":1,"lambda":[2]}]}' --mu "[1,1]"
    python manage.py profile --type type.json --mu "[1,1]" --at-prime 2
"""
import logging

from qcount.profiles import sigma
from qcount.serializers import RatFuncField
from qcount.services import ProfileService

from ._base import QCountCommand, parse_partition, parse_type

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Print sigma(mu, tau), symbolically or evaluated at a prime"

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="type_json", required=True)
        parser.add_argument("--mu", required=True, help="partition as a JSON array")
        parser.add_argument("--at-prime", dest="at_prime", type=int)
        self.add_json_argument(parser)

    def run(self, **options):
        tau = parse_type(options["type_json"])
        mu = parse_partition(options["mu"], "mu")
        at_prime = options["at_prime"]
        if at_prime is not None:
            tau.check_realizable(at_prime)
        value = sigma(mu, tau)
        logger.info("profile: sigma(%s) for type %s", list(mu), tau)
        payload = {"type": str(tau), "mu": list(mu), "value": RatFuncField().to_representation(value)}
        if at_prime is not None:
            count = ProfileService.evaluate(value, at_prime)
            payload.update({"p": at_prime, "count": str(count)})
            self.emit(payload, str(count), options["json_path"])
            return
        self.emit(payload, str(value), options["json_path"])
