"""
Profile counts for every partition of size at most n.

Usage:
    python manage.py profile_table --type '{"blocks":[{"d":2,"lambda":[1]}]}'
    python manage.py profile_table --type type.json --at-prime 3 --json table.json
"""
import logging

from qcount.serializers import RatFuncField
from qcount.services import ProfileService

from ._base import QCountCommand, parse_type

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Print sigma(mu, tau) for all |mu| <= n"

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="type_json", required=True)
        parser.add_argument("--at-prime", dest="at_prime", type=int)
        self.add_json_argument(parser)

    def run(self, **options):
        tau = parse_type(options["type_json"])
        rows = ProfileService.table(tau, options["at_prime"])
        logger.info("profile_table: %d profiles for type %s", len(rows), tau)
        field = RatFuncField()
        if options["at_prime"] is None:
            entries = [{"mu": list(mu), "value": field.to_representation(v)} for mu, v in rows]
        else:
            entries = [{"mu": list(mu), "count": str(v)} for mu, v in rows]
        text = "\n".join(f"{list(mu)}: {v}" for mu, v in rows)
        self.emit({"type": str(tau), "p": options["at_prime"], "rows": entries}, text, options["json_path"])
