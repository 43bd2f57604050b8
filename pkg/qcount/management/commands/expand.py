"""
Expand a named symmetric function in a chosen basis.

Usage:
    python manage.py expand hn --n 2 --to W
    python manage.py expand W --part "[2]" --to s
    python manage.py expand flaggf --type '{"blocks":[{"d":1,"lambda":[2]}]}' --to h --json -
"""
import logging

from qcount.serializers import SymFuncSerializer
from qcount.services import ExpansionService
from qcount.symfunc import Basis

from ._base import QCountCommand, parse_partition, parse_type

logger = logging.getLogger(__name__)


class Command(QCountCommand):
    help = "Expand hn, pn, W, Wdual, P, H, Hmod or flaggf in the basis given by --to"

    def add_arguments(self, parser):
        parser.add_argument("name", help=f"one of {', '.join(ExpansionService.NAMES)}")
        parser.add_argument("--n", type=int)
        parser.add_argument("--part", help="partition as a JSON array")
        parser.add_argument("--type", dest="type_json", help="similarity class type, JSON or file path")
        parser.add_argument("--to", default="s", help="target basis: m e h p s P H Hmod W Wdual")
        self.add_json_argument(parser)

    def run(self, **options):
        tag = Basis.parse(options["to"])
        part = parse_partition(options["part"], "part") if options["part"] else None
        tau = parse_type(options["type_json"]) if options["type_json"] else None
        f = ExpansionService.named(options["name"], n=options["n"], part=part, tau=tau)
        coeffs = ExpansionService.expand(f, tag)
        logger.info("expand: %s of degree %d in basis %s, %d terms", options["name"], f.degree, tag.value, len(coeffs))
        text = "\n".join(f"{list(lam)}: {value}" for lam, value in coeffs.items()) or "0"
        payload = SymFuncSerializer(f, context={"basis": tag}).data
        self.emit(payload, text, options["json_path"])
