"""
Shared plumbing for the qcount management commands.

Every command validates its flags through the DRF serializers before any
computation, and every error leaves through command_error so the exit code
and the {"error": {...}} payload are uniform.
"""
import json
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from qcount.exception_handler import command_error
from qcount.serializers import PartitionField, ProfileTupleField, SimilarityTypeSerializer


class PartitionInputSerializer(serializers.Serializer):
    value = PartitionField()


class ProfileInputSerializer(serializers.Serializer):
    value = ProfileTupleField()


def load_json(raw, flag):
    """Inline JSON, or the contents of a file when `raw` names one."""
    text = raw
    if not raw.lstrip().startswith(("{", "[")) and Path(raw).is_file():
        text = Path(raw).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise serializers.ValidationError({flag: f"Invalid JSON: {exc.msg}"}) from exc


def parse_type(raw):
    serializer = SimilarityTypeSerializer(data=load_json(raw, "type"))
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def parse_partition(raw, flag):
    serializer = PartitionInputSerializer(data={"value": load_json(raw, flag)})
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data["value"]


def parse_profile(raw, flag):
    serializer = ProfileInputSerializer(data={"value": load_json(raw, flag)})
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data["value"]


def parse_primes(raw):
    try:
        return [int(p) for p in raw.split(",") if p.strip()]
    except ValueError as exc:
        raise serializers.ValidationError({"primes": f"Expected comma-separated integers, got '{raw}'"}) from exc


class QCountCommand(BaseCommand):
    """BaseCommand with uniform error reporting and optional JSON output."""

    def add_json_argument(self, parser):
        parser.add_argument("--json", dest="json_path", help="write the JSON result to this path ('-' for stdout)")

    def handle(self, *args, **options):
        try:
            return self.run(**options)
        except CommandError:
            raise
        except Exception as exc:
            raise command_error(exc) from exc

    def run(self, **options):
        raise NotImplementedError

    def emit(self, payload, text, json_path=None):
        """Print the human-readable text and write the JSON payload if asked."""
        if json_path == "-":
            self.stdout.write(json.dumps(payload, indent=2, default=str))
            return
        self.stdout.write(text)
        if json_path:
            Path(json_path).write_text(json.dumps(payload, indent=2, default=str))
