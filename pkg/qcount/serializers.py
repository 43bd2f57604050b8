"""
JSON schemas for the engine's values.

Serializers validate command input before any computation starts and render
results. Domain errors raised while building a value are reported as field
validation errors.
"""
from rest_framework import serializers

from .exceptions import QCountError
from .fforacle import FpMatrix
from .partitions import Partition
from .profiles import ProfileTuple, SimilarityType
from .ratfunc import RatFunc
from .symfunc import Basis, from_json as symfunc_from_json, to_json as symfunc_to_json


class PartitionField(serializers.Field):
    """Partition as a JSON array of integers, e.g. [3,1,1]."""

    default_error_messages = {
        "invalid": "Expected a weakly decreasing array of positive integers.",
    }

    def to_representation(self, value):
        return list(value)

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or not all(isinstance(x, int) for x in data):
            self.fail("invalid")
        try:
            return Partition(data)
        except QCountError as exc:
            raise serializers.ValidationError(str(exc)) from exc


class ProfileTupleField(serializers.Field):
    """Partial profile as a JSON array; trailing zeros are significant."""

    def to_representation(self, value):
        return list(value)

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or not all(isinstance(x, int) for x in data):
            raise serializers.ValidationError("Expected an array of nonnegative integers.")
        try:
            return ProfileTuple(data)
        except QCountError as exc:
            raise serializers.ValidationError(str(exc)) from exc


class RatFuncField(serializers.Field):
    """{"num": [...], "den": [...]} with "p/q" string coefficients."""

    def to_representation(self, value):
        return RatFunc(value).to_json()

    def to_internal_value(self, data):
        if isinstance(data, str):
            try:
                return RatFunc.parse(data)
            except (QCountError, ValueError) as exc:
                raise serializers.ValidationError(f"Cannot parse '{data}'.") from exc
        if not isinstance(data, dict):
            raise serializers.ValidationError("Expected an object with 'num' and 'den'.")
        try:
            return RatFunc.from_json(data)
        except QCountError as exc:
            raise serializers.ValidationError(str(exc)) from exc


class BlockSerializer(serializers.Serializer):
    d = serializers.IntegerField(min_value=1)
    # read from and written to the "lambda" key
    shape = PartitionField()

    def to_internal_value(self, data):
        if isinstance(data, dict) and "lambda" in data:
            data = {"d": data.get("d"), "shape": data["lambda"]}
        return super().to_internal_value(data)

    def to_representation(self, instance):
        d, shape = instance
        return {"d": d, "lambda": list(shape)}

    def validate_shape(self, value):
        if not value:
            raise serializers.ValidationError("Block shapes must be nonempty.")
        return value


class SimilarityTypeSerializer(serializers.Serializer):
    """{"blocks": [{"d": 2, "lambda": [1]}, {"d": 1, "lambda": [2, 1]}]}"""

    blocks = BlockSerializer(many=True, allow_empty=True)

    def to_representation(self, instance):
        return {"blocks": [BlockSerializer().to_representation(block) for block in instance.blocks]}

    def create(self, validated_data):
        return SimilarityType(tuple((b["d"], b["shape"]) for b in validated_data["blocks"]))


class FpMatrixSerializer(serializers.Serializer):
    """{"p": 2, "n": 2, "entries": [[0, 1], [0, 0]]}"""

    p = serializers.IntegerField(min_value=2)
    n = serializers.IntegerField(min_value=0)
    entries = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))

    def validate(self, attrs):
        n = attrs["n"]
        if len(attrs["entries"]) != n or any(len(row) != n for row in attrs["entries"]):
            raise serializers.ValidationError({"entries": f"Expected a {n}x{n} array."})
        return attrs

    def to_representation(self, instance):
        return {"p": instance.p, "n": instance.n, "entries": [list(row) for row in instance.entries]}

    def create(self, validated_data):
        try:
            return FpMatrix(validated_data["p"], validated_data["n"], tuple(map(tuple, validated_data["entries"])))
        except QCountError as exc:
            raise serializers.ValidationError({"p": str(exc)}) from exc


class SymFuncSerializer(serializers.Serializer):
    """{"degree": n, "basis": "s", "coeffs": [{"part": [...], "value": {...}}]}"""

    degree = serializers.IntegerField(min_value=0)
    basis = serializers.ChoiceField(choices=[b.value for b in Basis], default=Basis.S.value)
    coeffs = serializers.ListField(child=serializers.DictField())

    def to_representation(self, instance):
        return symfunc_to_json(instance, self.context.get("basis", Basis.S))

    def create(self, validated_data):
        try:
            return symfunc_from_json(validated_data)
        except QCountError as exc:
            raise serializers.ValidationError(str(exc)) from exc


class ReportSerializer(serializers.Serializer):
    """Machine-readable result of a verification suite."""

    suite = serializers.CharField()
    passed = serializers.BooleanField()
    checks = serializers.IntegerField(min_value=0)
    failures = serializers.IntegerField(min_value=0)
    first_counterexample = serializers.DictField(allow_null=True)
