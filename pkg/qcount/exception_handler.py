"""
Converts errors raised while running a command into the standard format:
{"error": {"code": "...", "message": "..."}}

plus the process exit code: 0 success, 2 validation error, 3 verification
failure, 4 budget exceeded, 1 anything unexpected.
"""
import json
import logging

from django.core.management.base import CommandError
from rest_framework.exceptions import ValidationError

from .exceptions import (
    DegreeCapExceededError,
    EnumerationBudgetError,
    QCountError,
    VerificationFailedError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3
EXIT_BUDGET = 4


def _normalize_message(detail):
    """Extract a single message string from DRF error detail."""
    if isinstance(detail, str):
        return detail
    if isinstance(detail, dict):
        parts = []
        for k, v in detail.items():
            parts.append(f"{k}: {_normalize_message(v)}")
        return "; ".join(parts)
    if isinstance(detail, list):
        return "; ".join(_normalize_message(d) for d in detail)
    return str(detail)


def error_payload(exc):
    """(payload, exit code) for any exception."""
    if isinstance(exc, (DegreeCapExceededError, EnumerationBudgetError)):
        return {"error": {"code": exc.code, "message": str(exc)}}, EXIT_BUDGET
    if isinstance(exc, VerificationFailedError):
        payload = {"error": {"code": exc.code, "message": str(exc)}}
        payload["error"]["counterexample"] = exc.counterexample
        return payload, EXIT_VERIFICATION
    if isinstance(exc, QCountError):
        return {"error": {"code": exc.code, "message": str(exc)}}, EXIT_VALIDATION
    if isinstance(exc, ValidationError):
        message = _normalize_message(exc.detail)
        return {"error": {"code": "VALIDATION_ERROR", "message": message}}, EXIT_VALIDATION
    logger.exception("unexpected error")
    return {"error": {"code": "INTERNAL_ERROR", "message": "internal error"}}, EXIT_INTERNAL


def command_error(exc):
    """CommandError carrying the JSON payload and the exit code."""
    payload, code = error_payload(exc)
    error = CommandError(json.dumps(payload, default=str), returncode=code)
    error.payload = payload
    return error
