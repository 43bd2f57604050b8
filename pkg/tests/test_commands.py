"""
Management commands end to end through call_command.
"""
import json
from io import StringIO

import pytest
from django.apps import apps
from django.core.management import call_command
from django.core.management.base import CommandError

from qcount.ratfunc import ZERO

REGNIL_2 = '{"blocks":[{"d":1,"lambda":[2]}]}'
SIMPLE_2 = '{"blocks":[{"d":2,"lambda":[1]}]}'
DIAGONAL_3 = '{"blocks":[{"d":1,"lambda":[1]},{"d":1,"lambda":[1]},{"d":1,"lambda":[1]}]}'


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().strip()


def exit_code(*args):
    with pytest.raises(CommandError) as excinfo:
        run(*args)
    return excinfo.value.returncode, json.loads(str(excinfo.value))


@pytest.mark.integration
class TestExpand:
    def test_h2_in_whittaker_basis(self):
        assert run("expand", "hn", "--n", "2", "--to", "W").splitlines() == ["[1, 1]: -t", "[2]: 1"]

    def test_whittaker_in_schur_basis(self):
        assert run("expand", "W", "--part", "[2]", "--to", "s").splitlines() == ["[1, 1]: t", "[2]: 1"]

    def test_p1_in_monomials(self):
        assert run("expand", "pn", "--n", "1", "--to", "m") == "[1]: 1"

    def test_flag_generating_function(self):
        assert run("expand", "flaggf", "--type", REGNIL_2, "--to", "h").splitlines() == ["[2]: 1"]

    def test_json_output(self, tmp_path):
        path = tmp_path / "out.json"
        run("expand", "hn", "--n", "2", "--to", "W", "--json", str(path))
        payload = json.loads(path.read_text())
        assert payload["basis"] == "W"
        assert payload["degree"] == 2

    def test_unknown_name(self):
        code, payload = exit_code("expand", "zeta", "--n", "2")
        assert code == 2
        assert payload["error"]["code"] == "UNKNOWN_FUNCTION"

    def test_missing_partition(self):
        code, payload = exit_code("expand", "W", "--to", "s")
        assert code == 2
        assert payload["error"]["code"] == "INVALID_INPUT"

    def test_degree_cap(self, settings):
        settings.QCOUNT_DEGREE_CAP = 3
        code, payload = exit_code("expand", "hn", "--n", "5")
        assert code == 4
        assert payload["error"]["code"] == "DEGREE_CAP_EXCEEDED"


@pytest.mark.integration
class TestCounts:
    """profile, profile_table, partial, anti_invariant and krylov."""

    def test_profile(self):
        assert run("profile", "--type", REGNIL_2, "--mu", "[1,1]") == "t"
        assert run("profile", "--type", SIMPLE_2, "--mu", "[1,1]", "--at-prime", "2") == "3"
        assert run("profile", "--type", SIMPLE_2, "--mu", "[]") == "1"

    def test_profile_json(self):
        payload = json.loads(run("profile", "--type", REGNIL_2, "--mu", "[1,1]", "--json", "-"))
        assert payload["value"] == {"num": ["0/1", "1/1"], "den": ["1/1"]}

    def test_unrealizable_at_prime(self):
        code, payload = exit_code("profile", "--type", DIAGONAL_3, "--mu", "[1]", "--at-prime", "2")
        assert code == 2
        assert payload["error"]["code"] == "UNREALIZABLE_TYPE"

    def test_invalid_partition(self):
        code, payload = exit_code("profile", "--type", REGNIL_2, "--mu", "[1,2]")
        assert code == 2
        assert payload["error"]["code"] == "VALIDATION_ERROR"

    def test_profile_table(self):
        lines = run("profile_table", "--type", SIMPLE_2, "--at-prime", "2").splitlines()
        assert lines == ["[]: 1", "[1]: 0", "[1, 1]: 3", "[2]: 1"]

    def test_partial(self):
        assert run("partial", "--type", REGNIL_2, "--rho", "[1,1]") == "t"

    def test_partial_trailing_zero(self):
        code, payload = exit_code("partial", "--type", REGNIL_2, "--rho", "[1,0]")
        assert code == 2
        assert payload["error"]["code"] == "TRAILING_ZERO_PROFILE"

    def test_anti_invariant(self):
        assert run("anti_invariant", "--type", REGNIL_2, "--m", "1", "--fold", "1") == "t"

    def test_anti_invariant_json_at_prime(self):
        payload = json.loads(
            run("anti_invariant", "--type", REGNIL_2, "--m", "1", "--fold", "1", "--at-prime", "2", "--json", "-")
        )
        assert payload["p"] == 2
        assert payload["count"] == "2"

    def test_krylov(self):
        assert run("krylov", "--type", REGNIL_2, "--k", "1", "--l", "2", "--at-prime", "2") == "1/2"

    @pytest.mark.parametrize("p", ["6", "1", "0"])
    @pytest.mark.parametrize(
        "args",
        [
            ("profile", "--type", SIMPLE_2, "--mu", "[1,1]"),
            ("profile_table", "--type", SIMPLE_2),
            ("partial", "--type", REGNIL_2, "--rho", "[1,1]"),
            ("anti_invariant", "--type", REGNIL_2, "--m", "1"),
            ("krylov", "--type", REGNIL_2, "--k", "1", "--l", "2"),
        ],
    )
    def test_field_size_must_be_prime(self, args, p):
        code, payload = exit_code(*args, "--at-prime", p)
        assert code == 2
        assert payload["error"]["code"] == "NOT_PRIME"


@pytest.mark.integration
class TestVerify:
    def test_sigma_suite(self):
        output = run("verify", "sigma", "--max-n", "2", "--primes", "2")
        report = json.loads(output.splitlines()[0])
        assert report["passed"] is True
        assert report["failures"] == 0
        assert "checks passed" in output

    def test_budget_exceeded(self, settings):
        settings.QCOUNT_ENUMERATION_BUDGET = 2
        code, payload = exit_code("verify", "sigma", "--max-n", "2", "--primes", "2")
        assert code == 4
        assert payload["error"]["code"] == "BUDGET_EXCEEDED"

    def test_failure_reports_counterexample(self, monkeypatch):
        monkeypatch.setattr("qcount.services.sigma", lambda mu, tau: ZERO)
        code, payload = exit_code("verify", "sigma", "--max-n", "1", "--primes", "2")
        assert code == 3
        assert payload["error"]["counterexample"]["mu"] == []

    def test_bad_primes(self):
        code, _ = exit_code("verify", "sigma", "--primes", "two")
        assert code == 2

    @pytest.mark.slow
    def test_selftest(self):
        assert "selftest passed" in run("selftest")


class TestProject:
    def test_no_model_apps_installed(self):
        assert not apps.is_installed("django.contrib.auth")
        assert not apps.is_installed("django.contrib.contenttypes")
        config = apps.get_app_config("qcount")
        assert list(config.get_models()) == []
        assert "default_auto_field" not in type(config).__dict__
