"""
Desk-scale acceptance runs: every formula against its closed form, its
alternative route and the finite-field oracle.
"""
import pytest

from qcount.fforacle import build_matrix_of_type, sigma_bruteforce
from qcount.partitions import partitions_of, partitions_up_to
from qcount.profiles import (
    diagonal_type,
    regular_nilpotent_type,
    sigma,
    sigma_regnil,
    sigma_simple,
    simple_type,
    x_coeff,
)
from qcount.services import TypeSuite, VerificationService


def assert_passed(report):
    assert report.passed, report.first_counterexample
    assert report.checks > 0


@pytest.mark.slow
class TestClosedForms:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_regular_nilpotent_and_simple(self, n):
        for mu in partitions_up_to(n):
            assert sigma(mu, regular_nilpotent_type(n)) == sigma_regnil(mu, n)
            assert sigma(mu, simple_type(n)) == sigma_simple(mu, n)


@pytest.mark.slow
class TestOracle:
    """Symbolic counts evaluated at t = p against exhaustive enumeration."""

    def test_sigma(self):
        assert_passed(VerificationService.run("sigma", 4, [2, 3]))

    def test_flags(self):
        assert_passed(VerificationService.run("flags", 3, [2, 3]))

    def test_partial_and_anti_invariant(self):
        assert_passed(VerificationService.run("partial", 4, [2]))
        assert_passed(VerificationService.run("partial", 3, [3]))

    def test_krylov(self):
        assert_passed(VerificationService.run("krylov", 3, [2]))

    @pytest.mark.parametrize("p", [3, 5])
    def test_diagonalizable(self, p):
        for n in range(1, 5):
            for nu in partitions_of(n):
                if len(nu) > p:
                    continue
                tau = diagonal_type(nu)
                delta = build_matrix_of_type(tau, p)
                for mu in partitions_up_to(n):
                    assert sigma(mu, tau).eval_at(p) == sigma_bruteforce(mu, delta)


@pytest.mark.slow
class TestIdentities:
    def test_identity_suite(self):
        assert_passed(VerificationService.run("identities", 6))

    def test_positivity(self):
        """Flag counts have nonnegative coefficients; realizable evaluations are nonnegative."""
        for label, tau in TypeSuite.distinct_types(5):
            for lam in partitions_of(tau.size):
                assert all(c >= 0 for c in x_coeff(lam, tau).coefficients()), label
            for p in (2, 3):
                if not tau.is_realizable(p):
                    continue
                for mu in partitions_up_to(tau.size):
                    assert sigma(mu, tau).eval_at(p) >= 0, (label, mu, p)
