"""
Service layer for the management commands.

Service classes orchestrate the domain modules: named symmetric functions
for `expand`, profile tables, and the verification suites that compare the
symbolic counts against the finite-field oracle and against each other.
"""
import logging
from itertools import product

from sympy import isprime

from . import conf
from .exceptions import InvalidInputError, NotPrimeError, UnknownFunctionError, UnrealizableTypeError
from .fforacle import (
    anti_invariant_bruteforce,
    build_matrix_of_type,
    flag_count_bruteforce,
    invariant_subspace_bruteforce,
    krylov_bruteforce,
    partial_profile_bruteforce,
    sigma_bruteforce,
)
from .hlwhittaker import (
    hl_P,
    hmod,
    hmod_from_htrans,
    htrans,
    pieri_psi,
    whittaker_dual,
    whittaker_dual_plethystic,
    whittaker_W,
)
from .partitions import Partition, conjugate, partitions_of, partitions_up_to
from .profiles import (
    SimilarityType,
    anti_invariant_count,
    b_poly,
    b_poly_via_whittaker,
    bcrr_determinant_check,
    bcrr_residual,
    diagonal_type,
    flag_gf,
    h_whittaker_coefficient,
    invariant_subspace_count,
    krylov_prob,
    nilpotent_type,
    p_whittaker_coefficient,
    pi_partial,
    psisum_check,
    regular_nilpotent_type,
    sigma,
    sigma_diagonal,
    sigma_full_via_atilde,
    sigma_regnil,
    sigma_simple,
    simple_type,
    x_coeff,
)
from .ratfunc import ONE, ZERO, T, RatFunc, q_binomial
from .symfunc import Basis, combine, from_basis, hall_inner, linear_combination, omega, product_of, to_basis

logger = logging.getLogger(__name__)


class ExpansionService:
    """Named symmetric functions and their expansions in a chosen basis."""

    NAMES = ("hn", "pn", "W", "Wdual", "P", "H", "Hmod", "flaggf")

    BY_PART = {
        "W": whittaker_W,
        "Wdual": whittaker_dual,
        "P": hl_P,
        "H": htrans,
        "Hmod": hmod,
    }

    @classmethod
    def named(cls, name, n=None, part=None, tau=None):
        """
        Build a named function.

        Args:
            name: one of NAMES
            n: degree, for hn and pn
            part: Partition, for the basis families
            tau: SimilarityType, for flaggf

        Returns:
            SymFunc
        """
        if name not in cls.NAMES:
            raise UnknownFunctionError(name, cls.NAMES)
        if name in ("hn", "pn"):
            if n is None:
                raise InvalidInputError(f"'{name}' needs --n")
            tag = Basis.H if name == "hn" else Basis.P
            return from_basis(tag, Partition((n,)))
        if name == "flaggf":
            if tau is None:
                raise InvalidInputError("'flaggf' needs --type")
            return flag_gf(tau)
        if part is None:
            raise InvalidInputError(f"'{name}' needs --part")
        return cls.BY_PART[name](Partition(part))

    @classmethod
    def expand(cls, f, tag):
        """Coefficient map of f in the basis `tag`, in partition order."""
        coeffs = to_basis(f, tag)
        return {lam: coeffs[lam] for lam in sorted(coeffs)}


class TypeSuite:
    """The fixed suite of similarity class types used by the differential checks."""

    @staticmethod
    def of_size(n):
        """
        Labelled types of size n.

        Returns:
            list of (label, SimilarityType, shift); shift is passed to
            build_matrix_of_type so the zero and scalar entries differ.
        """
        suite = [
            ("zero", nilpotent_type((1,) * n), 0),
            ("scalar", nilpotent_type((1,) * n), 1),
            ("regular nilpotent", regular_nilpotent_type(n), 0),
        ]
        if n >= 2:
            suite.append(("two-block nilpotent", nilpotent_type((n - 1, 1)), 0))
            suite.append(("diagonal", diagonal_type((1,) * n), 0))
        suite.append(("simple", simple_type(n), 0))
        if n >= 3:
            suite.append(("mixed", SimilarityType(((2, (1,)), (1, (n - 2,)))), 0))
        return suite

    @classmethod
    def up_to(cls, max_n):
        return [entry for n in range(1, max_n + 1) for entry in cls.of_size(n)]

    @classmethod
    def distinct_types(cls, max_n):
        seen = {}
        for label, tau, _ in cls.up_to(max_n):
            seen.setdefault(tau, label)
        return [(label, tau) for tau, label in seen.items()]

    @classmethod
    def matrices(cls, max_n, primes):
        """(label, tau, p, matrix) for every realizable entry of the suite."""
        for label, tau, shift in cls.up_to(max_n):
            for p in primes:
                try:
                    delta = build_matrix_of_type(tau, p, shift=shift)
                except UnrealizableTypeError:
                    logger.debug("skipping %s (%s) over F_%d", label, tau, p)
                    continue
                yield label, tau, p, delta


class ProfileService:
    """Profile counts for a single type."""

    @classmethod
    def table(cls, tau, at_prime=None):
        """
        sigma(mu, tau) for every |mu| <= size(tau).

        Args:
            tau: SimilarityType
            at_prime: evaluate at t=p after checking realizability

        Returns:
            list of (Partition, RatFunc or int)
        """
        if at_prime is not None:
            tau.check_realizable(at_prime)
        rows = []
        for mu in partitions_up_to(tau.size):
            rows.append((mu, cls.evaluate(sigma(mu, tau), at_prime)))
        return rows

    @staticmethod
    def evaluate(value, at_prime=None):
        if at_prime is None:
            return value
        if not isprime(at_prime):
            raise NotPrimeError(at_prime)
        result = value.eval_at(at_prime)
        return int(result) if result.denominator == 1 else result


class Report:
    """Accumulates the outcome of one verification suite."""

    def __init__(self, suite):
        self.suite = suite
        self.checks = 0
        self.failures = 0
        self.first_counterexample = None

    def check(self, passed, **detail):
        self.checks += 1
        if not passed:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = {k: _plain(v) for k, v in detail.items()}
                logger.warning("%s: counterexample %s", self.suite, self.first_counterexample)
        return passed

    @property
    def passed(self):
        return self.failures == 0

    def as_dict(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


def _plain(value):
    if isinstance(value, (SimilarityType, RatFunc)):
        return str(value)
    if isinstance(value, tuple):
        return list(value)
    if isinstance(value, (int, str, bool, list)) or value is None:
        return value
    return str(value)


def _at(point):
    """Coefficient map c -> c(point)."""
    return lambda c: RatFunc(c.eval_at(point))


def _compositions(n):
    """Partial profiles with a nonzero last entry and total at most n."""
    for length in range(1, n + 1):
        for rho in product(range(n + 1), repeat=length):
            if rho[-1] and sum(rho) <= n:
                yield rho


class VerificationService:
    """Differential and identity suites."""

    SUITES = ("sigma", "flags", "partial", "krylov", "identities")

    @classmethod
    def run(cls, suite, max_n, primes=None):
        if suite not in cls.SUITES:
            raise InvalidInputError(f"unknown suite '{suite}'. Known: {list(cls.SUITES)}")
        primes = list(primes or conf.default_primes())
        report = Report(suite)
        getattr(cls, f"_{suite}")(report, max_n, primes)
        logger.info("verify %s: %d checks, %d failures", suite, report.checks, report.failures)
        return report

    # -- oracle suites ------------------------------------------------

    @staticmethod
    def _sigma(report, max_n, primes):
        for label, tau, p, delta in TypeSuite.matrices(max_n, primes):
            for mu in partitions_up_to(tau.size):
                expected = sigma_bruteforce(mu, delta)
                got = sigma(mu, tau).eval_at(p)
                report.check(got == expected, type=label, tau=tau, p=p, mu=mu, expected=expected, got=str(got))

    @staticmethod
    def _flags(report, max_n, primes):
        for label, tau, p, delta in TypeSuite.matrices(max_n, primes):
            for lam in partitions_of(tau.size):
                expected = flag_count_bruteforce(lam, delta)
                got = x_coeff(lam, tau).eval_at(p)
                report.check(got == expected, type=label, tau=tau, p=p, lam=lam, expected=expected, got=str(got))
            for m in range(tau.size + 1):
                expected = invariant_subspace_bruteforce(m, delta)
                got = invariant_subspace_count(m, tau).eval_at(p)
                report.check(got == expected, type=label, tau=tau, p=p, dim=m, expected=expected, got=str(got))

    @staticmethod
    def _partial(report, max_n, primes):
        for label, tau, p, delta in TypeSuite.matrices(max_n, primes):
            n = tau.size
            for rho in _compositions(n):
                expected = partial_profile_bruteforce(rho, delta)
                got = pi_partial(rho, tau).eval_at(p)
                report.check(got == expected, type=label, tau=tau, p=p, rho=rho, expected=expected, got=str(got))
            for m in range(1, n + 1):
                for fold in range(1, n // m):
                    expected = anti_invariant_bruteforce(m, fold, delta)
                    got = anti_invariant_count(m, fold, tau).eval_at(p)
                    report.check(
                        got == expected, type=label, tau=tau, p=p, m=m, fold=fold, expected=expected, got=str(got)
                    )

    @staticmethod
    def _krylov(report, max_n, primes):
        for label, tau, p, delta in TypeSuite.matrices(max_n, primes):
            for k in range(1, 4):
                for ell in range(1, 4):
                    expected = krylov_bruteforce(k, ell, delta)
                    got = krylov_prob(k, ell, tau).eval_at(p)
                    report.check(
                        got == expected, type=label, tau=tau, p=p, k=k, ell=ell, expected=str(expected), got=str(got)
                    )

    # -- symbolic suite -----------------------------------------------

    @classmethod
    def _identities(cls, report, max_n, primes):
        for n in range(1, max_n + 1):
            cls._dualities(report, n)
            cls._basis_relations(report, n)
            cls._pieri(report, n)
            cls._whittaker_expansions(report, n)
            cls._diagonal(report, n)
            cls._closed_forms(report, n)
            cls._partial_symbolic(report, n)
            if n <= 4:
                cls._linear_system(report, n)
        for eta in partitions_up_to(max_n):
            for nu in partitions_up_to(max_n):
                report.check(psisum_check(eta, nu), check="psi-sum", eta=eta, nu=nu)

    @staticmethod
    def _dualities(report, n):
        shapes = partitions_of(n)
        for lam in shapes:
            for mu in shapes:
                delta = ONE if lam == mu else ZERO
                report.check(hall_inner(hl_P(lam), htrans(mu)) == delta, check="<P,H>", lam=lam, mu=mu)
                report.check(
                    hall_inner(whittaker_W(lam), whittaker_dual(mu)) == delta, check="<W,Wdual>", lam=lam, mu=mu
                )

    @staticmethod
    def _basis_relations(report, n):
        for lam in partitions_of(n):
            W = whittaker_W(lam)
            report.check(omega(htrans(conjugate(lam))) == W, check="omega H = W", lam=lam)
            report.check(whittaker_dual(lam) == whittaker_dual_plethystic(lam), check="Wdual routes", lam=lam)
            report.check(hmod(lam) == hmod_from_htrans(lam), check="Hmod = t^n H(1/t)", lam=lam)
            report.check(W.map_coefficients(_at(0)) == from_basis(Basis.S, lam), check="W(t=0) = s", lam=lam)
            report.check(
                W.map_coefficients(_at(1)) == from_basis(Basis.E, conjugate(lam)), check="W(t=1) = e", lam=lam
            )

    @staticmethod
    def _pieri(report, n):
        for mu in partitions_up_to(n):
            if not mu:
                continue
            lhs = hl_P(conjugate(mu)) * from_basis(Basis.E, Partition((n - mu.size,)))
            rhs = linear_combination(n, [(pieri_psi(eta, mu), hl_P(conjugate(eta))) for eta in partitions_of(n)])
            report.check(lhs == rhs, check="Pieri", mu=mu, n=n)

    @staticmethod
    def _whittaker_expansions(report, n):
        shapes = partitions_of(n)
        h_n = from_basis(Basis.H, Partition((n,)))
        p_n = from_basis(Basis.P, Partition((n,)))
        h_side = combine(Basis.WHITTAKER, n, {mu: h_whittaker_coefficient(mu) for mu in shapes})
        p_side = combine(Basis.WHITTAKER, n, {mu: p_whittaker_coefficient(mu) for mu in shapes})
        report.check(h_n == h_side, check="h_n in W", n=n)
        report.check(p_n == p_side, check="p_n in W", n=n)
        for nu in shapes:
            lhs = product_of([whittaker_W(Partition((part,))) for part in nu])
            rhs = combine(
                Basis.WHITTAKER,
                n,
                {mu: (ONE - T) ** (mu.size - mu.part(0)) * b_poly(mu, nu) for mu in shapes},
            )
            report.check(lhs == rhs, check="product of W_(k)", nu=nu)
            for mu in shapes:
                report.check(b_poly(mu, nu) == b_poly_via_whittaker(mu, nu), check="b routes", mu=mu, nu=nu)

    @staticmethod
    def _diagonal(report, n):
        shapes = partitions_of(n)
        for nu in shapes:
            tau = diagonal_type(nu)
            for mu in shapes:
                report.check(sigma(mu, tau) == sigma_diagonal(mu, nu), check="diagonal", mu=mu, nu=nu)

    @staticmethod
    def _closed_forms(report, n):
        nil, simple = regular_nilpotent_type(n), simple_type(n)
        for mu in partitions_up_to(n):
            report.check(sigma(mu, nil) == sigma_regnil(mu, n), check="regular nilpotent", mu=mu, n=n)
            report.check(sigma(mu, simple) == sigma_simple(mu, n), check="simple", mu=mu, n=n)
        for label, tau, _ in TypeSuite.of_size(n):
            for mu in partitions_of(n):
                value = sigma(mu, tau)
                report.check(value == sigma_full_via_atilde(mu, tau), check="a~ route", type=label, mu=mu)
            for lam in partitions_of(n):
                flags = x_coeff(lam, tau)
                report.check(all(c >= 0 for c in flags.coefficients()), check="flag positivity", type=label, lam=lam)

    @staticmethod
    def _partial_symbolic(report, n):
        for label, tau in TypeSuite.distinct_types(n):
            if tau.size != n:
                continue
            for m in range(1, n + 1):
                report.check(pi_partial((m,), tau) == q_binomial(n, m), check="pi((m))", type=label, m=m)
                for fold in range(1, n // m):
                    report.check(
                        anti_invariant_count(m, fold, tau) == pi_partial((m,) * (fold + 1), tau),
                        check="anti-invariant",
                        type=label,
                        m=m,
                        fold=fold,
                    )

    @staticmethod
    def _linear_system(report, n):
        report.check(bcrr_determinant_check(n), check="determinant", n=n)
        for label, tau in TypeSuite.distinct_types(n):
            if tau.size != n:
                continue
            for nu in partitions_up_to(n, strict=True):
                report.check(bcrr_residual(tau, nu) == ZERO, check="residual", type=label, nu=nu)


class SelfTestService:
    """Quick end-to-end run over the smallest instances of every suite."""

    PLAN = (("identities", 3, (2,)), ("sigma", 3, (2, 3)), ("flags", 2, (2,)), ("partial", 2, (2,)), ("krylov", 2, (2,)))

    @classmethod
    def run(cls):
        return [VerificationService.run(suite, max_n, primes) for suite, max_n, primes in cls.PLAN]
