"""
Hall-Littlewood and q-Whittaker bases, plethysm and the Pieri coefficients.
"""
import pytest

from qcount.exceptions import NegativeArgumentError
from qcount.hlwhittaker import (
    hl_P,
    hmod,
    hmod_from_htrans,
    htrans,
    pieri_psi,
    pleth_onem,
    pleth_over_onem,
    plethysm_pd,
    theta,
    whittaker_dual,
    whittaker_dual_plethystic,
    whittaker_W,
)
from qcount.partitions import Partition, conjugate, partitions_of
from qcount.ratfunc import ONE, T, ZERO, RatFunc, q_binomial
from qcount.symfunc import Basis, from_basis, hall_inner, linear_combination, omega


def s(*parts):
    return from_basis(Basis.S, parts)


DEGREES = [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow), pytest.param(6, marks=pytest.mark.slow)]


@pytest.mark.unit
class TestSmallDegrees:
    """Explicit degree-2 expansions."""

    def test_modified_and_transformed(self):
        assert hmod((1, 1)) == s(2) + s(1, 1) * T
        assert htrans((1, 1)) == s(1, 1) + s(2) * T
        assert hmod((2,)) == s(2)

    def test_hall_littlewood_P(self):
        assert hl_P((1, 1)) == s(1, 1)
        assert hl_P((2,)) == s(2) - s(1, 1) * T

    def test_whittaker(self):
        assert whittaker_W((2,)) == s(2) + s(1, 1) * T
        assert whittaker_W((1, 1)) == s(1, 1)

    def test_dual_whittaker(self):
        assert whittaker_dual((1, 1)) == s(1, 1) - s(2) * T


@pytest.mark.unit
class TestIdentities:
    """Dualities and the relations between the families, degree up to 6."""

    @pytest.mark.parametrize("n", DEGREES)
    def test_dualities(self, n):
        shapes = partitions_of(n)
        for lam in shapes:
            for mu in shapes:
                delta = ONE if lam == mu else ZERO
                assert hall_inner(hl_P(lam), htrans(mu)) == delta
                assert hall_inner(whittaker_W(lam), whittaker_dual(mu)) == delta

    @pytest.mark.parametrize("n", DEGREES)
    def test_omega_relations(self, n):
        for lam in partitions_of(n):
            assert omega(htrans(conjugate(lam))) == whittaker_W(lam)
            assert whittaker_dual(lam) == omega(hl_P(conjugate(lam)))

    @pytest.mark.parametrize("n", DEGREES)
    def test_two_routes_to_the_dual(self, n):
        for lam in partitions_of(n):
            assert whittaker_dual_plethystic(lam) == whittaker_dual(lam)

    @pytest.mark.parametrize("n", DEGREES)
    def test_modified_from_transformed(self, n):
        for lam in partitions_of(n):
            assert hmod_from_htrans(lam) == hmod(lam)

    @pytest.mark.parametrize("n", DEGREES)
    def test_whittaker_specializations(self, n):
        for lam in partitions_of(n):
            W = whittaker_W(lam)
            assert W.map_coefficients(lambda c: RatFunc(c.eval_at(0))) == s(*lam)
            assert W.map_coefficients(lambda c: RatFunc(c.eval_at(1))) == from_basis(Basis.E, conjugate(lam))

    @pytest.mark.parametrize("n", DEGREES)
    def test_hmod_at_one_is_h(self, n):
        """H~_lam(x; 1) = h_lam."""
        for lam in partitions_of(n):
            assert hmod(lam).map_coefficients(lambda c: RatFunc(c.eval_at(1))) == from_basis(Basis.H, lam)


@pytest.mark.unit
class TestPlethysm:
    """p_d[.] transforms t; the (1 - t) alphabets do not."""

    def test_pd_transforms_the_parameter(self):
        h1 = from_basis(Basis.H, (1,))
        assert plethysm_pd(2, h1 * T) == from_basis(Basis.P, (2,)) * T**2

    def test_pd_of_p(self):
        assert plethysm_pd(3, from_basis(Basis.P, (2, 1))) == from_basis(Basis.P, (6, 3))

    def test_pd_needs_positive_d(self):
        with pytest.raises(NegativeArgumentError):
            plethysm_pd(0, s(1))

    def test_onem_leaves_t_alone(self):
        h1 = from_basis(Basis.H, (1,))
        assert pleth_onem(h1 * T) == h1 * (T - T**2)

    def test_onem_inverse(self):
        f = s(2, 1) * T + s(3)
        assert pleth_over_onem(pleth_onem(f)) == f


@pytest.mark.unit
class TestPieriCoefficients:
    def test_psi(self):
        assert pieri_psi((2,), (1,)) == ONE + T
        assert pieri_psi((1, 1), (1,)) == ONE
        assert pieri_psi((3, 1), (3, 1)) == ONE
        assert pieri_psi((2, 2), (1,)) == ZERO

    def test_psi_of_a_row(self):
        for n in range(5):
            for m in range(n + 1):
                assert pieri_psi(Partition((n,)), Partition((m,))) == q_binomial(n, m)

    def test_theta(self):
        assert theta((2,), (1,)) == ONE
        assert theta((1, 1), (1,)) == ONE
        assert theta((2, 2), (1,)) == ZERO

    @pytest.mark.parametrize("n", DEGREES[1:])
    def test_pieri_rule(self, n):
        """P_{mu'} e_{n-|mu|} = sum_eta psi_{eta/mu} P_{eta'}."""
        for k in range(1, n):
            for mu in partitions_of(k):
                lhs = hl_P(conjugate(mu)) * from_basis(Basis.E, (n - k,))
                rhs = linear_combination(n, [(pieri_psi(eta, mu), hl_P(conjugate(eta))) for eta in partitions_of(n)])
                assert lhs == rhs
