"""
Hall-Littlewood and q-Whittaker bases, plethystic substitutions, and the
Pieri coefficients psi and theta.

Two plethysm conventions live here. plethysm_pd substitutes every variable,
the parameter t included, by its d-th power. The (1 - t) alphabets leave t
alone and only rescale the power sums.
"""
import logging
from functools import cache
from math import prod

from .exceptions import NegativeArgumentError
from .partitions import Partition, SkewPair, conjugate, is_horizontal_strip, n_stat, partitions_of
from .ratfunc import ONE, ZERO, T, bracket, invert_matrix, q_factorial
from .symfunc import Basis, SymFunc, check_degree, from_power_sums, omega, to_basis
from .tableaux import kostka_foulkes, modified_kostka

logger = logging.getLogger(__name__)


@cache
def hmod(lam):
    """Modified Hall-Littlewood H~_lam = sum_mu K~_{mu,lam}(t) s_mu."""
    lam = Partition(lam)
    check_degree(lam.size)
    return SymFunc(lam.size, {mu: modified_kostka(mu, lam) for mu in partitions_of(lam.size)})


@cache
def htrans(lam):
    """Transformed Hall-Littlewood H_lam = sum_mu K_{mu,lam}(t) s_mu."""
    lam = Partition(lam)
    check_degree(lam.size)
    return SymFunc(lam.size, {mu: kostka_foulkes(mu, lam) for mu in partitions_of(lam.size)})


@cache
def _hall_littlewood_rows(n):
    shapes = partitions_of(n)
    matrix = [[kostka_foulkes(lam, mu) for mu in shapes] for lam in shapes]
    inverse = invert_matrix(matrix)
    logger.debug("inverted Kostka-Foulkes matrix of degree %d", n)
    return {mu: dict(zip(shapes, inverse[j])) for j, mu in enumerate(shapes)}


@cache
def hl_P(lam):
    """Hall-Littlewood P_lam, from s_lam = sum_mu K_{lam,mu}(t) P_mu."""
    lam = Partition(lam)
    check_degree(lam.size)
    return SymFunc(lam.size, _hall_littlewood_rows(lam.size)[lam])


@cache
def whittaker_W(mu):
    """q-Whittaker W_mu = sum_lam K_{lam',mu'}(t) s_lam."""
    mu = Partition(mu)
    check_degree(mu.size)
    mu_conj = conjugate(mu)
    return SymFunc(
        mu.size,
        {lam: kostka_foulkes(conjugate(lam), mu_conj) for lam in partitions_of(mu.size)},
    )


@cache
def whittaker_dual(lam):
    """W~_lam = omega P_{lam'}."""
    lam = Partition(lam)
    return omega(hl_P(conjugate(lam)))


def whittaker_dual_plethystic(lam):
    """W~_lam as (1-t)^{-lam_1} / prod [lam_i - lam_{i+1}]! * W_lam[X(1-t)]."""
    lam = Partition(lam)
    scale = (ONE - T) ** (-lam.part(0))
    for i in range(len(lam)):
        scale = scale / q_factorial(lam.part(i) - lam.part(i + 1))
    return pleth_onem(whittaker_W(lam)) * scale


# -- plethysm ---------------------------------------------------------

def plethysm_pd(d, f):
    """p_d[f]: p_r -> p_{dr} and every coefficient c(t) -> c(t^d)."""
    if d < 1:
        raise NegativeArgumentError("d", d)
    degree = d * f.degree
    check_degree(degree)
    stretched = {
        Partition(d * part for part in lam): c.subst_power(d)
        for lam, c in to_basis(f, Basis.P).items()
    }
    return from_power_sums(degree, stretched)


def _alphabet_factor(lam):
    return prod((ONE - T**part for part in lam), start=ONE)


def pleth_onem(f):
    """f[X(1-t)]: p_r -> (1 - t^r) p_r, coefficients untouched."""
    coeffs = {lam: c * _alphabet_factor(lam) for lam, c in to_basis(f, Basis.P).items()}
    return from_power_sums(f.degree, coeffs)


def pleth_over_onem(f):
    """f[X/(1-t)]: p_r -> p_r / (1 - t^r)."""
    coeffs = {lam: c / _alphabet_factor(lam) for lam, c in to_basis(f, Basis.P).items()}
    return from_power_sums(f.degree, coeffs)


# -- Pieri coefficients -----------------------------------------------

def pieri_psi(eta, mu):
    """psi_{eta/mu}(t) = prod_i [eta_i - eta_{i+1} choose eta_i - mu_i]_t."""
    eta, mu = Partition(eta), Partition(mu)
    if not is_horizontal_strip(SkewPair(eta, mu)):
        return ZERO
    value = ONE
    for i in range(len(eta)):
        value = value * bracket(eta.part(i) - eta.part(i + 1), eta.part(i) - mu.part(i))
    return value


def theta(mu, rho):
    """theta_{mu/rho}(t); zero unless mu/rho is a horizontal strip."""
    mu, rho = Partition(mu), Partition(rho)
    if not is_horizontal_strip(SkewPair(mu, rho)):
        return ZERO
    value = q_factorial(mu.size - rho.size) / q_factorial(mu.part(0) - rho.part(0))
    for i in range(len(mu)):
        value = value * bracket(rho.part(i) - rho.part(i + 1), mu.part(i + 1) - rho.part(i + 1))
    return value


def hmod_from_htrans(lam):
    """t^{n(lam)} H_lam(x; 1/t), which must reproduce hmod(lam)."""
    lam = Partition(lam)
    shift = T ** n_stat(lam)
    return htrans(lam).map_coefficients(lambda c: c.subst_invert() * shift)
