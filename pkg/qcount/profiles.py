"""
Symbolic subspace-profile counts.

Every count is a rational function of t; evaluating at t = q gives the count
for a matrix of the given similarity class type over F_q. sigma() goes
through the dual q-Whittaker pairing; the a~-matrix, the b-recurrence and
the closed forms are independent routes used to cross-check it.
"""
import logging
from dataclasses import dataclass
from functools import cache
from math import comb

from sympy import divisors, isprime
from sympy.functions.combinatorial.numbers import mobius

from .exceptions import (
    DimensionBoundError,
    InvalidInputError,
    NonPolynomialResultError,
    NotPrimeError,
    SizeMismatchError,
    TrailingZeroProfileError,
    UnrealizableTypeError,
)
from .hlwhittaker import hl_P, hmod, pieri_psi, plethysm_pd, theta, whittaker_dual, whittaker_W
from .partitions import (
    Partition,
    binom2_sum,
    conjugate,
    contains,
    dot,
    epsilon,
    partitions_of,
    partitions_up_to,
    strip_inners,
)
from .ratfunc import ONE, ZERO, T, RatFunc, bracket, determinant, invert_matrix, q_factorial
from .symfunc import Basis, SymFunc, from_basis, hall_inner, linear_combination, omega, product_of, to_basis
from .tableaux import kostka_foulkes, kostka_number

logger = logging.getLogger(__name__)


# -- similarity class types -------------------------------------------

def irreducible_count(p, d):
    """Number of monic irreducible polynomials of degree d over F_p."""
    return int(sum(mobius(e) * p ** (d // e) for e in divisors(d))) // d


@dataclass(frozen=True)
class SimilarityType:
    """Multiset of blocks (degree, shape), stored sorted."""

    blocks: tuple

    def __post_init__(self):
        cleaned = []
        for d, shape in self.blocks:
            d, shape = int(d), Partition(shape)
            if d < 1:
                raise InvalidInputError(f"block degree must be positive, got {d}")
            if not shape:
                raise InvalidInputError("block shapes must be nonempty")
            cleaned.append((d, shape))
        object.__setattr__(self, "blocks", tuple(sorted(cleaned)))

    @property
    def size(self):
        return sum(d * shape.size for d, shape in self.blocks)

    def degree_demand(self):
        """degree -> number of distinct irreducibles the type needs."""
        demand = {}
        for d, _ in self.blocks:
            demand[d] = demand.get(d, 0) + 1
        return demand

    def check_realizable(self, p):
        if not isprime(p):
            raise NotPrimeError(p)
        for d, needed in sorted(self.degree_demand().items()):
            available = irreducible_count(p, d)
            if needed > available:
                raise UnrealizableTypeError(p, d, needed, available)

    def is_realizable(self, p):
        try:
            self.check_realizable(p)
        except UnrealizableTypeError:
            return False
        return True

    def __str__(self):
        return "{" + ", ".join(f"({d},{tuple(shape)})" for d, shape in self.blocks) + "}"


def nilpotent_type(lam):
    return SimilarityType(((1, Partition(lam)),))


def scalar_type(n):
    return nilpotent_type((1,) * n)


def regular_nilpotent_type(n):
    return nilpotent_type((n,))


def simple_type(n):
    return SimilarityType(((n, Partition((1,))),))


def diagonal_type(nu):
    """Diagonalizable with eigenvalue multiplicities nu."""
    return SimilarityType(tuple((1, Partition((1,) * part)) for part in Partition(nu)))


def regular_semisimple_type(lam):
    return SimilarityType(tuple((part, Partition((1,))) for part in Partition(lam)))


def regular_split_type(lam):
    return SimilarityType(tuple((1, Partition((part,))) for part in Partition(lam)))


@cache
def similarity_types(n):
    """Every similarity class type of size n, each once."""
    blocks = [
        (d, lam)
        for weight in range(1, n + 1)
        for d in divisors(weight)
        for lam in partitions_of(weight // d)
    ]

    def extend(start, remaining):
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(blocks)):
            d, lam = blocks[i]
            if d * lam.size <= remaining:
                for rest in extend(i, remaining - d * lam.size):
                    yield (blocks[i],) + rest

    return tuple(SimilarityType(chosen) for chosen in extend(0, n))


class ProfileTuple(tuple):
    """Partial profile: nonnegative integers, trailing zeros kept."""

    def __new__(cls, entries=()):
        entries = [int(e) for e in entries]
        if any(e < 0 for e in entries):
            raise InvalidInputError(f"negative entry in profile {entries}")
        return super().__new__(cls, entries)

    def __repr__(self):
        return f"ProfileTuple{tuple(self)}"


# -- helpers ----------------------------------------------------------

def _require_polynomial(what, value):
    if not value.has_integer_coefficients():
        raise NonPolynomialResultError(what, value)
    return value


def _sign(exponent):
    return -1 if exponent % 2 else 1


# -- flag generating function -----------------------------------------

@cache
def flag_gf(tau):
    """F_tau = prod_i p_{d_i}[H~_{lam_i}]."""
    factors = [plethysm_pd(d, hmod(shape)) for d, shape in tau.blocks]
    logger.debug("flag generating function of %s", tau)
    return product_of(factors)


def x_coeff(lam, tau):
    """Number of invariant flags with dimension jumps lam."""
    lam = Partition(lam)
    if lam.size != tau.size:
        raise SizeMismatchError(lam.size, tau.size)
    return _require_polynomial(f"X_{tuple(lam)}", hall_inner(flag_gf(tau), from_basis(Basis.H, lam)))


def whittaker_coefficients(tau):
    """Coefficients of F_tau in the q-Whittaker basis."""
    return to_basis(flag_gf(tau), Basis.WHITTAKER)


# -- sigma ------------------------------------------------------------

def _check_profile_size(mu, n):
    if mu.size > n:
        raise DimensionBoundError(f"profile {tuple(mu)} has size {mu.size} > {n}")


@cache
def profile_kernel(mu, n):
    """eps_{mu'} t^{sum_{j>=2} binom(mu_j,2)} W~_mu h_{n-|mu|}."""
    mu = Partition(mu)
    _check_profile_size(mu, n)
    scale = T ** binom2_sum(mu, 1) * epsilon(conjugate(mu))
    return whittaker_dual(mu) * from_basis(Basis.H, (n - mu.size,)) * scale


def sigma(mu, tau):
    """Number of subspaces with profile mu under a matrix of type tau."""
    mu = Partition(mu)
    value = hall_inner(flag_gf(tau), profile_kernel(mu, tau.size))
    return _require_polynomial(f"sigma({tuple(mu)})", value)


def g_polynomials(mu, n):
    """profile_kernel(mu, n) in the h basis: sigma = sum_lam g_lam X_lam."""
    return to_basis(profile_kernel(Partition(mu), n), Basis.H)


def sigma_regnil(mu, n):
    """Product formula for a regular nilpotent operator."""
    mu = Partition(mu)
    _check_profile_size(mu, n)
    value = ONE
    for i in range(1, len(mu)):
        value = value * T ** (mu[i] ** 2) * bracket(mu[i - 1], mu[i])
    return value


def sigma_simple(mu, n):
    """Product formula for an operator with irreducible characteristic polynomial."""
    mu = Partition(mu)
    _check_profile_size(mu, n)
    if not mu:
        return ONE
    if mu.size < n:
        return ZERO
    value = (T**n - 1) / (T ** mu[0] - 1)
    for i in range(1, len(mu)):
        value = value * T ** (mu[i] ** 2 - mu[i]) * bracket(mu[i - 1], mu[i])
    return _require_polynomial(f"simple profile count {tuple(mu)}", value)


@cache
def _b_poly(mu, nu):
    if not nu:
        return ONE if not mu else ZERO
    last, rest = nu[-1], Partition(nu[:-1])
    total = ZERO
    for rho in strip_inners(mu):
        if mu.size - rho.size == last:
            total = total + theta(mu, rho) * _b_poly(rho, rest)
    return total


def b_poly(mu, nu):
    mu, nu = Partition(mu), Partition(nu)
    if mu.size != nu.size:
        raise SizeMismatchError(mu.size, nu.size)
    return _b_poly(mu, nu)


def b_poly_via_whittaker(mu, nu):
    """b_{mu,nu} from <W_mu, h_nu> with the factorial normalizations."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.size != nu.size:
        raise SizeMismatchError(mu.size, nu.size)
    value = hall_inner(whittaker_W(mu), from_basis(Basis.H, nu))
    for part in nu:
        value = value * q_factorial(part)
    for i in range(len(mu)):
        value = value / q_factorial(mu.part(i) - mu.part(i + 1))
    return value


def sigma_diagonal(mu, nu):
    """Profile count for a diagonalizable operator with eigenvalue multiplicities nu."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.size != nu.size:
        raise SizeMismatchError(mu.size, nu.size)
    tail = sum(mu[1:])
    return (T - 1) ** tail * T ** binom2_sum(mu, 1) * b_poly(mu, nu)


# -- a and a~ ---------------------------------------------------------

def a_coeff(mu, lam):
    """a_{mu,lam}(t) = sum_eta K_{eta',mu} K_{eta,lam}(t)."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise SizeMismatchError(mu.size, lam.size)
    total = ZERO
    for eta in partitions_of(mu.size):
        count = kostka_number(conjugate(eta), mu)
        if count:
            total = total + kostka_foulkes(eta, lam) * count
    return total


@cache
def _a_tilde_table(n):
    shapes = partitions_of(n)
    inverse = invert_matrix([[a_coeff(mu, lam) for lam in shapes] for mu in shapes])
    logger.debug("inverted a-matrix of degree %d", n)
    return {(mu, lam): inverse[i][j] for i, mu in enumerate(shapes) for j, lam in enumerate(shapes)}


def a_tilde(mu, lam):
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise SizeMismatchError(mu.size, lam.size)
    return _a_tilde_table(mu.size)[(mu, lam)]


def sigma_full_via_atilde(mu, tau):
    """Full-profile count from a~ and the flag counts X_lam."""
    mu = Partition(mu)
    n = tau.size
    if mu.size != n:
        raise SizeMismatchError(mu.size, n)
    mu_conj = conjugate(mu)
    total = sum((a_tilde(mu_conj, lam) * x_coeff(lam, tau) for lam in partitions_of(n)), ZERO)
    return _require_polynomial(
        f"sigma({tuple(mu)}) via a~", total * T ** binom2_sum(mu, 1) * epsilon(mu_conj)
    )


# -- linear-system checks ---------------------------------------------

def bcrr_residual(tau, nu):
    """sum_{|mu|<=n} (-1)^{mu_1} t^{-mu.nu + binom(mu_1,2)} sigma(mu, tau); vanishes identically."""
    nu = Partition(nu)
    n = tau.size
    if nu.size >= n:
        raise DimensionBoundError(f"|nu| = {nu.size} must be smaller than {n}")
    total = ZERO
    for mu in partitions_up_to(n):
        exponent = comb(mu.part(0), 2) - dot(mu, nu)
        total = total + sigma(mu, tau) * T**exponent * _sign(mu.part(0))
    return total


def psisum_lhs(eta, nu):
    eta, nu = Partition(eta), Partition(nu)
    total = ZERO
    for mu in strip_inners(eta):
        exponent = binom2_sum(mu) - dot(mu, nu)
        total = total + pieri_psi(eta, mu) * T**exponent * _sign(mu.size)
    return total


def psisum_rhs(eta, nu):
    eta, nu = Partition(eta), Partition(nu)
    value = (ONE - T) ** eta.part(0) * T ** (binom2_sum(eta) - dot(eta, nu)) * _sign(eta.size)
    for i in range(len(eta)):
        step = eta.part(i) - eta.part(i + 1)
        value = value * bracket(nu.part(i) - eta.part(i + 1), step) * q_factorial(step)
    return value


def psisum_check(eta, nu):
    """Closed form of the alternating psi-sum, and its vanishing when |nu| < |eta|."""
    lhs = psisum_lhs(eta, nu)
    if lhs != psisum_rhs(eta, nu):
        return False
    if Partition(nu).size < Partition(eta).size and lhs:
        return False
    return True


def _shift_product(ideal):
    value = ONE
    for lam in ideal:
        value = value * T ** (-sum(lam.part(k) * lam.part(k + 1) for k in range(len(lam))))
    for lam in ideal:
        for mu in ideal:
            rows = [i for i in range(len(mu)) if mu.part(i) != lam.part(i)]
            if len(rows) == 1 and contains(mu, lam):
                r = rows[0]
                value = value * (T ** (-mu.part(r)) - T ** (-lam.part(r)))
    return value


def bcrr_determinant_check(n):
    """det(t^{-mu.nu}) over the partitions of size < n is nonzero and matches the product formula."""
    ideal = partitions_up_to(n, strict=True)
    det = determinant([[T ** (-dot(mu, nu)) for nu in ideal] for mu in ideal])
    if not det:
        return False
    expected = _shift_product(ideal)
    return det == expected or det == -expected


# -- partial profiles -------------------------------------------------

def _as_partition(rho):
    if any(rho[i] < rho[i + 1] for i in range(len(rho) - 1)):
        return None
    return Partition(rho)


def g_partial(rho, n):
    """G_rho, with pi(rho, tau) = <omega F_tau, G_rho>."""
    rho = ProfileTuple(rho)
    if rho and rho[-1] == 0:
        raise TrailingZeroProfileError(rho)
    if sum(rho) > n:
        raise DimensionBoundError(f"partial profile {list(rho)} exceeds dimension {n}")
    shape = _as_partition(rho)
    if shape is None:
        return SymFunc.zero(n)
    scale = T ** binom2_sum(shape, 1) * _sign(sum(shape[1:]))
    terms = [
        (pieri_psi(eta, shape) * scale, hl_P(conjugate(eta)))
        for eta in partitions_of(n)
        if len(eta) == len(rho)
    ]
    return linear_combination(n, terms)


def pi_partial(rho, tau):
    """Number of subspaces with partial profile rho."""
    value = hall_inner(omega(flag_gf(tau)), g_partial(rho, tau.size))
    return _require_polynomial(f"pi({list(rho)})", value)


def anti_invariant_count(m, fold, tau):
    """Number of m-dimensional fold-fold anti-invariant subspaces."""
    n = tau.size
    if m < 0 or fold < 1 or m * (fold + 1) > n:
        raise DimensionBoundError(f"m={m}, fold={fold} do not fit in dimension {n}")
    shape = Partition((fold + 1,) * m + (1,) * (n - m * (fold + 1)))
    scale = T ** (fold * comb(m, 2)) * _sign(m * fold)
    value = hall_inner(omega(flag_gf(tau)), hl_P(shape)) * scale
    return _require_polynomial(f"anti-invariant count m={m}", value)


def invariant_subspace_count(m, tau):
    """Number of m-dimensional invariant subspaces: partial profile (m, 0)."""
    n = tau.size
    if not 0 <= m <= n:
        raise DimensionBoundError(f"m={m} outside [0, {n}]")
    return x_coeff(Partition(sorted((m, n - m), reverse=True)), tau)


# -- Krylov -----------------------------------------------------------

@cache
def krylov_g(n, k, ell):
    """G(n,k,ell) with psi_{k,ell}(tau) = <F_tau, G(n,k,ell)>."""
    if k < 1 or ell < 1:
        raise InvalidInputError(f"k and ell must be positive, got k={k}, ell={ell}")
    terms = []
    for mu in partitions_of(n):
        if len(mu) > ell:
            continue
        first = mu.part(0)
        coeff = (
            (T - 1) ** first
            * T ** binom2_sum(mu)
            * bracket(k, first)
            * q_factorial(first)
            * _sign(n - first)
        )
        terms.append((coeff, whittaker_dual(mu)))
    return linear_combination(n, terms) * T ** (-n * k)


def krylov_prob(k, ell, tau):
    """Probability that k random vectors generate F^n under ell-truncated Krylov iteration."""
    return hall_inner(flag_gf(tau), krylov_g(tau.size, k, ell))


# -- closed-form expansions -------------------------------------------

def h_whittaker_coefficient(mu):
    """Coefficient of W_mu in h_n."""
    mu = Partition(mu)
    value = RatFunc(_sign(mu.size - mu.part(0)))
    for i in range(1, len(mu)):
        value = value * T ** comb(mu[i] + 1, 2) * bracket(mu[i - 1], mu[i])
    return value


def p_whittaker_coefficient(mu):
    """Coefficient of W_mu in p_n."""
    mu = Partition(mu)
    n = mu.size
    value = (T**n - 1) / (T ** mu.part(0) - 1) * _sign(n - mu.part(0))
    for i in range(1, len(mu)):
        value = value * T ** comb(mu[i], 2) * bracket(mu[i - 1], mu[i])
    return value
