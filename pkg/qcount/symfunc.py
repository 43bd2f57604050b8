"""
Homogeneous symmetric functions over Q(t), stored in the Schur basis.

Every SymFunc is a map Partition -> RatFunc of Schur coefficients. Other
bases are transition data through Schur: the Hall product is a dot product,
omega relabels keys by conjugation, and products go through power sums.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import cache
from math import factorial, prod
from types import MappingProxyType

from . import conf
from .exceptions import DegreeCapExceededError, InvalidInputError, SizeMismatchError, UnknownFunctionError
from .partitions import Partition, conjugate, partitions_of, sort_to_partition
from .ratfunc import ONE, ZERO, RatFunc, invert_matrix
from .tableaux import kostka_number

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    M = "m"
    E = "e"
    H = "h"
    P = "p"
    S = "s"
    HALL_LITTLEWOOD_P = "P"
    TRANSFORMED_H = "H"
    MODIFIED_H = "Hmod"
    WHITTAKER = "W"
    WHITTAKER_DUAL = "Wdual"

    @classmethod
    def parse(cls, tag):
        try:
            return cls(tag)
        except ValueError as exc:
            raise UnknownFunctionError(tag, [b.value for b in cls]) from exc

    @property
    def is_classical(self):
        return self in CLASSICAL


CLASSICAL = frozenset({Basis.M, Basis.E, Basis.H, Basis.P, Basis.S})


def check_degree(degree):
    cap = conf.degree_cap()
    if degree > cap:
        logger.warning("refusing degree %d symmetric function (cap %d)", degree, cap)
        raise DegreeCapExceededError(degree, cap)


class SymFunc:
    """Homogeneous symmetric function of fixed degree in Schur coordinates."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        clean = {}
        for lam, value in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.size != degree:
                raise SizeMismatchError(degree, lam.size, what="degree")
            value = RatFunc(value)
            if value:
                clean[lam] = value
        self.degree = degree
        self.coeffs = MappingProxyType(clean)

    @classmethod
    def zero(cls, degree):
        return cls(degree)

    @classmethod
    def one(cls):
        return cls(0, {Partition(): ONE})

    def coefficient(self, lam):
        return self.coeffs.get(Partition(lam), ZERO)

    def is_zero(self):
        return not self.coeffs

    def map_coefficients(self, fn):
        return SymFunc(self.degree, {lam: fn(c) for lam, c in self.coeffs.items()})

    def _check_same_degree(self, other):
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise SizeMismatchError(self.degree, other.degree, what="degree")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_same_degree(other)
        degree = self.degree if self.coeffs else other.degree
        keys = set(self.coeffs) | set(other.coeffs)
        return SymFunc(degree, {k: self.coefficient(k) + other.coefficient(k) for k in keys})

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.map_coefficients(lambda c: c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.map_coefficients(lambda c: c * other)
        return NotImplemented

    def __truediv__(self, other):
        return self.map_coefficients(lambda c: c / other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = " + ".join(f"({c})*s{tuple(lam)}" for lam, c in sorted(self.coeffs.items()))
        return f"SymFunc[{self.degree}]({terms or '0'})"


def linear_combination(degree, terms):
    """sum of c * f over (c, f) pairs, all f of the given degree."""
    acc = {}
    for c, f in terms:
        if not c:
            continue
        for lam, value in f.coeffs.items():
            acc[lam] = acc.get(lam, ZERO) + c * value
    return SymFunc(degree, acc)


# -- characters -------------------------------------------------------

def _beta_set(lam, length):
    return tuple(lam.part(i) + length - 1 - i for i in range(length))


def _from_beta(beta):
    length = len(beta)
    ordered = sorted(beta, reverse=True)
    return Partition(b - (length - 1 - i) for i, b in enumerate(ordered))


@cache
def character(lam, mu):
    """chi^lam(mu) by Murnaghan-Nakayama rim-hook removal on beta numbers."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(lam.size, mu.size)
    if not mu:
        return 1
    r, rest = mu[0], Partition(mu[1:])
    beta = _beta_set(lam, len(lam))
    members = set(beta)
    total = 0
    for b in beta:
        moved = b - r
        if moved < 0 or moved in members:
            continue
        height = sum(1 for x in beta if moved < x < b)
        new_beta = tuple(moved if x == b else x for x in beta)
        total += (-1) ** height * character(_from_beta(new_beta), rest)
    return total


def z_factor(mu):
    """z_mu = prod_i i^{m_i} m_i!."""
    counts = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    return prod(i**m * factorial(m) for i, m in counts.items())


# -- classical bases in Schur coordinates -----------------------------

@cache
def _monomial_rows(n):
    """Rows of K^{-1}: m_mu = sum_lam (K^{-1})_{mu,lam} s_lam."""
    shapes = partitions_of(n)
    kostka = [[RatFunc(kostka_number(lam, mu)) for mu in shapes] for lam in shapes]
    inverse = invert_matrix(kostka)
    logger.debug("inverted Kostka matrix of size %d", len(shapes))
    return {mu: dict(zip(shapes, inverse[j])) for j, mu in enumerate(shapes)}


@cache
def _classical(tag, lam):
    n = lam.size
    if tag is Basis.S:
        return SymFunc(n, {lam: ONE})
    if tag is Basis.H:
        return SymFunc(n, {nu: kostka_number(nu, lam) for nu in partitions_of(n)})
    if tag is Basis.E:
        return SymFunc(n, {nu: kostka_number(conjugate(nu), lam) for nu in partitions_of(n)})
    if tag is Basis.P:
        return SymFunc(n, {nu: character(nu, lam) for nu in partitions_of(n)})
    if tag is Basis.M:
        return SymFunc(n, _monomial_rows(n)[lam])
    raise UnknownFunctionError(tag.value, [b.value for b in CLASSICAL])


def _hl_constructor(tag):
    from . import hlwhittaker

    return {
        Basis.HALL_LITTLEWOOD_P: hlwhittaker.hl_P,
        Basis.TRANSFORMED_H: hlwhittaker.htrans,
        Basis.MODIFIED_H: hlwhittaker.hmod,
        Basis.WHITTAKER: hlwhittaker.whittaker_W,
        Basis.WHITTAKER_DUAL: hlwhittaker.whittaker_dual,
    }[tag]


def from_basis(tag, lam):
    """The basis element tag_lam in Schur coordinates."""
    tag = Basis.parse(tag) if not isinstance(tag, Basis) else tag
    lam = Partition(lam)
    check_degree(lam.size)
    if tag.is_classical:
        return _classical(tag, lam)
    return _hl_constructor(tag)(lam)


def combine(tag, degree, coeffs):
    """sum_lam coeffs[lam] * tag_lam."""
    return linear_combination(degree, [(RatFunc(c), from_basis(tag, lam)) for lam, c in coeffs.items()])


# -- coefficient extraction -------------------------------------------

# basis -> basis it is Hall-dual to
_DUALS = {
    Basis.M: Basis.H,
    Basis.H: Basis.M,
    Basis.HALL_LITTLEWOOD_P: Basis.TRANSFORMED_H,
    Basis.TRANSFORMED_H: Basis.HALL_LITTLEWOOD_P,
    Basis.WHITTAKER: Basis.WHITTAKER_DUAL,
    Basis.WHITTAKER_DUAL: Basis.WHITTAKER,
}


@cache
def _inverse_rows(tag, n):
    shapes = partitions_of(n)
    rows = [[from_basis(tag, lam).coefficient(nu) for nu in shapes] for lam in shapes]
    logger.debug("inverting %s transition matrix of degree %d", tag.value, n)
    return shapes, invert_matrix(rows)


def to_basis(f, tag):
    """Coefficients of f in the basis `tag`, zero coefficients omitted."""
    tag = Basis.parse(tag) if not isinstance(tag, Basis) else tag
    n = f.degree
    check_degree(n)
    shapes = partitions_of(n)
    if tag is Basis.S:
        return dict(f.coeffs)
    if tag is Basis.P:
        found = {mu: hall_inner(f, from_basis(Basis.P, mu)) / z_factor(mu) for mu in shapes}
    elif tag is Basis.E:
        flipped = omega(f)
        found = {mu: hall_inner(flipped, from_basis(Basis.M, mu)) for mu in shapes}
    elif tag in _DUALS:
        found = {mu: hall_inner(f, from_basis(_DUALS[tag], mu)) for mu in shapes}
    else:
        shapes, inverse = _inverse_rows(tag, n)
        found = {}
        for j, mu in enumerate(shapes):
            found[mu] = sum((f.coefficient(nu) * inverse[i][j] for i, nu in enumerate(shapes)), ZERO)
    return {mu: c for mu, c in found.items() if c}


# -- products ---------------------------------------------------------

def from_power_sums(degree, coeffs):
    """Schur form of sum_mu coeffs[mu] * p_mu."""
    return combine(Basis.P, degree, coeffs)


def multiply(f, g):
    degree = f.degree + g.degree
    check_degree(degree)
    if f.is_zero() or g.is_zero():
        return SymFunc.zero(degree)
    left, right = to_basis(f, Basis.P), to_basis(g, Basis.P)
    product_coeffs = {}
    for lam, a in left.items():
        for mu, b in right.items():
            key = sort_to_partition(tuple(lam) + tuple(mu))
            product_coeffs[key] = product_coeffs.get(key, ZERO) + a * b
    return from_power_sums(degree, product_coeffs)


def product_of(factors):
    result = SymFunc.one()
    for factor in factors:
        result = multiply(result, factor)
    return result


def hall_inner(f, g):
    if f.degree != g.degree:
        return ZERO
    small, large = (f, g) if len(f.coeffs) <= len(g.coeffs) else (g, f)
    return sum((c * large.coefficient(lam) for lam, c in small.coeffs.items()), ZERO)


def omega(f):
    return SymFunc(f.degree, {conjugate(lam): c for lam, c in f.coeffs.items()})


# -- JSON -------------------------------------------------------------

def to_json(f, tag=Basis.S):
    tag = Basis.parse(tag) if not isinstance(tag, Basis) else tag
    coeffs = to_basis(f, tag)
    return {
        "degree": f.degree,
        "basis": tag.value,
        "coeffs": [{"part": list(lam), "value": coeffs[lam].to_json()} for lam in sorted(coeffs)],
    }


def from_json(payload):
    try:
        degree = int(payload["degree"])
        tag = Basis.parse(payload.get("basis", "s"))
        coeffs = {Partition(item["part"]): RatFunc.from_json(item["value"]) for item in payload["coeffs"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad symmetric function payload: {exc}") from exc
    return combine(tag, degree, coeffs)
