"""
Exact arithmetic in the field Q(t).

RatFunc wraps an element of sympy's sparse rational-function field over QQ.
sympy cancels common factors on every operation; on top of that the public
view (coefficients, equality, hashing, JSON) always uses the representative
with a monic denominator, so structural equality is mathematical equality.
Negative powers of t are ordinary RatFuncs with denominator t^k.
"""
import logging
from fractions import Fraction
from functools import cache
from tokenize import TokenError

from sympy import QQ, Symbol, SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import field
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .exceptions import (
    DivisionByZeroError,
    InvalidInputError,
    NegativeArgumentError,
    PoleError,
    SizeMismatchError,
)

logger = logging.getLogger(__name__)

FIELD, _T = field("t", QQ)
RING = FIELD.ring
DOMAIN = FIELD.to_domain()
_SYMBOL = Symbol("t")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def _poly(coeffs):
    """Polynomial in RING from ascending coefficients."""
    return RING.from_dict({(k,): _to_qq(c) for k, c in enumerate(coeffs) if c})


def _coeff_list(poly):
    terms = dict(poly.terms())
    if not terms:
        return []
    degree = max(k for (k,) in terms)
    return [_to_fraction(terms[(k,)]) if (k,) in terms else Fraction(0) for k in range(degree + 1)]


class RatFunc:
    """Reduced rational function in t over Q."""

    __slots__ = ("_value", "_canonical")

    def __init__(self, value=0):
        if isinstance(value, RatFunc):
            value = value._value
        elif not hasattr(value, "numer"):
            value = FIELD(_poly([value]))
        self._value = value
        self._canonical = None

    # -- construction -------------------------------------------------

    @classmethod
    def t(cls):
        return cls(_T)

    @classmethod
    def from_coeffs(cls, num, den=(1,)):
        den_poly = _poly(den)
        if not den_poly:
            raise DivisionByZeroError()
        return cls(FIELD(_poly(num)) / FIELD(den_poly))

    @classmethod
    def monomial(cls, exponent, coeff=1):
        """coeff * t^exponent, exponent may be negative."""
        if exponent >= 0:
            return cls.from_coeffs([0] * exponent + [coeff])
        return cls.from_coeffs([coeff], [0] * (-exponent) + [1])

    # -- canonical view -----------------------------------------------

    def _canon(self):
        if self._canonical is None:
            num = _coeff_list(self._value.numer)
            den = _coeff_list(self._value.denom)
            lead = den[-1]
            self._canonical = (
                tuple(c / lead for c in num),
                tuple(c / lead for c in den),
            )
        return self._canonical

    @property
    def num(self):
        """Numerator coefficients, ascending powers of t."""
        return list(self._canon()[0])

    @property
    def den(self):
        """Monic denominator coefficients, ascending powers of t."""
        return list(self._canon()[1])

    def is_zero(self):
        return not self._value

    def is_polynomial(self):
        return len(self._canon()[1]) == 1

    def has_integer_coefficients(self):
        return self.is_polynomial() and all(c.denominator == 1 for c in self.num)

    def coefficients(self):
        """Ascending coefficients of a polynomial; raises if not a polynomial."""
        if not self.is_polynomial():
            raise InvalidInputError(f"{self} is not a polynomial")
        return self.num

    def degree(self):
        return len(self._canon()[0]) - 1

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other._value
        if isinstance(other, (int, Fraction)):
            return FIELD(_poly([other]))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self._value + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self._value - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(other - self._value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self._value * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise DivisionByZeroError()
        return RatFunc(self._value / other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._value:
            raise DivisionByZeroError()
        return RatFunc(other / self._value)

    def __neg__(self):
        return RatFunc(-self._value)

    def __pow__(self, exponent):
        if exponent < 0 and not self._value:
            raise DivisionByZeroError()
        return RatFunc(self._value ** exponent)

    def __bool__(self):
        return bool(self._value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self._canon() == other._canon()

    def __hash__(self):
        return hash(self._canon())

    # -- substitutions ------------------------------------------------

    def subst_power(self, d):
        """f(t^d)."""
        if d < 1:
            raise NegativeArgumentError("d", d)

        def stretch(poly):
            return RING.from_dict({(k * d,): c for (k,), c in poly.terms()})

        return RatFunc(FIELD(stretch(self._value.numer)) / FIELD(stretch(self._value.denom)))

    def subst_invert(self):
        """f(1/t), reduced."""
        if not self._value:
            return RatFunc(0)
        num, den = self._canon()
        shift = (len(den) - 1) - (len(num) - 1)
        flipped = FIELD(_poly(num[::-1])) / FIELD(_poly(den[::-1]))
        return RatFunc(flipped) * RatFunc.monomial(shift)

    def eval_at(self, q):
        """Exact value at t=q."""
        q = Fraction(q)
        num, den = self._canon()
        bottom = sum(c * q**k for k, c in enumerate(den))
        if bottom == 0:
            raise PoleError(self, q)
        return sum(c * q**k for k, c in enumerate(num)) / bottom

    # -- rendering ----------------------------------------------------

    def __str__(self):
        num, den = self._canon()
        if len(den) == 1:
            return _render_poly(num)
        return f"({_render_poly(num)})/({_render_poly(den)})"

    def __repr__(self):
        return f"RatFunc({self})"

    def to_json(self):
        num, den = self._canon()
        return {"num": [_render_fraction(c) for c in num], "den": [_render_fraction(c) for c in den]}

    @classmethod
    def from_json(cls, payload):
        try:
            num = [Fraction(c) for c in payload["num"]]
            den = [Fraction(c) for c in payload.get("den", ["1"])]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"bad rational function payload: {payload}") from exc
        return cls.from_coeffs(num, den)

    @classmethod
    def parse(cls, text):
        """Inverse of str(); accepts any rational expression in t, with ^ for powers."""
        try:
            expr = parse_expr(text, local_dict={"t": _SYMBOL}, transformations=_TRANSFORMATIONS)
            return cls(FIELD.from_expr(expr))
        except (SympifyError, SyntaxError, TokenError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"cannot parse rational function '{text}'") from exc


def _render_fraction(c):
    return f"{c.numerator}/{c.denominator}"


def _render_poly(coeffs):
    if not coeffs:
        return "0"
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "t" if k == 1 else f"t^{k}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        terms.append(("-" if c < 0 else "+", body))
    sign, body = terms[0]
    out = f"-{body}" if sign == "-" else body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


ZERO = RatFunc(0)
ONE = RatFunc(1)
T = RatFunc.t()


# -- q-analogs --------------------------------------------------------

@cache
def q_int(n):
    """[n]_t = 1 + t + ... + t^(n-1)."""
    if n < 0:
        raise NegativeArgumentError("n", n)
    return RatFunc.from_coeffs([1] * n)


@cache
def q_factorial(n):
    if n < 0:
        raise NegativeArgumentError("n", n)
    value = ONE
    for k in range(1, n + 1):
        value = value * q_int(k)
    return value


@cache
def q_binomial(n, k):
    """Gaussian binomial; the zero polynomial when k > n."""
    if n < 0:
        raise NegativeArgumentError("n", n)
    if k < 0:
        raise NegativeArgumentError("k", k)
    if k > n:
        return ZERO
    value = q_factorial(n) / (q_factorial(k) * q_factorial(n - k))
    if not value.is_polynomial():
        raise AssertionError(f"[{n} choose {k}] did not divide exactly")
    return value


def q_multinomial(n, alpha):
    if n < 0:
        raise NegativeArgumentError("n", n)
    if sum(alpha) != n:
        raise SizeMismatchError(n, sum(alpha))
    value = q_factorial(n)
    for part in alpha:
        value = value / q_factorial(part)
    return value


def bracket(a, b):
    """Gaussian binomial extended by zero outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return ZERO
    return q_binomial(a, b)


# -- exact linear algebra over Q(t) ------------------------------------

def _domain_matrix(rows):
    size = len(rows)
    return DomainMatrix([[RatFunc(x)._value for x in row] for row in rows], (size, size), DOMAIN)


def invert_matrix(rows):
    """Inverse of a square matrix of RatFuncs (list of rows)."""
    if not rows:
        return []
    try:
        inverse = _domain_matrix(rows).inv()
    except DMNonInvertibleMatrixError as exc:
        raise DivisionByZeroError("matrix is singular") from exc
    size = len(rows)
    return [[RatFunc(inverse[i, j].element) for j in range(size)] for i in range(size)]


def determinant(rows):
    if not rows:
        return ONE
    return RatFunc(_domain_matrix(rows).det())
