"""
Integer partitions, weak compositions and the shape predicates used to index
every basis, profile and similarity class type.

Partitions and compositions are immutable tuples with trailing zeros
stripped, so compositions that only differ by trailing zeros compare equal.
Partitions of the same size sort lexicographically: (1^n) first, (n) last.
"""
import logging
from dataclasses import dataclass
from functools import cache
from itertools import chain, product
from math import comb

from sympy.utilities.iterables import partitions as _sympy_partitions

from . import conf
from .exceptions import DegreeCapExceededError, InvalidInputError, SizeMismatchError

logger = logging.getLogger(__name__)


def _strip(parts):
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise InvalidInputError(f"negative entry in {parts}")
    while parts and parts[-1] == 0:
        parts.pop()
    return parts


class WeakComposition(tuple):
    """Finite sequence of nonnegative integers, trailing zeros ignored."""

    def __new__(cls, parts=()):
        return super().__new__(cls, _strip(parts))

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """0-based access returning 0 past the end."""
        return self[i] if i < len(self) else 0

    def is_partition(self):
        return all(self[i] >= self[i + 1] for i in range(len(self) - 1)) and 0 not in self

    def __repr__(self):
        return f"WeakComposition{tuple(self)}"


class Partition(tuple):
    """Weakly decreasing sequence of positive integers."""

    def __new__(cls, parts=()):
        parts = _strip(parts)
        if 0 in parts or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, i):
        """0-based access returning 0 past the end."""
        return self[i] if i < len(self) else 0

    def __repr__(self):
        return f"Partition{tuple(self)}"


@dataclass(frozen=True)
class SkewPair:
    """Skew shape outer/inner."""

    outer: Partition
    inner: Partition

    def is_valid(self):
        return all(self.inner.part(i) <= self.outer.part(i) for i in range(len(self.inner)))

    @property
    def size(self):
        return self.outer.size - self.inner.size


def _part(seq, i):
    return seq[i] if i < len(seq) else 0


def conjugate(lam):
    """Return lam' with lam'_j = #{i : lam_i >= j}."""
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominates(mu, nu):
    """True iff every prefix sum of mu is at least the matching prefix sum of nu."""
    if sum(mu) != sum(nu):
        raise SizeMismatchError(sum(mu), sum(nu))
    left = right = 0
    for i in range(max(len(mu), len(nu))):
        left += _part(mu, i)
        right += _part(nu, i)
        if left < right:
            return False
    return True


def contains(outer, inner):
    return all(_part(inner, i) <= _part(outer, i) for i in range(len(inner)))


def is_horizontal_strip(skew):
    """At most one box of outer/inner in every column."""
    outer, inner = skew.outer, skew.inner
    if not contains(outer, inner):
        return False
    return all(_part(outer, i + 1) <= _part(inner, i) for i in range(len(outer)))


def n_stat(lam):
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def epsilon(lam):
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def dot(mu, nu):
    """mu . nu = sum mu_j nu_j."""
    return sum(a * b for a, b in zip(mu, nu))


def binom2_sum(lam, start=0):
    """sum_{j >= start} binom(lam_j, 2), 0-based start."""
    return sum(comb(p, 2) for p in lam[start:])


def sort_to_partition(alpha):
    return Partition(sorted((p for p in alpha if p), reverse=True))


def partitions_of(n):
    """All partitions of n in lexicographic order, (1^n) first and (n) last."""
    if n < 0:
        raise InvalidInputError(f"cannot partition {n}")
    cap = conf.partition_cap()
    if n > cap:
        raise DegreeCapExceededError(n, cap)
    return _partitions_of(n)


@cache
def _partitions_of(n):
    if n == 0:
        return (Partition(),)
    found = [
        Partition(sorted(chain.from_iterable([k] * m for k, m in p.items()), reverse=True))
        for p in _sympy_partitions(n)
    ]
    logger.debug("enumerated %d partitions of %d", len(found), n)
    return tuple(sorted(found))


def partitions_up_to(n, strict=False):
    """The order ideal of partitions of size < n (strict) or <= n, by size."""
    top = n - 1 if strict else n
    return tuple(chain.from_iterable(partitions_of(k) for k in range(top + 1)))


def strip_inners(outer):
    """Every inner partition mu such that outer/mu is a horizontal strip."""
    ranges = [range(_part(outer, i + 1), outer[i] + 1) for i in range(len(outer))]
    for choice in product(*ranges):
        yield Partition(choice)
