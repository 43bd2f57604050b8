"""
Semistandard Young tableaux and the Kostka family they generate.

Tableaux are built one letter at a time: the cells holding letter k form a
horizontal strip of size content[k-1] added to the shape filled so far.
Charge uses the reading word taken row by row from the bottom row up, each
row left to right.
"""
import logging
from dataclasses import dataclass
from functools import cache
from itertools import product

from .exceptions import NonPartitionContentError, SizeMismatchError
from .partitions import Partition, WeakComposition, n_stat
from .ratfunc import ZERO, RatFunc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SSYT:
    rows: tuple
    shape: Partition
    content: WeakComposition

    def reading_word(self):
        return [letter for row in reversed(self.rows) for letter in row]

    def charge(self):
        return charge(self)

    def cocharge(self):
        return cocharge(self)


def _grow(current, shape, size):
    """Partitions nu inside shape with nu/current a horizontal strip of `size` boxes."""
    ranges = []
    for i in range(len(shape)):
        low = current.part(i)
        high = shape[i] if i == 0 else min(shape[i], current.part(i - 1))
        if high < low:
            return
        ranges.append(range(low, high + 1))
    for choice in product(*ranges):
        if sum(choice) - current.size == size:
            yield Partition(choice)


def _chains(shape, content):
    chains = [(Partition(),)]
    for size in content:
        chains = [chain + (nxt,) for chain in chains for nxt in _grow(chain[-1], shape, size)]
    return [chain for chain in chains if chain[-1] == shape]


def _rows_from_chain(chain, shape):
    rows = [[] for _ in shape]
    for letter, (inner, outer) in enumerate(zip(chain, chain[1:]), start=1):
        for i in range(len(shape)):
            rows[i].extend([letter] * (outer.part(i) - inner.part(i)))
    return tuple(tuple(row) for row in rows)


def enumerate_ssyt(shape, content):
    """All SSYT of the given shape and content, in lexicographic order of their chains."""
    shape, content = Partition(shape), WeakComposition(content)
    if shape.size != content.size:
        raise SizeMismatchError(shape.size, content.size)
    return list(_enumerate_ssyt(shape, content))


@cache
def _enumerate_ssyt(shape, content):
    found = tuple(
        SSYT(_rows_from_chain(chain, shape), shape, content) for chain in _chains(shape, content)
    )
    logger.debug("shape %s content %s: %d tableaux", tuple(shape), tuple(content), len(found))
    return found


def word_charge(word):
    """Charge of a word whose content is a partition."""
    remaining = list(word)
    length = len(remaining)
    total = 0
    while any(letter is not None for letter in remaining):
        top = max(letter for letter in remaining if letter is not None)
        pos = length
        index = 0
        for letter in range(1, top + 1):
            found = next((j for j in range(pos - 1, -1, -1) if remaining[j] == letter), None)
            if found is None:
                found = next(j for j in range(length - 1, pos - 1, -1) if remaining[j] == letter)
                if letter > 1:
                    index += 1
            total += index
            remaining[found] = None
            pos = found
    return total


def charge(tableau):
    content = tableau.content
    if not content.is_partition():
        raise NonPartitionContentError(content)
    return word_charge(tableau.reading_word())


def cocharge(tableau):
    return n_stat(tableau.content) - charge(tableau)


def kostka_number(lam, mu):
    """K_{lam,mu} = number of SSYT of shape lam and content mu."""
    return len(enumerate_ssyt(lam, mu))


@cache
def _statistic_table(lam, mu):
    """(charge, cocharge) of every tableau of shape lam and content mu."""
    return tuple((charge(t), cocharge(t)) for t in enumerate_ssyt(lam, mu))


def _generating_polynomial(exponents):
    if not exponents:
        return ZERO
    coeffs = [0] * (max(exponents) + 1)
    for e in exponents:
        coeffs[e] += 1
    return RatFunc.from_coeffs(coeffs)


def kostka_foulkes(lam, mu):
    """K_{lam,mu}(t): charge generating polynomial."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(lam.size, mu.size)
    return _generating_polynomial([c for c, _ in _statistic_table(lam, mu)])


def modified_kostka(lam, mu):
    """K~_{lam,mu}(t): cocharge generating polynomial, shape lam, content mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(lam.size, mu.size)
    return _generating_polynomial([cc for _, cc in _statistic_table(lam, mu)])

