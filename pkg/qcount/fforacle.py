"""
Brute-force ground truth over prime fields.

Subspaces of F_p^n are kept as reduced row-echelon bases, so a subspace has
exactly one representation. Every exhaustive loop checks the enumeration
budget from Gaussian-binomial counts before it starts.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow

from . import conf
from .exceptions import (
    EnumerationBudgetError,
    FieldMismatchError,
    InvalidInputError,
    NotPrimeError,
    SizeMismatchError,
    UnrealizableTypeError,
)
from .partitions import Partition, WeakComposition
from .profiles import ProfileTuple
from .ratfunc import q_binomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FpMatrix:
    p: int
    n: int
    entries: tuple

    def __post_init__(self):
        if not isprime(self.p):
            raise NotPrimeError(self.p)
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise InvalidInputError(f"expected a {self.n}x{self.n} matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_array(cls, p, array):
        array = np.asarray(array, dtype=np.int64)
        return cls(p, array.shape[0], tuple(map(tuple, array.tolist())))

    @classmethod
    def zero(cls, p, n):
        return cls.from_array(p, np.zeros((n, n), dtype=np.int64))

    @classmethod
    def identity(cls, p, n):
        return cls.from_array(p, np.eye(n, dtype=np.int64))

    @property
    def array(self):
        return np.array(self.entries, dtype=np.int64).reshape(self.n, self.n)


@dataclass(frozen=True)
class Subspace:
    p: int
    n: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    @property
    def array(self):
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, self.n)


def _check_same_field(*objects):
    fields = {(obj.p, obj.n) for obj in objects}
    if len(fields) > 1:
        raise FieldMismatchError(f"objects live over different spaces: {sorted(fields)}")


def rref(rows, p, n):
    """Row space of `rows` over F_p as a Subspace."""
    A = np.array(rows, dtype=np.int64).reshape(-1, n) % p
    m = A.shape[0]
    r = 0
    for c in range(n):
        if r >= m:
            break
        nonzero = np.where(A[r:, c] != 0)[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        A[r, :] = (A[r, :] * pow(int(A[r, c]), -1, p)) % p
        others = np.where(A[:, c] != 0)[0]
        others = others[others != r]
        if others.size:
            A[others, :] = (A[others, :] - np.outer(A[others, c], A[r, :])) % p
        r += 1
    return Subspace(p, n, tuple(map(tuple, A[:r].tolist())))


def zero_subspace(p, n):
    return Subspace(p, n, ())


def sum_spaces(U, V):
    _check_same_field(U, V)
    return rref(list(U.basis) + list(V.basis), U.p, U.n)


def apply(delta, W):
    """Image of W under delta."""
    _check_same_field(delta, W)
    if not W.dim:
        return W
    return rref((W.array @ delta.array.T) % W.p, W.p, W.n)


def contains_space(U, V):
    """V is a subspace of U."""
    return sum_spaces(U, V).dim == U.dim


def is_invariant(W, delta):
    return contains_space(W, apply(delta, W))


# -- enumeration ------------------------------------------------------

def subspace_count(p, n, dim=None):
    dims = range(n + 1) if dim is None else [dim]
    return sum(int(q_binomial(n, m).eval_at(p)) for m in dims)


def check_budget(required):
    budget = conf.enumeration_budget()
    if required > budget:
        logger.warning("refusing enumeration of %d items (budget %d)", required, budget)
        raise EnumerationBudgetError(required, budget)


def all_subspaces(p, n, dim=None):
    """Every subspace of F_p^n (of the given dimension) exactly once."""
    if not isprime(p):
        raise NotPrimeError(p)
    if dim is not None and not 0 <= dim <= n:
        raise InvalidInputError(f"dimension {dim} outside [0, {n}]")
    check_budget(subspace_count(p, n, dim))
    return _enumerate(p, n, dim)


def _enumerate(p, n, dim):
    dims = range(n + 1) if dim is None else [dim]
    for m in dims:
        for pivots in combinations(range(n), m):
            pivot_set = set(pivots)
            free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pivot_set]
            for values in product(range(p), repeat=len(free)):
                A = np.zeros((m, n), dtype=np.int64)
                for i, c in enumerate(pivots):
                    A[i, c] = 1
                for (i, j), value in zip(free, values):
                    A[i, j] = value
                yield Subspace(p, n, tuple(map(tuple, A.tolist())))


def krylov_chain(W, delta, steps=None):
    """Dimensions of U_1 = W, U_{j+1} = U_j + delta U_j, up to `steps` or stabilization."""
    dims = [W.dim]
    current = W
    while steps is None or len(dims) < steps:
        nxt = sum_spaces(current, apply(delta, current))
        if steps is None and nxt.dim == current.dim:
            break
        dims.append(nxt.dim)
        current = nxt
    return dims


def _increments(dims):
    return [b - a for a, b in zip([0] + dims[:-1], dims)]


def profile_of(W, delta):
    _check_same_field(W, delta)
    if not W.dim:
        return Partition()
    return Partition(_increments(krylov_chain(W, delta)))


def partial_profile_of(W, delta, r):
    _check_same_field(W, delta)
    if r == 0:
        return ProfileTuple()
    return ProfileTuple(_increments(krylov_chain(W, delta, steps=r)))


# -- counts -----------------------------------------------------------

def sigma_bruteforce(mu, delta):
    mu = Partition(mu)
    if mu.size > delta.n:
        return 0
    count = sum(1 for W in all_subspaces(delta.p, delta.n, mu.part(0)) if profile_of(W, delta) == mu)
    logger.debug("sigma_bruteforce %s over F_%d: %d", tuple(mu), delta.p, count)
    return count


def invariant_subspaces(delta, dim=None):
    return [W for W in all_subspaces(delta.p, delta.n, dim) if is_invariant(W, delta)]


def invariant_subspace_bruteforce(m, delta):
    return len(invariant_subspaces(delta, m))


def flag_count_bruteforce(alpha, delta):
    """Flags of invariant subspaces with dimension jumps alpha (any order)."""
    alpha = WeakComposition(alpha)
    if alpha.size != delta.n:
        raise SizeMismatchError(alpha.size, delta.n)
    by_dim = {}
    for W in invariant_subspaces(delta):
        by_dim.setdefault(W.dim, []).append(W)
    level = {zero_subspace(delta.p, delta.n): 1}
    reached = 0
    for jump in alpha:
        reached += jump
        nxt = {}
        for W in by_dim.get(reached, []):
            total = sum(ways for V, ways in level.items() if contains_space(W, V))
            if total:
                nxt[W] = total
        level = nxt
    return sum(level.values())


def partial_profile_bruteforce(rho, delta):
    rho = ProfileTuple(rho)
    if not rho:
        return subspace_count(delta.p, delta.n)
    if rho[0] > delta.n:
        return 0
    return sum(
        1
        for W in all_subspaces(delta.p, delta.n, rho[0])
        if partial_profile_of(W, delta, len(rho)) == rho
    )


def anti_invariant_bruteforce(m, fold, delta):
    return partial_profile_bruteforce((m,) * (fold + 1), delta)


def spanning_tuple_count(p, k, m):
    """Number of k-tuples of vectors spanning a fixed m-dimensional space."""
    count = 1
    for i in range(m):
        count *= p**k - p**i
    return count


def krylov_bruteforce(k, ell, delta, method="subspaces"):
    """Probability that k random vectors generate F_p^n under ell-truncated Krylov iteration."""
    p, n = delta.p, delta.n
    if method == "subspaces":
        hits = 0
        for W in all_subspaces(p, n):
            if W.dim > k:
                continue
            if krylov_chain(W, delta, steps=ell)[-1] == n:
                hits += spanning_tuple_count(p, k, W.dim)
    elif method == "tuples":
        check_budget(p ** (n * k))
        hits = 0
        for flat in product(range(p), repeat=n * k):
            W = rref(np.array(flat, dtype=np.int64).reshape(k, n), p, n)
            if krylov_chain(W, delta, steps=ell)[-1] == n:
                hits += 1
    else:
        raise InvalidInputError(f"unknown Krylov method '{method}'")
    return Fraction(hits, p ** (n * k))


# -- matrices of a given type -----------------------------------------

def monic_irreducibles(p, d):
    """Monic irreducible polynomials of degree d over F_p, leading coefficient first, lex order."""
    found = []
    for tail in product(range(p), repeat=d):
        poly = [ZZ(1)] + [ZZ(c) for c in tail]
        if gf_irreducible_p(poly, p, ZZ):
            found.append([int(c) for c in poly])
    return found


def companion(poly, p):
    """Companion matrix of a monic polynomial given leading coefficient first."""
    degree = len(poly) - 1
    C = np.zeros((degree, degree), dtype=np.int64)
    C[1:, :-1] = np.eye(degree - 1, dtype=np.int64)
    C[:, -1] = [(-c) % p for c in reversed(poly[1:])]
    return C


def build_matrix_of_type(tau, p, shift=0):
    """Block-diagonal matrix of companion blocks realizing tau over F_p."""
    if not isprime(p):
        raise NotPrimeError(p)
    pools = {}
    used = {}
    blocks = []
    for d, shape in tau.blocks:
        pool = pools.setdefault(d, monic_irreducibles(p, d))
        index = shift + used.get(d, 0)
        used[d] = used.get(d, 0) + 1
        needed = shift + tau.degree_demand()[d]
        if needed > len(pool):
            raise UnrealizableTypeError(p, d, needed, len(pool))
        g = [ZZ(c) for c in pool[index]]
        for part in shape:
            power = [int(c) for c in gf_pow(g, part, p, ZZ)]
            blocks.append(companion(power, p))
    size = sum(block.shape[0] for block in blocks)
    M = np.zeros((size, size), dtype=np.int64)
    offset = 0
    for block in blocks:
        width = block.shape[0]
        M[offset : offset + width, offset : offset + width] = block
        offset += width
    logger.debug("built %dx%d matrix of type %s over F_%d", size, size, tau, p)
    return FpMatrix.from_array(p, M)
