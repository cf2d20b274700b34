"""Level-k weight alphabet of SU(n).

Weights are stored as tuples of Dynkin labels ``(l_1, ..., l_{n-1})``.
The alphabet is ordered lexicographically on labels; since the all-zero
tuple is the lexicographic minimum, the vacuum always comes first and
every matrix in the package indexes rows and columns in this order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

Weight = tuple[int, ...]


@dataclass(frozen=True)
class AlgebraParams:
    """The pair ``(n, k)`` selecting SU(n) at level k."""

    n: int
    k: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"level k must be an integer >= 1, got {self.k!r}")

    @property
    def rank(self) -> int:
        return self.n - 1

    @property
    def height(self) -> int:
        """The shifted level ``k + n`` appearing in all modular data."""
        return self.k + self.n

    @property
    def vacuum(self) -> Weight:
        return (0,) * self.rank

    def contains(self, lam) -> bool:
        return (len(lam) == self.rank and all(l >= 0 for l in lam)
                and sum(lam) <= self.k)


@lru_cache(maxsize=None)
def _alphabet(n: int, k: int) -> tuple[Weight, ...]:
    rank = n - 1
    return tuple(lam for lam in product(range(k + 1), repeat=rank) if sum(lam) <= k)


def enumerate_alphabet(p: AlgebraParams) -> list[Weight]:
    """All dominant integrable weights of SU(n) at level k, vacuum first.

    ``itertools.product`` yields tuples in lexicographic order, which is
    the canonical order used throughout the package.
    """
    return list(_alphabet(p.n, p.k))


def alphabet_size(p: AlgebraParams) -> int:
    """Closed form ``C(n-1+k, n-1)``; used as a cross-check on enumeration."""
    return comb(p.rank + p.k, p.rank)


def index_of(p: AlgebraParams) -> dict[Weight, int]:
    return {lam: i for i, lam in enumerate(_alphabet(p.n, p.k))}


def conjugate(lam) -> Weight:
    """Charge conjugate: reverse the Dynkin labels."""
    return tuple(reversed(tuple(lam)))


def is_self_conjugate(lam) -> bool:
    lam = tuple(lam)
    return lam == conjugate(lam)


def conjugation_permutation(p: AlgebraParams) -> list[int]:
    """``perm[i]`` is the alphabet index of the conjugate of weight ``i``."""
    idx = index_of(p)
    return [idx[conjugate(lam)] for lam in _alphabet(p.n, p.k)]


def t_invariant(lam) -> int:
    """``sum_i i * l_i`` (1-based), the number of boxes of the partition."""
    return sum(i * l for i, l in enumerate(lam, start=1))


def self_conjugate_weights(p: AlgebraParams) -> list[Weight]:
    return [lam for lam in _alphabet(p.n, p.k) if is_self_conjugate(lam)]


def self_conjugate_count(p: AlgebraParams) -> int:
    """Number of weights with ``lam == conjugate(lam)``.

    This is also the number of twisted sectors of the conjugation orbifold.
    """
    return len(self_conjugate_weights(p))


def partition_of(lam) -> list[int]:
    """Young diagram of a weight: ``parts[i] = sum_{j >= i} l_j``, zeros dropped."""
    parts = []
    acc = 0
    for l in reversed(tuple(lam)):
        acc += l
        parts.append(acc)
    parts.reverse()
    return [x for x in parts if x > 0]


def shifted_parts(lam) -> list[int]:
    """``sum_{i <= j <= n-1} (l_j + 1)`` for each i: the partition of ``lam + rho``."""
    out = []
    acc = 0
    for l in reversed(tuple(lam)):
        acc += l + 1
        out.append(acc)
    out.reverse()
    return out


def inner_product(lam, mu) -> Fraction:
    """Killing-form pairing of two weights in the Dynkin basis.

    Normalized so that roots have squared length 2, i.e. the Gram matrix of
    the fundamental weights is the inverse Cartan matrix
    ``min(i, j) * (n - max(i, j)) / n``.
    """
    lam, mu = tuple(lam), tuple(mu)
    n = len(lam) + 1
    total = Fraction(0)
    for i, a in enumerate(lam, start=1):
        if a == 0:
            continue
        for j, b in enumerate(mu, start=1):
            if b:
                total += Fraction(a * b * min(i, j) * (n - max(i, j)), n)
    return total


def rho(p: AlgebraParams) -> Weight:
    return (1,) * p.rank


def epsilon_coordinates(lam) -> list[Fraction]:
    """Orthonormal-basis coordinates of a weight, projected to sum zero."""
    parts = [0] * (len(tuple(lam)) + 1)
    acc = 0
    for i, l in reversed(list(enumerate(lam))):
        acc += l
        parts[i] = acc
    mean = Fraction(sum(parts), len(parts))
    return [x - mean for x in parts]
