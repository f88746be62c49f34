"""Integer partitions, contents, border strips and Littlewood-Richardson products.

Boxes are indexed (row, column) starting at 1 and the content of box (i, j)
is j - i. Schur vectors are plain dicts mapping partitions to integer
coefficients; zero coefficients are never stored.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Dict, Iterable, Iterator, List, Optional, Tuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        parts = tuple(p for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contents(self) -> List[int]:
        """Contents j - i of all boxes, row by row."""
        return [j - i for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def boxes(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


EMPTY = Partition()


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def hook_length_dimension(lam: Partition) -> int:
    """Number f^lambda of standard Young tableaux, via the hook length formula."""
    lam = Partition(lam)
    conj = lam.transpose()
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.size) // prod


# ---------------------------------------------------------------------------
# Border strips via beta numbers

def beta_set(lam: Partition, length: int) -> List[int]:
    """First `length` beta numbers lam_i - i, which is enough once length > len(lam)."""
    return [(lam[i - 1] if i <= len(lam) else 0) - i for i in range(1, length + 1)]


def remove_border_strip(lam: Partition, lo: int, hi: int) -> Optional[Partition]:
    """Remove the border strip occupying content diagonals lo..hi, if it exists.

    Returns the remaining partition or None. A strip with head content hi and
    tail content lo corresponds to sliding the bead at hi down to lo - 1.
    """
    if lo > hi:
        raise ValueError("empty interval")
    lam = Partition(lam)
    pad = len(lam) + (hi - lo) + 2
    beads = beta_set(lam, pad)
    if hi not in beads or (lo - 1) in beads:
        return None
    # hi must belong to a nonempty row
    row = beads.index(hi) + 1
    if row > len(lam):
        return None
    moved = sorted([b for b in beads if b != hi] + [lo - 1], reverse=True)
    return Partition(b + i for i, b in enumerate(moved, 1))


def removable_strips(lam: Partition) -> List[Tuple[int, int]]:
    """All content intervals [lo, hi] of removable border strips."""
    lam = Partition(lam)
    out = []
    for i, row in enumerate(lam, 1):
        hi = row - i
        for lo in range(hi, hi - lam.size, -1):
            if remove_border_strip(lam, lo, hi) is not None:
                out.append((lo, hi))
    return out


# ---------------------------------------------------------------------------
# Pieri rules and Littlewood-Richardson products

SchurVector = Dict[Partition, int]


def _add_into(acc: SchurVector, lam: Partition, c: int) -> None:
    v = acc.get(lam, 0) + c
    if v:
        acc[lam] = v
    else:
        acc.pop(lam, None)


def _horizontal_strips(lam: Tuple[int, ...], k: int) -> Iterator[Tuple[int, ...]]:
    """Partitions obtained from lam by adding a horizontal strip of k boxes."""
    rows = list(lam) + [0]

    def rec(i: int, left: int, acc: List[int]):
        if i == len(rows):
            if left == 0:
                yield tuple(acc)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + [rows[i] + add])

    yield from rec(0, k, [])


@lru_cache(maxsize=None)
def pieri_h(lam: Partition, k: int) -> Tuple[Partition, ...]:
    """h_k * s_lam as the tuple of partitions (all with coefficient 1)."""
    return tuple(Partition(p) for p in _horizontal_strips(tuple(lam), k))


@lru_cache(maxsize=None)
def pieri_e(lam: Partition, k: int) -> Tuple[Partition, ...]:
    """e_k * s_lam, obtained by conjugating the horizontal strip rule."""
    return tuple(p.transpose() for p in pieri_h(Partition(lam).transpose(), k))


@lru_cache(maxsize=None)
def _schur_product(mu: Partition, nu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    # Expand s_nu along the first column of its Jacobi-Trudi matrix:
    # s_nu = sum_i (-1)^(i-1) h_{nu_i - i + 1} s_{nu^(i)}.
    if not nu:
        return ((mu, 1),)
    if len(nu) == 1:
        return tuple((p, 1) for p in pieri_h(mu, nu[0]))
    acc: SchurVector = {}
    for i in range(1, len(nu) + 1):
        k = nu[i - 1] - i + 1
        if k < 0:
            continue
        minor = Partition([p + 1 for p in nu[: i - 1]] + list(nu[i:]))
        sign = -1 if i % 2 == 0 else 1
        for lam, c in _schur_product(mu, minor):
            for p in pieri_h(lam, k):
                _add_into(acc, p, sign * c)
    return tuple(sorted(acc.items()))


def schur_product(mu: Partition, nu: Partition) -> SchurVector:
    """s_mu * s_nu in the Schur basis."""
    mu, nu = Partition(mu), Partition(nu)
    if len(nu) > len(mu):
        mu, nu = nu, mu
    return dict(_schur_product(mu, nu))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    if Partition(lam).size != Partition(mu).size + Partition(nu).size:
        return 0
    return schur_product(mu, nu).get(Partition(lam), 0)


@lru_cache(maxsize=None)
def _lr_splittings(lam: Partition, a: int) -> Tuple[Tuple[Partition, Partition, int], ...]:
    out = []
    b = lam.size - a
    for mu in partitions_of(a):
        if any(m > (lam[i] if i < len(lam) else 0) for i, m in enumerate(mu)):
            continue
        for nu in partitions_of(b):
            c = lr_coefficient(lam, mu, nu)
            if c:
                out.append((mu, nu, c))
    return tuple(out)


def lr_splittings(lam: Partition, a: int) -> Tuple[Tuple[Partition, Partition, int], ...]:
    """All (mu, nu, c) with |mu| = a and c = c^lam_{mu nu} nonzero."""
    lam = Partition(lam)
    if not 0 <= a <= lam.size:
        return ()
    return _lr_splittings(lam, a)


def schur_vector_product(x: SchurVector, y: SchurVector) -> SchurVector:
    acc: SchurVector = {}
    for mu, a in x.items():
        for nu, b in y.items():
            for lam, c in schur_product(mu, nu).items():
                _add_into(acc, lam, a * b * c)
    return acc


def elementary_product(sizes: Iterable[int]) -> SchurVector:
    """prod_k e_k expanded in the Schur basis."""
    acc: SchurVector = {EMPTY: 1}
    for k in sizes:
        nxt: SchurVector = {}
        for lam, c in acc.items():
            for p in pieri_e(lam, k):
                _add_into(nxt, p, c)
        acc = nxt
    return acc


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def lowest_harmonic_degree(lam: Partition) -> int:
    """sum_j (l + 1 - j) a_j for the parts a_1 <= ... <= a_{l+1} written ascending."""
    return sum(i * p for i, p in enumerate(Partition(lam)))


def subsets(items: Iterable) -> Iterator[Tuple]:
    items = tuple(items)
    for r in range(len(items) + 1):
        yield from combinations(items, r)
