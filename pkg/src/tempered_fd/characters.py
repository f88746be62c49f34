"""Characters of the hyperoctahedral group W_n and of Gamma_n = (Z/2 x Z/2) wr S_n.

Irreducible W_n-characters are labelled by bipartitions {mu, nu} with
trivial = {(n), empty} and sign = {empty, (1^n)}. Gamma_n-characters are
labelled by quadripartitions whose slots are indexed by the pair
(lattice sign, reflection sign) in the order ++, +-, -+, --.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Iterator, NamedTuple, Tuple

from .partitions import (
    EMPTY,
    Partition,
    SchurVector,
    binomial,
    hook_length_dimension,
    lr_splittings,
    partitions_of,
    schur_product,
)


class Bipartition(NamedTuple):
    mu: Partition
    nu: Partition

    @classmethod
    def of(cls, mu=(), nu=()) -> "Bipartition":
        return cls(Partition(mu), Partition(nu))

    @property
    def size(self) -> int:
        return self.mu.size + self.nu.size

    def tensor_sign(self) -> "Bipartition":
        return Bipartition(self.nu.transpose(), self.mu.transpose())

    def dim(self) -> int:
        n = self.size
        return binomial(n, self.mu.size) * hook_length_dimension(self.mu) * hook_length_dimension(self.nu)

    def __str__(self) -> str:
        def part(p):
            return ",".join(map(str, p)) if p else "0"
        return f"({part(self.mu)})({part(self.nu)})"


class QuadPartition(NamedTuple):
    pp: Partition
    pm: Partition
    mp: Partition
    mm: Partition

    @property
    def size(self) -> int:
        return sum(p.size for p in self)

    def __str__(self) -> str:
        return "".join("(" + (",".join(map(str, p)) if p else "0") + ")" for p in self)


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    for a in range(n, -1, -1):
        for mu in partitions_of(a):
            for nu in partitions_of(n - a):
                yield Bipartition(mu, nu)


class _Character:
    """Finite Z-linear combination of irreducible labels."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: Dict = {}
        for k, c in (terms or {}).items():
            if c:
                if k.size != n:
                    raise ValueError(f"label {k} is not of size {n}")
                self.terms[k] = self.terms.get(k, 0) + c
        self.terms = {k: c for k, c in self.terms.items() if c}

    def _check(self, other):
        if type(other) is not type(self) or other.n != self.n:
            raise ValueError("characters of different groups")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)(self.n, acc)

    def __neg__(self):
        return type(self)(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar: int):
        return type(self)(self.n, {k: scalar * c for k, c in self.terms.items()})

    def __eq__(self, other):
        return type(other) is type(self) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def coefficient(self, label) -> int:
        return self.terms.get(label, 0)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join((f"{c}" if c != 1 else "") + "{" + str(k) + "}" for k, c in self)


class WCharacter(_Character):
    @classmethod
    def irreducible(cls, mu=(), nu=()) -> "WCharacter":
        b = Bipartition.of(mu, nu)
        return cls(b.size, {b: 1})

    @classmethod
    def trivial(cls, n: int) -> "WCharacter":
        return cls.irreducible((n,) if n else (), ())

    @classmethod
    def sign(cls, n: int) -> "WCharacter":
        return cls.irreducible((), (1,) * n)

    def dim(self) -> int:
        return sum(c * b.dim() for b, c in self.terms.items())

    def tensor_sign(self) -> "WCharacter":
        return WCharacter(self.n, {b.tensor_sign(): c for b, c in self.terms.items()})


class GammaCharacter(_Character):
    def forget_lattice(self) -> WCharacter:
        """Restriction to W_n: merge slots by reflection sign."""
        acc: Dict[Bipartition, int] = {}
        for q, c in self.terms.items():
            for mu, a in schur_product(q.pp, q.mp).items():
                for nu, b in schur_product(q.pm, q.mm).items():
                    key = Bipartition(mu, nu)
                    acc[key] = acc.get(key, 0) + c * a * b
        return WCharacter(self.n, acc)


# ---------------------------------------------------------------------------
# Induction and restriction

def induce_bb(x: WCharacter, y: WCharacter) -> WCharacter:
    """Induction from W_a x W_b to W_{a+b}."""
    acc: Dict[Bipartition, int] = {}
    for (al, be), c in x.terms.items():
        for (ga, de), d in y.terms.items():
            for mu, a in schur_product(al, ga).items():
                for nu, b in schur_product(be, de).items():
                    key = Bipartition(mu, nu)
                    acc[key] = acc.get(key, 0) + c * d * a * b
    return WCharacter(x.n + y.n, acc)


@lru_cache(maxsize=None)
def _sw_lift(lam: Partition) -> Tuple[Tuple[Bipartition, int], ...]:
    # Ind_{S_a}^{W_a} s_lam = sum c^lam_{alpha beta} {alpha, beta}
    out = []
    for a in range(lam.size + 1):
        for al, be, k in lr_splittings(lam, a):
            out.append((Bipartition(al, be), k))
    return tuple(out)


def induce_sw(schur: SchurVector, y: WCharacter) -> WCharacter:
    """Induction from S_a x W_b to W_{a+b}, with the S_a-character in the Schur basis."""
    a = next(iter(schur)).size if schur else 0
    acc = WCharacter(a + y.n)
    for lam, c in schur.items():
        acc = acc + c * induce_bb(WCharacter(a, dict(_sw_lift(lam))), y)
    return acc


def restrict_bb(x: WCharacter, i: int) -> Dict[Tuple[Bipartition, Bipartition], int]:
    """Restriction from W_n to W_i x W_{n-i}, keyed by (left, right)."""
    acc: Dict[Tuple[Bipartition, Bipartition], int] = {}
    for (mu, nu), c in x.terms.items():
        for a in range(i + 1):
            for al, ga, p in lr_splittings(mu, a):
                for be, de, r in lr_splittings(nu, i - a):
                    key = (Bipartition(al, be), Bipartition(ga, de))
                    acc[key] = acc.get(key, 0) + c * p * r
    return {k: v for k, v in acc.items() if v}


def gamma_lift(block1: WCharacter, block2: WCharacter) -> GammaCharacter:
    """Gamma_n-character of the module induced from a block with lattice sign -1
    (block1, rank k) and a block with lattice sign +1 (block2)."""
    acc: Dict[QuadPartition, int] = {}
    for (mu1, nu1), c in block1.terms.items():
        for (mu2, nu2), d in block2.terms.items():
            key = QuadPartition(mu2, nu2, mu1, nu1)
            acc[key] = acc.get(key, 0) + c * d
    return GammaCharacter(block1.n + block2.n, acc)


def _split_quad(q: QuadPartition, sizes: Tuple[int, int, int, int]):
    """Slotwise LR splitting of q into a left part with the given slot sizes."""
    def rec(slot: int):
        if slot == 4:
            yield (), (), 1
            return
        for a, b, c in lr_splittings(q[slot], sizes[slot]):
            for la, ra, m in rec(slot + 1):
                yield (a,) + la, (b,) + ra, c * m
    yield from rec(0)


def _compositions(total: int, parts: int, caps: Tuple[int, ...]):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - first, parts - 1, caps[1:]):
            yield (first,) + rest


def gamma_restrict_mixed(g: GammaCharacter, i: int) -> Dict[Tuple[Bipartition, Bipartition], int]:
    """Restriction to the subgroup generated by the affine simple reflections
    other than s_i, read at q = 1.

    The left factor W_i has its sign-change generator acting as lattice sign
    times reflection sign, so its bipartition {alpha, beta} takes alpha from
    slots ++ and --, beta from +- and -+. The right factor W_{n-i} is the
    standard one: gamma from ++ and -+, delta from +- and --.
    """
    acc: Dict[Tuple[Bipartition, Bipartition], int] = {}
    for q, c in g.terms.items():
        caps = tuple(p.size for p in q)
        for sizes in _compositions(i, 4, caps):
            for left, right, m in _split_quad(q, sizes):
                lpp, lpm, lmp, lmm = left
                rpp, rpm, rmp, rmm = right
                for al, a in schur_product(lpp, lmm).items():
                    for be, b in schur_product(lpm, lmp).items():
                        for ga, x in schur_product(rpp, rmp).items():
                            for de, y in schur_product(rpm, rmm).items():
                                key = (Bipartition(al, be), Bipartition(ga, de))
                                acc[key] = acc.get(key, 0) + c * m * a * b * x * y
    return {k: v for k, v in acc.items() if v}
