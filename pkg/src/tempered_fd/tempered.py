"""W_n-characters of discrete series and tempered modules of the type C affine
Hecke algebra with equal long-root parameters q^m.

A discrete series is labelled by a partition sigma and a window of the
parameter m. Windows are open intervals (m0, m0 + 1/2) of length 1/2 between
consecutive critical values m0 in (1/2)Z. They are stored through `Window`,
which holds 2*m0 as an integer. A segment [lo, hi] means the run of
eigenvalues q^{m+lo}, ..., q^{m+hi}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .characters import WCharacter, induce_sw
from .partitions import (
    EMPTY,
    Partition,
    elementary_product,
    remove_border_strip,
    subsets,
)

Segment = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Window:
    """The open interval (m0, m0 + 1/2) where m0 = twice_m0 / 2."""

    twice_m0: int

    @classmethod
    def at(cls, m0) -> "Window":
        m0 = Fraction(m0)
        if (2 * m0).denominator != 1:
            raise ValueError(f"window endpoint {m0} is not in (1/2)Z")
        return cls(int(2 * m0))

    @classmethod
    def containing(cls, m) -> "Window":
        m = Fraction(m)
        if (2 * m).denominator == 1:
            raise ValueError(f"m = {m} is critical")
        return cls(int((2 * m) // 1))

    @property
    def m0(self) -> Fraction:
        return Fraction(self.twice_m0, 2)

    @property
    def sample(self) -> Fraction:
        """Representative point m0 + 1/4."""
        return self.m0 + Fraction(1, 4)

    def below(self) -> "Window":
        return Window(self.twice_m0 - 1)

    def above(self) -> "Window":
        return Window(self.twice_m0 + 1)

    def __str__(self) -> str:
        return f"({self.m0}, {self.m0 + Fraction(1, 2)})"


# ---------------------------------------------------------------------------
# Strip sequences and multisegments

def strip_sequence(sigma: Partition, m) -> List[Tuple[Segment, str]]:
    """Peel sigma into a sequence of row and column strips for generic m.

    At each step the corner box has content c. The first row spans contents
    c .. c + row - 1 and the first column c - col + 1 .. c. The row is
    removed when its end and the column's end have positive sum after adding
    m, otherwise the column is removed.
    """
    m = Fraction(m)
    if (2 * m).denominator == 1:
        raise ValueError(f"m = {m} is critical")
    lam = list(Partition(sigma))
    corner = 0
    out: List[Tuple[Segment, str]] = []
    while lam:
        row_end = corner + lam[0] - 1
        col_end = corner - (len(lam) - 1)
        if (m + row_end) + (m + col_end) > 0:
            out.append(((corner, row_end), "row"))
            lam = lam[1:]
            corner -= 1
        else:
            out.append(((col_end, corner), "col"))
            lam = [p - 1 for p in lam if p > 1]
            corner += 1
    return out


def ds_multisegment(sigma: Partition, m) -> List[Segment]:
    """Segments of the discrete series: every column strip absorbs the row
    strip that immediately follows it."""
    strips = strip_sequence(sigma, m)
    out: List[Segment] = []
    i = 0
    while i < len(strips):
        (lo, hi), kind = strips[i]
        if kind == "col" and i + 1 < len(strips) and strips[i + 1][1] == "row":
            lo2, hi2 = strips[i + 1][0]
            out.append((min(lo, lo2), max(hi, hi2)))
            i += 2
        else:
            out.append((lo, hi))
            i += 1
    return out


def central_character(sigma: Partition) -> List[int]:
    """Contents of sigma; the central character is q^{m + c} over these."""
    return sorted(Partition(sigma).contents())


# ---------------------------------------------------------------------------
# Balanced hooks

def balanced_hooks(sigma: Partition, m0) -> List[Segment]:
    """Removable border strips [lo, hi] with lo + hi = -2*m0, longest first."""
    sigma = Partition(sigma)
    target = -int(2 * Fraction(m0))
    if Fraction(target) != -2 * Fraction(m0):
        raise ValueError("m0 must lie in (1/2)Z")
    out = []
    for length in range(sigma.size, 0, -1):
        if (target + length - 1) % 2:
            continue
        lo = (target - (length - 1)) // 2
        hi = lo + length - 1
        if remove_border_strip(sigma, lo, hi) is not None:
            out.append((lo, hi))
    return out


def remove_hooks(sigma: Partition, hooks: Sequence[Segment]) -> Partition:
    """Remove a family of balanced hooks, outermost (longest) first."""
    lam = Partition(sigma)
    for lo, hi in sorted(hooks, key=lambda s: s[0] - s[1]):
        nxt = remove_border_strip(lam, lo, hi)
        if nxt is None:
            raise ValueError(f"segment {(lo, hi)} is not removable from {lam}")
        lam = nxt
    return lam


def hook_sizes(hooks: Sequence[Segment]) -> List[int]:
    return [hi - lo + 1 for lo, hi in hooks]


# ---------------------------------------------------------------------------
# The recursion

def asymptotic_character(sigma: Partition) -> WCharacter:
    sigma = Partition(sigma)
    return WCharacter.irreducible((), sigma.transpose())


def _clamp(sigma: Partition, w: Window) -> Window:
    n = sigma.size
    top = max(2 * (n - 1), 0)
    bottom = min(2 * (1 - n) - 1, -1)
    return Window(min(max(w.twice_m0, bottom), top))


def ds_character(sigma: Partition, window: Window) -> WCharacter:
    """W-character of the discrete series attached to sigma on the window."""
    sigma = Partition(sigma)
    return _ds(sigma, _clamp(sigma, window).twice_m0)


@lru_cache(maxsize=None)
def _ds(sigma: Partition, twice_m0: int) -> WCharacter:
    n = sigma.size
    if twice_m0 >= 2 * (n - 1):
        return asymptotic_character(sigma)
    critical = Fraction(twice_m0 + 1, 2)
    selected = match_below(sigma, critical)
    return delimit_character(sigma, critical, selected)


def match_below(sigma: Partition, m0) -> List[Segment]:
    """Balanced hooks at m0 that occur as segments of the discrete series just
    below m0: these pick out which delimit continues the family downwards."""
    m0 = Fraction(m0)
    segs = set(ds_multisegment(sigma, m0 - Fraction(1, 4)))
    return [h for h in balanced_hooks(sigma, m0) if h in segs]


def delimit_character(sigma: Partition, m0, selected: Sequence[Segment]) -> WCharacter:
    """Character of the delimit labelled by a subset of the balanced hooks at m0,
    computed by Moebius inversion over characters from the window above m0."""
    sigma = Partition(sigma)
    above = Window.at(m0)
    acc = WCharacter(sigma.size)
    for sub in subsets(selected):
        sign = -1 if (len(selected) - len(sub)) % 2 else 1
        rest = remove_hooks(sigma, sub)
        base = ds_character(rest, above)
        acc = acc + sign * induce_sw(elementary_product(hook_sizes(sub)), base)
    return acc


def delimits(sigma: Partition, m0) -> List[Tuple[Tuple[Segment, ...], WCharacter]]:
    """All 2^h delimits at the critical value m0, ordered by subset size."""
    hooks = balanced_hooks(sigma, m0)
    return [(sub, delimit_character(sigma, m0, sub)) for sub in subsets(hooks)]


def tempered_character(extra: Sequence[Segment], sigma: Partition, m0, selected: Sequence[Segment]) -> WCharacter:
    """Character of the tempered module induced from the balanced multisegment
    `extra` and the delimit `selected`."""
    base = delimit_character(sigma, m0, selected)
    return induce_sw(elementary_product(hook_sizes(extra)), base)


def is_critical(m) -> bool:
    return (2 * Fraction(m)).denominator == 1


def character_at(sigma: Partition, m) -> Tuple[WCharacter, bool]:
    """Character at a real parameter m. At a critical value the window above is
    used and the flag is True."""
    m = Fraction(m)
    if is_critical(m):
        return ds_character(sigma, Window.at(m)), True
    return ds_character(sigma, Window.containing(m)), False


def lower_side_delimits(sigma: Partition, m0) -> List[WCharacter]:
    """Delimit characters rebuilt from the window below m0 instead of above."""
    sigma = Partition(sigma)
    below = Window.at(m0).below()
    hooks = balanced_hooks(sigma, m0)
    out = []
    for chosen in subsets(hooks):
        acc = WCharacter(sigma.size)
        for sub in subsets(chosen):
            sign = -1 if (len(chosen) - len(sub)) % 2 else 1
            base = ds_character(remove_hooks(sigma, sub), below)
            acc = acc + sign * induce_sw(elementary_product(hook_sizes(sub)), base)
        out.append(acc)
    return out
