"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from tempered_fd.partitions import Partition


@lru_cache(maxsize=None)
def syt_count(lam: Tuple[int, ...]) -> int:
    """Standard Young tableaux counted by removing the largest entry from a corner."""
    if sum(lam) == 0:
        return 1
    total = 0
    for i, row in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if row > below:
            smaller = list(lam)
            smaller[i] -= 1
            total += syt_count(tuple(p for p in smaller if p))
    return total


def lr_tableaux(lam, mu, nu) -> int:
    """Number of Littlewood-Richardson tableaux of shape lam/mu and content nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    if any((mu[i] if i < len(mu) else 0) > lam[i] for i in range(len(lam))) or len(mu) > len(lam):
        return 0
    rows = [(mu[i] if i < len(mu) else 0, lam[i]) for i in range(len(lam))]
    letters = len(nu)
    count = 0

    def rows_of(start, stop):
        # weakly increasing fillings of one row
        width = stop - start
        def rec(prefix):
            if len(prefix) == width:
                yield prefix
                return
            lo = prefix[-1] if prefix else 1
            for v in range(lo, letters + 1):
                yield from rec(prefix + (v,))
        yield from rec(())

    def search(r, filling, used):
        nonlocal count
        if r == len(rows):
            if tuple(used) == tuple(nu):
                count += 1
            return
        start, stop = rows[r]
        for row in rows_of(start, stop):
            ok = True
            if r > 0:
                pstart, pstop = rows[r - 1]
                for j, v in enumerate(row, start):
                    if pstart <= j < pstop and filling[r - 1][j - pstart] >= v:
                        ok = False
                        break
            if not ok:
                continue
            counts = list(used)
            for v in reversed(row):
                counts[v - 1] += 1
                if counts[v - 1] > nu[v - 1] or (v > 1 and counts[v - 1] > counts[v - 2]):
                    ok = False
                    break
            if ok:
                search(r + 1, filling + [row], counts)

    if letters == 0:
        return 1 if lam == mu else 0
    search(0, [], [0] * letters)
    return count


def border_strips(lam) -> Dict[Tuple[int, int], Partition]:
    """All removable border strips of lam, found by trying every subdiagram."""
    lam = Partition(lam)
    out: Dict[Tuple[int, int], Partition] = {}
    ranges = [range(p + 1) for p in lam]
    for rest in product(*ranges):
        if any(a < b for a, b in zip(rest, rest[1:])):
            continue
        cells = {(i, j) for i, p in enumerate(lam) for j in range(rest[i], p)}
        if not cells:
            continue
        if any({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells for i, j in cells):
            continue
        seen, todo = set(), [next(iter(cells))]
        while todo:
            c = todo.pop()
            if c in seen:
                continue
            seen.add(c)
            i, j = c
            todo += [d for d in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)) if d in cells]
        if seen != cells:
            continue
        contents = sorted(j - i for i, j in cells)
        key = (contents[0], contents[-1])
        assert key not in out, "two strips on the same diagonals"
        out[key] = Partition(p for p in rest if p)
    return out


def coxeter_poincare_b(n: int) -> Dict[Tuple[int, int], int]:
    """Sum over W(B_n) of q^(short length) u^(long length), by breadth-first
    search through signed permutations with the simple reflections."""
    start = tuple(range(1, n + 1))

    def moves(w):
        yield tuple([-w[0]] + list(w[1:])), (0, 1)
        for i in range(n - 1):
            v = list(w)
            v[i], v[i + 1] = v[i + 1], v[i]
            yield tuple(v), (1, 0)

    lengths = {start: (0, 0)}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        a, b = lengths[w]
        for v, (da, db) in moves(w):
            if v not in lengths:
                lengths[v] = (a + da, b + db)
                queue.append(v)
    out: Dict[Tuple[int, int], int] = {}
    for key in lengths.values():
        out[key] = out.get(key, 0) + 1
    return out


def quad_dim(quad) -> int:
    from math import factorial
    size = sum(Partition(p).size for p in quad)
    out = factorial(size)
    for p in quad:
        out //= factorial(Partition(p).size)
        out *= syt_count(tuple(p))
    return out
