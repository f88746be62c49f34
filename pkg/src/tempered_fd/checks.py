"""Verification suites behind the verify-* commands and the experiment scripts."""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import permutations
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .characters import WCharacter, gamma_restrict_mixed, induce_sw
from .formal_degree import (
    mixed_character,
    mixed_constant,
    positive_constant,
)
from .notation import parse_character, parse_rational
from .partitions import (
    Partition,
    elementary_product,
    partitions_of,
    remove_border_strip,
)
from .tempered import (
    Window,
    asymptotic_character,
    balanced_hooks,
    delimit_character,
    delimits,
    ds_character,
    ds_multisegment,
    hook_sizes,
    lower_side_delimits,
    match_below,
    remove_hooks,
    strip_sequence,
)

DEFAULT_TS = (Fraction(2), Fraction(3, 2), Fraction(5, 3))


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    failures: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail, "failures": self.failures[:20]}


@dataclass
class ConstantConfig:
    max_n: int = 4
    mixed_max_n: int = 4
    ts: Tuple[Fraction, ...] = DEFAULT_TS
    seed: int = 0
    mixed_samples: int = 2


@dataclass
class InvariantConfig:
    max_n: int = 8


# ---------------------------------------------------------------------------
# Worked example

@dataclass
class ExampleItem:
    id: str
    expected: WCharacter
    computed: Dict[str, WCharacter]


def load_worked_example() -> dict:
    text = resources.files("tempered_fd").joinpath("data/worked_example_222.json").read_text()
    return json.loads(text)


def worked_example_items() -> List[ExampleItem]:
    data = load_worked_example()
    sigma = Partition(data["sigma"])
    out = []
    for item in data["items"]:
        expected = parse_character(item["character"])
        computed: Dict[str, WCharacter] = {}
        if item["kind"] == "ds":
            for m0 in item["windows_m0"]:
                w = Window.at(parse_rational(m0))
                computed[f"window {w}"] = ds_character(sigma, w)
        else:
            m0 = parse_rational(item["m0"])
            hooks = [tuple(h) for h in item["hooks"]]
            if sorted(hooks) != sorted(h for h in hooks if h in balanced_hooks(sigma, m0)):
                raise AssertionError(f"item {item['id']}: hooks not balanced at {m0}")
            computed[f"m0={m0} S={hooks}"] = delimit_character(sigma, m0, hooks)
            if not hooks:
                computed[f"window {Window.at(m0)}"] = ds_character(sigma, Window.at(m0))
        out.append(ExampleItem(item["id"], expected, computed))
    return out


def verify_example() -> CheckResult:
    failures = []
    total = 0
    items = worked_example_items()
    for it in items:
        for label, ch in it.computed.items():
            total += 1
            if ch != it.expected:
                failures.append(f"item {it.id} ({label}): got {ch}, expected {it.expected}")
    ok = not failures
    return CheckResult("worked example", ok, f"{len(items)} lists, {total - len(failures)}/{total} comparisons matched", failures)


# ---------------------------------------------------------------------------
# Structural invariants of the tempered engine

def _critical_values(n: int) -> List[Fraction]:
    return [Fraction(k, 2) for k in range(2 * (1 - n), 2 * (n - 1) + 1)]


def _windows(n: int) -> List[Window]:
    return [Window(k) for k in range(2 * (1 - n) - 1, 2 * max(n - 1, 0) + 1)]


def delimit_count_failures(max_n: int) -> Tuple[int, List[str]]:
    failures, checked = [], 0
    for n in range(1, max_n + 1):
        for sigma in partitions_of(n):
            for m0 in _critical_values(n):
                h = len(balanced_hooks(sigma, m0))
                got = len(delimits(sigma, m0))
                checked += 1
                if got != 2 ** h:
                    failures.append(f"{sigma} m0={m0}: {got} delimits, 2^{h} expected")
    return checked, failures


def _dimension_of_induced(n: int, sizes: Sequence[int], base: WCharacter) -> int:
    k = sum(sizes)
    multinomial = factorial(k)
    for s in sizes:
        multinomial //= factorial(s)
    return 2 ** k * comb(n, k) * multinomial * base.dim()


def invariant_failures(max_n: int) -> Dict[str, List[str]]:
    fails: Dict[str, List[str]] = {k: [] for k in (
        "moebius", "dimension", "order", "central", "monotone", "asymptotic",
        "two-sided", "nonnegative", "stability")}
    for n in range(1, max_n + 1):
        for sigma in partitions_of(n):
            contents = Counter(sigma.contents())
            for w in _windows(n):
                m = w.sample
                segs = ds_multisegment(sigma, m)
                entries = Counter(c for lo, hi in segs for c in range(lo, hi + 1))
                if entries != contents:
                    fails["central"].append(f"{sigma} m={m}: {segs}")
                vals = [max(m + hi, -(m + lo)) for (lo, hi), _ in strip_sequence(sigma, m)]
                if any(a <= b for a, b in zip(vals, vals[1:])):
                    fails["monotone"].append(f"{sigma} m={m}: {vals}")
            big = Fraction(n) + Fraction(1, 4)
            if any(kind != "row" for _, kind in strip_sequence(sigma, big)) or \
                    ds_character(sigma, Window.containing(big)) != asymptotic_character(sigma):
                fails["asymptotic"].append(str(sigma))
            for m0 in _critical_values(n):
                hooks = balanced_hooks(sigma, m0)
                above = Window.at(m0)
                chars = {}
                for sub, ch in delimits(sigma, m0):
                    chars[sub] = ch
                    if not ch.is_nonnegative() or not len(ch):
                        fails["nonnegative"].append(f"{sigma} m0={m0} S={sub}")
                for sub in chars:
                    total = WCharacter(n)
                    for sub2 in chars:
                        if set(sub2) <= set(sub):
                            total = total + chars[sub2]
                    rest = remove_hooks(sigma, sub)
                    induced = induce_sw(elementary_product(hook_sizes(sub)), ds_character(rest, above))
                    if total != induced:
                        fails["moebius"].append(f"{sigma} m0={m0} S={sub}")
                    if induced.dim() != _dimension_of_induced(n, hook_sizes(sub), ds_character(rest, above)):
                        fails["dimension"].append(f"{sigma} m0={m0} S={sub}")
                    results = set()
                    for order in permutations(sub):
                        lam = sigma
                        for lo, hi in order:
                            lam = remove_border_strip(lam, lo, hi) if lam is not None else None
                        results.add(lam)
                    if results != {rest}:
                        fails["order"].append(f"{sigma} m0={m0} S={sub}: {results}")
                if hooks and Counter(lower_side_delimits(sigma, m0)) != Counter(chars.values()):
                    fails["two-sided"].append(f"{sigma} m0={m0}")
                if not hooks and ds_character(sigma, above) != ds_character(sigma, above.below()):
                    fails["stability"].append(f"{sigma} m0={m0}")
                if delimit_character(sigma, m0, match_below(sigma, m0)) != ds_character(sigma, above.below()):
                    fails["stability"].append(f"{sigma} m0={m0}: selected delimit differs from window below")
    return fails


def verify_invariants(cfg: InvariantConfig = InvariantConfig()) -> List[CheckResult]:
    checked, count_fail = delimit_count_failures(cfg.max_n)
    out = [CheckResult("delimit counts", not count_fail, f"{checked} (sigma, m0) pairs, n <= {cfg.max_n}", count_fail)]
    for name, fl in invariant_failures(cfg.max_n).items():
        out.append(CheckResult(f"invariant: {name}", not fl, f"n <= {cfg.max_n}", fl))
    return out


# ---------------------------------------------------------------------------
# Constants

def positive_constant_failures(max_n: int, ts: Sequence[Fraction]) -> Tuple[int, List[str]]:
    failures, checked = [], 0
    for n in range(1, max_n + 1):
        for sigma in partitions_of(n):
            for w in _windows(n):
                vals = positive_constant(sigma, w, ts)
                checked += 1
                if len(set(vals)) != 1 or abs(vals[0]) != Fraction(1, 2):
                    failures.append(f"{sigma} window {w}: {vals}")
    return checked, failures


def generic_mixed_samples(n: int, count: int, rng: random.Random) -> List[Tuple[Fraction, Fraction]]:
    """Generic (m+, m-) pairs: m1 = (m+ - m-)/2 and m2 = (m+ + m-)/2 both lie
    in 1/4 + (1/2)Z, so m+ +- m- is never an integer.

    The first sample is always in the asymptotic region m- >> m+ >> 0.
    """
    quarter = Fraction(1, 4)
    m1 = -Fraction(n) - quarter
    m2 = Fraction(n) + quarter
    out = [(m1 + m2, m2 - m1)]
    while len(out) < count:
        m1 = quarter + Fraction(rng.randint(-2 * n - 2, 2 * n + 1), 2)
        m2 = quarter + Fraction(rng.randint(-2 * n - 2, 2 * n + 1), 2)
        pair = (m1 + m2, m2 - m1)
        if pair not in out:
            out.append(pair)
    return out


def is_asymptotic(k: int, n: int, m_plus: Fraction, m_minus: Fraction) -> bool:
    m1 = (m_plus - m_minus) / 2
    m2 = (m_plus + m_minus) / 2
    return m1 < 1 - k and m2 > n - k - 1


def mixed_constant_failures(max_n: int, samples: int, ts: Sequence[Fraction], seed: int):
    rng = random.Random(seed)
    failures, support_failures, checked, support_checked = [], [], 0, 0
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for s1 in partitions_of(k):
                for s2 in partitions_of(n - k):
                    for mp, mm in generic_mixed_samples(n, samples, rng):
                        vals = mixed_constant(s1, s2, mp, mm, ts)
                        checked += 1
                        if len(set(vals)) != 1 or abs(vals[0]) != Fraction(1, 2):
                            failures.append(f"{s1} {s2} m+={mp} m-={mm}: {vals}")
                        if is_asymptotic(k, n, mp, mm):
                            support_checked += 1
                            g = mixed_character(s1, s2, mp, mm)
                            for i in range(1, n + 1):
                                for left, _ in gamma_restrict_mixed(g, i):
                                    if not left.nu:
                                        support_failures.append(f"{s1} {s2} i={i}: {left}")
    return checked, failures, support_checked, support_failures


def verify_constants(cfg: ConstantConfig = ConstantConfig()) -> List[CheckResult]:
    n1, f1 = positive_constant_failures(cfg.max_n, cfg.ts)
    n2, f2, n3, f3 = mixed_constant_failures(cfg.mixed_max_n, cfg.mixed_samples, cfg.ts, cfg.seed)
    return [
        CheckResult("positive constant |C| = 1/2", not f1, f"{n1} (sigma, window) cases, n <= {cfg.max_n}", f1),
        CheckResult("mixed constant |C| = 1/2", not f2, f"{n2} (sigma1, sigma2, sample) cases, n <= {cfg.mixed_max_n}", f2),
        CheckResult("mixed support beta != 0", not f3, f"{n3} asymptotic cases", f3),
    ]
