"""Text formats for partitions, bipartitions, rationals and characters."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List

from .characters import Bipartition, WCharacter
from .partitions import Partition


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_partition(text: str) -> Partition:
    """'2,2,2' -> (2,2,2); '' and '0' are the empty partition."""
    text = text.strip().strip("()")
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"not a partition: {text!r}") from exc
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    return Partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "0"


_EXP_TOKEN = re.compile(r"(\d)(?:\^(\d))?")


def parse_exponential(text: str) -> Partition:
    """Exponential notation with single-digit parts: '2^21^2' -> (2,2,1,1),
    '21^4' -> (2,1,1,1,1), '0' -> empty. Commas are separators."""
    text = text.replace(",", "").strip()
    if text in ("", "0"):
        return Partition()
    parts: List[int] = []
    pos = 0
    while pos < len(text):
        m = _EXP_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        parts += [int(m.group(1))] * int(m.group(2) or 1)
        pos = m.end()
    return Partition(sorted(parts, reverse=True))


_BIPART = re.compile(r"^\(([^()]*)\)\(([^()]*)\)$")


def parse_bipartition(text: str, exponential: bool = False) -> Bipartition:
    """'(1)(2,2)' -> {(1),(2,2)}; with exponential=True parts use '2^21' style."""
    m = _BIPART.match(text.replace(" ", ""))
    if not m:
        raise ValueError(f"not a bipartition: {text!r}")
    parse = parse_exponential if exponential else parse_partition
    return Bipartition(parse(m.group(1)), parse(m.group(2)))


_TERM = re.compile(r"(\d*)\{([^{}]*)\}")


def parse_character(text: str, exponential: bool = True) -> WCharacter:
    """Sum of terms like '2{(1)(1^5)}'."""
    terms = {}
    body = text.replace(" ", "")
    for coeff, label in _TERM.findall(body):
        b = parse_bipartition(label, exponential)
        terms[b] = terms.get(b, 0) + int(coeff or 1)
    if not terms:
        raise ValueError(f"no terms in {text!r}")
    n = next(iter(terms)).size
    return WCharacter(n, terms)


def character_to_json(ch: WCharacter) -> list:
    return [{"bipartition": str(b), "coeff": c} for b, c in ch]


def character_from_json(data: list, n: int) -> WCharacter:
    return WCharacter(n, {parse_bipartition(t["bipartition"]): int(t["coeff"]) for t in data})


def format_character(ch: WCharacter) -> str:
    return repr(ch)
