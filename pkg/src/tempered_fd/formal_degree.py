"""Formal degrees of discrete series via the Euler-Poincare pairing, compared
with the root-theoretic product formula.

Parameters are symbolic: the affine Hecke algebra of type C_n has q on the
short simple roots, q^{m-} on the affine long root and q^{m+} on the finite
long root. The positive-central-character family uses m+ = m- = m; it is
modelled by giving both the same exponent vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .characters import (
    Bipartition,
    GammaCharacter,
    WCharacter,
    gamma_lift,
    gamma_restrict_mixed,
    induce_bb,
    restrict_bb,
)
from .partitions import Partition
from .qfield import Exp, ParamFraction, ParamPoly, exp_of
from .tempered import Window, central_character, ds_character

Q: Exp = (4, 0, 0)
M_PLUS: Exp = (0, 4, 0)
M_MINUS: Exp = (0, 0, 4)


@dataclass(frozen=True)
class HeckeParams:
    """Exponent vectors (scaled by 4) of the long-root parameters."""

    m_plus: Exp = M_PLUS
    m_minus: Exp = M_MINUS

    @classmethod
    def equal(cls) -> "HeckeParams":
        return cls(M_PLUS, M_PLUS)

    def half_sum(self) -> Exp:
        return _half(_add(self.m_plus, self.m_minus))

    def half_diff(self) -> Exp:
        return _half(_add(self.m_plus, _neg(self.m_minus)))


@dataclass(frozen=True)
class Point:
    """Numeric sample: q = t^4 and values of m+ and m-."""

    t: Fraction
    m_plus: Fraction
    m_minus: Fraction

    def eval(self, x: ParamFraction) -> Fraction:
        return x.eval(self.t, self.m_plus, self.m_minus)


def _add(a: Exp, b: Exp) -> Exp:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _neg(a: Exp) -> Exp:
    return (-a[0], -a[1], -a[2])


def _scale(a: Exp, k: int) -> Exp:
    return (a[0] * k, a[1] * k, a[2] * k)


def _half(a: Exp) -> Exp:
    if any(x % 2 for x in a):
        raise ValueError("half of an odd exponent")
    return (a[0] // 2, a[1] // 2, a[2] // 2)


def _m(exp: Exp, c: int = 1) -> ParamPoly:
    return ParamPoly.monomial(exp, c)


def _qpow(k: int) -> Exp:
    return (4 * k, 0, 0)


ONE = ParamPoly.const(1)


# ---------------------------------------------------------------------------
# Poincare polynomials and generic degrees

def poincare_factors(n: int, v: Exp) -> Tuple[List[ParamPoly], List[ParamPoly]]:
    """P_n(q, v) = prod_i [i]_q (1 + v q^{i-1}) as numerator and denominator factors."""
    num, den = [], []
    for i in range(1, n + 1):
        num.append(_m(_qpow(i)) - ONE)
        den.append(_m(Q) - ONE)
        num.append(ONE + _m(_add(v, _qpow(i - 1))))
    return num, den


@lru_cache(maxsize=None)
def poincare(n: int, v: Exp = M_PLUS) -> ParamFraction:
    num, den = poincare_factors(n, v)
    return ParamFraction.build(num, den)


def symbol(b: Bipartition, pad: int = 0) -> Tuple[List[int], List[int]]:
    """The shifted rows (lambda_1 < ... < lambda_{k+1}; mu_1 < ... < mu_k) of b."""
    alpha, beta = b
    k = max(len(alpha) - 1, len(beta), 0) + pad
    a = [0] * (k + 1 - len(alpha)) + sorted(alpha)
    bb = [0] * (k - len(beta)) + sorted(beta)
    return [x + i for i, x in enumerate(a)], [x + j for j, x in enumerate(bb)]


@lru_cache(maxsize=None)
def generic_degree(b: Bipartition, v: Exp = M_PLUS, pad: int = 0) -> ParamFraction:
    """Generic degree of the Iwahori-Hecke algebra of type B_n with q on the
    short simple roots and v = q^{v/4} on the long one."""
    b = Bipartition.of(*b)
    n = b.size
    lam, mu = symbol(b, pad)
    k = len(mu)
    u = Q
    vp = _m(v)
    num: List[ParamPoly] = []
    den: List[ParamPoly] = []
    num.append(_m(_qpow(k + comb(k, 2))))
    num.append(_m(_scale(v, sum(x - j for j, x in enumerate(mu)))))
    pn, pd = poincare_factors(n, v)
    num += pn
    den += pd
    num += [_m(u) - ONE] * n
    for i in range(len(lam)):
        for i2 in range(i):
            num.append(_m(_qpow(lam[i])) - _m(_qpow(lam[i2])))
    for j in range(k):
        for j2 in range(j):
            num.append(_m(_qpow(mu[j])) - _m(_qpow(mu[j2])))
    for li in lam:
        for mj in mu:
            num.append(_m(_add(_qpow(li - 1), v)) + _m(_qpow(mj)))
    den.append(_m(_qpow(sum(comb(2 * t - 1, 2) for t in range(1, k + 1)))))
    for li in lam:
        for l in range(1, li + 1):
            den.append(_m(_qpow(l)) - ONE)
            den.append(_m(_add(_qpow(l - 1), v)) + ONE)
    for mj in mu:
        for l in range(1, mj + 1):
            den.append(_m(_qpow(l)) - ONE)
            den.append(_m(_qpow(l + 1)) + vp)
    den += [_m(u) + vp] * k
    return ParamFraction.build(num, den)


# ---------------------------------------------------------------------------
# Euler-Poincare formal degree

Character = Union[WCharacter, GammaCharacter]


def _restrictions(char: Character, i: int):
    if isinstance(char, GammaCharacter):
        return gamma_restrict_mixed(char, i)
    return restrict_bb(char, i)


def ep_terms(char: Character, params: HeckeParams):
    """Yield (sign * multiplicity, fraction) for every term of the alternating sum."""
    n = char.n
    for i in range(n + 1):
        sign = -1 if (n - i) % 2 else 1
        pi = poincare(i, params.m_minus)
        pj = poincare(n - i, params.m_plus)
        for (left, right), mult in sorted(_restrictions(char, i).items()):
            g1 = generic_degree(left, params.m_minus)
            g2 = generic_degree(right.tensor_sign(), params.m_plus)
            yield sign * mult, (i, left, right, g1, g2, pi, pj)


def ep_formal_degree(char: Character, params: HeckeParams = HeckeParams.equal()) -> ParamFraction:
    """Symbolic Euler-Poincare formal degree."""
    acc = ParamFraction(0)
    for coeff, (_, _, _, g1, g2, pi, pj) in ep_terms(char, params):
        acc = acc + (g1 * g2 / (pi * pj)) * coeff
    return acc * Fraction(1, 2)


def ep_value(char: Character, params: HeckeParams, point: Point) -> Fraction:
    """Exact value of the Euler-Poincare formal degree at a numeric point."""
    total = Fraction(0)
    cache: Dict[int, Fraction] = {}
    for coeff, (_, _, _, g1, g2, pi, pj) in ep_terms(char, params):
        key = (id(pi), id(pj))
        if key not in cache:
            cache[key] = point.eval(pi) * point.eval(pj)
        total += coeff * _eval_cached(g1, point) * _eval_cached(g2, point) / cache[key]
    return total / 2


_EVAL_CACHE: Dict[Tuple[int, Point], Fraction] = {}


def _eval_cached(x: ParamFraction, point: Point) -> Fraction:
    key = (id(x), point)
    if key not in _EVAL_CACHE:
        _EVAL_CACHE[key] = point.eval(x)
    return _EVAL_CACHE[key]


# ---------------------------------------------------------------------------
# Product formula

SignedMono = Tuple[int, Exp]


def _signed(sign: int, e: Exp) -> ParamPoly:
    return _m(e, sign)


def _roots(coords: Sequence[SignedMono]):
    """Values alpha(s) for short and long roots, and alpha(s)^{1/2} for the long ones."""
    n = len(coords)
    short, long_half = [], []
    for i in range(n):
        si, ei = coords[i]
        for j in range(i + 1, n):
            sj, ej = coords[j]
            for a in (1, -1):
                for b in (1, -1):
                    short.append((si * sj, _add(_scale(ei, a), _scale(ej, b))))
        long_half.append((si, ei))
        long_half.append((si, _neg(ei)))
    return short, long_half


def product_core(coords: Sequence[SignedMono], params: HeckeParams = HeckeParams.equal()) -> ParamFraction:
    """The product formula without its rational constant. Factors that vanish
    identically are dropped."""
    n = len(coords)
    short, long_half = _roots(coords)
    num: List[ParamPoly] = [_m(_add(_qpow(n * n - n), _scale(params.m_plus, n)))]
    den: List[ParamPoly] = []

    def keep(poly: ParamPoly, into: List[ParamPoly]):
        if not poly.is_zero():
            into.append(poly)

    for s, e in short:
        keep(_signed(s, e) - ONE, num)
        keep(_signed(s, _add(e, Q)) - ONE, den)
    for s, e in long_half:
        keep(_signed(1, _scale(e, 2)) - ONE, num)
        keep(_signed(s, _add(e, params.half_sum())) - ONE, den)
        keep(_signed(s, _add(e, params.half_diff())) + ONE, den)
    return ParamFraction.build(num, den)


def positive_coords(sigma: Partition, m: Exp = M_PLUS) -> List[SignedMono]:
    """Central character q^{m + c} over the contents c of sigma."""
    return [(1, _add(m, _qpow(c))) for c in central_character(sigma)]


def mixed_coords(sigma1: Partition, sigma2: Partition, params: HeckeParams = HeckeParams()) -> List[SignedMono]:
    """Central character (-q^{m1 + c1}, q^{m2 + c2}) with m1 = (m+ - m-)/2, m2 = (m+ + m-)/2."""
    m1, m2 = params.half_diff(), params.half_sum()
    return ([(-1, _add(m1, _qpow(c))) for c in central_character(sigma1)]
            + [(1, _add(m2, _qpow(c))) for c in central_character(sigma2)])


def mixed_character(sigma1: Partition, sigma2: Partition, m_plus: Fraction, m_minus: Fraction) -> GammaCharacter:
    """Gamma_n-character of the discrete series with central character of mixed sign."""
    m1 = (Fraction(m_plus) - Fraction(m_minus)) / 2
    m2 = (Fraction(m_plus) + Fraction(m_minus)) / 2
    theta1 = ds_character(Partition(sigma1), Window.containing(m1))
    theta2 = ds_character(Partition(sigma2), Window.containing(m2))
    return gamma_lift(theta1, theta2)


@dataclass
class FdReport:
    sigma: str
    params: Dict[str, str]
    constant: Optional[Fraction]
    e_counts: Dict[str, int] = field(default_factory=dict)
    ep: Optional[ParamFraction] = None
    core: Optional[ParamFraction] = None

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma,
            "params": self.params,
            "constant": None if self.constant is None else str(self.constant),
            "e_counts": self.e_counts,
            "ep": None if self.ep is None else self.ep.to_json(),
            "core": None if self.core is None else self.core.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FdReport":
        const = data.get("constant")
        return cls(
            data["sigma"],
            dict(data["params"]),
            None if const is None else Fraction(const),
            dict(data.get("e_counts", {})),
            None if data.get("ep") is None else ParamFraction.from_json(data["ep"]),
            None if data.get("core") is None else ParamFraction.from_json(data["core"]),
        )


def constant_at(char: Character, coords: Sequence[SignedMono], params: HeckeParams,
                points: Sequence[Point]) -> List[Fraction]:
    """ep / core at each point."""
    core = product_core(coords, params)
    return [ep_value(char, params, p) / p.eval(core) for p in points]


def positive_constant(sigma: Partition, window: Window, ts: Sequence[Fraction]) -> List[Fraction]:
    sigma = Partition(sigma)
    params = HeckeParams.equal()
    char = ds_character(sigma, window)
    m = window.sample
    return constant_at(char, positive_coords(sigma), params, [Point(Fraction(t), m, m) for t in ts])


def mixed_constant(sigma1: Partition, sigma2: Partition, m_plus, m_minus,
                   ts: Sequence[Fraction]) -> List[Fraction]:
    params = HeckeParams()
    char = mixed_character(sigma1, sigma2, m_plus, m_minus)
    coords = mixed_coords(Partition(sigma1), Partition(sigma2), params)
    pts = [Point(Fraction(t), Fraction(m_plus), Fraction(m_minus)) for t in ts]
    return constant_at(char, coords, params, pts)


# ---------------------------------------------------------------------------
# Rewritten forms for the specialisations of types B, C and D

def _primed(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        if v != 0:
            out *= v
    return out


def numeric_product_form(s: Sequence[Fraction], q: Fraction, qm_half_sum: Fraction,
                         qm_half_diff: Fraction, qm_plus: Fraction) -> Fraction:
    """Product formula (core only) at a numeric central character s.

    qm_half_sum = q^{(m+ + m-)/2}, qm_half_diff = q^{(m+ - m-)/2}, qm_plus = q^{m+}.
    Factors are dropped exactly when they vanish.
    """
    n = len(s)
    num, den = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for a in (1, -1):
                for b in (1, -1):
                    x = s[i] ** a * s[j] ** b
                    num.append(x - 1)
                    den.append(q * x - 1)
        for h in (s[i], 1 / s[i]):
            num.append(h * h - 1)
            den.append(qm_half_sum * h - 1)
            den.append(qm_half_diff * h + 1)
    return q ** (n * n - n) * qm_plus ** n * _primed(num) / _primed(den)


def numeric_dual_form(kind: str, s: Sequence[Fraction], q: Fraction, qm: Fraction) -> Fraction:
    """Product over the dual root system with labels q on short and q(long) on long roots.

    kind 'C': long coroots e_i with label q^m, evaluated at s_i.
    kind 'B': long roots 2e_i with label q^{2m}, evaluated at s_i^2.
    kind 'D': short roots only.
    """
    n = len(s)
    num, den = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for a in (1, -1):
                for b in (1, -1):
                    x = s[i] ** a * s[j] ** b
                    num.append(x - 1)
                    den.append(q * x - 1)
        if kind == "C":
            for h in (s[i], 1 / s[i]):
                num.append(h - 1)
                den.append(qm * h - 1)
        elif kind == "B":
            for h in (s[i] ** 2, s[i] ** -2):
                num.append(h - 1)
                den.append(qm * qm * h - 1)
    prefactor = q ** (n * n - n)
    if kind == "C":
        prefactor *= qm ** n
    elif kind == "B":
        prefactor *= qm ** (2 * n)
    return prefactor * _primed(num) / _primed(den)


def e_count(kind: str, s: Sequence[Fraction], qm: Optional[Fraction]) -> int:
    """qm = None stands for an irrational q^m, which no rational coordinate equals."""
    if kind == "C":
        return 2 * sum(1 for x in s if x == 1)
    if kind == "B":
        if qm is None:
            return 0
        return sum(1 for x in s if x in (qm, -qm)) + sum(1 for x in s if x in (1 / qm, -1 / qm))
    if kind == "D":
        return 2 * sum(1 for x in s if x in (1, -1))
    raise ValueError(kind)


def type_constant(kind: str, s: Sequence[Fraction], qm: Fraction) -> Fraction:
    e = e_count(kind, s, qm)
    return Fraction(1, 2 ** (e + 1)) if kind == "C" else Fraction(1, 2 ** e)


def specialised_product_form(kind: str, s: Sequence[Fraction], q: Fraction, qm: Fraction) -> Fraction:
    """Written product formula at the specialisation of the given type.

    C: m+ = m- = m, with the constant 1/2. B: m+ = 2m, m- = 0. D: m+ = m- = 0.
    """
    if kind == "C":
        return numeric_product_form(s, q, qm, Fraction(1), qm) / 2
    if kind == "B":
        return numeric_product_form(s, q, qm, qm, qm * qm)
    if kind == "D":
        return numeric_product_form(s, q, Fraction(1), Fraction(1), Fraction(1))
    raise ValueError(kind)
