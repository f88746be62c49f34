"""Exact rational functions in q, q^{m+} and q^{m-}.

A monomial c * q^{(e0 + ep*m+ + em*m-)/4} is stored with its exponent triple
(e0, ep, em) scaled by 4, so quarter-integer powers stay integral. A
ParamPoly is a Laurent polynomial in these monomials with rational
coefficients (kept as ints whenever possible). A ParamFraction keeps its denominator as a multiset of
normalised factors: products just merge multisets and sums use the lcm of
the two multisets, which keeps the sums appearing in formal degree
computations small. Equality is decided by cross-multiplication.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

Exp = Tuple[int, int, int]
Number = Union[int, Fraction]

ZERO_EXP: Exp = (0, 0, 0)


def _norm_coeff(c):
    # ints stay ints: integer arithmetic dominates and is much faster
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _add_exp(a: Exp, b: Exp) -> Exp:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


class ParamPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Exp, Number]] = None):
        self.terms: Dict[Exp, Number] = {}
        for e, c in (terms or {}).items():
            if c:
                self.terms[tuple(e)] = _norm_coeff(c)
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "ParamPoly":
        return cls({ZERO_EXP: c})

    @classmethod
    def monomial(cls, exp: Exp, c: Number = 1) -> "ParamPoly":
        return cls({tuple(exp): c})

    @classmethod
    def q(cls, power: Fraction = 1) -> "ParamPoly":
        return cls.monomial(exp_of(q_power=power))

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        other = as_poly(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return ParamPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "ParamPoly":
        return self + (-as_poly(other))

    def __rsub__(self, other) -> "ParamPoly":
        return as_poly(other) - self

    def __mul__(self, other) -> "ParamPoly":
        if isinstance(other, (int, Fraction)):
            return ParamPoly({e: c * other for e, c in self.terms.items()})
        other = as_poly(other)
        acc: Dict[Exp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                acc[e] = acc.get(e, 0) + c1 * c2
        return ParamPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ParamPoly":
        out = ParamPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        return isinstance(other, ParamPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def min_exp(self) -> Exp:
        return min(self.terms)

    def shift(self, exp: Exp) -> "ParamPoly":
        return ParamPoly({_add_exp(e, exp): c for e, c in self.terms.items()})

    def normalized(self) -> Tuple["ParamPoly", Fraction, Exp]:
        """Return (p, c, e) with self = c * q^e * p and p having constant term 1
        at its lexicographically smallest exponent."""
        e = self.min_exp()
        c = self.terms[e]
        neg = (-e[0], -e[1], -e[2])
        if c == 1:
            scaled = {_add_exp(k, neg): v for k, v in self.terms.items()}
        elif c == -1:
            scaled = {_add_exp(k, neg): -v for k, v in self.terms.items()}
        else:
            scaled = {_add_exp(k, neg): Fraction(v) / c for k, v in self.terms.items()}
        return ParamPoly(scaled), c, e

    def substitute(self, e_plus: Exp, e_minus: Exp) -> "ParamPoly":
        """Replace q^{m+} by q^{e_plus/4} and q^{m-} by q^{e_minus/4} (exponents scaled)."""
        acc: Dict[Exp, Fraction] = {}
        for (a, b, c), v in self.terms.items():
            e = (a + (b * e_plus[0] + c * e_minus[0]) // 4,
                 (b * e_plus[1] + c * e_minus[1]) // 4,
                 (b * e_plus[2] + c * e_minus[2]) // 4)
            for coord, factor in ((b, e_plus), (c, e_minus)):
                if any((coord * x) % 4 for x in factor):
                    raise ValueError("substitution leaves fractional exponent")
            acc[e] = acc.get(e, 0) + v
        return ParamPoly(acc)

    def eval(self, t: Number, m_plus: Number = 0, m_minus: Number = 0) -> Fraction:
        return sum((c * _tpow(t, e, m_plus, m_minus) for e, c in self.terms.items()), Fraction(0))

    def degree_in_q(self) -> Tuple[int, int]:
        lows = [e[0] for e in self.terms]
        return min(lows), max(lows)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{_fmt_exp(e)}" for e, c in sorted(self.terms.items()))

    def to_json(self):
        return [[str(c), *e] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "ParamPoly":
        return cls({(int(a), int(b), int(c)): Fraction(v) for v, a, b, c in data})


def _fmt_exp(e: Exp) -> str:
    parts = []
    for val, name in zip(e, ("", "m+", "m-")):
        if val:
            fr = Fraction(val, 4)
            parts.append(f"{fr}{'*' + name if name else ''}")
    return "q^(" + " + ".join(parts) + ")" if parts else "1"


def _tpow(t: Number, e: Exp, m_plus: Number, m_minus: Number) -> Fraction:
    x = Fraction(e[0]) + Fraction(e[1]) * Fraction(m_plus) + Fraction(e[2]) * Fraction(m_minus)
    if x.denominator != 1:
        raise ValueError(f"q-exponent {x / 4} is not a multiple of 1/4 at this point")
    return Fraction(t) ** int(x)


def exp_of(q_power: Number = 0, m_plus: Number = 0, m_minus: Number = 0) -> Exp:
    """Scaled exponent triple of q^{q_power + m_plus*m+ + m_minus*m-}."""
    out = []
    for v in (q_power, m_plus, m_minus):
        v4 = Fraction(v) * 4
        if v4.denominator != 1:
            raise ValueError(f"coefficient {v} is not a multiple of 1/4")
        out.append(int(v4))
    return tuple(out)


def as_poly(x) -> ParamPoly:
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ParamPoly.const(x)
    raise TypeError(f"cannot coerce {type(x)} to ParamPoly")


def mono(c: Number = 1, q_power: Number = 0, m_plus: Number = 0, m_minus: Number = 0) -> ParamPoly:
    return ParamPoly.monomial(exp_of(q_power, m_plus, m_minus), c)


# ---------------------------------------------------------------------------

class ParamFraction:
    """num / prod(den factors). Factors are normalised ParamPolys."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: Optional[Iterable[ParamPoly]] = None):
        num = as_poly(num)
        factors: Counter = Counter()
        for f in den or ():
            f = as_poly(f)
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")
            p, c, e = f.normalized()
            num = num.shift((-e[0], -e[1], -e[2])) * (c if c in (1, -1) else 1 / Fraction(c))
            if p != ParamPoly.const(1):
                factors[p] += 1
        self.num = num
        self.den = factors

    @classmethod
    def _raw(cls, num: ParamPoly, den: Counter) -> "ParamFraction":
        out = cls.__new__(cls)
        out.num = num
        out.den = +den
        return out

    @classmethod
    def build(cls, num_factors: Iterable, den_factors: Iterable) -> "ParamFraction":
        """Product of factors over product of factors, cancelling literally equal
        normalised factors."""
        top = ParamFraction(1, den_factors)
        num = ParamPoly.const(1)
        den = Counter(top.den)
        num = num * top.num
        for f in num_factors:
            f = as_poly(f)
            if f.is_zero():
                return ParamFraction(0)
            p, c, e = f.normalized()
            num = num.shift(e) * c
            if p == ParamPoly.const(1):
                continue
            if den[p] > 0:
                den[p] -= 1
            else:
                num = num * p
        return cls._raw(num, den)

    def den_poly(self) -> ParamPoly:
        out = ParamPoly.const(1)
        for f, k in self.den.items():
            out = out * (f ** k)
        return out

    def __add__(self, other) -> "ParamFraction":
        other = as_fraction(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        lcm = self.den | other.den
        a = self.num
        for f, k in (lcm - self.den).items():
            a = a * (f ** k)
        b = other.num
        for f, k in (lcm - other.den).items():
            b = b * (f ** k)
        return ParamFraction._raw(a + b, lcm)

    __radd__ = __add__

    def __neg__(self) -> "ParamFraction":
        return ParamFraction._raw(-self.num, self.den)

    def __sub__(self, other) -> "ParamFraction":
        return self + (-as_fraction(other))

    def __mul__(self, other) -> "ParamFraction":
        if isinstance(other, (int, Fraction)):
            return ParamFraction._raw(self.num * other, self.den)
        other = as_fraction(other)
        num = self.num * other.num
        den = self.den + other.den
        return ParamFraction._raw(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ParamFraction":
        other = as_fraction(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero fraction")
        inv = ParamFraction.build(other.den_factors(), [other.num])
        return self * inv

    def den_factors(self):
        for f, k in self.den.items():
            for _ in range(k):
                yield f

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = as_fraction(other)
        return (self.num * other.den_poly()) == (other.num * self.den_poly())

    __hash__ = None

    def eval(self, t: Number, m_plus: Number = 0, m_minus: Number = 0) -> Fraction:
        d = Fraction(1)
        for f, k in self.den.items():
            v = f.eval(t, m_plus, m_minus)
            if v == 0:
                raise ZeroDivisionError("denominator vanishes at this point")
            d *= v ** k
        return self.num.eval(t, m_plus, m_minus) / d

    def substitute(self, e_plus: Exp, e_minus: Exp) -> "ParamFraction":
        return ParamFraction(self.num.substitute(e_plus, e_minus),
                             [f.substitute(e_plus, e_minus) for f in self.den_factors()])

    def is_constant(self) -> Optional[Fraction]:
        """The constant c with self == c, or None."""
        if self.num.is_zero():
            return Fraction(0)
        den = self.den_poly()
        e = self.num.min_exp()
        if e not in den.terms:
            return None
        c = Fraction(self.num.terms[e]) / den.terms[e]
        return c if self.num == den * c else None

    def lowest_exponent(self, order=(1, 0, 2)) -> Exp:
        """Lowest exponent of num minus lowest of den, comparing exponent
        coordinates in the given priority order."""
        def low(p: ParamPoly) -> Exp:
            return min(p.terms, key=lambda e: tuple(e[i] for i in order))
        n = low(self.num)
        d = low(self.den_poly())
        return (n[0] - d[0], n[1] - d[1], n[2] - d[2])

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den_poly().to_json()}

    @classmethod
    def from_json(cls, data) -> "ParamFraction":
        return cls(ParamPoly.from_json(data["num"]), [ParamPoly.from_json(data["den"])])

    def __repr__(self) -> str:
        if not self.den:
            return f"({self.num})"
        dens = " * ".join(f"({f})" + (f"^{k}" if k > 1 else "") for f, k in self.den.items())
        return f"({self.num}) / [{dens}]"


def as_fraction(x) -> ParamFraction:
    if isinstance(x, ParamFraction):
        return x
    return ParamFraction(as_poly(x))


# ---------------------------------------------------------------------------
# univariate helpers for the q -> 1 checks

def divide_univariate(num: Dict[int, Fraction], den: Dict[int, Fraction]) -> Dict[int, Fraction]:
    """Exact division of univariate Laurent polynomials given as {exponent: coeff}.

    Raises ArithmeticError if the remainder is not zero.
    """
    num = {e: Fraction(c) for e, c in num.items() if c}
    den = {e: Fraction(c) for e, c in den.items() if c}
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    dlo, dhi = min(den), max(den)
    quot: Dict[int, Fraction] = {}
    while num:
        hi = max(num)
        if hi - dhi < min(num) - dlo:
            raise ArithmeticError("inexact division")
        shift = hi - dhi
        c = num[hi] / den[dhi]
        quot[shift] = c
        for e, v in den.items():
            k = e + shift
            nv = num.get(k, 0) - c * v
            if nv:
                num[k] = nv
            else:
                num.pop(k, None)
    return quot


def specialize_q(p: ParamPoly, m_plus: Number, m_minus: Number) -> Dict[int, Fraction]:
    """Univariate Laurent polynomial in q^{1/4} obtained by fixing m+ and m-."""
    out: Dict[int, Fraction] = {}
    for (a, b, c), v in p.terms.items():
        x = Fraction(a) + b * Fraction(m_plus) + c * Fraction(m_minus)
        if x.denominator != 1:
            raise ValueError("fractional exponent")
        out[int(x)] = out.get(int(x), 0) + v
    return {e: v for e, v in out.items() if v}


def value_at_one(fr: ParamFraction, m_plus: Number, m_minus: Number) -> Fraction:
    """Limit q -> 1 of a fraction with m+ and m- fixed, via exact division by (x - 1)."""
    num = specialize_q(fr.num, m_plus, m_minus)
    den = specialize_q(fr.den_poly(), m_plus, m_minus)
    one = {1: Fraction(1), 0: Fraction(-1)}
    while True:
        n1 = sum(num.values(), Fraction(0))
        d1 = sum(den.values(), Fraction(0))
        if d1 != 0:
            return n1 / d1
        if n1 != 0:
            raise ZeroDivisionError("pole at q = 1")
        num = divide_univariate(num, one)
        den = divide_univariate(den, one)
