"""Exact arithmetic in Q[q, q^-1] and its fraction field Q(q).

Coefficients are ``fractions.Fraction``.  The second deformation parameter
p used on the column side of the wedge algebra is never a variable of its
own: it is always the monomial -q^-1 (see :func:`p_power`).
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

INF = math.inf

Number = Union[int, Fraction]


class LaurentPoly:
    """Sparse Laurent polynomial in q with rational coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                if v:
                    c[int(e)] = Fraction(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        # trusted constructor, c already has no zeros
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, v: Number) -> "LaurentPoly":
        return cls({0: v}) if v else cls._raw({})

    @classmethod
    def monomial(cls, e: int, v: Number = 1) -> "LaurentPoly":
        return cls({e: v})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coeff(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_const(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def degree(self):
        return max(self._c) if self._c else -INF

    def valuation(self):
        return min(self._c) if self._c else INF

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        if isinstance(other, RatFun):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return RatFun(self) ** k
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return RatFun(self) / other

    def __rtruediv__(self, other):
        return RatFun(other) / RatFun(self)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def evaluate(self, x):
        return sum(v * x ** e for e, v in self._c.items())

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return None


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: Fraction(1)})
Q = LaurentPoly._raw({1: Fraction(1)})
QINV = LaurentPoly._raw({-1: Fraction(1)})


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly._raw({k: Fraction(1)})


def p_power(k: int) -> LaurentPoly:
    """p^k with p = -q^-1."""
    return LaurentPoly._raw({-k: Fraction(-1 if k % 2 else 1)})


# -- dense polynomial helpers (lists, lowest degree first) -------------------

def _to_dense(p: LaurentPoly):
    """Return (shift, coeff list) with p = q^shift * sum c_k q^k, c_0 != 0."""
    lo, hi = min(p._c), max(p._c)
    return lo, [p._c.get(e, Fraction(0)) for e in range(lo, hi + 1)]


def _from_dense(shift, coeffs):
    return LaurentPoly._raw({shift + k: v for k, v in enumerate(coeffs) if v})


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _divmod(a, b):
    a = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        k = len(a) - len(b)
        f = a[-1] / lead
        quot[k] = f
        for j, v in enumerate(b):
            a[k + j] -= f * v
        a.pop()
    return _trim(quot), a


def _gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [v / lead for v in a]


class RatFun:
    """Element of Q(q) as a reduced quotient of Laurent polynomials.

    The denominator is a polynomial with nonzero constant term and leading
    coefficient 1, and it is coprime to the numerator.  This makes the
    representation unique, so equality and hashing are structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        a = _as_rat(num)
        if a is None:
            raise TypeError(f"bad numerator {num!r}")
        if den is None:
            self.num, self.den, self._hash = a.num, a.den, None
            return
        b = _as_rat(den)
        if b is None or b.num.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(a.num * b.den, a.den * b.num)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == ONE

    def to_poly(self) -> LaurentPoly:
        if not self.is_poly():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.den == ONE and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den == ONE else hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return RatFun._raw(self.num + other.num, ONE)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return RatFun._raw(self.num * other.num, ONE)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rat(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFun(ONE) / (self ** -k)
        out = RatFun(ONE)
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "RatFun":
        if self.den == ONE:
            return RatFun._raw(self.num.bar(), ONE)
        return RatFun(self.num.bar(), self.den.bar())

    def valuation(self):
        if self.num.is_zero():
            return INF
        return self.num.valuation() - self.den.valuation()

    def __repr__(self):
        return f"RatFun({format_ratfun(self)!r})"

    def __str__(self):
        return format_ratfun(self)


def _as_rat(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, LaurentPoly):
        return RatFun._raw(x, ONE)
    if isinstance(x, (int, Fraction)):
        return RatFun._raw(LaurentPoly.const(x), ONE)
    return None


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return ZERO, ONE
    sn, a = _to_dense(num)
    sd, b = _to_dense(den)
    if len(b) > 1 and len(a) > 1:
        g = _gcd(a, b)
        if len(g) > 1:
            a, _ = _divmod(a, g)
            b, _ = _divmod(b, g)
    lead = b[-1]
    a = [v / lead for v in a]
    b = [v / lead for v in b]
    return _from_dense(sn - sd, a), _from_dense(0, b)


def as_ratfun(x) -> RatFun:
    r = _as_rat(x)
    if r is None:
        raise TypeError(f"cannot convert {x!r} to RatFun")
    return r


# -- quantum numbers ----------------------------------------------------------

def qint(a: int) -> LaurentPoly:
    """Quantum integer [a] = (q^a - q^-a)/(q - q^-1)."""
    if a == 0:
        return ZERO
    if a < 0:
        return -qint(-a)
    return LaurentPoly._raw({e: Fraction(1) for e in range(-a + 1, a, 2)})


def qfactorial(a: int) -> LaurentPoly:
    if a < 0:
        raise ValueError("negative factorial")
    out = ONE
    for k in range(1, a + 1):
        out = out * qint(k)
    return out


def qbinom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial by the product formula prod_{j<k} [n-j]/[j+1]."""
    if k < 0:
        return ZERO
    num = ONE
    for j in range(k):
        num = num * qint(n - j)
    if num.is_zero():
        return ZERO
    return RatFun(num, qfactorial(k)).to_poly()


def valuation(x) -> float:
    """Order of vanishing at q = 0 (infinity for zero)."""
    if isinstance(x, LaurentPoly):
        return x.valuation()
    return as_ratfun(x).valuation()


def bar(x):
    """q -> q^-1."""
    if isinstance(x, (int, Fraction)):
        return x
    return x.bar()


# -- text form ----------------------------------------------------------------

def _fmt_coeff(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_laurent(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, v in p.items():
        parts.append(_fmt_coeff(v) if e == 0 else f"{_fmt_coeff(v)}*q^{e}")
    return " + ".join(parts)


def format_ratfun(x: RatFun) -> str:
    if x.den == ONE:
        return format_laurent(x.num)
    return f"({format_laurent(x.num)})/({format_laurent(x.den)})"


_TERM = re.compile(
    r"^\s*([+-]?\s*\d+(?:/\d+)?)?\s*(\*?\s*q(?:\s*\^\s*([+-]?\d+))?)?\s*$")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the sparse text form, e.g. ``-1*q^-1 + 2 + 1*q^3``.

    Terms may also be joined by `` - `` and coefficients may be omitted
    (``q^2``, ``-q``).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    # split on + or - that separate terms (not the sign of an exponent)
    terms, buf, prev = [], "", ""
    for ch in s:
        if ch in "+-" and buf.strip() and prev != "^":
            terms.append(buf)
            buf = "" if ch == "+" else "-"
        else:
            buf += ch
        if not ch.isspace():
            prev = ch
    terms.append(buf)
    out = {}
    for t in terms:
        t = t.strip()
        if not t:
            raise ValueError(f"bad polynomial {text!r}")
        sign = 1
        while t.startswith("-") and (len(t) == 1 or not t[1].isdigit()):
            sign, t = -sign, t[1:].strip()
        m = _TERM.match(t)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {t!r} in {text!r}")
        c = Fraction(m.group(1).replace(" ", "")) if m.group(1) else Fraction(1)
        e = 0
        if m.group(2):
            e = int(m.group(3)) if m.group(3) else 1
        out[e] = out.get(e, 0) + sign * c
    return LaurentPoly(out)


def parse_ratfun(text: str) -> RatFun:
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m:
        return RatFun(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    return RatFun(parse_laurent(s))


def poly_sum(items: Iterable) -> LaurentPoly:
    out = ZERO
    for x in items:
        out = out + x
    return out
