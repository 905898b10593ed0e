"""Exact polynomials and rational functions in one variable ``q``.

Coefficients are Python ints or :class:`fractions.Fraction`; a Fraction with
denominator 1 is always stored as an int so the integer case stays fast.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class NotPolynomial(ArithmeticError):
    """A rational function was required to be a polynomial but is not."""


def _norm(c) -> Scalar:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"inexact coefficient {c!r}")


class QPoly:
    """Dense polynomial in q, ``coeffs[k]`` is the coefficient of q^k."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, cs: list) -> "QPoly":
        # cs already normalized; strip only
        while cs and cs[-1] == 0:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        p._hash = None
        return p

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "QPoly":
        return cls._raw([0] * k + [_norm(c)])

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "QPoly":
        """Build sum c_k q^k from an exponent -> multiplicity mapping."""
        if not counts:
            return cls._raw([])
        cs = [0] * (max(counts) + 1)
        for k, c in counts.items():
            cs[k] += c
        return cls._raw(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __neg__(self):
        return QPoly._raw([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        elif not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = _norm(cs[i] + c)
        return QPoly._raw(cs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        elif not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            return QPoly._raw([_norm(c * other) for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._raw([])
        cs = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    cs[i + j] += x * y
        return QPoly._raw([_norm(c) for c in cs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return QPoly._raw([0] * k + list(self.coeffs))

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        unit = lead in (1, -1)
        if len(rem) < len(d):
            return ZERO, self
        quot = [0] * (len(rem) - len(d) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if not c:
                continue
            c = c * lead if unit else _norm(Fraction(c) / lead)
            quot[k] = c
            for i, y in enumerate(d):
                rem[k + i] = _norm(rem[k + i] - c * y)
        return QPoly._raw(quot), QPoly._raw(rem[: len(d) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "QPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return QPoly(Fraction(c) / lead for c in self.coeffs)

    def to_json(self):
        return format_poly(self)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over the rationals (gcd(0, 0) = 0)."""
    while b:
        a, b = b, a % b
    return a.monic()


ZERO = QPoly._raw([])
ONE = QPoly._raw([1])
Q = QPoly._raw([0, 1])


def as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly([x])
    raise TypeError(f"cannot coerce {x!r} to QPoly")


class QRat:
    """Reduced quotient of two polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num, den = as_qpoly(num), as_qpoly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        quot, rem = num.divmod(den)
        if not rem:
            # fast path: the quotient is already a polynomial
            num, den = quot, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading()
            if lead != 1:
                inv = 1 / Fraction(lead)
                num, den = num * inv, den * inv
        self.num: QPoly = num
        self.den: QPoly = den

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def __eq__(self, other):
        if isinstance(other, (QPoly, int, Fraction)):
            return self.den == ONE and self.num == other
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, (QPoly, int, Fraction)):
            return QRat(other)
        return None

    def __neg__(self):
        out = object.__new__(QRat)
        out.num, out.den = -self.num, self.den
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return QRat(self.den**-k, self.num**-k)
        return QRat(self.num**k, self.den**k)

    def to_json(self):
        if self.den == ONE:
            return format_poly(self.num)
        return {"num": format_poly(self.num), "den": format_poly(self.den)}


def rat_reduce(r: QRat) -> QRat:
    """Canonical form; QRat values are kept reduced, so this re-normalizes."""
    return QRat(r.num, r.den)


def as_polynomial(r) -> QPoly:
    """Exact polynomial value of ``r``; raises :class:`NotPolynomial`."""
    if isinstance(r, QPoly):
        return r
    if isinstance(r, (int, Fraction)):
        return QPoly([r])
    quot, rem = r.num.divmod(r.den)
    if rem:
        raise NotPolynomial(f"{r} is not a polynomial in q")
    return quot


@lru_cache(maxsize=None)
def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return QPoly._raw([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


@lru_cache(maxsize=None)
def one_minus_q_power_product(n: int) -> QPoly:
    """prod_{i=1}^{n} (1 - q^i)."""
    out = ONE
    for i in range(1, n + 1):
        out = out * (ONE - QPoly.monomial(i))
    return out


def h_principal(n: int) -> QRat:
    """h_n evaluated on the alphabet 1, q, q^2, ...: prod 1/(1 - q^i)."""
    return QRat(ONE, one_minus_q_power_product(n))


def coerce_coeff(c):
    """QRat with unit denominator collapses to QPoly; scalars become QPoly."""
    if isinstance(c, QRat):
        return c.num if c.den == ONE else c
    return as_qpoly(c)


# --- text form -----------------------------------------------------------

def _fmt_scalar(c: Scalar) -> str:
    return str(c)


def format_poly(p: QPoly) -> str:
    """Render as "1+2q+2q^2+q^3"."""
    if not p.coeffs:
        return "0"
    out = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = _fmt_scalar(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{_fmt_scalar(mag)}{var}"
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += sign + body
    return text


_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(q(?:\^(\d+))?)?")


def parse_poly(text: str) -> QPoly:
    """Inverse of :func:`format_poly`; accepts "3/2q^2-q+1" style input."""
    s = text.replace(" ", "").replace("*", "")
    if s in ("", "0"):
        return ZERO
    counts: dict[int, Scalar] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad polynomial literal {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        counts[k] = counts.get(k, 0) + sign * coef
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"bad polynomial literal {text!r}")
    cs = [0] * (max(counts) + 1)
    for k, c in counts.items():
        cs[k] = c
    return QPoly(cs)


def parse_coeff(obj):
    """Decode a JSON coefficient: a polynomial string or {"num","den"}."""
    if isinstance(obj, dict):
        return coerce_coeff(QRat(parse_poly(obj["num"]), parse_poly(obj["den"])))
    if isinstance(obj, int):
        return QPoly([obj])
    return parse_poly(str(obj))
