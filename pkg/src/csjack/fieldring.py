"""Exact coefficient field: rational functions of the coupling over Q.

A BetaPoly is a dense tuple of Fractions in ascending powers of the coupling
b, with no trailing zeros; the zero polynomial is the empty tuple.  A
FieldElement is a quotient num/den of two BetaPolys kept canonical at all
times: gcd(num, den) = 1 and den monic.  Canonical form makes equality and
hashing structural, which the serialization contract relies on.

Arithmetic special-cases den == 1, the overwhelmingly common shape while
operator pipelines run, so the hot path never touches the Euclidean gcd.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero, PoleAtValue

BetaPoly = tuple  # tuple[Fraction, ...], ascending powers, trimmed

_F0 = Fraction(0)
_F1 = Fraction(1)
_PZERO: BetaPoly = ()
_PONE: BetaPoly = (_F1,)


def poly(coeffs: Iterable) -> BetaPoly:
    """Build a BetaPoly from ascending coefficients (ints, Fractions, strings)."""
    items = [Fraction(c) for c in coeffs]
    while items and items[-1] == 0:
        items.pop()
    return tuple(items)


def poly_add(a: BetaPoly, b: BetaPoly) -> BetaPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_neg(a: BetaPoly) -> BetaPoly:
    return tuple(-c for c in a)


def poly_sub(a: BetaPoly, b: BetaPoly) -> BetaPoly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: BetaPoly, b: BetaPoly) -> BetaPoly:
    if not a or not b:
        return _PZERO
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_scale(a: BetaPoly, s: Fraction) -> BetaPoly:
    if not s:
        return _PZERO
    return tuple(c * s for c in a)


def poly_divmod(a: BetaPoly, b: BetaPoly) -> tuple[BetaPoly, BetaPoly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return _PZERO, a
    r = list(a)
    q = [_F0] * (len(a) - len(b) + 1)
    inv = _F1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        top = r[k + len(b) - 1]
        if top:
            c = top * inv
            q[k] = c
            for i, bc in enumerate(b):
                if bc:
                    r[k + i] -= c * bc
    while q and q[-1] == 0:
        q.pop()
    while r and r[-1] == 0:
        r.pop()
    return tuple(q), tuple(r)


def poly_gcd(a: BetaPoly, b: BetaPoly) -> BetaPoly:
    """Monic greatest common divisor; zero input pairs give zero."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a and a[-1] != 1:
        a = poly_scale(a, _F1 / a[-1])
    return a


def poly_eval(a: BetaPoly, x: Fraction) -> Fraction:
    out = _F0
    for c in reversed(a):
        out = out * x + c
    return out


def poly_is_integral(a: BetaPoly) -> bool:
    return all(c.denominator == 1 for c in a)


def poly_str(a: BetaPoly, sym: str = "b") -> str:
    if not a:
        return "0"
    pieces = []
    for power in range(len(a) - 1, -1, -1):
        c = a[power]
        if not c:
            continue
        if power == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}{sym}" if power == 1 else f"{head}{sym}^{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


FieldLike = Union["FieldElement", int, Fraction]


def _canonical(num: BetaPoly, den: BetaPoly) -> tuple[BetaPoly, BetaPoly]:
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return _PZERO, _PONE
    if den == _PONE:
        return num, den
    g = poly_gcd(num, den)
    if len(g) > 1:
        num = poly_divmod(num, g)[0]
        den = poly_divmod(den, g)[0]
    lc = den[-1]
    if lc != 1:
        inv = _F1 / lc
        num = poly_scale(num, inv)
        den = poly_scale(den, inv)
    return num, den


class FieldElement:
    """Reduced quotient of two coupling polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_PONE):
        self.num, self.den = _canonical(poly(num), poly(den) if den is not _PONE else _PONE)

    # -- construction helpers -------------------------------------------

    @classmethod
    def _raw(cls, num: BetaPoly, den: BetaPoly) -> "FieldElement":
        # caller guarantees canonical form
        fe = object.__new__(cls)
        fe.num = num
        fe.den = den
        return fe

    @classmethod
    def from_fraction(cls, value) -> "FieldElement":
        value = Fraction(value)
        if not value:
            return ZERO
        return cls._raw((value,), _PONE)

    @classmethod
    def beta(cls, power: int = 1) -> "FieldElement":
        """The coupling raised to an integer power (negative allowed)."""
        if power >= 0:
            return cls._raw(tuple([_F0] * power) + (_F1,), _PONE)
        return cls._raw(_PONE, tuple([_F0] * (-power)) + (_F1,))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "FieldElement":
        other = _as_field(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _PONE and other.den == _PONE:
            return FieldElement._raw(poly_add(self.num, other.num), _PONE)
        num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return FieldElement._raw(*_canonical(num, poly_mul(self.den, other.den)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw(poly_neg(self.num), self.den)

    def __sub__(self, other) -> "FieldElement":
        other = _as_field(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other) -> "FieldElement":
        other = _as_field(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other) -> "FieldElement":
        other = _as_field(other)
        if other is NotImplemented:
            return NotImplemented
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if d1 == _PONE and d2 == _PONE:
            return FieldElement._raw(poly_mul(n1, n2), _PONE)
        if not n1 or not n2:
            return ZERO
        g1 = poly_gcd(n1, d2)
        if len(g1) > 1:
            n1 = poly_divmod(n1, g1)[0]
            d2 = poly_divmod(d2, g1)[0]
        g2 = poly_gcd(n2, d1)
        if len(g2) > 1:
            n2 = poly_divmod(n2, g2)[0]
            d1 = poly_divmod(d1, g2)[0]
        num = poly_mul(n1, n2)
        den = poly_mul(d1, d2)
        lc = den[-1]
        if lc != 1:
            inv = _F1 / lc
            num = poly_scale(num, inv)
            den = poly_scale(den, inv)
        return FieldElement._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return FieldElement._raw(*_canonical(self.den, self.num))

    def __truediv__(self, other) -> "FieldElement":
        other = _as_field(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other) -> "FieldElement":
        other = _as_field(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__mul__(self.inverse())

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates and conversions ---------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        other = _as_field(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == _PONE

    def as_fraction(self) -> Fraction:
        if not self.num:
            return _F0
        if not self.is_constant():
            raise PoleAtValue(f"{self} is not a constant")
        return self.num[0]

    def specialize(self, beta_value) -> Fraction:
        """Evaluate at a rational coupling value; poles raise PoleAtValue."""
        x = Fraction(beta_value)
        d = poly_eval(self.den, x)
        if d == 0:
            raise PoleAtValue(f"pole at coupling value {x}")
        return poly_eval(self.num, x) / d

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "num": [str(c) for c in self.num],
            "den": [str(c) for c in self.den],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FieldElement":
        return cls(poly(obj["num"]), poly(obj["den"]))

    def __str__(self) -> str:
        if self.den == _PONE:
            return poly_str(self.num)
        # display with cleared denominators: integer primitive num/den
        mult = 1
        for c in self.num + self.den:
            mult = mult * c.denominator // math.gcd(mult, c.denominator)
        n = [c * mult for c in self.num]
        d = [c * mult for c in self.den]
        g = 0
        for c in n + d:
            g = math.gcd(g, int(c))
        if g > 1:
            n = [c / g for c in n]
            d = [c / g for c in d]
        num = poly_str(tuple(n))
        den = poly_str(tuple(d))
        if len(n) > 1 or (n and n[0] < 0):
            num = f"({num})"
        if len(d) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    __repr__ = __str__


def _as_field(x) -> "FieldElement":
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement.from_fraction(x)
    return NotImplemented


ZERO = FieldElement._raw(_PZERO, _PONE)
ONE = FieldElement._raw(_PONE, _PONE)
BETA = FieldElement.beta()


def field(x) -> FieldElement:
    """Coerce an int or Fraction (or FieldElement) into the field."""
    out = _as_field(x)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} into the coefficient field")
    return out


def specialize(a: FieldElement, beta_value) -> Fraction:
    return a.specialize(beta_value)


def pochhammer(x: FieldLike, n: int) -> FieldElement:
    """Rising factorial x (x+1) ... (x+n-1); empty product for n = 0."""
    if n < 0:
        raise DivisionByZero(f"pochhammer index {n} < 0")
    out = ONE
    term = field(x)
    for k in range(n):
        out = out * (term + k)
    return out


def is_integer_in_inverse_beta(a: FieldElement) -> bool:
    """True when a is an integer-coefficient polynomial in 1/b.

    Canonical form makes this a structural check: the denominator must be a
    monic power of b and the numerator an integer polynomial of no larger
    degree.
    """
    den = a.den
    if any(c for c in den[:-1]) or den[-1] != 1:
        return False
    if len(a.num) > len(den):
        return False
    return poly_is_integral(a.num)
