"""Exact scalars over Q, Q(sqrt D) and their Gaussian (i-adjoined) extensions.

Rationals are plain ``fractions.Fraction`` values. ``QuadExt`` represents
a + b*sqrt(D) and ``GaussExt`` represents re + i*im, where the parts are
rationals or ``QuadExt`` values. Every operation is exact; floats only appear
in ``to_complex`` which the search code uses for numeric guidance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import BadParams, DivisionByZero, FieldMismatch, ParseError

Rational = Fraction


class Field(str, Enum):
    RAT = "rat"
    QUAD = "quad"
    GAUSS_RAT = "gauss_rat"
    GAUSS_QUAD = "gauss_quad"

    @property
    def is_gaussian(self) -> bool:
        return self in (Field.GAUSS_RAT, Field.GAUSS_QUAD)

    @property
    def has_radical(self) -> bool:
        return self in (Field.QUAD, Field.GAUSS_QUAD)

    def real(self) -> "Field":
        """The real subfield (drop i)."""
        return Field.QUAD if self.has_radical else Field.RAT

    def gaussian(self) -> "Field":
        return Field.GAUSS_QUAD if self.has_radical else Field.GAUSS_RAT


def join_fields(a: Field, b: Field) -> Field:
    radical = a.has_radical or b.has_radical
    if a.is_gaussian or b.is_gaussian:
        return Field.GAUSS_QUAD if radical else Field.GAUSS_RAT
    return Field.QUAD if radical else Field.RAT


def check_radicand(D: int) -> int:
    """Validate D as a square-free integer >= 2."""
    if not isinstance(D, int) or D < 2:
        raise BadParams(f"radicand must be an integer >= 2, got {D!r}")
    for p in range(2, math.isqrt(D) + 1):
        if D % (p * p) == 0:
            raise BadParams(f"radicand {D} is not square-free")
    return D


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True, eq=False)
class QuadExt:
    """a + b*sqrt(D) with rational a, b."""

    a: Fraction
    b: Fraction
    D: int

    def __post_init__(self):
        if type(self.a) is not Fraction:
            object.__setattr__(self, "a", Fraction(self.a))
        if type(self.b) is not Fraction:
            object.__setattr__(self, "b", Fraction(self.b))

    def _parts(self, other) -> Optional[Tuple[Fraction, Fraction]]:
        if isinstance(other, QuadExt):
            if other.D != self.D:
                raise FieldMismatch(f"cannot combine sqrt({self.D}) with sqrt({other.D})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadExt(self.a + p[0], self.b + p[1], self.D)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadExt(self.a - p[0], self.b - p[1], self.D)

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadExt(p[0] - self.a, p[1] - self.b, self.D)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        return QuadExt(self.a * c + self.b * d * self.D, self.a * d + self.b * c, self.D)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        """Field norm a^2 - D b^2; zero only for the zero element."""
        return self.a * self.a - self.D * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(sqrt D)")
        return QuadExt(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self * QuadExt(p[0], p[1], self.D).inverse()

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadExt(p[0], p[1], self.D) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.D == other.D and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.D})"

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(D)."""
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        # opposite signs: the larger square wins
        diff = self.a * self.a - self.D * self.b * self.b
        if diff == 0:
            return 0
        return sa if diff > 0 else sb


RealScalar = Union[Fraction, QuadExt]


def _is_real(x) -> bool:
    return isinstance(x, (int, Fraction, QuadExt))


@dataclass(frozen=True, eq=False)
class GaussExt:
    """re + i*im; conjugation negates im."""

    re: RealScalar
    im: RealScalar

    def __post_init__(self):
        if isinstance(self.re, int):
            object.__setattr__(self, "re", Fraction(self.re))
        if isinstance(self.im, int):
            object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _parts(other):
        if isinstance(other, GaussExt):
            return other.re, other.im
        if _is_real(other):
            return other, Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussExt(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussExt(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussExt(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        return GaussExt(self.re * c - self.im * d, self.re * d + self.im * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussExt(-self.re, -self.im)

    def conj(self) -> "GaussExt":
        return GaussExt(self.re, -self.im)

    def abs2(self) -> RealScalar:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussExt":
        n = self.abs2()
        if not n:
            raise DivisionByZero("division by zero in a Gaussian field")
        return GaussExt(self.re / n, -self.im / n)

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self * GaussExt(p[0], p[1]).inverse()

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussExt(p[0], p[1]) * self.inverse()

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussExt({self.re!r}, {self.im!r})"


Scalar = Union[Fraction, QuadExt, GaussExt]

I = GaussExt(Fraction(0), Fraction(1))


def field_of(x: Scalar) -> Field:
    if isinstance(x, GaussExt):
        if isinstance(x.re, QuadExt) or isinstance(x.im, QuadExt):
            return Field.GAUSS_QUAD
        return Field.GAUSS_RAT
    if isinstance(x, QuadExt):
        return Field.QUAD
    if isinstance(x, (int, Fraction)):
        return Field.RAT
    raise FieldMismatch(f"not an exact scalar: {x!r}")


def _real_to(x: RealScalar, radical: bool, D: int) -> RealScalar:
    if isinstance(x, QuadExt):
        if radical:
            if x.D != D:
                raise FieldMismatch(f"cannot combine sqrt({x.D}) with sqrt({D})")
            return x
        if x.b != 0:
            raise FieldMismatch(f"{format_scalar(x)} is not rational")
        return x.a
    x = Fraction(x)
    return QuadExt(x, Fraction(0), D) if radical else x


def coerce(x: Scalar, field: Field, D: int) -> Scalar:
    """Represent x in the given field, raising FieldMismatch when impossible."""
    if isinstance(x, GaussExt):
        if not field.is_gaussian:
            if x.im:
                raise FieldMismatch(f"{format_scalar(x)} is not real")
            return _real_to(x.re, field.has_radical, D)
        return GaussExt(_real_to(x.re, field.has_radical, D), _real_to(x.im, field.has_radical, D))
    if isinstance(x, (int, Fraction, QuadExt)):
        real = _real_to(x, field.has_radical, D)
        if field.is_gaussian:
            return GaussExt(real, _real_to(Fraction(0), field.has_radical, D))
        return real
    raise FieldMismatch(f"not an exact scalar: {x!r}")


def zero(field: Field, D: int) -> Scalar:
    return coerce(Fraction(0), field, D)


def one(field: Field, D: int) -> Scalar:
    return coerce(Fraction(1), field, D)


def imaginary_unit(field: Field, D: int) -> GaussExt:
    if not field.is_gaussian:
        raise FieldMismatch(f"field {field.value} has no imaginary unit")
    return coerce(I, field, D)


def arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Field arithmetic for op in {add, sub, mul, div}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise DivisionByZero("division by zero")
        return x / y
    raise BadParams(f"unknown operation {op!r}")


def sign(x: RealScalar) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    if isinstance(x, GaussExt):
        raise FieldMismatch("Gaussian scalars are not ordered")
    return _sgn(Fraction(x))


def conj(x: Scalar) -> Scalar:
    return x.conj() if isinstance(x, GaussExt) else x


def real_part(x: Scalar) -> RealScalar:
    return x.re if isinstance(x, GaussExt) else x


def imag_part(x: Scalar) -> RealScalar:
    return x.im if isinstance(x, GaussExt) else Fraction(0)


def abs2(x: Scalar) -> RealScalar:
    """|x|^2, which stays inside the real subfield."""
    if isinstance(x, GaussExt):
        return x.abs2()
    return x * x


def to_complex(x: Scalar) -> complex:
    if isinstance(x, GaussExt):
        return complex(x)
    return complex(float(x), 0.0)


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt_in_field(x: Scalar) -> Optional[Scalar]:
    """An exact square root of x inside its own field, or None."""
    if isinstance(x, GaussExt):
        if not x.im:
            r = sqrt_in_field(x.re)
            if r is not None:
                return GaussExt(r, x.im * 0)
            r = sqrt_in_field(-x.re)
            return None if r is None else GaussExt(x.im * 0, r)
        m = sqrt_in_field(x.abs2())
        if m is None:
            return None
        u = sqrt_in_field((x.re + m) / 2)
        if not u:
            return None
        return GaussExt(u, x.im / (2 * u))
    if isinstance(x, QuadExt):
        D = x.D
        if x.b == 0:
            r = rational_sqrt(x.a)
            if r is not None:
                return QuadExt(r, Fraction(0), D)
            r = rational_sqrt(x.a / D)
            if r is not None:
                return QuadExt(Fraction(0), r, D)
            return None
        n = rational_sqrt(x.norm())
        if n is None:
            return None
        for u2 in ((x.a + n) / 2, (x.a - n) / 2):
            u = rational_sqrt(u2)
            if u:
                root = QuadExt(u, x.b / (2 * u), D)
                return -root if root.sign() < 0 else root
        return None
    return rational_sqrt(Fraction(x))


def format_scalar(x: Scalar) -> str:
    if isinstance(x, GaussExt):
        return f"({format_scalar(x.re)},{format_scalar(x.im)})"
    if isinstance(x, QuadExt):
        return f"{x.a}+{x.b}*sqrt"
    return str(Fraction(x))


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.take(token):
            raise ParseError(f"expected {token!r} in {self.text!r}", self.pos)

    def digits(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected digits in {self.text!r}", start)
        return int(self.text[start:self.pos])


def _parse_rat(cur: _Cursor) -> Fraction:
    negative = cur.take("-")
    num = cur.digits()
    den = 1
    if cur.take("/"):
        at = cur.pos
        den = cur.digits()
        if den == 0:
            raise ParseError(f"zero denominator in {cur.text!r}", at)
    value = Fraction(num, den)
    return -value if negative else value


def _parse_real(cur: _Cursor, D: int) -> RealScalar:
    first = _parse_rat(cur)
    if cur.take("*"):
        cur.expect("sqrt")
        return QuadExt(Fraction(0), first, D)
    if cur.take("+"):
        second = _parse_rat(cur)
        cur.expect("*sqrt")
        return QuadExt(first, second, D)
    return first


def parse_scalar(text: str, D: int) -> Scalar:
    """Parse one matrix entry: rat | rat+rat*sqrt | rat*sqrt | (real,real)."""
    cur = _Cursor(text.strip())
    if not cur.text:
        raise ParseError("empty entry", 0)
    if cur.take("("):
        re = _parse_real(cur, D)
        cur.expect(",")
        im = _parse_real(cur, D)
        cur.expect(")")
        value: Scalar = GaussExt(re, im)
    else:
        value = _parse_real(cur, D)
    if cur.pos != len(cur.text):
        raise ParseError(f"trailing characters in {cur.text!r}", cur.pos)
    return value
