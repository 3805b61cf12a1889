"""Exact coefficient fields: the rationals and rational functions in ``q``.

Rationals are plain :class:`fractions.Fraction` values.  Rational functions
are :class:`RationalFunction` values kept in a canonical reduced form, so two
values are equal exactly when their representations are identical.

A computation works over one field at a time; :class:`Field` objects (``QQ``
and ``QQ_q``) carry the zero, the one, coercion and the textual syntax.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence, Union

__all__ = [
    "Fraction",
    "RationalFunction",
    "Field",
    "QQ",
    "QQ_q",
    "FieldMismatchError",
    "CoefficientSyntaxError",
    "field_of",
    "field_by_name",
    "field_add",
    "field_mul",
    "field_inv",
    "field_neg",
    "field_is_zero",
]


class FieldMismatchError(TypeError):
    """Raised when values from different coefficient fields meet."""


class CoefficientSyntaxError(ValueError):
    """Raised for malformed coefficient expressions."""


# ---------------------------------------------------------------------------
# univariate polynomials over Q: tuples of Fractions, constant term first,
# never with a trailing zero (the zero polynomial is the empty tuple)

Poly = tuple


def _trim(c: Sequence[Fraction]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return _trim([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def _pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _pscale(a: Poly, c: Fraction) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        c = rem[-1] / lead
        quot[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        rem = list(_trim(rem))
    return _trim(quot), tuple(rem)


def _monic(a: Poly) -> Poly:
    return _pscale(a, 1 / a[-1]) if a else a


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _monic(a)


def _format_poly(p: Poly) -> str:
    if not p:
        return "0"
    parts: list[str] = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


class RationalFunction:
    """An element of Q(q) as a reduced quotient of polynomials.

    The denominator is monic and coprime to the numerator; zero is ``0/1``.
    Integers and Fractions mix in as constants.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Sequence = (), den: Sequence = (1,)):
        n = _trim([Fraction(x) for x in num])
        d = _trim([Fraction(x) for x in den])
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if not n:
            d = (Fraction(1),)
        else:
            g = _pgcd(n, d)
            if len(g) > 1:
                n = _pdivmod(n, g)[0]
                d = _pdivmod(d, g)[0]
            lead = d[-1]
            if lead != 1:
                n = _pscale(n, 1 / lead)
                d = _pscale(d, 1 / lead)
        self.num: Poly = n
        self.den: Poly = d
        self._hash = hash((n, d))

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        obj._hash = hash((num, den))
        return obj

    @classmethod
    def q(cls) -> "RationalFunction":
        return cls._raw((Fraction(0), Fraction(1)), (Fraction(1),))

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        c = Fraction(c)
        return cls._raw((c,) if c else (), (Fraction(1),))

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction.constant(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalFunction(_padd(self.num, o.num), self.den)
        return RationalFunction(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RationalFunction._raw((), (Fraction(1),))
        if len(o.num) == 1 and len(o.den) == 1:
            return RationalFunction._raw(_pscale(self.num, o.num[0]), self.den)
        if len(self.num) == 1 and len(self.den) == 1:
            return RationalFunction._raw(_pscale(o.num, self.num[0]), o.den)
        return RationalFunction(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalFunction.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self.den == (1,) and self.num == ((c,) if c else ())
        return NotImplemented

    def __hash__(self):
        return self._hash

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def __str__(self):
        n = _format_poly(self.num)
        if self.den == (1,):
            return n
        d = _format_poly(self.den)
        if len([c for c in self.num if c]) > 1 or n.startswith("-"):
            n = f"({n})"
        if len([c for c in self.den if c]) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"


Value = Union[Fraction, RationalFunction]


# ---------------------------------------------------------------------------
# coefficient expression syntax

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|([-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise CoefficientSyntaxError(f"unexpected character {text[pos:pos+1]!r} at column {pos + 1} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _CoefficientParser:
    def __init__(self, text: str, field: "Field"):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.field = field

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise CoefficientSyntaxError(f"expected {expected or 'a value'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise CoefficientSyntaxError(f"trailing {self.peek()!r} in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                w = self.unary()
                if tok == "*":
                    v = v * w
                else:
                    if not w:
                        raise CoefficientSyntaxError(f"division by zero in {self.text!r}")
                    v = v / w
            elif tok == "q" or tok == "(" or (tok is not None and tok.isdigit()):
                v = v * self.unary()  # implicit product, e.g. 2q
            else:
                return v

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise CoefficientSyntaxError(f"exponent must be an integer in {self.text!r}")
            k = sign * int(tok)
            if k < 0 and not base:
                raise CoefficientSyntaxError(f"division by zero in {self.text!r}")
            if isinstance(base, Fraction):
                return base ** k
            return base ** k
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return self.field.coerce(int(tok))
        if tok == "q":
            if self.field is not QQ_q:
                raise CoefficientSyntaxError(f"'q' is not available over {self.field.name}")
            return RationalFunction.q()
        if tok == "(":
            v = self.expr()
            self.take(")")
            return v
        raise CoefficientSyntaxError(f"unexpected {tok!r} in {self.text!r}")


class Field:
    """One of the two supported coefficient fields."""

    def __init__(self, name: str, kind: type):
        self.name = name
        self.kind = kind
        self.zero = self.coerce(0)
        self.one = self.coerce(1)

    def coerce(self, x) -> Value:
        if self.kind is Fraction:
            if isinstance(x, RationalFunction):
                if not x.is_constant():
                    raise FieldMismatchError(f"{x} is not a rational number")
                return x.num[0] if x.num else Fraction(0)
            return Fraction(x)
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction.constant(x)

    def contains(self, x) -> bool:
        return isinstance(x, self.kind)

    def parse(self, text: str) -> Value:
        return _CoefficientParser(text, self).parse()

    def format(self, x: Value) -> str:
        return str(x)

    def __repr__(self):
        return self.name


QQ = Field("Q", Fraction)
QQ_q = Field("Q(q)", RationalFunction)


def field_by_name(name: str) -> Field:
    key = name.replace(" ", "")
    if key in ("Q", "QQ"):
        return QQ
    if key in ("Q(q)", "QQ(q)"):
        return QQ_q
    raise ValueError(f"unknown coefficient field {name!r} (expected Q or Q(q))")


def field_of(value) -> Field:
    if isinstance(value, RationalFunction):
        return QQ_q
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return QQ
    raise TypeError(f"not a coefficient: {value!r}")


def _same_field(a, b) -> None:
    if field_of(a) is not field_of(b):
        raise FieldMismatchError(f"cannot combine {a!r} and {b!r}: different coefficient fields")


def field_add(a: Value, b: Value) -> Value:
    _same_field(a, b)
    return a + b


def field_mul(a: Value, b: Value) -> Value:
    _same_field(a, b)
    return a * b


def field_neg(a: Value) -> Value:
    field_of(a)
    return -a


def field_inv(a: Value) -> Value:
    if field_of(a) is QQ:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)
    return a.inverse()


def field_is_zero(a: Value) -> bool:
    field_of(a)
    return not a
