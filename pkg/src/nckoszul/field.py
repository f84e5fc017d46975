"""Exact coefficient fields: prime fields GF(p) and the rationals.

Hot loops work on raw values (``int`` residues or ``Fraction``) through the
methods of :class:`Field`; :class:`Scalar` is the checked, field-tagged value
used at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RawScalar = Union[int, Fraction]

DEFAULT_PRIME = 32003


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Field:
    """GF(p) when ``p`` is a prime, the rationals when ``p`` is None."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = DEFAULT_PRIME):
        if p is not None and not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def parse(cls, text: str | int) -> "Field":
        """Accepts ``32003``, ``GF(7)``, ``QQ``, ``Q``, ``rationals`` or ``0``."""
        s = str(text).strip()
        if s.lower() in ("qq", "q", "rationals", "0"):
            return cls.rationals()
        if s.upper().startswith("GF(") and s.endswith(")"):
            s = s[3:-1]
        try:
            return cls(int(s))
        except ValueError:
            raise FieldError(f"cannot parse field {text!r}") from None

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field.rationals()" if self.p is None else f"Field.prime({self.p})"

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    # -- raw-value arithmetic -------------------------------------------------

    @property
    def zero(self) -> RawScalar:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> RawScalar:
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, value) -> RawScalar:
        """Canonical representative of an int, Fraction or ``"a/b"`` string."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value)
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} has no image in {self}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p is not None else a * b

    def neg(self, a):
        return -a % self.p if self.p is not None else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in field " + str(self))
        return pow(a, -1, self.p) if self.p is not None else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- sparse vectors {key: value} -------------------------------------------

    def addmul(self, target: dict, c, source: dict) -> None:
        """``target += c * source`` in place, dropping zeros."""
        p = self.p
        if p is None:
            for k, v in source.items():
                nv = target.get(k, 0) + c * v
                if nv:
                    target[k] = nv
                else:
                    target.pop(k, None)
        else:
            for k, v in source.items():
                nv = (target.get(k, 0) + c * v) % p
                if nv:
                    target[k] = nv
                else:
                    target.pop(k, None)

    def scaled(self, c, source: dict) -> dict:
        if not c:
            return {}
        if self.p is None:
            return {k: c * v for k, v in source.items()}
        p = self.p
        return {k: c * v % p for k, v in source.items()}

    def format(self, a) -> str:
        if self.p is not None and a > self.p // 2:
            return str(a - self.p)
        return str(a)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; equality is structural."""

    field: Field
    value: RawScalar

    @classmethod
    def of(cls, field: Field, value) -> "Scalar":
        return cls(field, field.coerce(value))

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar) or other.field != self.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"


def field_arith(op: str, a: Scalar, b: Scalar) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div} to two scalars of the same field."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def scalar_negate(a: Scalar) -> Scalar:
    return -a
