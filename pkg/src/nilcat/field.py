"""Exact ground fields: the rationals and prime fields F_p.

Elements of ``QQ`` are :class:`fractions.Fraction` values.  Elements of a
prime field are :class:`FpElement` instances.  Both support ``+ - * /`` and
comparison against plain integers, so matrix code never needs to know which
field it is working over.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class FieldError(ValueError):
    pass


class FpElement:
    """Residue class modulo a prime ``p``.  Invariant: ``0 <= value < p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(o * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.value == o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class Field:
    """Base class for the two supported fields."""

    name: str
    characteristic: int

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text) -> object:
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def contains(self, value) -> bool:
        raise NotImplementedError


_LITERAL = re.compile(r"\s*-?[0-9]+(/[0-9]+)?\s*")


def _fraction(text) -> Fraction:
    # only integer and num/den literals; decimals would hide a float
    if isinstance(text, str) and not _LITERAL.fullmatch(text):
        raise ValueError(text)
    return Fraction(text)


class Rationals(Field):
    name = "Q"
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, FpElement):
            raise FieldError("cannot coerce an F_p element into Q")
        if isinstance(value, float):
            raise FieldError("floats are not exact; pass an int, Fraction or 'num/den'")
        return Fraction(value)

    def parse(self, text) -> Fraction:
        if isinstance(text, bool) or not isinstance(text, (str, int)):
            raise FieldError(f"rational entries must be strings or integers, got {text!r}")
        try:
            return _fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {text!r}") from exc

    def format(self, value) -> str:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def to_json(self) -> dict:
        return {"field": "Q"}

    def contains(self, value) -> bool:
        return isinstance(value, (Fraction, int)) and not isinstance(value, bool)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise FieldError(f"cannot coerce F_{value.p} element into F_{self.p}")
            return value
        if isinstance(value, Fraction):
            return FpElement(value.numerator, self.p) / FpElement(value.denominator, self.p)
        if isinstance(value, bool) or not isinstance(value, int):
            raise FieldError(f"cannot coerce {value!r} into F_{self.p}")
        return FpElement(value, self.p)

    def parse(self, text) -> FpElement:
        if isinstance(text, bool) or not isinstance(text, (str, int)):
            raise FieldError(f"F_p entries must be strings or integers, got {text!r}")
        try:
            return self(_fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad F_{self.p} literal {text!r}") from exc

    def format(self, value) -> str:
        return str(self(value).value)

    def to_json(self) -> dict:
        return {"field": "Fp", "p": self.p}

    def contains(self, value) -> bool:
        return isinstance(value, FpElement) and value.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"Q"``, ``"F7"`` or ``"Fp:7"`` into a field."""
    s = spec.strip()
    if s in ("Q", "QQ"):
        return QQ
    for prefix in ("Fp:", "Fp", "F", "GF"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return GF(int(s[len(prefix):]))
    raise FieldError(f"unrecognised field {spec!r}; use Q or F<p>")


def field_from_json(doc: dict) -> Field:
    kind = doc.get("field")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        p = doc.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise FieldError("prime field declaration needs an integer 'p'")
        return GF(p)
    raise FieldError(f"unknown field declaration {kind!r}")
