"""Exact scalar arithmetic over the rationals and prime fields.

Scalars are plain Python values: ``fractions.Fraction`` over Q and ``int``
residues in ``[0, p)`` over F_p.  A :class:`Field` carries the arithmetic so
that every other module can stay field-agnostic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

Scalar = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_RESIDUE_RE = re.compile(r"^\s*([+-]?\d+)\s*$")


class FieldError(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class ParseError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (``p is None``) or the prime field F_p."""

    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip()
        if t == "Q":
            return cls()
        m = re.fullmatch(r"(?:Fp:|F|GF)(\d+)", t)
        if m is None:
            raise ParseError(f"unknown field descriptor {text!r}")
        try:
            return cls(int(m.group(1)))
        except FieldError as exc:
            raise ParseError(str(exc)) from exc

    # construction

    def __call__(self, value: Union[int, Fraction, str]) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else 1

    def elements(self) -> Iterator[Scalar]:
        if self.p is None:
            raise FieldError("the rationals cannot be enumerated")
        return iter(range(self.p))

    # arithmetic

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p is None else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def eq(self, a: Scalar, b: Scalar) -> bool:
        return self(a) == self(b)

    def power(self, a: Scalar, k: int) -> Scalar:
        return a**k if self.p is None else pow(a, k, self.p)

    # text

    def parse_scalar(self, text: str) -> Scalar:
        if self.p is None:
            m = _RATIONAL_RE.match(text)
            if m is None:
                raise ParseError(f"malformed rational {text!r}")
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(int(m.group(1)), den)
        m = _RESIDUE_RE.match(text)
        if m is None:
            raise ParseError(f"malformed residue {text!r} for F_{self.p}")
        return int(m.group(1)) % self.p

    def format(self, a: Scalar) -> str:
        return str(a)

    # ordering used for every deterministic choice

    def sort_key(self, a: Scalar):
        return a


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def field_char(F: Field) -> int:
    return F.char


def is_square(s: Scalar, F: Field) -> Optional[Scalar]:
    """Return a square root of ``s`` or None.

    Over Q the nonnegative root is returned, over F_p the smallest residue.
    """
    if F.p is None:
        s = Fraction(s)
        if s < 0:
            return None
        num, den = _isqrt_exact(s.numerator), _isqrt_exact(s.denominator)
        if num is None or den is None:
            return None
        return Fraction(num, den)
    s %= F.p
    for r in range(F.p):
        if r * r % F.p == s:
            return r
    return None


def _isqrt_exact(n: int) -> Optional[int]:
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def quad_roots(b: Scalar, c: Scalar, F: Field) -> list[Scalar]:
    """Roots of X^2 + bX + c in F, ascending and without repetition."""
    if F.char == 2:
        return [x for x in F.elements() if F.add(F.mul(x, F.add(x, b)), c) == 0]
    disc = F.sub(F.mul(b, b), F.mul(4, c))
    r = is_square(disc, F)
    if r is None:
        return []
    half = F.inv(F(2))
    roots = {F.mul(F.add(F.neg(b), r), half), F.mul(F.sub(F.neg(b), r), half)}
    return sorted(roots, key=F.sort_key)
