"""Exact coefficient arithmetic: the rationals and prime fields Z/p.

Scalars are `fractions.Fraction` values in rational mode and plain ints
reduced mod p in prime mode.  All operations are exact; there is no
floating point anywhere in the package core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError


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
    """A coefficient field: ``Field.rationals()`` or ``Field.prime(p)``."""

    kind: str
    p: int | None = None

    @classmethod
    def rationals(cls) -> "Field":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "Field":
        if not _is_prime(p):
            raise FieldError(f"characteristic must be prime, got {p}")
        return cls("prime", p)

    def __post_init__(self):
        if self.kind not in ("rational", "prime"):
            raise FieldError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime" and (self.p is None or not _is_prime(self.p)):
            raise FieldError(f"prime field needs a prime characteristic, got {self.p}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p  # type: ignore[return-value]

    # -- scalar construction ------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def from_int(self, n: int):
        return Fraction(n) if self.kind == "rational" else n % self.p

    def parse(self, text: str):
        """Parse ``"a"`` or ``"a/b"`` into a scalar of this field."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                num_i, den_i = int(num), int(den)
            else:
                num_i, den_i = int(text), 1
        except ValueError:
            raise FieldError(f"bad scalar literal {text!r}") from None
        if den_i == 0:
            raise FieldError(f"zero denominator in {text!r}")
        if self.kind == "rational":
            return Fraction(num_i, den_i)
        return self.div(self.from_int(num_i), self.from_int(den_i))

    def fmt(self, a) -> str:
        return str(a)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.kind == "rational" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rational" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rational" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "rational" else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise FieldError("division by zero")
        if self.kind == "rational":
            return 1 / Fraction(a)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0
