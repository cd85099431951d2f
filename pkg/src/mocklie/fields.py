"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Every computation in this package happens over one of these two fields; there
is no floating point anywhere.  Scalars are stored raw (``Fraction`` for the
rationals, ``int`` in ``[0, p)`` for a prime field) and the field object owns
the arithmetic, so hot loops pay no per-element wrapper cost.  All values in
one computation share a single field descriptor; mixing fields is an error.

String forms: rationals render as ``"a"`` or ``"a/b"``; prime-field elements
render as ``"k mod p"`` (plain ``"k"`` is accepted on input).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError, MixedFieldError

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "QQ",
    "prime_field",
    "normalize",
    "field_inverse",
    "SMALL_CHARACTERISTIC_WARNING",
]

# Attached to every CheckReport computed over a field of characteristic 2 or 3,
# where the standing hypotheses (characteristic != 2, 3) do not apply.
SMALL_CHARACTERISTIC_WARNING = (
    "characteristic 2/3 outside the supported hypotheses "
    "(characteristic != 2,3); results are exploratory"
)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of arbitrary-precision rationals (characteristic 0)."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, value) -> Fraction:
        """Coerce an int, Fraction or string into a rational."""
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot coerce {value!r} into the rational field")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / a

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            return normalize(int(num), int(den))
        return Fraction(int(text))

    def render(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime ``p``.

    Construction rejects non-prime moduli, so inversion is always defined for
    nonzero elements.
    """

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.p

    def of(self, value) -> int:
        if isinstance(value, bool):
            raise FieldError(f"cannot coerce {value!r} into GF({self.p})")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(
                    f"denominator of {value} is not invertible mod {self.p}"
                )
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def parse(self, text: str) -> int:
        text = text.strip()
        if "mod" in text:
            value, _, modulus = text.partition("mod")
            if int(modulus) != self.p:
                raise MixedFieldError(
                    f"scalar {text!r} declares modulus {modulus.strip()}, "
                    f"field is GF({self.p})"
                )
            return int(value) % self.p
        return int(text) % self.p

    def render(self, a) -> str:
        return f"{a % self.p} mod {self.p}"

    def __repr__(self):
        return f"GF({self.p})"


Field = RationalField | PrimeField

QQ = RationalField()


def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def normalize(raw_numerator: int, raw_denominator: int) -> Fraction:
    """Canonical rational from an integer pair.

    The sign lands on the numerator, gcd is divided out and zero is ``0/1``.
    A zero denominator raises ``ZeroDivisionError``.
    """
    return Fraction(raw_numerator, raw_denominator)


def field_inverse(field: Field, value):
    """Multiplicative inverse of ``value`` in ``field``; 0 is rejected."""
    return field.inv(value)


def require_same_field(f1: Field, f2: Field) -> None:
    if f1 != f2:
        raise MixedFieldError(f"mixed fields: {f1!r} and {f2!r}")


def characteristic_warnings(field: Field) -> tuple[str, ...]:
    """Warnings attached to reports computed over this field."""
    if field.characteristic in (2, 3):
        return (SMALL_CHARACTERISTIC_WARNING,)
    return ()
