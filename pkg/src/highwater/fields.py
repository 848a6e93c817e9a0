"""Exact scalar arithmetic over Q or a prime field F_p (p not 2 or 3).

Every scalar carries its field so that cross-field arithmetic is an
error instead of a silent coercion.  Characteristic 0 scalars wrap
``fractions.Fraction``; characteristic p scalars are residues in
``range(p)``.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    """Raised when scalars from different fields are combined."""


class BadCharacteristicError(ValueError):
    """Raised for characteristic 2 or 3 (where the algebra is undefined)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (characteristic 0) or F_p for a prime p >= 5."""

    __slots__ = ("characteristic",)

    _cache: dict[int, "Field"] = {}

    def __new__(cls, characteristic: int):
        if characteristic in cls._cache:
            return cls._cache[characteristic]
        if characteristic in (2, 3):
            raise BadCharacteristicError(
                "characteristic 2 and 3 are not supported")
        if characteristic != 0 and not _is_prime(characteristic):
            raise BadCharacteristicError(
                f"characteristic must be 0 or prime, got {characteristic}")
        self = object.__new__(cls)
        object.__setattr__(self, "characteristic", characteristic)
        cls._cache[characteristic] = self
        return self

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Field is immutable")

    def __repr__(self):
        p = self.characteristic
        return "Q" if p == 0 else f"GF({p})"

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __eq__(self, other):
        return isinstance(other, Field) and \
            other.characteristic == self.characteristic

    # -- constructors ---------------------------------------------------

    def scalar(self, numerator, denominator: int = 1) -> "Scalar":
        """Build a scalar from an integer or rational n/d."""
        return self.from_fraction(Fraction(numerator, denominator))

    def from_fraction(self, q: Fraction | int) -> "Scalar":
        q = Fraction(q)
        p = self.characteristic
        if p == 0:
            return Scalar(self, q)
        den = q.denominator % p
        if den == 0:
            raise ZeroDivisionError(
                f"denominator {q.denominator} is 0 mod {p}")
        return Scalar(self, q.numerator * pow(den, -1, p) % p)

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)


class Scalar:
    """An immutable field element supporting exact arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Scalar is immutable")

    def _check(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatchError(
                f"cannot combine scalars over {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        v = self.value + other.value
        p = self.field.characteristic
        return Scalar(self.field, v if p == 0 else v % p)

    def __sub__(self, other):
        self._check(other)
        v = self.value - other.value
        p = self.field.characteristic
        return Scalar(self.field, v if p == 0 else v % p)

    def __mul__(self, other):
        self._check(other)
        v = self.value * other.value
        p = self.field.characteristic
        return Scalar(self.field, v if p == 0 else v % p)

    def __neg__(self):
        p = self.field.characteristic
        return Scalar(self.field, -self.value if p == 0 else -self.value % p)

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        p = self.field.characteristic
        if p == 0:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, p))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        return (isinstance(other, Scalar)
                and other.field is self.field
                and other.value == self.value)

    def __hash__(self):
        return hash((self.field.characteristic, self.value))

    def as_fraction(self) -> Fraction:
        """Canonical rational lift (residue in [0, p) for F_p)."""
        return Fraction(self.value)

    def __repr__(self):
        return f"{self.value}"


QQ = Field(0)


def GF(p: int) -> Field:
    """Prime field of characteristic p (p >= 5)."""
    if p == 0:
        raise BadCharacteristicError("use QQ for characteristic 0")
    return Field(p)
