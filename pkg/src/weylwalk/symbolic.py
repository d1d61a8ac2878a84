"""Exact reals of the form c * 2^(p/2) * pi^(q/2) with rational c."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath


@dataclass(frozen=True, eq=False)
class SymbolicReal:
    """``coeff * 2**(two_half_power/2) * pi**(pi_half_power/2)``.

    Equality and hashing use a canonical form with ``two_half_power`` in
    {0, 1}; the stored triple is kept as constructed so that displayed values
    mirror how they were built.
    """

    coeff: Fraction
    two_half_power: int = 0
    pi_half_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "two_half_power", int(self.two_half_power))
        object.__setattr__(self, "pi_half_power", int(self.pi_half_power))

    @classmethod
    def rational(cls, c) -> "SymbolicReal":
        return cls(Fraction(c))

    @classmethod
    def sqrt_pi(cls) -> "SymbolicReal":
        return cls(Fraction(1), 0, 1)

    @classmethod
    def two_pi_power(cls, k: int) -> "SymbolicReal":
        """(2 pi)^(k/2)."""
        return cls(Fraction(1), k, k)

    def canonical(self) -> tuple[Fraction, int, int]:
        p = self.two_half_power
        c = self.coeff
        if c == 0:
            return (Fraction(0), 0, 0)
        half, rem = divmod(p, 2)
        c = c * Fraction(2) ** half
        return (c, rem, self.pi_half_power)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicReal(Fraction(other))
        if not isinstance(other, SymbolicReal):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymbolicReal(self.coeff * other, self.two_half_power, self.pi_half_power)
        if not isinstance(other, SymbolicReal):
            return NotImplemented
        return SymbolicReal(self.coeff * other.coeff, self.two_half_power + other.two_half_power,
                            self.pi_half_power + other.pi_half_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicReal(Fraction(other))
        if not isinstance(other, SymbolicReal):
            return NotImplemented
        if other.coeff == 0:
            raise ZeroDivisionError("division by a zero SymbolicReal")
        return SymbolicReal(self.coeff / other.coeff, self.two_half_power - other.two_half_power,
                            self.pi_half_power - other.pi_half_power)

    def __rtruediv__(self, other):
        return SymbolicReal(Fraction(other)) / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return SymbolicReal(Fraction(1)) / self ** (-e)
        return SymbolicReal(self.coeff**e, self.two_half_power * e, self.pi_half_power * e)

    def is_rational(self) -> bool:
        c, p, q = self.canonical()
        return p == 0 and q == 0

    def to_fraction(self) -> Fraction:
        c, p, q = self.canonical()
        if p or q:
            raise ValueError(f"{self} is not rational")
        return c

    def to_mpf(self):
        """Numerical value at the current mpmath precision."""
        c = mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
        return c * mpmath.sqrt(2) ** self.two_half_power * mpmath.sqrt(mpmath.pi) ** self.pi_half_power

    def log(self):
        if self.coeff <= 0:
            raise ValueError("log of a non-positive SymbolicReal")
        return (mpmath.log(self.coeff.numerator) - mpmath.log(self.coeff.denominator)
                + self.two_half_power * mpmath.log(2) / 2 + self.pi_half_power * mpmath.log(mpmath.pi) / 2)

    def __float__(self):
        with mpmath.workprec(80):
            return float(self.to_mpf())

    def __str__(self):
        parts = [str(self.coeff)]
        if self.two_half_power:
            parts.append(f"2^({self.two_half_power}/2)")
        if self.pi_half_power:
            parts.append(f"pi^({self.pi_half_power}/2)")
        return "*".join(parts)

    def __repr__(self):
        return f"SymbolicReal({self.coeff!s}, {self.two_half_power}, {self.pi_half_power})"

    def as_dict(self) -> dict:
        return {"coeff": str(self.coeff), "p": self.two_half_power, "q": self.pi_half_power}


def gamma_half(x) -> SymbolicReal:
    """Gamma(x) for x a positive integer or half-integer."""
    x = Fraction(x)
    if x <= 0 or (2 * x).denominator != 1:
        raise ValueError(f"gamma_half needs a positive integer or half-integer, got {x}")
    if x.denominator == 1:
        return SymbolicReal(Fraction(factorial(int(x) - 1)))
    m = int(x - Fraction(1, 2))
    # Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
    return SymbolicReal(Fraction(factorial(2 * m), 4**m * factorial(m)), 0, 1)
