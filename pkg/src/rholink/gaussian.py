"""Gaussian rationals: exact complex numbers a + b*i with rational a, b.

This is the scalar field for symplectic spaces, Hermitian forms and the
Maslov triple index.  Only field arithmetic, conjugation and comparison
with zero are needed; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import RationalLike, as_rational, format_rational, sign


@dataclass(frozen=True, slots=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def real_sign(self) -> int:
        """Sign of a value known to be real (raises otherwise)."""
        if self.im != 0:
            raise ValueError(f"{self} is not real")
        return sign(self.re)

    def __str__(self) -> str:
        return f"{format_rational(self.re)},{format_rational(self.im)}"

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse the 're,im' wire form, e.g. '-1/2,3'."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 're,im', got {text!r}")
        return GaussianRational(as_rational(parts[0]), as_rational(parts[1]))


G_ZERO = GaussianRational(0)
G_ONE = GaussianRational(1)
G_I = GaussianRational(0, 1)


def gr(re: RationalLike = 0, im: RationalLike = 0) -> GaussianRational:
    """Shorthand constructor."""
    return GaussianRational(re, im)
