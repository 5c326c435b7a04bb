"""Positive definite binary quadratic forms and Hurwitz class numbers."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List, Tuple

from .modular_group import IDENTITY, S, GroupElement


@dataclass(frozen=True)
class QuadForm:
    """A x^2 + B x y + C y^2 with integer coefficients."""

    A: int
    B: int
    C: int

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def is_positive_definite(self) -> bool:
        return self.A > 0 and self.discriminant < 0

    def is_reduced(self) -> bool:
        A, B, C = self.A, self.B, self.C
        if not (abs(B) <= A <= C):
            return False
        if abs(B) == A or A == C:
            return B >= 0
        return True

    def __call__(self, x, y):
        return self.A * x * x + self.B * x * y + self.C * y * y

    def act(self, g: GroupElement) -> "QuadForm":
        """The form (x, y) -> f(a x + b y, c x + d y)."""
        a, b, c, d = g.entries
        A, B, C = self.A, self.B, self.C
        return QuadForm(
            A * a * a + B * a * c + C * c * c,
            2 * A * a * b + B * (a * d + b * c) + 2 * C * c * d,
            A * b * b + B * b * d + C * d * d,
        )

    def __str__(self):
        return f"({self.A},{self.B},{self.C})"


def reduce_with_witness(f: QuadForm) -> Tuple[QuadForm, GroupElement]:
    """Reduced form equivalent to ``f`` and the ``g`` with ``f.act(g)`` equal to it."""
    if not f.is_positive_definite():
        raise ValueError(f"{f} is not positive definite")
    A, B, C = f.A, f.B, f.C
    witness = IDENTITY
    while True:
        # translate B into (-A, A]
        k = (A - B) // (2 * A)
        if k:
            B, C = B + 2 * A * k, A * k * k + B * k + C
            witness = witness * GroupElement(1, k, 0, 1)
        if A > C or (A == C and B < 0):
            A, B, C = C, -B, A
            witness = witness * S
            continue
        return QuadForm(A, B, C), witness


def reduce(f: QuadForm) -> QuadForm:
    return reduce_with_witness(f)[0]


def _check_discriminant(D: int, allow_zero: bool) -> None:
    if D < 0 or (D == 0 and not allow_zero):
        raise ValueError(f"D must be {'non-negative' if allow_zero else 'positive'}, got {D}")
    if D % 4 not in (0, 3):
        raise ValueError(f"D = {D} is not 0 or 3 mod 4")


def enumerate_reduced(D: int) -> List[QuadForm]:
    """All reduced positive definite forms of discriminant -D (not only primitive ones)."""
    _check_discriminant(D, allow_zero=False)
    forms = []
    A = 1
    while 3 * A * A <= D:
        for B in range(-A + 1, A + 1):
            num = B * B + D
            if num % (4 * A):
                continue
            f = QuadForm(A, B, num // (4 * A))
            if f.is_reduced():
                forms.append(f)
        A += 1
    return forms


def class_weight(f: QuadForm) -> Fraction:
    """1/2 for reduced multiples of x^2+y^2, 1/3 for those of x^2+xy+y^2, else 1."""
    if f.B == 0 and f.A == f.C:
        return Fraction(1, 2)
    if f.A == f.B == f.C:
        return Fraction(1, 3)
    return Fraction(1)


@functools.lru_cache(maxsize=None)
def hurwitz_class_number(D: int) -> Fraction:
    """Hurwitz class number H(D), with H(0) = -1/12.

    Raises ValueError unless D >= 0 and D is 0 or 3 mod 4.
    """
    _check_discriminant(D, allow_zero=True)
    if D == 0:
        return Fraction(-1, 12)
    return sum((class_weight(f) for f in enumerate_reduced(D)), Fraction(0))


def is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
