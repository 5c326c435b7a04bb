"""Exact position of elliptic fixed points in F and its left half F-.

F = {z : -1/2 <= Re z <= 1/2, |z| >= 1} and F- = F with Re z <= 0.  An
elliptic M = [[a, b], [c, d]] with c > 0 fixes the root of
c z^2 + (d - a) z - b = 0 in the upper half-plane, so
Re z = (a - d) / 2c and |z|^2 = -b / c.  Everything below compares a - d
against +-c or 0, and -b against c.  The fixed point itself is never
computed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True)
class MatrixQ:
    """A rational 2x2 matrix of positive determinant, modulo +-1.

    Entries may be ints or Fractions.  The stored sign is the one with
    c > 0, else d > 0 when c == 0, else a > 0.
    """

    a: Rational
    b: Rational
    c: Rational
    d: Rational

    def __post_init__(self):
        if self.det <= 0:
            raise ValueError(f"determinant of {self} must be positive")
        if self.c < 0 or (self.c == 0 and (self.d < 0 or (self.d == 0 and self.a < 0))):
            for name in "abcd":
                object.__setattr__(self, name, -getattr(self, name))

    @classmethod
    def from_group_element(cls, g) -> "MatrixQ":
        return cls(g.a, g.b, g.c, g.d)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other) -> "MatrixQ":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MatrixQ(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __str__(self):
        return "[[{},{}],[{},{}]]".format(*(str(x) for x in self.entries))


class MatrixKind(enum.Enum):
    SCALAR = "Scalar"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"


class DomainPosition(enum.Enum):
    OUTSIDE = "Outside"
    INTERIOR = "Interior"
    EDGE = "Edge"
    CORNER_RHO = "CornerRho"
    CORNER_RHO_BAR = "CornerRhoBar"
    CORNER_I = "CornerI"


CHI_WEIGHTS = {
    DomainPosition.OUTSIDE: Fraction(0),
    DomainPosition.INTERIOR: Fraction(1),
    DomainPosition.EDGE: Fraction(1, 2),
    DomainPosition.CORNER_RHO: Fraction(1, 6),
    DomainPosition.CORNER_RHO_BAR: Fraction(1, 6),
}

CHI_MINUS_WEIGHTS = {
    DomainPosition.OUTSIDE: Fraction(0),
    DomainPosition.INTERIOR: Fraction(1),
    DomainPosition.EDGE: Fraction(1, 2),
    DomainPosition.CORNER_I: Fraction(1, 4),
    DomainPosition.CORNER_RHO_BAR: Fraction(1, 6),
}

SCALAR_WEIGHT = Fraction(-1, 12)


def kind(M: MatrixQ) -> MatrixKind:
    if M.b == 0 and M.c == 0 and M.a == M.d:
        return MatrixKind.SCALAR
    disc = M.trace * M.trace - 4 * M.det
    if disc < 0:
        return MatrixKind.ELLIPTIC
    if disc == 0:
        return MatrixKind.PARABOLIC
    return MatrixKind.HYPERBOLIC


def _elliptic_parts(M: MatrixQ):
    if kind(M) is not MatrixKind.ELLIPTIC:
        raise ValueError(f"{M} is not elliptic")
    # elliptic forces c != 0, and normalisation makes it positive
    return M.a - M.d, -M.b, M.c


def position_in_F(M: MatrixQ) -> DomainPosition:
    u, nb, c = _elliptic_parts(M)
    if abs(u) > c or nb < c:
        return DomainPosition.OUTSIDE
    if nb == c:
        if u == c:
            return DomainPosition.CORNER_RHO
        if u == -c:
            return DomainPosition.CORNER_RHO_BAR
        return DomainPosition.EDGE
    if abs(u) == c:
        return DomainPosition.EDGE
    return DomainPosition.INTERIOR


def position_in_F_minus(M: MatrixQ) -> DomainPosition:
    u, nb, c = _elliptic_parts(M)
    if u > 0 or u < -c or nb < c:
        return DomainPosition.OUTSIDE
    if nb == c:
        if u == 0:
            return DomainPosition.CORNER_I
        if u == -c:
            return DomainPosition.CORNER_RHO_BAR
        return DomainPosition.EDGE
    if u == 0 or u == -c:
        return DomainPosition.EDGE
    return DomainPosition.INTERIOR


def chi_weight(M: MatrixQ) -> Fraction:
    """Fraction of the full angle at z_M that F subtends."""
    return CHI_WEIGHTS[position_in_F(M)]


def chi_minus_weight(M: MatrixQ) -> Fraction:
    return CHI_MINUS_WEIGHTS[position_in_F_minus(M)]


def alpha(M: MatrixQ) -> Fraction:
    if M.det <= 0:
        raise ValueError("alpha needs a positive determinant")
    k = kind(M)
    if k is MatrixKind.SCALAR:
        return SCALAR_WEIGHT
    if k is MatrixKind.ELLIPTIC:
        return chi_minus_weight(M)
    return Fraction(0)


def reflect(M: MatrixQ) -> MatrixQ:
    """+-[[a, b], [c, d]] -> +-[[-a, b], [c, -d]], mirroring z_M in Re z = 0."""
    return MatrixQ(-M.a, M.b, M.c, -M.d)


def mirror_position(pos: DomainPosition) -> DomainPosition:
    return {
        DomainPosition.CORNER_RHO: DomainPosition.CORNER_RHO_BAR,
        DomainPosition.CORNER_RHO_BAR: DomainPosition.CORNER_RHO,
    }.get(pos, pos)
