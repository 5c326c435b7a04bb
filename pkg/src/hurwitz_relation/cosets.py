"""Determinant-n matrices, their right cosets under Gamma, and the class number relations.

Two independent routes to the same numbers are kept apart on purpose:
``theorem1_sides`` goes through reduced quadratic forms and H(D), while
``eq0_sides`` and the per-coset sums search integer matrices directly and
weight them by the position of their fixed point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Tuple

from .class_numbers import QuadForm, hurwitz_class_number, is_perfect_square
from .fundamental_domain import MatrixQ, alpha, chi_weight
from .modular_group import IDENTITY, S, U, U2, GroupElement, iter_reduced_words
from .rationals import sgn


def _entries(M):
    return M.entries if hasattr(M, "entries") else tuple(M)


def form_of_matrix(M) -> QuadForm:
    """[[a, b], [c, d]] -> c x^2 + (d - a) x y - b y^2, i.e. det(v, M v).

    No sign normalisation is applied, so conjugating M by g gives exactly
    ``form_of_matrix(M).act(g)``.
    """
    a, b, c, d = _entries(M)
    return QuadForm(c, d - a, -b)


@dataclass(frozen=True, order=True)
class CosetLabel:
    """Right coset [[delta_prime, beta], [0, delta]] * Gamma."""

    delta_prime: int
    beta: int
    delta: int

    @property
    def n(self) -> int:
        return self.delta_prime * self.delta

    @property
    def representative(self) -> Tuple[int, int, int, int]:
        return (self.delta_prime, self.beta, 0, self.delta)

    def validate(self, n: int) -> None:
        if self.delta <= 0 or self.delta_prime <= 0 or self.n != n or not 0 <= self.beta < self.delta_prime:
            raise ValueError(f"{self} is not a coset label for n = {n}")

    def __str__(self):
        return f"({self.delta_prime},{self.beta},{self.delta})"


def _xgcd(x: int, y: int) -> Tuple[int, int, int]:
    """(g, p, q) with p*x + q*y == g == gcd(x, y) >= 0."""
    p0, q0, p1, q1 = 1, 0, 0, 1
    while y:
        k, r = divmod(x, y)
        x, y = y, r
        p0, q0, p1, q1 = p1, q1, p0 - k * p1, q0 - k * q1
    if x < 0:
        return -x, -p0, -q0
    return x, p0, q0


def coset_label_with_witness(M) -> Tuple[CosetLabel, GroupElement]:
    """Canonical label of M*Gamma and the g with M*g = +-[[delta', beta], [0, delta]]."""
    a, b, c, d = _entries(M)
    n = a * d - b * c
    if n <= 0:
        raise ValueError("determinant must be positive")
    delta, p, q = _xgcd(c, d)
    delta_prime = n // delta
    g = GroupElement(d // delta, p, -c // delta, q)
    top_right = a * p + b * q
    k, beta = divmod(top_right, delta_prime)
    g = g * GroupElement(1, -k, 0, 1)
    return CosetLabel(delta_prime, beta, delta), g


def coset_label(M) -> CosetLabel:
    return coset_label_with_witness(M)[0]


def divisors(n: int) -> List[int]:
    small = [k for k in range(1, isqrt(n) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def coset_reps(n: int) -> List[CosetLabel]:
    """All sigma(n) labels, largest delta' first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [
        CosetLabel(dp, beta, n // dp)
        for dp in reversed(divisors(n))
        for beta in range(dp)
    ]


@dataclass(frozen=True)
class WeightedMatrix:
    matrix: MatrixQ
    weight: Fraction


def enumerate_weighted_elliptic(n: int) -> List[WeightedMatrix]:
    """Elliptic integral M of determinant n (mod +-1) whose fixed point lies in F.

    Writing t = a + d, u = a - d, the fixed point is in F exactly when
    |u| <= c <= -b, and then 3 c^2 <= 4n - t^2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    found = []
    t = -isqrt(4 * n - 1) if n > 0 else 0
    while t * t < 4 * n:
        gap = 4 * n - t * t
        for c in range(1, isqrt(gap // 3) + 1):
            for u in range(-c + ((c + t) % 2), c + 1, 2):
                num = u * u + gap
                if num % (4 * c):
                    continue
                b = -(num // (4 * c))
                if -b < c:
                    continue
                M = MatrixQ((t + u) // 2, b, c, (t - u) // 2)
                found.append(WeightedMatrix(M, chi_weight(M)))
        t += 1
    return found


def max_divisor_sum(n: int) -> int:
    """Sum of max(a, d) over factorisations n = a*d with a, d > 0."""
    return sum(max(k, n // k) for k in divisors(n))


def theorem1_sides(n: int) -> Tuple[Fraction, Fraction]:
    """(sum over t^2 <= 4n of H(4n - t^2), sum of max(a, d) over n = a*d)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bound = isqrt(4 * n)
    lhs = sum((hurwitz_class_number(4 * n - t * t) for t in range(-bound, bound + 1)), Fraction(0))
    return lhs, Fraction(max_divisor_sum(n))


def square_correction(n: int) -> Fraction:
    return Fraction(1, 6) if is_perfect_square(n) else Fraction(0)


def eq0_sides(n: int) -> Tuple[Fraction, Fraction]:
    """(total chi-weight of elliptic matrices of determinant n, max-sum + 1/6 if n is a square)."""
    lhs = sum((w.weight for w in enumerate_weighted_elliptic(n)), Fraction(0))
    return lhs, max_divisor_sum(n) + square_correction(n)


def theorem2_sums(n: int) -> Dict[CosetLabel, Fraction]:
    """Weighted elliptic count per right coset, for every coset of determinant n."""
    sums = {label: Fraction(0) for label in coset_reps(n)}
    for w in enumerate_weighted_elliptic(n):
        sums[coset_label(w.matrix)] += w.weight
    return sums


def theorem2_sum(n: int, K: CosetLabel) -> Fraction:
    K.validate(n)
    return theorem2_sums(n)[K]


def is_scalar_coset(n: int, K: CosetLabel) -> bool:
    r = isqrt(n)
    return r * r == n and (K.delta_prime, K.beta, K.delta) == (r, 0, r)


def theorem2_predicted(n: int, K: CosetLabel) -> Fraction:
    """1 + sgn(delta' - delta), plus 1/6 on the coset sqrt(n)*Gamma."""
    K.validate(n)
    value = Fraction(1 + sgn(K.delta_prime - K.delta))
    if is_scalar_coset(n, K):
        value += Fraction(1, 6)
    return value


def theorem21_predicted(y) -> Fraction:
    return Fraction(1 + sgn(y - 1), 2)


def _alpha_sum_brute_force(M: MatrixQ, max_word_len: int) -> Fraction:
    return sum((alpha(M * MatrixQ.from_group_element(g)) for _, g in iter_reduced_words(max_word_len)), Fraction(0))


def theorem21_sum(x, y, max_depth: int = 64, confirm_len: int = 6) -> Fraction:
    """Sum of alpha(M g) over all g in Gamma, for M = [[y, x], [0, 1]].

    For y >= 1 the nonzero terms are exactly the triangles of the half-plane
    tessellation that contain (x, y), found by point location.  For y < 1
    there are none; that is spot-checked over all words of length up to
    ``confirm_len`` rather than assumed.
    """
    from .tessellation import RatPoint, locate

    x, y = Fraction(x), Fraction(y)
    if y <= 0:
        raise ValueError("y must be positive")
    x -= (x // y) * y
    M = MatrixQ(y, x, 0, 1)
    if x == 0 and y == 1:
        return sum((alpha(MatrixQ.from_group_element(g)) for g in (IDENTITY, S, U, U2)), Fraction(0))
    if y < 1:
        total = _alpha_sum_brute_force(M, confirm_len)
        if total != 0:
            raise ArithmeticError(f"nonzero alpha term below y = 1 at ({x}, {y})")
        return total
    labels = locate(RatPoint(x, y), max_depth=max_depth)
    return sum((alpha(M * MatrixQ.from_group_element(g)) for g in labels), Fraction(0))


def relation_record(n: int, eq0: bool = False) -> dict:
    from .rationals import format_rational

    lhs, rhs = eq0_sides(n) if eq0 else theorem1_sides(n)
    return {"n": n, "lhs": format_rational(lhs), "rhs": format_rational(rhs), "ok": lhs == rhs}


def coset_table(n: int) -> List[dict]:
    sums = theorem2_sums(n)
    rows = []
    for K in coset_reps(n):
        predicted = theorem2_predicted(n, K)
        rows.append({
            "n": n,
            "delta_prime": K.delta_prime,
            "beta": K.beta,
            "delta": K.delta,
            "sum": sums[K],
            "predicted": predicted,
            "ok": sums[K] == predicted,
        })
    return rows

