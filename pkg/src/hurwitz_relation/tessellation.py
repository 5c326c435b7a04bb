"""Semi-infinite triangles labelled by PSL(2, Z) and exact point location.

For g = [[a, b], [c, d]] with c > 0 the triangle is

    Delta(g) = {(x, y) : 0 <= d - c x - a y <= c <= -d x - b y},

i.e. the three affine forms

    L1 = d - c x - a y,   L2 = c - L1,   L3 = -d x - b y - c

are all non-negative.  L1 = 0 and L2 = 0 are the two infinite parallel
sides, L3 = 0 is the finite side, P2 = {L1 = L3 = 0} and P3 = {L2 = L3 = 0}.
These triangles tile the half-plane y >= 1 with disjoint interiors.

Point location runs the cone descent on the region 0 <= x <= y - 1 (cone of
U), handles the strip Delta(U2) separately and reaches every other point by
the translation T^k (x, y) = (x - k y, y), using Delta(T g) = T Delta(g).
Cones are tested directly through their bounding forms:

    T+ (words starting with U, ending in U or U2):  C(g) = {L2 >= 0, L3 >= 0}, apex P3
    T- (ending in S):                               C(g) = {L1 >= 0, L3 >= 0}, apex P2

so the right boundary of C(g) for g in T+ is the line through P3 and P2, of
slope -d/b.
"""
from __future__ import annotations

import enum
import functools
import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .modular_group import (
    S,
    T,
    U,
    U2,
    ElementClass,
    GroupElement,
    classify,
    format_word,
    iter_reduced_words,
    word_from_matrix,
)

DEFAULT_MAX_DEPTH = 64
MAX_DEPTH_ENV = "HURWITZ_MAX_DEPTH"


class DepthExceeded(RuntimeError):
    """Cone descent did not terminate within the allowed depth."""


def default_max_depth() -> int:
    value = os.environ.get(MAX_DEPTH_ENV)
    return int(value) if value else DEFAULT_MAX_DEPTH


@dataclass(frozen=True, order=True)
class RatPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def translate(self, k: int) -> "RatPoint":
        """T^k (x, y) = (x - k y, y)."""
        return RatPoint(self.x - k * self.y, self.y)

    def __str__(self):
        return f"({self.x}, {self.y})"


class TrianglePosition(enum.Enum):
    OUTSIDE = "Outside"
    INTERIOR = "Interior"
    EDGE = "Edge"
    VERTEX_P2 = "VertexP2"
    VERTEX_P3 = "VertexP3"


def affine_forms(g: GroupElement, x, y) -> Tuple:
    """(L1, L2, L3) of Delta(g) evaluated at (x, y)."""
    L1 = g.d - g.c * x - g.a * y
    return L1, g.c - L1, -g.d * x - g.b * y - g.c


def vertex_p2(g: GroupElement) -> RatPoint:
    a, b, c, d = g.entries
    return RatPoint(-a * c - b * d, c * c + d * d)


def vertex_p3(g: GroupElement) -> RatPoint:
    a, b, c, d = g.entries
    return RatPoint(-a * c - b * d + b * c, c * c + d * d - c * d)


@dataclass(frozen=True)
class Triangle:
    gamma: GroupElement

    @property
    def vertex_P2(self) -> RatPoint:
        return vertex_p2(self.gamma)

    @property
    def vertex_P3(self) -> RatPoint:
        return vertex_p3(self.gamma)

    @property
    def direction(self) -> Tuple[int, int]:
        """Upward direction (-a, c) of the two infinite sides."""
        return (-self.gamma.a, self.gamma.c)


def _strip_position(n: int, p: RatPoint) -> TrianglePosition:
    # strip of [[1, n], [0, 1]]: [-n-1, -n] x (-inf, 1]
    left, right, top = p.x + n + 1, -n - p.x, 1 - p.y
    if left < 0 or right < 0 or top < 0:
        return TrianglePosition.OUTSIDE
    if top == 0 and left == 0:
        return TrianglePosition.VERTEX_P2
    if top == 0 and right == 0:
        return TrianglePosition.VERTEX_P3
    if 0 in (left, right, top):
        return TrianglePosition.EDGE
    return TrianglePosition.INTERIOR


def triangle_contains(g: GroupElement, p: RatPoint) -> TrianglePosition:
    """Exact position of ``p`` relative to the closed triangle of ``g``.

    For translations [[1, n], [0, 1]] the triangle is the strip
    [-n-1, -n] x (-inf, 1]; its corner at x = -n - 1 is reported as
    VERTEX_P2 and the one at x = -n as VERTEX_P3.
    """
    if g.c == 0:
        return _strip_position(g.b, p)
    L1, L2, L3 = affine_forms(g, p.x, p.y)
    if L1 < 0 or L2 < 0 or L3 < 0:
        return TrianglePosition.OUTSIDE
    if L3 == 0:
        if L1 == 0:
            return TrianglePosition.VERTEX_P2
        if L2 == 0:
            return TrianglePosition.VERTEX_P3
        return TrianglePosition.EDGE
    if L1 == 0 or L2 == 0:
        return TrianglePosition.EDGE
    return TrianglePosition.INTERIOR


def in_cone_plus(g: GroupElement, p: RatPoint) -> bool:
    _, L2, L3 = affine_forms(g, p.x, p.y)
    return L2 >= 0 and L3 >= 0


def in_cone_minus(g: GroupElement, p: RatPoint) -> bool:
    L1, _, L3 = affine_forms(g, p.x, p.y)
    return L1 >= 0 and L3 >= 0


def cone_apex(g: GroupElement) -> RatPoint:
    cls = classify(g)
    if cls is ElementClass.T_PLUS:
        return vertex_p3(g)
    if cls is ElementClass.T_MINUS:
        return vertex_p2(g)
    raise ValueError(f"{g} is not in T")


def _descend(p: RatPoint, max_depth: int) -> set:
    """Triangles of T (words starting with U) whose closure contains p."""
    found = set()
    if not in_cone_plus(U, p):
        return found
    frontier = {U}
    depth = 0
    while frontier:
        if depth >= max_depth:
            raise DepthExceeded(f"point location for {p} exceeded depth {max_depth}")
        next_frontier = set()
        for g in frontier:
            if triangle_contains(g, p) is not TrianglePosition.OUTSIDE:
                found.add(g)
            h = g * S
            if not in_cone_minus(h, p):
                continue
            if triangle_contains(h, p) is not TrianglePosition.OUTSIDE:
                found.add(h)
            for child in (h * U, h * U2):
                if in_cone_plus(child, p):
                    next_frontier.add(child)
        frontier = next_frontier
        depth += 1
    return found


def _locate_in_strip(p: RatPoint, max_depth: int) -> set:
    # 0 <= x <= y: covered by Delta(U2) and the triangles of T
    found = _descend(p, max_depth)
    if triangle_contains(U2, p) is not TrianglePosition.OUTSIDE:
        found.add(U2)
    return found


def locate(p: RatPoint, max_depth: Optional[int] = None) -> FrozenSet[GroupElement]:
    """All g outside Gamma_inf whose closed triangle contains ``p`` (needs y >= 1)."""
    if max_depth is None:
        max_depth = default_max_depth()
    if p.y < 1:
        raise ValueError(f"point {p} lies below y = 1")
    k = p.x // p.y
    p0 = p.translate(k)
    found = _locate_in_strip(p0, max_depth)
    if p0.x == 0:
        # p0 also lies on the right edge of the neighbouring translate
        found |= {T * g for g in _locate_in_strip(p0.translate(-1), max_depth)}
    shift = GroupElement(1, -k, 0, 1)
    return frozenset(shift * g for g in found)


@functools.lru_cache(maxsize=8)
def _word_table(max_word_len: int):
    items = [(w, g) for w, g in iter_reduced_words(max_word_len) if g.c != 0]
    elements = [g for _, g in items]
    biggest = max((max(abs(x) for x in g.entries) for g in elements), default=0)
    cols = [np.array([g.entries[i] for g in elements], dtype=object) for i in range(4)]
    return elements, biggest, cols


def locate_bruteforce(p: RatPoint, max_word_len: int) -> FrozenSet[GroupElement]:
    """Test every word of length <= max_word_len against the triangle inequalities.

    Independent of the cone descent; results are only complete when the true
    labels are all shorter than the horizon.
    """
    elements, biggest, cols = _word_table(max_word_len)
    if not elements:
        return frozenset()
    q = lcm(p.x.denominator, p.y.denominator)
    X, Y = int(p.x * q), int(p.y * q)
    bound = 4 * max(biggest, 1) * max(abs(X), abs(Y), q, 1)
    dtype = np.int64 if bound < 2**62 else object
    a, b, c, d = (col.astype(dtype) for col in cols)
    L1 = d * q - c * X - a * Y
    L2 = c * q - L1
    L3 = -d * X - b * Y - c * q
    hits = np.nonzero((L1 >= 0) & (L2 >= 0) & (L3 >= 0))[0]
    return frozenset(elements[i] for i in hits)


def word_length(g: GroupElement) -> int:
    return len(word_from_matrix(g))


def sorted_labels(labels: Iterable[GroupElement]) -> List[GroupElement]:
    return sorted(labels, key=lambda g: (word_length(g), format_word(word_from_matrix(g))))


def label_strings(labels: Iterable[GroupElement]) -> List[str]:
    return [format_word(word_from_matrix(g)) for g in sorted_labels(labels)]


def position_class(p: RatPoint, labels: Iterable[GroupElement]) -> str:
    """Positions of ``p`` in each located triangle, e.g. ``"Edge+Edge"``."""
    names = sorted(triangle_contains(g, p).value for g in labels)
    return "+".join(names) if names else "Uncovered"


def equivariance_check(gamma: GroupElement, p: RatPoint) -> bool:
    """Delta(T g) = T Delta(g), tested at one point."""
    if gamma.c == 0:
        raise ValueError("equivariance is stated for elements outside Gamma_inf")
    return triangle_contains(T * gamma, p.translate(1)) == triangle_contains(gamma, p)


def random_rational(rng: random.Random, lo, hi, max_den: int) -> Fraction:
    """Uniform-ish rational in [lo, hi] with denominator at most max_den."""
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(math.ceil(Fraction(lo) * q), math.floor(Fraction(hi) * q)), q)


EXPECTED_CLASSES = {
    "R": {ElementClass.T_PLUS, ElementClass.T_MINUS},
    "right": {ElementClass.T_PRIME},
    "left": {ElementClass.T_DOUBLEPRIME},
}


def region_of(p: RatPoint) -> Optional[str]:
    """Which of the three open regions x in (0, y-1), x > y-1, x < 0 holds p."""
    if p.x < 0:
        return "left"
    if p.x > p.y - 1:
        return "right"
    if 0 < p.x < p.y - 1:
        return "R"
    return None


def region_decomposition_check(max_word_len: int = 10, samples: int = 300, seed: int = 0,
                               max_depth: Optional[int] = None) -> Dict:
    """Sample points in the three regions and check the classes of their labels.

    Points inside 0 < x < y - 1 must only meet words starting with U, points
    with x > y - 1 only words starting with U2 and points with x < 0 only
    words starting with S.  Every point must be covered, and whenever the
    brute-force oracle at ``max_word_len`` sees a closed answer it must agree.
    """
    rng = random.Random(seed)
    failures = []
    counts = {name: 0 for name in EXPECTED_CLASSES}
    oracle_checked = 0
    drawn = 0
    while sum(counts.values()) < samples:
        drawn += 1
        name = ("R", "right", "left")[drawn % 3]
        y = random_rational(rng, 1, 8, 32)
        if name == "R":
            if y <= 1:
                continue
            x = random_rational(rng, 0, y - 1, 32)
        elif name == "right":
            x = random_rational(rng, y - 1, y + 3, 32)
        else:
            x = random_rational(rng, -4, 0, 32)
        p = RatPoint(x, y)
        if region_of(p) != name:
            continue
        counts[name] += 1
        labels = locate(p, max_depth)
        if not labels:
            failures.append({"point": str(p), "reason": "uncovered"})
            continue
        bad = [g for g in labels if classify(g) not in EXPECTED_CLASSES[name]]
        if bad:
            failures.append({"point": str(p), "reason": f"{name} region met {label_strings(bad)}"})
        if max(word_length(g) for g in labels) <= max_word_len - 2:
            oracle_checked += 1
            if locate_bruteforce(p, max_word_len) != labels:
                failures.append({"point": str(p), "reason": "oracle disagreement"})
    return {
        "samples": counts,
        "oracle_checked": oracle_checked,
        "cone_boundary_slopes": ["-c/a", "-d/b"],
        "failures": failures,
    }


def sample_report_rows(points: Sequence[RatPoint], max_depth: Optional[int] = None) -> List[Dict]:
    rows = []
    for p in points:
        labels = locate(p, max_depth)
        rows.append({
            "x": p.x,
            "y": p.y,
            "labels": ",".join(label_strings(labels)),
            "cardinality": len(labels),
            "position_class": position_class(p, labels),
        })
    return rows
