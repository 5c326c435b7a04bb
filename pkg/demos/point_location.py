"""
Locating points in the triangle tessellation
============================================

Exact point location by cone descent, cross-checked against a brute-force
scan over all short words.
"""
import random
from fractions import Fraction

from hurwitz_relation.cosets import theorem21_predicted, theorem21_sum
from hurwitz_relation.tessellation import (
    RatPoint,
    label_strings,
    locate,
    locate_bruteforce,
    random_rational,
    sample_report_rows,
)
from hurwitz_relation.rationals import format_rational

# %% A few named points
points = [RatPoint(0, 1), RatPoint(Fraction(1, 3), Fraction(3, 2)), RatPoint(0, 3), RatPoint(Fraction(5, 2), 2)]
for row in sample_report_rows(points):
    print(f"({row['x']}, {row['y']}): {row['labels']:<16} {row['position_class']}")

# %% Descent versus brute force on random points
rng = random.Random(1)
agree = 0
for _ in range(100):
    p = RatPoint(random_rational(rng, -3, 3, 30), random_rational(rng, 1, 6, 30))
    agree += locate(p) == locate_bruteforce(p, 14)
print(f"{agree}/100 agree with the brute-force scan")

# %% The alpha sum is a step function of y
for y in (Fraction(1, 2), Fraction(1), Fraction(7, 4)):
    total = theorem21_sum(Fraction(1, 5), y)
    print(f"y={format_rational(y)}: sum={format_rational(total)} expected={format_rational(theorem21_predicted(y))}")
print(label_strings(locate(RatPoint(Fraction(-7, 3), Fraction(5, 2)))))
