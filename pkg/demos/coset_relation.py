"""
The class number relation, matrix by matrix
===========================================

Elliptic matrices of determinant n with fixed point in F, weighted and sorted
into right cosets of PSL(2, Z).
"""
from hurwitz_relation.cosets import (
    coset_label,
    coset_table,
    enumerate_weighted_elliptic,
    eq0_sides,
    theorem1_sides,
)
from hurwitz_relation.rationals import format_rational

# %% Both routes for small n
for n in range(1, 11):
    h_route, divisor_side = theorem1_sides(n)
    matrix_route, corrected = eq0_sides(n)
    print(f"n={n:2d}  via H: {format_rational(h_route):>5} = {format_rational(divisor_side):>5}"
          f"   via matrices: {format_rational(matrix_route):>6} = {format_rational(corrected):>6}")

# %% The five matrices for n = 1
for w in enumerate_weighted_elliptic(1):
    print(w.matrix, format_rational(w.weight))

# %% Per-coset sums for n = 4
for row in coset_table(4):
    print(row["delta_prime"], row["beta"], row["delta"], format_rational(row["sum"]), row["ok"])

# %% Which coset a matrix falls in
print(coset_label((3, 1, 5, 2)))
