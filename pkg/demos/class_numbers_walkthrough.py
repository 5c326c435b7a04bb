"""
Hurwitz class numbers from reduced forms
========================================

Enumerate reduced forms, weight the two special classes and sum.
"""
from hurwitz_relation import QuadForm, enumerate_reduced, hurwitz_class_number, reduce
from hurwitz_relation.class_numbers import reduce_with_witness
from hurwitz_relation.rationals import format_rational

# %% Reducing one form and checking the witness
f = QuadForm(7, 23, 19)
r, g = reduce_with_witness(f)
print(f"{f} reduces to {r} via {g}; f.act(g) == r: {f.act(g) == r}")

# %% Reduced representatives for a few discriminants
for D in (3, 4, 23, 27, 36):
    forms = ", ".join(str(h) for h in enumerate_reduced(D))
    print(f"D={D:3d}  H={format_rational(hurwitz_class_number(D)):>5}  forms: {forms}")

# %% Denominators only ever come from the forms x^2 + y^2 and x^2 + xy + y^2
print([format_rational(hurwitz_class_number(D)) for D in range(0, 40) if D % 4 in (0, 3)])
print("reduce is idempotent on (2,-1,3):", reduce(QuadForm(2, -1, 3)))
