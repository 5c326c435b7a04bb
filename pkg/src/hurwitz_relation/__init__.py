"""Exact computations around the Kronecker-Hurwitz class number relation.

Modules:

* ``modular_group``: PSL(2, Z), reduced words in S, U, U2
* ``class_numbers``: binary quadratic forms, reduction, Hurwitz class numbers
* ``fundamental_domain``: exact position of elliptic fixed points, weights chi and alpha
* ``cosets``: determinant-n matrices, right cosets, the relation checks
* ``tessellation``: triangles labelled by PSL(2, Z), point location
* ``svg``: figures of the tessellation
"""

from .class_numbers import QuadForm, enumerate_reduced, hurwitz_class_number, reduce
from .cosets import (
    CosetLabel,
    coset_label,
    coset_reps,
    enumerate_weighted_elliptic,
    eq0_sides,
    form_of_matrix,
    theorem1_sides,
    theorem2_predicted,
    theorem2_sum,
    theorem21_sum,
)
from .fundamental_domain import MatrixQ, alpha, chi_weight, kind, position_in_F, position_in_F_minus
from .modular_group import (
    IDENTITY,
    S,
    T,
    U,
    U2,
    GroupElement,
    Letter,
    classify,
    compose,
    enumerate_words,
    matrix_from_word,
    tree_children,
    word_from_matrix,
)
from .svg import svg_render
from .tessellation import RatPoint, locate, locate_bruteforce, triangle_contains

__version__ = "0.1.0"
