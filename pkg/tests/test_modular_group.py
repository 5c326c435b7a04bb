import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitz_relation.modular_group import (
    IDENTITY,
    S,
    T,
    U,
    U2,
    ElementClass,
    GroupElement,
    Letter,
    classify,
    compose,
    enumerate_words,
    format_word,
    is_reduced,
    iter_reduced_words,
    matrix_from_word,
    parse_word,
    satisfies_t_minus_inequalities,
    satisfies_t_plus_inequalities,
    tree_children,
    word_from_matrix,
)


def raw_product(*mats):
    """Plain 2x2 integer product, no sign normalisation."""
    a, b, c, d = 1, 0, 0, 1
    for e, f, g, h in mats:
        a, b, c, d = a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
    return a, b, c, d


def word_count(max_len):
    """Independent count: after S come two letters, after U or U2 only S."""
    total, ends_s, ends_u = 1, 0, 0
    for k in range(1, max_len + 1):
        if k == 1:
            ends_s, ends_u = 1, 2
        else:
            ends_s, ends_u = ends_u, 2 * ends_s
        total += ends_s + ends_u
    return total


def test_letter_matrices():
    assert S.entries == (0, -1, 1, 0)
    assert U.entries == (0, -1, 1, 1)
    assert U2.entries == (-1, -1, 1, 0)


def test_sign_normalisation():
    g = GroupElement(0, 1, -1, 0)
    assert g == S
    assert GroupElement(-1, 0, 0, -1) == IDENTITY
    with pytest.raises(ValueError):
        GroupElement(1, 1, 1, 1)


def test_compose_examples():
    assert compose(S, S) == IDENTITY
    assert compose(S, U) == GroupElement(1, 1, 0, 1)
    assert compose(U, U2) == IDENTITY
    assert T == GroupElement(1, 1, 0, 1)


def test_matrix_from_word_examples():
    assert matrix_from_word(()) == IDENTITY
    # U*S*U multiplied by hand: [[0,1],[-1,-2]] ~ [[0,-1],[1,2]]
    usu = raw_product(U.entries, S.entries, U.entries)
    assert usu == (0, 1, -1, -2)
    assert matrix_from_word((Letter.U, Letter.S, Letter.U)) == GroupElement(0, -1, 1, 2)
    assert matrix_from_word((Letter.S, Letter.U)) == GroupElement(1, 1, 0, 1)


def test_matrix_from_word_rejects_unreduced():
    with pytest.raises(ValueError):
        matrix_from_word((Letter.S, Letter.S))
    with pytest.raises(ValueError):
        matrix_from_word((Letter.U, Letter.U2))


def test_word_from_matrix_examples():
    assert word_from_matrix(IDENTITY) == ()
    assert word_from_matrix(GroupElement(1, 1, 0, 1)) == (Letter.S, Letter.U)
    u2su = GroupElement(*raw_product(U2.entries, S.entries, U.entries))
    assert u2su == GroupElement(-1, -2, 1, 1)
    assert word_from_matrix(u2su) == (Letter.U2, Letter.S, Letter.U)


def test_word_format_round_trip():
    w = (Letter.U, Letter.S, Letter.U2)
    assert format_word(w) == "U·S·U2"
    assert parse_word("U·S·U2") == w
    assert parse_word(format_word(())) == ()
    with pytest.raises(ValueError):
        parse_word("U·X")
    assert str(GroupElement(0, -1, 1, 2)) == "[[0,-1],[1,2]]"


def test_translations_have_expected_words():
    for n in range(1, 6):
        assert word_from_matrix(T ** n) == (Letter.S, Letter.U) * n
        assert word_from_matrix(T ** -n) == (Letter.U2, Letter.S) * n


def test_word_counts():
    assert word_count(3) == 14
    assert sum(1 for _ in enumerate_words(3)) == 14
    assert set(enumerate_words(0)) == {IDENTITY}
    assert set(enumerate_words(1)) == {IDENTITY, S, U, U2}
    for L in range(9):
        words = [w for w, _ in iter_reduced_words(L)]
        assert len(words) == word_count(L)
        assert len(set(words)) == len(words)
        assert all(is_reduced(w) for w in words)
        # brute force over all letter strings agrees
        brute = [w for k in range(L + 1) for w in itertools.product(Letter, repeat=k) if is_reduced(w)]
        assert set(brute) == set(words)


def test_elements_are_distinct():
    elements = [g for _, g in iter_reduced_words(12)]
    assert len(elements) == len(set(elements)) == word_count(12)


def test_round_trip_to_length_12():
    for word, g in iter_reduced_words(12):
        assert word_from_matrix(matrix_from_word(word)) == word


@st.composite
def reduced_words(draw, max_size=40):
    size = draw(st.integers(0, max_size))
    word = []
    for _ in range(size):
        if not word:
            word.append(draw(st.sampled_from(list(Letter))))
        elif word[-1] is Letter.S:
            word.append(draw(st.sampled_from([Letter.U, Letter.U2])))
        else:
            word.append(Letter.S)
    return tuple(word)


@given(reduced_words())
def test_round_trip_long_words(word):
    assert is_reduced(word)
    assert word_from_matrix(matrix_from_word(word)) == word


def test_tree_children_examples():
    assert tree_children(U) == (GroupElement(0, -1, 1, 2), GroupElement(-1, -1, 2, 1))
    usu = GroupElement(0, -1, 1, 2)
    su = S * U
    su2 = S * U2
    assert tree_children(usu) == (usu * su, usu * su2)
    assert tree_children(usu) == (GroupElement(0, -1, 1, 3), GroupElement(-1, -1, 3, 2))
    with pytest.raises(ValueError):
        tree_children(S)


def test_tree_children_grow_and_stay_in_t_plus():
    for g in enumerate_words(8, ElementClass.T_PLUS):
        for child in tree_children(g):
            assert classify(child) is ElementClass.T_PLUS
            assert child.c + abs(child.d) > g.c + abs(g.d)


def test_t_plus_generated_by_tree():
    L = 11
    expected = set(enumerate_words(L, ElementClass.T_PLUS))
    generated, frontier = set(), [U]
    while frontier:
        g = frontier.pop()
        if len(word_from_matrix(g)) > L:
            continue
        generated.add(g)
        frontier.extend(tree_children(g))
    assert generated == expected


def test_classify_examples():
    assert classify(GroupElement(1, 5, 0, 1)) is ElementClass.GAMMA_INFTY
    assert classify(U) is ElementClass.T_PLUS
    assert classify(U * S) is ElementClass.T_MINUS
    assert classify(U2) is ElementClass.T_PRIME
    assert classify(S) is ElementClass.T_DOUBLEPRIME


def test_classify_partition_matches_words():
    for word, g in iter_reduced_words(12):
        cls = classify(g)
        if g.c == 0:
            assert cls is ElementClass.GAMMA_INFTY
            # the translations are exactly (S U)^n and (U2 S)^n
            n = len(word) // 2
            assert word in ((Letter.S, Letter.U) * n, (Letter.U2, Letter.S) * n)
        elif word[0] is Letter.U:
            assert cls in (ElementClass.T_PLUS, ElementClass.T_MINUS)
            assert (cls is ElementClass.T_MINUS) == (word[-1] is Letter.S)
        elif word[0] is Letter.U2:
            assert cls is ElementClass.T_PRIME
        else:
            assert cls is ElementClass.T_DOUBLEPRIME


def test_t_plus_minus_inequalities():
    for g in enumerate_words(12):
        cls = classify(g)
        assert satisfies_t_plus_inequalities(g) == (cls is ElementClass.T_PLUS)
        assert satisfies_t_minus_inequalities(g) == (cls is ElementClass.T_MINUS)
        if cls is ElementClass.T_PLUS:
            assert g.d > 0
        if cls is ElementClass.T_MINUS:
            # written out with exact fractions, not via the helper
            assert 0 <= Fraction(-g.b, g.d) < Fraction(-g.a, g.c) <= 1


def test_t_plus_is_t_with_positive_d():
    for g in enumerate_words(12):
        word = word_from_matrix(g)
        if word and word[0] is Letter.U:
            assert (classify(g) is ElementClass.T_PLUS) == (g.d > 0)


@given(reduced_words(), reduced_words())
def test_group_law_matches_words(w1, w2):
    g, h = matrix_from_word(w1), matrix_from_word(w2)
    assert (g * h) * h.inverse() == g
    assert g * g.inverse() == IDENTITY
