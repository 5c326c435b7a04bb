"""
Words in S and U
================

Every element of PSL(2, Z) is a unique alternating word in S and U, U^2.
"""
from hurwitz_relation.modular_group import ElementClass, classify, format_word, matrix_from_word, word_from_matrix
from hurwitz_relation.modular_group import GroupElement, iter_reduced_words, parse_word, tree_children

# %% A matrix and its word
g = GroupElement(5, 2, 7, 3)
w = word_from_matrix(g)
print(g, "=", format_word(w), "| back again:", matrix_from_word(w))

# %% How many words of each length, and which class they start
counts = {}
for word, h in iter_reduced_words(8):
    counts.setdefault(len(word), {}).setdefault(classify(h).name, 0)
    counts[len(word)][classify(h).name] += 1
for length, by_class in sorted(counts.items()):
    print(length, by_class)

# %% Two steps down the tree of T+ elements
root = matrix_from_word(parse_word("U"))
for child in tree_children(root):
    grandchildren = [format_word(word_from_matrix(x)) for x in tree_children(child)]
    print(format_word(word_from_matrix(child)), "->", grandchildren)
assert classify(root) is ElementClass.T_PLUS
