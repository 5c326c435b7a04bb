"""The modular group PSL(2, Z) and its free-product word structure.

Elements are stored as integer matrices of determinant 1 in a canonical sign
form (``c > 0``, or ``c == 0`` and ``d > 0``), so equality of
:class:`GroupElement` objects is equality in PSL(2, Z).

Every element has a unique reduced word over the letters ``S``, ``U`` and
``U2`` (meaning U squared) in which no two adjacent letters come from the same
cyclic factor <S> or <U>.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

WORD_SEPARATOR = "·"


@dataclass(frozen=True)
class GroupElement:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.entries} is not 1")
        if self.c < 0 or (self.c == 0 and self.d < 0):
            for name in "abcd":
                object.__setattr__(self, name, -getattr(self, name))

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return GroupElement(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "GroupElement":
        base = self if n >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_parabolic_at_infinity(self) -> bool:
        return self.c == 0

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    return g * h


IDENTITY = GroupElement(1, 0, 0, 1)
S = GroupElement(0, -1, 1, 0)
U = GroupElement(0, -1, 1, 1)
U2 = U * U
T = S * U  # [[1,1],[0,1]]


class Letter(enum.Enum):
    S = "S"
    U = "U"
    U2 = "U2"

    @property
    def matrix(self) -> GroupElement:
        return _LETTER_MATRICES[self]

    @property
    def inverse(self) -> "Letter":
        return _LETTER_INVERSES[self]

    @property
    def factor(self) -> str:
        return "S" if self is Letter.S else "U"


_LETTER_MATRICES = {Letter.S: S, Letter.U: U, Letter.U2: U2}
_LETTER_INVERSES = {Letter.S: Letter.S, Letter.U: Letter.U2, Letter.U2: Letter.U}

Word = Tuple[Letter, ...]


def is_reduced(word: Sequence[Letter]) -> bool:
    return all(x.factor != y.factor for x, y in zip(word, word[1:]))


def format_word(word: Sequence[Letter]) -> str:
    """``"U·S·U2"``; the empty word is written ``"1"``."""
    if not word:
        return "1"
    return WORD_SEPARATOR.join(letter.value for letter in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    try:
        word = tuple(Letter(part.strip()) for part in text.split(WORD_SEPARATOR))
    except ValueError:
        raise ValueError(f"bad word {text!r}") from None
    return word


def matrix_from_word(word: Sequence[Letter]) -> GroupElement:
    if not is_reduced(word):
        raise ValueError(f"word {format_word(word)} is not reduced")
    g = IDENTITY
    for letter in word:
        g = g * letter.matrix
    return g


def _norm(g: GroupElement) -> int:
    return g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d


_SHORT_WORDS = {
    IDENTITY: (),
    S: (Letter.S,),
    U: (Letter.U,),
    U2: (Letter.U2,),
}


def word_from_matrix(g: GroupElement) -> Word:
    """Reduced word of ``g``, found by stripping letters off the right.

    A trailing ``U`` or ``U2`` is removed whenever that strictly lowers
    a^2+b^2+c^2+d^2 (the smaller result wins if both do).  Otherwise the word
    must end in ``S``, which leaves the norm unchanged, so ``S`` is removed and
    the next step has to be a ``U``-letter.
    """
    stripped = []
    current = g
    while current not in _SHORT_WORDS:
        norm = _norm(current)
        best = None
        for letter in (Letter.U, Letter.U2):
            h = current * letter.inverse.matrix
            hn = _norm(h)
            if hn < norm and (best is None or hn < best[0]):
                best = (hn, letter, h)
        if best is None:
            if stripped and stripped[-1] is Letter.S:
                raise ArithmeticError(f"word decomposition stalled on {g}")
            best = (norm, Letter.S, current * S)
        stripped.append(best[1])
        current = best[2]
    word = _SHORT_WORDS[current] + tuple(reversed(stripped))
    if not is_reduced(word) or matrix_from_word(word) != g:
        raise ArithmeticError(f"word decomposition failed for {g}")
    return word


class ElementClass(enum.Enum):
    GAMMA_INFTY = "GammaInfty"
    T_PLUS = "T_plus"
    T_MINUS = "T_minus"
    T_PRIME = "T_prime"
    T_DOUBLEPRIME = "T_doubleprime"


def classify(g: GroupElement) -> ElementClass:
    """Which piece of Gamma = Gamma_inf + T+ + T- + T' + T'' contains ``g``.

    T is the set of words starting with U, split by the final letter (T- ends
    in S).  T' starts with U2 and T'' with S; the excluded powers of
    U2·S and S·U are translations and already fall in Gamma_inf.
    """
    if g.c == 0:
        return ElementClass.GAMMA_INFTY
    word = word_from_matrix(g)
    first, last = word[0], word[-1]
    if first is Letter.U:
        return ElementClass.T_MINUS if last is Letter.S else ElementClass.T_PLUS
    if first is Letter.U2:
        return ElementClass.T_PRIME
    return ElementClass.T_DOUBLEPRIME


def satisfies_t_plus_inequalities(g: GroupElement) -> bool:
    """0 <= -a/c < -b/d <= 1, an intrinsic description of T+."""
    if g.c <= 0 or g.d == 0:
        return False
    p, q = Fraction(-g.a, g.c), Fraction(-g.b, g.d)
    return 0 <= p < q <= 1


def satisfies_t_minus_inequalities(g: GroupElement) -> bool:
    """0 <= -b/d < -a/c <= 1, an intrinsic description of T-."""
    if g.c <= 0 or g.d == 0:
        return False
    p, q = Fraction(-g.b, g.d), Fraction(-g.a, g.c)
    return 0 <= p < q <= 1


def tree_children(g: GroupElement) -> Tuple[GroupElement, GroupElement]:
    """The two T+ successors (g·S·U, g·S·U2) of an element of T+."""
    if classify(g) is not ElementClass.T_PLUS:
        raise ValueError(f"{g} is not in T+")
    a, b, c, d = g.entries
    return GroupElement(a, a + b, c, c + d), GroupElement(a + b, b, c + d, d)


def iter_reduced_words(max_len: int) -> Iterator[Tuple[Word, GroupElement]]:
    """All reduced words of length <= max_len with their matrices, by length."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    layer = [((), IDENTITY)]
    yield layer[0]
    for _ in range(max_len):
        next_layer = []
        for word, g in layer:
            for letter in Letter:
                if word and word[-1].factor == letter.factor:
                    continue
                item = (word + (letter,), g * letter.matrix)
                next_layer.append(item)
                yield item
        layer = next_layer


def enumerate_words(max_len: int, class_filter: Optional[ElementClass] = None) -> Iterator[GroupElement]:
    for word, g in iter_reduced_words(max_len):
        if class_filter is None or classify(g) is class_filter:
            yield g
