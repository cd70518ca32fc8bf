"""Face/degeneracy operator words and their monotone-map calculus.

Every simplex is stored as a nondegenerate core plus a degeneracy word
``s_{i1} s_{i2} ... s_{ik}`` in admissible normal form, meaning
``i1 > i2 > ... > ik``.  Such words correspond bijectively to monotone
surjections of finite ordinals, and all operator composition is computed
through that correspondence: compose the maps, then read the normal word
back off the result.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

Word = tuple[int, ...]
Monotone = tuple[int, ...]


def is_normal_word(word: Sequence[int]) -> bool:
    """True when the indices strictly decrease and are nonnegative."""
    return all(a > b for a, b in zip(word, word[1:])) and all(i >= 0 for i in word)


def surjection_of_word(word: Word, level: int) -> Monotone:
    """Monotone surjection [level] -> [level - len(word)] encoded by `word`.

    The word is applied outermost-first: ``s_{i1}(s_{i2}(...(x)))`` sends a
    vertex v through the collapse at i1, then i2, and so on.
    """
    if not is_normal_word(word):
        raise ValueError(f"word {word!r} is not in normal form")
    if word and word[0] >= level:
        raise ValueError(f"word {word!r} invalid at level {level}")
    out = []
    for v in range(level + 1):
        u = v
        for i in word:
            if u > i:
                u -= 1
        out.append(u)
    return tuple(out)


def word_of_surjection(f: Monotone) -> Word:
    """Normal-form word of a monotone surjection (duplicate positions, descending)."""
    return tuple(i for i in range(len(f) - 2, -1, -1) if f[i] == f[i + 1])


def compose_monotone(f: Monotone, g: Monotone) -> Monotone:
    """Pointwise composite f . g (apply g first)."""
    return tuple(f[v] for v in g)


def coface_map(i: int, n: int) -> Monotone:
    """The injection [n-1] -> [n] missing the value i."""
    if not 0 <= i <= n:
        raise ValueError(f"coface index {i} out of range for dimension {n}")
    return tuple(v if v < i else v + 1 for v in range(n))


def codegeneracy_map(i: int, n: int) -> Monotone:
    """The surjection [n+1] -> [n] hitting the value i twice."""
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} out of range for dimension {n}")
    return tuple(v if v <= i else v - 1 for v in range(n + 2))


def epi_mono_factor(f: Monotone, codomain_size: int) -> tuple[tuple[int, ...], Monotone]:
    """Factor a monotone map as injection-after-surjection.

    Returns ``(missing, surj)`` where `missing` lists the codomain values not
    hit, in descending order, and `surj` is f with its image renumbered
    consecutively.  Removing the `missing` vertices from the codomain (largest
    first) realises the injection as an iterated face operator.
    """
    image = set(f)
    missing = tuple(v for v in range(codomain_size - 1, -1, -1) if v not in image)
    rank = {}
    for v in sorted(image):
        rank[v] = len(rank)
    return missing, tuple(rank[v] for v in f)


def normal_words(length: int, level: int) -> Iterator[Word]:
    """All normal-form degeneracy words of the given length valid at `level`.

    These are exactly the strictly decreasing tuples drawn from
    ``0..level-1``; there are C(level, length) of them.
    """
    for comb in combinations(range(level), length):
        yield tuple(reversed(comb))
