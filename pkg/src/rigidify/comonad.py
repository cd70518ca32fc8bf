"""Free-category/forgetful comonad levels over the linear order [n].

The forgetful functor keeps an identity-free graph (dropping identities is
what keeps every level finite over [n]; with identity edges every hom-set
would blow up).  The free functor returns paths of length >= 1, with empty
paths reappearing as the fresh identities.  Levels are materialized literally
as nested path tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import ContractViolation

MAX_N = 4
MAX_LEVEL = 3

Graph = dict[tuple[int, int], tuple]


def order_graph(n: int) -> Graph:
    """The identity-free underlying graph of [n]: one edge i -> j per i < j."""
    return {(i, j): (("arrow", i, j),)
            for i in range(n + 1) for j in range(i + 1, n + 1)}


def paths_graph(g: Graph, n: int) -> Graph:
    """One comonad round: edges of the new graph are nonempty edge paths."""
    out: Graph = {}
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            paths = []

            def walk(at: int, acc: tuple):
                if at == j and acc:
                    paths.append(acc)
                for mid in range(at + 1, j + 1):
                    for edge in g.get((at, mid), ()):
                        walk(mid, acc + (edge,))

            walk(i, ())
            out[(i, j)] = tuple(paths)
    return out


@dataclass(frozen=True)
class LevelCount:
    n: int
    level: int
    source: int
    target: int
    count: int


def comonad_level(n: int, level: int, i: int, j: int) -> LevelCount:
    """Cardinality of the hom-set (i, j) after level+1 comonad rounds on [n]."""
    if n > MAX_N or level > MAX_LEVEL:
        raise ContractViolation(f"bounded at n <= {MAX_N}, level <= {MAX_LEVEL}")
    if not (0 <= i <= n and 0 <= j <= n):
        raise ContractViolation("objects out of range")
    if i == j:
        return LevelCount(n, level, i, j, 1)
    if i > j:
        return LevelCount(n, level, i, j, 0)
    g = order_graph(n)
    for _ in range(level):
        g = paths_graph(g, n)
    count = 0
    seen = set()

    def walk(at: int, acc: tuple):
        nonlocal count
        if at == j and acc:
            if acc in seen:
                raise AssertionError("duplicate path generated")
            seen.add(acc)
            count += 1
        for mid in range(at + 1, j + 1):
            for edge in g.get((at, mid), ()):
                walk(mid, acc + (edge,))

    walk(i, ())
    return LevelCount(n, level, i, j, count)


def chain_count(m: int, level: int) -> int:
    """Number of nested chains of level+1 subsets of an m-element set."""
    if m < 0 or level < 0:
        raise ContractViolation("arguments must be nonnegative")
    return (level + 2) ** m
