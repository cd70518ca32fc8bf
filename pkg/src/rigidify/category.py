"""Simplicial category presentation of a rigidified ordered complex.

Objects are the vertices; the mapping complex between two objects is the
enumerated mapping space, and composition is computed levelwise on canonical
triples (wedge the necklaces, union the flags).  Composition on canonical
forms is strictly associative and unital, which the constructor verifies on
generator triples.
"""

from __future__ import annotations

from typing import Iterator

from .complexes import ContractViolation, OrderedComplex, SimplexKey, simplices_at_level
from .mapping import (
    MappingComplex,
    MappingSimplex,
    compose_simplices,
    identity_simplex,
    mapping_space,
)


class SimplicialCategoryPresentation:
    """Object set, mapping complexes, and a composition table on generators."""

    def __init__(self, source: OrderedComplex, check: bool = True):
        if not isinstance(source, OrderedComplex):
            raise ContractViolation("categorify requires an ordered complex")
        self.source = source
        self.objects = tuple(range(source.vertex_count))
        self.spaces: dict[tuple[int, int], MappingComplex] = {}
        for a in self.objects:
            for b in self.objects:
                self.spaces[(a, b)] = mapping_space(source, a, b)
        self.composition: dict[tuple[int, int, int],
                               dict[tuple[SimplexKey, SimplexKey], SimplexKey]] = {}
        for a, b, c in self._triples():
            table = {}
            left, right = self.spaces[(b, c)], self.spaces[(a, b)]
            for dg, level_g in enumerate(left.simplices):
                if dg >= len(right.simplices):
                    break
                for ig, g in enumerate(level_g):
                    for if_, f in enumerate(right.simplices[dg]):
                        table[(SimplexKey(dg, ig), SimplexKey(dg, if_))] = \
                            self.spaces[(a, c)].key_of(compose_simplices(g, f))
            self.composition[(a, b, c)] = table
        if check:
            self._verify_laws()

    def _triples(self) -> Iterator[tuple[int, int, int]]:
        for a in self.objects:
            for b in self.objects:
                if self.space(a, b).vertex_count == 0:
                    continue
                for c in self.objects:
                    if self.space(b, c).vertex_count:
                        yield a, b, c

    def space(self, a: int, b: int) -> MappingComplex:
        return self.spaces[(a, b)]

    def identity_key(self, a: int, level: int = 0) -> SimplexKey:
        return self.space(a, a).key_of(identity_simplex(self.source, a, level))

    def compose_keys(self, a: int, b: int, c: int,
                     kg: SimplexKey, kf: SimplexKey) -> SimplexKey:
        """Levelwise composite of two simplex keys of equal dimension."""
        if kg.dim != kf.dim:
            raise ContractViolation("composition needs equal simplex dimensions")
        g = self.space(b, c).simplex_of(kg)
        f = self.space(a, b).simplex_of(kf)
        return self.space(a, c).key_of(compose_simplices(g, f))

    def _verify_laws(self):
        for a in self.objects:
            for b in self.objects:
                space = self.space(a, b)
                for d, level in enumerate(space.simplices):
                    for i, f in enumerate(level):
                        key = SimplexKey(d, i)
                        if self.compose_keys(a, b, b, self.identity_key(b, d), key) != key:
                            raise AssertionError(f"left unit fails at {f}")
                        if self.compose_keys(a, a, b, key, self.identity_key(a, d)) != key:
                            raise AssertionError(f"right unit fails at {f}")
        for a, b, c in self._triples():
            for d in self.objects:
                if self.space(c, d).vertex_count == 0:
                    continue
                for n in range(min(len(self.space(a, b).simplices),
                                   len(self.space(b, c).simplices),
                                   len(self.space(c, d).simplices))):
                    for kh in _level_keys(self.space(c, d), n):
                        for kg in _level_keys(self.space(b, c), n):
                            hg = self.compose_keys(b, c, d, kh, kg)
                            for kf in _level_keys(self.space(a, b), n):
                                gf = self.compose_keys(a, b, c, kg, kf)
                                if self.compose_keys(a, c, d, kh, gf) != \
                                        self.compose_keys(a, b, d, hg, kf):
                                    raise AssertionError(
                                        f"associativity fails at level {n} over ({a},{b},{c},{d})")


def _level_keys(space: MappingComplex, n: int) -> list[SimplexKey]:
    return [SimplexKey(n, i) for i in range(len(space.simplices[n]))] if \
        n < len(space.simplices) else []


def categorify(source: OrderedComplex, check: bool = True) -> SimplicialCategoryPresentation:
    """Rigidify an ordered complex into a simplicial category presentation."""
    return SimplicialCategoryPresentation(source, check=check)
