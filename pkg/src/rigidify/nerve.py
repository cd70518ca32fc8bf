"""Truncated coherent nerve of a finite simplicial category presentation.

Level n consists of the simplicial functors from the rigidified n-simplex
into the category: object images plus, for every object pair, a simplicial
map from the corresponding cube nerve into the mapping complex, compatible
with the union pairing of the cubes.  Levels are enumerated exhaustively, so
the truncation bound is kept small.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .category import SimplicialCategoryPresentation
from .complexes import (
    ContractViolation,
    SimplexKey,
    degeneracy,
    enumerate_simplicial_maps,
    simplices_at_level,
)
from .horns import TruncatedSimplicialSet
from .mapping import NerveComplex, necklace_mapping_space
from .necklaces import Necklace, POINT
from .operators import coface_map, codegeneracy_map, word_of_surjection

NMAX = 3


@lru_cache(maxsize=None)
def cube_nerve(n: int, i: int, j: int) -> NerveComplex:
    """Mapping space of the one-bead necklace on n+1 vertices, from i to j."""
    necklace = Necklace((n,)) if n else POINT
    return necklace_mapping_space(necklace, i, j)


@dataclass(frozen=True)
class SimplicialFunctor:
    """Functor from the rigidified n-simplex, stored on nondegenerate chains.

    ``values[p]`` lists, for the p-th object pair (i, j) with i < j in
    lexicographic order, the image keys of the cube nerve's nondegenerate
    generators in (dimension, index) order.
    """

    level: int
    objects: tuple[int, ...]
    values: tuple[tuple[SimplexKey, ...], ...]

    def pair_index(self, i: int, j: int) -> int:
        n = self.level
        pairs = [(x, y) for x in range(n + 1) for y in range(x + 1, n + 1)]
        return pairs.index((i, j))


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


def _flat_gens(cx: NerveComplex) -> list[tuple[int, int]]:
    return [(d, g) for d in range(len(cx.gen_counts)) for g in range(cx.gen_counts[d])]


def functor_value(D: SimplicialCategoryPresentation, F: SimplicialFunctor,
                  i: int, j: int, key: SimplexKey) -> SimplexKey:
    """Image of an arbitrary cube-nerve simplex under the functor."""
    space = D.space(F.objects[i], F.objects[j])
    if i == j:
        out = D.identity_key(F.objects[i])
    else:
        cube = cube_nerve(F.level, i, j)
        flat = _flat_gens(cube)
        out = F.values[F.pair_index(i, j)][flat.index((key.core_dim, key.gen))]
    for idx in reversed(key.word):
        out = degeneracy(space, out, idx)
    return out


def _relabel_mask(mask: int, relabel: tuple[int, ...]) -> int:
    out = 0
    for v, target in enumerate(relabel):
        if mask >> v & 1:
            out |= 1 << target
    return out


def _chain_key(cube: NerveComplex, chain: tuple[int, ...]) -> SimplexKey:
    """Key of a weakly increasing element chain of a cube nerve."""
    dedup, surj = [], []
    for e in chain:
        if not dedup or dedup[-1] != e:
            dedup.append(e)
        surj.append(len(dedup) - 1)
    core = cube.key_of_chain(tuple(dedup))
    return SimplexKey(len(chain) - 1, core.gen, word_of_surjection(tuple(surj)))


def _composition_ok(D: SimplicialCategoryPresentation, level: int,
                    objects: tuple[int, ...],
                    values: dict[tuple[int, int], tuple[SimplexKey, ...]]) -> bool:
    F = SimplicialFunctor(level, objects,
                          tuple(values[p] for p in _pairs(level)))
    for i, j, k in [(i, j, k) for i in range(level + 1)
                    for j in range(i + 1, level + 1)
                    for k in range(j + 1, level + 1)]:
        cube_jk, cube_ij, cube_ik = (cube_nerve(level, j, k),
                                     cube_nerve(level, i, j),
                                     cube_nerve(level, i, k))
        bound = (cube_jk.dim if cube_jk.dim > 0 else 0) + \
                (cube_ij.dim if cube_ij.dim > 0 else 0)
        for ell in range(bound + 1):
            for kx in simplices_at_level(cube_jk, ell):
                cx = cube_jk.chain_of_key(kx)
                gx = functor_value(D, F, j, k, kx)
                for ky in simplices_at_level(cube_ij, ell):
                    cy = cube_ij.chain_of_key(ky)
                    union = _chain_key(cube_ik, tuple(x | y for x, y in zip(cx, cy)))
                    left = functor_value(D, F, i, k, union)
                    right = D.compose_keys(objects[i], objects[j], objects[k],
                                           gx, functor_value(D, F, i, j, ky))
                    if left != right:
                        return False
    return True


@dataclass(frozen=True)
class CoherentNerveLevel:
    level: int
    functors: tuple[SimplicialFunctor, ...]


def nerve_level(D: SimplicialCategoryPresentation, n: int) -> CoherentNerveLevel:
    """All simplicial functors from the rigidified n-simplex into D."""
    pairs = _pairs(n)
    functors = []
    for objects in iproduct(D.objects, repeat=n + 1):
        per_pair = []
        for (i, j) in pairs:
            maps = enumerate_simplicial_maps(cube_nerve(n, i, j),
                                             D.space(objects[i], objects[j]))
            if not maps:
                per_pair = None
                break
            cube = cube_nerve(n, i, j)
            flat = _flat_gens(cube)
            per_pair.append([tuple(m[SimplexKey(d, g)] for d, g in flat) for m in maps])
        if per_pair is None:
            continue
        for combo in iproduct(*per_pair):
            values = dict(zip(pairs, combo))
            if _composition_ok(D, n, objects, values):
                functors.append(SimplicialFunctor(n, objects, tuple(combo)))
    functors.sort(key=lambda F: (F.objects, F.values))
    return CoherentNerveLevel(n, tuple(functors))


def coherent_nerve_truncated(D: SimplicialCategoryPresentation,
                             nmax: int = NMAX) -> list[CoherentNerveLevel]:
    """Levels 0..nmax of the coherent nerve; enumeration is exponential in nmax."""
    if nmax > NMAX:
        raise ContractViolation(f"coherent nerve truncation bounded at {NMAX}")
    return [nerve_level(D, n) for n in range(nmax + 1)]


def functor_face(D: SimplicialCategoryPresentation, F: SimplicialFunctor,
                 idx: int) -> SimplicialFunctor:
    """Precompose with the idx-th coface of the underlying simplex."""
    n = F.level
    delta = coface_map(idx, n)
    objects = tuple(F.objects[delta[v]] for v in range(n))
    values = []
    for (a, b) in _pairs(n - 1):
        cube_small = cube_nerve(n - 1, a, b)
        cube_big = cube_nerve(n, delta[a], delta[b])
        row = []
        for d, g in _flat_gens(cube_small):
            chain = cube_small.chains_by_dim[d][g]
            big = tuple(_relabel_mask(elem, delta) for elem in chain)
            row.append(functor_value(D, F, delta[a], delta[b],
                                     _chain_key(cube_big, big)))
        values.append(tuple(row))
    return SimplicialFunctor(n - 1, objects, tuple(values))


def functor_degeneracy(D: SimplicialCategoryPresentation, F: SimplicialFunctor,
                       idx: int) -> SimplicialFunctor:
    """Precompose with the idx-th codegeneracy of the underlying simplex."""
    n = F.level
    sigma = codegeneracy_map(idx, n)
    objects = tuple(F.objects[sigma[v]] for v in range(n + 2))
    values = []
    for (a, b) in _pairs(n + 1):
        cube_small = cube_nerve(n + 1, a, b)
        cube_big = cube_nerve(n, sigma[a], sigma[b])
        row = []
        for d, g in _flat_gens(cube_small):
            chain = cube_small.chains_by_dim[d][g]
            big = tuple(_relabel_mask(elem, sigma) for elem in chain)
            row.append(functor_value(D, F, sigma[a], sigma[b],
                                     _chain_key(cube_big, big)))
        values.append(tuple(row))
    return SimplicialFunctor(n + 1, objects, tuple(values))


def nerve_truncation(D: SimplicialCategoryPresentation,
                     nmax: int = NMAX) -> TruncatedSimplicialSet:
    """The truncated coherent nerve packaged for the horn checker."""
    levels = [lvl.functors for lvl in coherent_nerve_truncated(D, nmax)]
    return TruncatedSimplicialSet(
        levels,
        lambda n, F, i: functor_face(D, F, i),
        lambda n, F, i: functor_degeneracy(D, F, i),
    )
