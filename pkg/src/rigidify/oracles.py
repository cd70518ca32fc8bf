"""Independent brute-force oracles used by the verification suite.

Everything here recomputes a quantity by a different route than the library
proper: chain counting by dynamic programming over bitmasks, equivalence
classes of flagged triples by explicit union-find over the generated
relation, and randomized zig-zags of flagged-necklace surjections.  Oracles
deliberately avoid the canonical-form machinery they are used to test.
"""

from __future__ import annotations

import random
from itertools import product as iproduct

from .complexes import OrderedComplex, level_count
from .mapping import Flag, FlaggedTriple, MappingComplex
from .necklaces import (
    Necklace,
    NecklaceMap,
    NecklaceMorphism,
    POINT,
    enumerate_all_maps,
    enumerate_morphisms,
    is_submask,
    mask_of,
    members,
    submasks,
)


def count_strict_chains(num_elements: int, length: int) -> int:
    """Strict chains of `length`+1 subsets of a set, any endpoints, by mask DP."""
    size = 1 << num_elements
    current = [1] * size
    for _ in range(length):
        nxt = [0] * size
        for upper in range(1, size):
            sub = (upper - 1) & upper
            while True:
                nxt[upper] += current[sub]
                if sub == 0:
                    break
                sub = (sub - 1) & upper
        current = nxt
    return sum(current)


def count_strict_chains_brute(num_elements: int, length: int) -> int:
    """Same count by raw tuple enumeration; only viable for tiny inputs."""
    size = 1 << num_elements
    total = 0
    for chain in iproduct(range(size), repeat=length + 1):
        if all(a != b and a & ~b == 0 for a, b in zip(chain, chain[1:])):
            total += 1
    return total


def count_subset_chains_brute(num_elements: int, length: int) -> int:
    """Weakly nested chains of `length`+1 subsets of an m-set, enumerated."""
    size = 1 << num_elements
    total = 0
    for chain in iproduct(range(size), repeat=length + 1):
        if all(a & ~b == 0 for a, b in zip(chain, chain[1:])):
            total += 1
    return total


def count_joint_vertex_pairs(a: int, b: int) -> int:
    """Pairs (J, V) with {a,b} <= J <= V <= {a..b}, enumerated directly."""
    if a == b:
        return 1
    inner = list(range(a + 1, b))
    total = 0
    for vbits in iproduct([0, 1], repeat=len(inner)):
        vset = [v for v, bit in zip(inner, vbits) if bit]
        total += 1 << len(vset)
    return total


# -- equivalence classes of flagged triples by the generated relation --------


def all_necklaces(max_vertices: int) -> list[Necklace]:
    """Every preferred-form necklace with at most the given vertex count."""
    out = [POINT]
    for total in range(1, max_vertices):
        found = set()

        def compositions(rest: int, acc: tuple):
            if rest == 0:
                found.add(acc)
                return
            for k in range(1, rest + 1):
                compositions(rest - k, acc + (k,))

        compositions(total, ())
        out.extend(Necklace(beads) for beads in sorted(found))
    return out


def all_flags(necklace: Necklace, length: int) -> list[Flag]:
    """Every weakly nested flag of the given length over a necklace."""
    low, high = necklace.joint_mask, necklace.vertex_mask
    flags: list[Flag] = []

    def extend(chain: tuple[int, ...]):
        if len(chain) == length + 1:
            flags.append(chain)
            return
        rest = high & ~chain[-1]
        for add in submasks(rest):
            extend(chain + (chain[-1] | add,))

    for start in submasks(high & ~low):
        extend((low | start,))
    return flags


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def quotient_class_counts(source: OrderedComplex, a: int, b: int,
                          max_vertices: int, max_length: int) -> list[int]:
    """Class counts of flagged triples under the generated relation.

    Materializes every triple [T, T -> source, flag] with at most
    `max_vertices` necklace vertices and flag length up to `max_length`,
    joins two triples whenever a necklace morphism over the source carries
    one flag onto the other, and counts connected components per flag length.
    The canonical-form code is never consulted.
    """
    necklaces = all_necklaces(max_vertices)
    maps = {t: enumerate_all_maps(t, source, a, b) for t in necklaces}
    flags = {t: {n: all_flags(t, n) for n in range(max_length + 1)} for t in necklaces}
    uf = _UnionFind()
    for t in necklaces:
        for m in maps[t]:
            for n in range(max_length + 1):
                for flag in flags[t][n]:
                    uf.find((t.beads, m.vertex_images, flag))
    for t in necklaces:
        for u in necklaces:
            if not maps[u]:
                continue
            for morphism in enumerate_morphisms(t, u):
                pushes = []
                for n in range(max_length + 1):
                    for flag in flags[t][n]:
                        pushed = tuple(morphism.push_mask(x) for x in flag)
                        if is_submask(u.joint_mask, pushed[0]):
                            pushes.append((flag, pushed))
                for m_u in maps[u]:
                    images_t = tuple(m_u.vertex_images[v] for v in morphism.vertex_map)
                    for flag, pushed in pushes:
                        uf.union((t.beads, images_t, flag),
                                 (u.beads, m_u.vertex_images, pushed))
    counts = []
    for n in range(max_length + 1):
        roots = set()
        for t in necklaces:
            for m in maps[t]:
                for flag in flags[t][n]:
                    roots.add(uf.find((t.beads, m.vertex_images, flag)))
        counts.append(len(roots))
    return counts


def mapping_space_level_counts(space: MappingComplex, max_length: int) -> list[int]:
    return [level_count(space, n) for n in range(max_length + 1)]


# -- randomized triples and zig-zags ------------------------------------------


def random_necklace(rng: random.Random, max_vertices: int,
                    spine_only: bool = False) -> Necklace:
    total = rng.randint(1, max_vertices - 1)
    if spine_only:
        return Necklace((1,) * total)
    beads = []
    while total:
        b = rng.randint(1, total)
        beads.append(b)
        total -= b
    return Necklace(tuple(beads))


def random_map(rng: random.Random, necklace: Necklace, source: OrderedComplex,
               a: int, b: int) -> NecklaceMap | None:
    """A uniformly drawn necklace map from the full enumeration, if any exists."""
    candidates = enumerate_all_maps(necklace, source, a, b)
    return rng.choice(candidates) if candidates else None


def random_flag(rng: random.Random, necklace: Necklace, length: int) -> Flag:
    """A random weakly nested flag; vertices may stay absent throughout."""
    free = members(necklace.vertex_mask & ~necklace.joint_mask)
    cuts = [rng.randint(0, length + 1) for _ in free]
    entries = []
    current = 0
    for n in range(length + 1):
        current |= mask_of(v for v, cut in zip(free, cuts) if cut == n)
        entries.append(necklace.joint_mask | current)
    return tuple(entries)


def random_triple(rng: random.Random, source: OrderedComplex, a: int, b: int,
                  max_vertices: int, length: int) -> FlaggedTriple | None:
    for _ in range(50):
        necklace = random_necklace(rng, max_vertices)
        nmap = random_map(rng, necklace, source, a, b)
        if nmap is not None:
            return FlaggedTriple(nmap, random_flag(rng, necklace, length))
    return None


def random_flanked_triple(rng: random.Random, source: OrderedComplex,
                          a: int, b: int, max_vertices: int,
                          length: int) -> FlaggedTriple | None:
    """Random triple whose flag starts at the joints and ends at all vertices.

    Flag length zero forces the joints to exhaust the vertices, so spines are
    drawn in that case.
    """
    for _ in range(50):
        necklace = random_necklace(rng, max_vertices, spine_only=length == 0)
        nmap = random_map(rng, necklace, source, a, b)
        if nmap is None:
            continue
        entries = random_flag(rng, necklace, length)
        flag = ((necklace.joint_mask,) + entries[1:-1] + (necklace.vertex_mask,)) \
            if length else (necklace.vertex_mask,)
        return FlaggedTriple(nmap, flag)
    return None


def inflate(rng: random.Random, triple: FlaggedTriple) -> FlaggedTriple:
    """A random flagged-necklace surjection onto the given triple.

    Builds a larger necklace by inserting collapsing beads at joints and
    fattening beads along random degeneracy patterns, pulls the map back
    along the surjection, and lifts the flag by choosing preimages.
    """
    source = triple.nmap
    necklace = source.necklace
    target_images = source.vertex_images
    beads: list[int] = []
    vmap: list[int] = [0]

    def insert_collapsers(joint: int):
        for _ in range(rng.randint(0, 1)):
            size = rng.randint(1, 2)
            beads.append(size)
            vmap.extend([joint] * size)

    insert_collapsers(0)
    if necklace == POINT:
        if not beads:
            beads.append(1)
            vmap.append(0)
    else:
        for (p, q) in necklace.bead_spans():
            base = list(range(p, q + 1))
            path = sorted(base + rng.choices(base, k=rng.randint(0, 2)))
            beads.append(len(path) - 1)
            vmap.extend(path[1:])
            insert_collapsers(q)
    big = Necklace(tuple(beads))
    morphism = NecklaceMorphism(big, necklace, tuple(vmap))
    lifted_map = NecklaceMap.from_vertices(big, source.target,
                                           tuple(target_images[v] for v in vmap))
    preimages: dict[int, list[int]] = {}
    for v, w in enumerate(vmap):
        preimages.setdefault(w, []).append(v)
    flag_entries: list[int] = []
    previous = big.joint_mask
    for i, mask in enumerate(triple.flag):
        entry = previous if i == 0 else flag_entries[-1]
        for w in members(mask):
            entry |= 1 << rng.choice(preimages[w])
            for v in preimages[w]:
                if rng.random() < 0.3:
                    entry |= 1 << v
        if mask == necklace.vertex_mask and i == len(triple.flag) - 1:
            entry = big.vertex_mask
        flag_entries.append(entry)
    lifted = FlaggedTriple(lifted_map, tuple(flag_entries))
    for pushed, original in zip((morphism.push_mask(m) for m in lifted.flag),
                                triple.flag):
        if pushed != original:
            raise AssertionError("inflation failed to cover the flag")
    return lifted


def zigzag_members(rng: random.Random, start: FlaggedTriple,
                   length: int) -> list[FlaggedTriple]:
    """Members of a random zig-zag of flagged-necklace surjections."""
    out = [start]
    current = start
    for _ in range(length):
        bigger = inflate(rng, current)
        out.append(bigger)
        surj, bar = bigger.nmap.collapse()
        current = FlaggedTriple(bar, tuple(surj.push_mask(m) for m in bigger.flag))
        out.append(current)
    return out
