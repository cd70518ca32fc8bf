"""Mapping spaces of the rigidified category: flagged triples and cube nerves.

An n-simplex of the mapping space between two vertices of a complex S is an
equivalence class of triples [necklace T, map T -> S, flag of vertex subsets
of T].  Each class contains a unique representative that is *flanked* (the
flag starts at the joints and ends at all vertices) and *totally
nondegenerate* (every bead image is a nondegenerate simplex); those canonical
representatives are the :class:`MappingSimplex` values computed here.

For a necklace target the whole mapping space collapses to the nerve of a
subset lattice (a cube); :func:`necklace_mapping_space` builds that nerve
directly.  For an ordered target, :func:`mapping_space` enumerates the full
complex from injective necklace maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .complexes import (
    Complex,
    ContractViolation,
    GeneratedComplex,
    OrderedComplex,
    SimplexKey,
    empty_complex,
    face,
    vertex_chain,
)
from .necklaces import (
    Necklace,
    NecklaceMap,
    NecklaceMorphism,
    POINT,
    enumerate_injective_maps,
    is_submask,
    mask_of,
    members,
    point_map,
    submasks,
    wedge_maps,
)
from .operators import surjection_of_word, word_of_surjection

Flag = tuple[int, ...]  # nested vertex bitmasks over a fixed necklace


def validate_flag(necklace: Necklace, flag: Flag):
    if not flag:
        raise ContractViolation("flag needs at least one entry")
    if not is_submask(necklace.joint_mask, flag[0]):
        raise ContractViolation("first flag entry must contain the joints")
    if not is_submask(flag[-1], necklace.vertex_mask):
        raise ContractViolation("last flag entry must consist of vertices")
    for a, b in zip(flag, flag[1:]):
        if not is_submask(a, b):
            raise ContractViolation("flag entries must be nested")


@dataclass(frozen=True)
class FlaggedTriple:
    """A necklace map together with a nested flag of vertex subsets."""

    nmap: NecklaceMap
    flag: Flag

    def __post_init__(self):
        validate_flag(self.nmap.necklace, self.flag)

    @property
    def n(self) -> int:
        return len(self.flag) - 1


@dataclass(frozen=True)
class MappingSimplex:
    """Canonical triple: flanked flag over a totally nondegenerate map."""

    nmap: NecklaceMap
    flag: Flag

    def __post_init__(self):
        validate_flag(self.nmap.necklace, self.flag)
        if self.flag[0] != self.nmap.necklace.joint_mask:
            raise ContractViolation("canonical flag must start at the joints")
        if self.flag[-1] != self.nmap.necklace.vertex_mask:
            raise ContractViolation("canonical flag must end at all vertices")
        if not self.nmap.is_totally_nondegenerate:
            raise ContractViolation("canonical map must be totally nondegenerate")

    @property
    def n(self) -> int:
        return len(self.flag) - 1

    @property
    def is_nondegenerate(self) -> bool:
        return all(a != b for a, b in zip(self.flag, self.flag[1:]))

    def as_triple(self) -> FlaggedTriple:
        return FlaggedTriple(self.nmap, self.flag)


def restrict_map(nmap: NecklaceMap, sub: Necklace,
                 old_vertices: tuple[int, ...]) -> NecklaceMap:
    """Restrict a necklace map to a subnecklace given by ambient vertex ids."""
    target = nmap.target
    spans = nmap.necklace.bead_spans()
    keys = []
    if sub == POINT:
        return point_map(target, nmap.vertex_images[old_vertices[0]])
    for p, q in sub.bead_spans():
        old = old_vertices[p:q + 1]
        bead = nmap.necklace.bead_containing(old[0], old[-1])
        bp, bq = spans[bead]
        key = nmap.bead_keys[bead]
        for local in range(bq - bp, -1, -1):
            if bp + local not in old:
                key = face(target, key, local)
        keys.append(key)
    return NecklaceMap(sub, target, tuple(keys))


def flankify(t: FlaggedTriple) -> FlaggedTriple:
    """Restrict to the unique subnecklace with joints flag[0], vertices flag[-1]."""
    necklace = t.nmap.necklace
    if t.flag[0] == necklace.joint_mask and t.flag[-1] == necklace.vertex_mask:
        return t
    sub, old_vertices = necklace.subnecklace(t.flag[0], t.flag[-1])
    new_index = {v: i for i, v in enumerate(old_vertices)}
    flag = tuple(mask_of(new_index[v] for v in members(m)) for m in t.flag)
    return FlaggedTriple(restrict_map(t.nmap, sub, old_vertices), flag)


def push_flag(morphism: NecklaceMorphism, flag: Flag) -> Flag:
    return tuple(morphism.push_mask(m) for m in flag)


def canonicalize(t: FlaggedTriple) -> MappingSimplex:
    """Canonical representative of a triple's equivalence class.

    Flankification followed by collapsing degenerate beads, iterated to a
    fixpoint; one round lands in canonical form, so two suffice.
    """
    prev = None
    for _ in range(3):
        t = flankify(t)
        surj, bar = t.nmap.collapse()
        t = FlaggedTriple(bar, push_flag(surj, t.flag))
        if t == prev:
            break
        prev = t
    else:
        raise AssertionError("canonical form did not stabilize in two rounds")
    return MappingSimplex(t.nmap, t.flag)


def simplex_degeneracy(m: MappingSimplex, i: int) -> MappingSimplex:
    """Repeat the i-th flag entry; the result is canonical as-is."""
    if not 0 <= i <= m.n:
        raise ContractViolation(f"degeneracy index {i} out of range")
    return MappingSimplex(m.nmap, m.flag[:i + 1] + m.flag[i:])


def simplex_face(m: MappingSimplex, i: int) -> MappingSimplex:
    """Omit the i-th flag entry; outer omissions need recanonicalizing."""
    if m.n == 0 or not 0 <= i <= m.n:
        raise ContractViolation(f"face index {i} out of range for length {m.n}")
    flag = m.flag[:i] + m.flag[i + 1:]
    if 0 < i < m.n:
        return MappingSimplex(m.nmap, flag)
    return canonicalize(FlaggedTriple(m.nmap, flag))


def identity_simplex(target: Complex, vertex: int, n: int = 0) -> MappingSimplex:
    """The n-fold degenerate identity at a vertex."""
    return MappingSimplex(point_map(target, vertex), (1,) * (n + 1))


def compose_simplices(g: MappingSimplex, f: MappingSimplex) -> MappingSimplex:
    """Composite over matching endpoints: wedge the maps, union the flags."""
    if f.n != g.n:
        raise ContractViolation("composition needs equal flag lengths")
    if f.nmap.b != g.nmap.a:
        raise ContractViolation(f"endpoint mismatch: {f.nmap.b} vs {g.nmap.a}")
    wmap, offset = wedge_maps(f.nmap, g.nmap)
    flag = tuple(fm | (gm << offset) for fm, gm in zip(f.flag, g.flag))
    return canonicalize(FlaggedTriple(wmap, flag))


def induced_map(source: OrderedComplex, target: OrderedComplex,
                vmap: Sequence[int], m: MappingSimplex) -> MappingSimplex:
    """Push a canonical simplex forward along a simplicial vertex map."""
    images = tuple(vmap[v] for v in m.nmap.vertex_images)
    pushed = NecklaceMap.from_vertices(m.nmap.necklace, target, images)
    return canonicalize(FlaggedTriple(pushed, m.flag))


# -- cube models for necklace targets ----------------------------------------


@dataclass(frozen=True)
class CubePoset:
    """Subsets of the vertex stretch between two necklace vertices that
    contain all joints in between, ordered by inclusion."""

    necklace: Necklace
    a: int
    b: int
    elements: tuple[int, ...]

    @staticmethod
    def of(necklace: Necklace, a: int, b: int) -> "CubePoset":
        vmask, jmask = necklace.interval_masks(a, b)
        free = vmask & ~jmask
        elements = tuple(jmask | extra for extra in submasks(free))
        return CubePoset(necklace, a, b, elements)

    @property
    def rank(self) -> int:
        return bin(self.elements[-1] & ~self.elements[0]).count("1")

    def leq(self, x: int, y: int) -> bool:
        return is_submask(x, y)


class NerveComplex(GeneratedComplex):
    """Nerve of a finite poset; generators are strict element chains."""

    def __init__(self, elements: Sequence[int], chains_by_dim, faces):
        self.elements = tuple(elements)
        self.chains_by_dim = tuple(tuple(level) for level in chains_by_dim)
        self._chain_index = {c: (d, i) for d, level in enumerate(self.chains_by_dim)
                             for i, c in enumerate(level)}
        super().__init__(len(self.elements), faces, labels=self.chains_by_dim)

    def key_of_chain(self, chain: Sequence[int]) -> SimplexKey:
        d, i = self._chain_index[tuple(chain)]
        return SimplexKey(d, i)

    def chain_of_key(self, key: SimplexKey) -> tuple[int, ...]:
        core = self.chains_by_dim[key.core_dim][key.gen]
        if not key.word:
            return core
        surj = surjection_of_word(key.word, key.dim)
        return tuple(core[j] for j in surj)


def nerve_of_mask_poset(elements: Sequence[int]) -> NerveComplex:
    """Nerve of a set of bitmasks ordered by inclusion."""
    elements = sorted(elements, key=lambda m: (bin(m).count("1"), members(m)))
    chains_by_dim: list[list[tuple[int, ...]]] = [[(e,) for e in elements]]
    while True:
        nxt = [c + (e,) for c in chains_by_dim[-1] for e in elements
               if c[-1] != e and is_submask(c[-1], e)]
        if not nxt:
            break
        chains_by_dim.append(sorted(nxt))
    index = {c: (d, i) for d, level in enumerate(chains_by_dim)
             for i, c in enumerate(level)}
    faces = []
    for d in range(1, len(chains_by_dim)):
        level = []
        for c in chains_by_dim[d]:
            row = []
            for i in range(d + 1):
                fd, fi = index[c[:i] + c[i + 1:]]
                row.append(SimplexKey(fd, fi))
            level.append(tuple(row))
        faces.append(level)
    return NerveComplex(elements, chains_by_dim, faces)


def necklace_mapping_space(necklace: Necklace, a: int, b: int) -> NerveComplex | GeneratedComplex:
    """Mapping space of a necklace: nerve of its cube poset (empty if b < a)."""
    if not (0 <= a <= necklace.omega and 0 <= b <= necklace.omega):
        raise ContractViolation("endpoints out of range")
    if b < a:
        return empty_complex()
    return nerve_of_mask_poset(CubePoset.of(necklace, a, b).elements)


def cube_face(necklace: Necklace, a: int, b: int,
              yes: Sequence[int], no: Sequence[int],
              maybe: Sequence[int]) -> tuple[SimplexKey, tuple[int, ...]]:
    """The cube face selected by a yes/no/open split of the vertex stretch.

    `yes` must contain the joints; the three parts must partition the
    vertices between a and b.  The face has dimension len(maybe) and is
    realized as the chain that adds the open vertices in increasing order.
    Returns the simplex key in :func:`necklace_mapping_space` plus its chain.
    """
    vmask, jmask = necklace.interval_masks(a, b)
    ymask, nmask, mmask = mask_of(yes), mask_of(no), mask_of(maybe)
    if ymask | nmask | mmask != vmask or (ymask & nmask) or (ymask & mmask) or (nmask & mmask):
        raise ContractViolation("yes/no/open sets must partition the vertex stretch")
    if not is_submask(jmask, ymask):
        raise ContractViolation("yes set must contain the joints")
    chain = [ymask]
    for v in sorted(members(mmask)):
        chain.append(chain[-1] | (1 << v))
    nerve = necklace_mapping_space(necklace, a, b)
    return nerve.key_of_chain(tuple(chain)), tuple(chain)


# -- full mapping spaces over ordered complexes -------------------------------


class MappingComplex(GeneratedComplex):
    """Mapping space of an ordered complex, generators being canonical triples."""

    def __init__(self, source: OrderedComplex, a: int, b: int,
                 simplices: Sequence[Sequence[MappingSimplex]],
                 truncated_at: Optional[int] = None):
        self.source = source
        self.a = a
        self.b = b
        self.simplices = tuple(tuple(level) for level in simplices)
        self.truncated_at = truncated_at
        self.index = {m: (d, i) for d, level in enumerate(self.simplices)
                      for i, m in enumerate(level)}
        faces = []
        for d in range(1, len(self.simplices)):
            level = []
            for m in self.simplices[d]:
                level.append(tuple(self.key_of(simplex_face(m, i)) for i in range(d + 1)))
            faces.append(level)
        super().__init__(len(self.simplices[0]) if self.simplices else 0, faces)

    def key_of(self, m: MappingSimplex) -> SimplexKey:
        core, word = strip_flag_repeats(m)
        _, i = self.index[core]
        return SimplexKey(core.n + len(word), i, word)

    def simplex_of(self, key: SimplexKey) -> MappingSimplex:
        core = self.simplices[key.core_dim][key.gen]
        if not key.word:
            return core
        surj = surjection_of_word(key.word, key.dim)
        return MappingSimplex(core.nmap, tuple(core.flag[j] for j in surj))


def strip_flag_repeats(m: MappingSimplex) -> tuple[MappingSimplex, tuple[int, ...]]:
    """Unique nondegenerate core and the degeneracy word reinstating repeats."""
    dedup = []
    surj = []
    for mask in m.flag:
        if not dedup or dedup[-1] != mask:
            dedup.append(mask)
        surj.append(len(dedup) - 1)
    return (MappingSimplex(m.nmap, tuple(dedup)), word_of_surjection(tuple(surj)))


def strict_flag_chains(low: int, high: int) -> list[Flag]:
    """All strictly increasing flags from `low` to `high`, by length then entries."""
    out: list[Flag] = []

    def extend(chain: tuple[int, ...]):
        if chain[-1] == high:
            out.append(chain)
            return
        free = high & ~chain[-1]
        for add in submasks(free):
            if add:
                extend(chain + (chain[-1] | add,))

    extend((low,))
    out.sort(key=lambda c: (len(c), tuple(members(m) for m in c)))
    return out


def _assemble(source, a, b, maps, truncated_at=None) -> MappingComplex:
    by_dim: dict[int, list[MappingSimplex]] = {}
    for nmap in maps:
        necklace = nmap.necklace
        for flag in strict_flag_chains(necklace.joint_mask, necklace.vertex_mask):
            by_dim.setdefault(len(flag) - 1, []).append(MappingSimplex(nmap, flag))
    levels = []
    for d in range(max(by_dim) + 1 if by_dim else 0):
        level = by_dim.get(d, [])
        level.sort(key=lambda m: (m.nmap.necklace.beads, m.nmap.vertex_images,
                                  tuple(members(x) for x in m.flag)))
        levels.append(level)
    return MappingComplex(source, a, b, levels, truncated_at=truncated_at)


def mapping_space(source: OrderedComplex, a: int, b: int) -> MappingComplex:
    """The full mapping space of an ordered complex between two vertices.

    Nondegenerate n-simplices are canonical triples with strictly increasing
    flanked flags over injective necklace maps; faces are computed through the
    canonical-form operations.
    """
    if not isinstance(source, OrderedComplex):
        raise ContractViolation("mapping_space requires an ordered complex")
    return _assemble(source, a, b, enumerate_injective_maps(source, a, b))


def mapping_space_truncated(source: Complex, a: int, b: int,
                            max_vertices: int) -> MappingComplex:
    """Mapping space of a generated complex, truncated by necklace size.

    Mapping spaces over targets with directed cycles can be infinite; this
    enumerates the canonical simplices whose necklaces have at most
    `max_vertices` vertices and marks the result as truncated.  The truncated
    set is closed under faces.
    """
    if max_vertices < 1:
        raise ContractViolation("necklace size bound must be positive")
    counts = source.gen_counts
    by_initial: dict[int, list[SimplexKey]] = {}
    for d in range(1, len(counts)):
        for g in range(counts[d]):
            key = SimplexKey(d, g)
            by_initial.setdefault(vertex_chain(source, key)[0], []).append(key)
    maps: list[NecklaceMap] = []
    if a == b:
        maps.append(point_map(source, a))

    def extend(beads: tuple[int, ...], keys: tuple[SimplexKey, ...],
               last: int, used: int):
        for key in by_initial.get(last, []):
            extra = key.dim
            if used + extra > max_vertices:
                continue
            chain = vertex_chain(source, key)
            nbeads, nkeys = beads + (key.dim,), keys + (key,)
            if chain[-1] == b:
                maps.append(NecklaceMap(Necklace(nbeads), source, nkeys))
            extend(nbeads, nkeys, chain[-1], used + extra)

    extend((), (), a, 1)
    maps.sort(key=lambda m: (m.necklace.beads, m.vertex_images,
                             tuple(m.bead_keys)))
    return _assemble(source, a, b, maps, truncated_at=max_vertices)
