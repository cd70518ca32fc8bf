"""Necklaces, necklace morphisms, and necklace maps into complexes.

A necklace is a string of simplices glued end to end; it is identified with
its tuple of bead dimensions, vertices being 0..sum(beads) in path order.
Maps into a complex are recorded per bead as simplex keys; for ordered
targets the full vertex image list determines everything.

Vertex subsets of a necklace are manipulated as integer bitmasks throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .complexes import (
    Complex,
    ContractViolation,
    OrderedComplex,
    SimplexKey,
    face,
    vertex_chain,
)
from .operators import surjection_of_word, word_of_surjection

# -- bitmask helpers ---------------------------------------------------------


def mask_of(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def members(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def is_submask(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> list[int]:
    """All submasks of `mask`, sorted by (size, member tuple)."""
    bits = members(mask)
    out = [0]
    for b in bits:
        out += [m | (1 << b) for m in out]
    return sorted(out, key=lambda m: (bin(m).count("1"), members(m)))


@dataclass(frozen=True, order=True)
class Necklace:
    """Bead-dimension tuple in preferred form: a lone [0] or all beads >= 1."""

    beads: tuple[int, ...]

    def __post_init__(self):
        if not self.beads:
            raise ContractViolation("necklace needs at least one bead")
        if self.beads != (0,) and any(b < 1 for b in self.beads):
            raise ContractViolation(f"{self.beads} is not in preferred form")

    @property
    def vertex_count(self) -> int:
        return sum(self.beads) + 1

    @property
    def omega(self) -> int:
        return self.vertex_count - 1

    @cached_property
    def joints(self) -> tuple[int, ...]:
        out = [0]
        for b in self.beads:
            out.append(out[-1] + b)
        return tuple(dict.fromkeys(out))

    @cached_property
    def joint_mask(self) -> int:
        return mask_of(self.joints)

    @cached_property
    def vertex_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def bead_spans(self) -> list[tuple[int, int]]:
        spans = []
        start = 0
        for b in self.beads:
            spans.append((start, start + b))
            start += b
        return spans

    def bead_containing(self, u: int, v: int) -> Optional[int]:
        """Index of a bead whose span covers [u, v], if any."""
        for i, (p, q) in enumerate(self.bead_spans()):
            if p <= u and v <= q:
                return i
        return None

    def interval_masks(self, a: int, b: int) -> tuple[int, int]:
        """(vertex mask, joint mask) of the stretch between a and b inclusive."""
        if not 0 <= a <= b <= self.omega:
            raise ContractViolation(f"invalid endpoints ({a},{b})")
        vmask = mask_of(range(a, b + 1))
        jmask = mask_of([a, b]) | (self.joint_mask & vmask)
        return vmask, jmask

    def subnecklace(self, joint_mask: int, vertex_mask: int) -> tuple["Necklace", tuple[int, ...]]:
        """The unique subnecklace with the given joints and vertices.

        Returns it with the tuple of ambient vertex ids, indexed by the new
        necklace's vertices.  Consecutive requested joints must lie in one
        bead of this necklace.
        """
        joints = members(joint_mask)
        verts = members(vertex_mask)
        if not is_submask(joint_mask, vertex_mask):
            raise ContractViolation("joints must be vertices")
        if len(joints) == 1:
            if verts != joints:
                raise ContractViolation("point subnecklace cannot carry extra vertices")
            return Necklace((0,)), verts
        vidx = {v: i for i, v in enumerate(verts)}
        beads = []
        for j1, j2 in zip(joints, joints[1:]):
            if self.bead_containing(j1, j2) is None:
                raise ContractViolation(f"joints {j1},{j2} do not share a bead")
            beads.append(vidx[j2] - vidx[j1])
        return Necklace(tuple(beads)), verts


POINT = Necklace((0,))


def preferred_form(raw: Sequence[int]) -> Necklace:
    """Drop point beads (unless everything is a point)."""
    if not list(raw):
        raise ContractViolation("necklace needs at least one bead")
    beads = tuple(b for b in raw if b > 0)
    return Necklace(beads) if beads else POINT


def wedge(t: Necklace, u: Necklace) -> tuple[Necklace, int]:
    """Glue the last vertex of t to the first of u.

    Returns the wedge and the reindexing offset for u's vertices; t's
    vertices keep their ids.
    """
    return preferred_form(t.beads + u.beads), t.vertex_count - 1


def outer_simplex(t: Necklace) -> Necklace:
    """The single bead on all of t's vertices."""
    return Necklace((t.omega,)) if t.omega else POINT


def spine(t: Necklace) -> Necklace:
    """The longest edge path inside t."""
    return Necklace((1,) * t.omega) if t.omega else POINT


@dataclass(frozen=True)
class NecklaceMorphism:
    """Map of necklaces recorded by its monotone vertex map."""

    source: Necklace
    target: Necklace
    vertex_map: tuple[int, ...]

    def __post_init__(self):
        f = self.vertex_map
        if len(f) != self.source.vertex_count:
            raise ContractViolation("vertex map has wrong length")
        if any(a > b for a, b in zip(f, f[1:])):
            raise ContractViolation("vertex map must be monotone")
        if f[0] != 0 or f[-1] != self.target.omega:
            raise ContractViolation("vertex map must preserve endpoints")
        for p, q in self.source.bead_spans():
            if self.target.bead_containing(f[p], f[q]) is None:
                raise ContractViolation(f"bead [{p},{q}] is not carried into a bead")

    @property
    def is_surjective(self) -> bool:
        return set(self.vertex_map) == set(range(self.target.vertex_count))

    def push_mask(self, mask: int) -> int:
        return mask_of(self.vertex_map[v] for v in members(mask))


def enumerate_morphisms(t: Necklace, u: Necklace) -> list[NecklaceMorphism]:
    """All necklace morphisms t -> u, ordered by vertex map."""
    spans = t.bead_spans()
    results: list[NecklaceMorphism] = []

    def extend(f: list[int]):
        v = len(f)
        if v == t.vertex_count:
            if f[-1] == u.omega:
                results.append(NecklaceMorphism(t, u, tuple(f)))
            return
        bead = next(i for i, (p, q) in enumerate(spans) if p < v <= q)
        p, _ = spans[bead]
        for w in range(f[-1], u.omega + 1):
            if u.bead_containing(f[p], w) is not None:
                extend(f + [w])

    extend([0])
    return results


@dataclass(frozen=True)
class NecklaceMap:
    """Map from a necklace into a complex, one simplex key per bead."""

    necklace: Necklace
    target: Complex = field(compare=False, repr=False)
    bead_keys: tuple[SimplexKey, ...] = ()

    def __post_init__(self):
        if len(self.bead_keys) != len(self.necklace.beads):
            raise ContractViolation("one simplex key per bead required")
        for b, key in zip(self.necklace.beads, self.bead_keys):
            if key.dim != b:
                raise ContractViolation(f"bead of dimension {b} mapped to {key}")
        chains = [vertex_chain(self.target, k) for k in self.bead_keys]
        for left, right in zip(chains, chains[1:]):
            if left[-1] != right[0]:
                raise ContractViolation("bead images do not glue")

    @cached_property
    def vertex_images(self) -> tuple[int, ...]:
        out: list[int] = []
        for key in self.bead_keys:
            chain = vertex_chain(self.target, key)
            out.extend(chain if not out else chain[1:])
        return tuple(out)

    @property
    def a(self) -> int:
        return self.vertex_images[0]

    @property
    def b(self) -> int:
        return self.vertex_images[-1]

    @property
    def is_totally_nondegenerate(self) -> bool:
        return all(not k.word for k in self.bead_keys)

    @property
    def is_injective(self) -> bool:
        images = self.vertex_images
        return len(set(images)) == len(images)

    @classmethod
    def from_vertices(cls, necklace: Necklace, target: OrderedComplex,
                      vertices: Sequence[int]) -> "NecklaceMap":
        """Build a map into an ordered complex from its vertex image list."""
        vertices = tuple(vertices)
        if len(vertices) != necklace.vertex_count:
            raise ContractViolation("vertex image list has wrong length")
        keys = []
        for p, q in necklace.bead_spans():
            seq = vertices[p:q + 1] if q > p else vertices[p:p + 1]
            dedup = tuple(v for i, v in enumerate(seq) if i == 0 or v != seq[i - 1])
            if len(set(dedup)) != len(dedup) or not target.has_chain(dedup):
                raise ContractViolation(f"bead image {seq} is not a simplex of the target")
            core = target.key_of_chain(dedup)
            pos = {v: i for i, v in enumerate(dedup)}
            surj = tuple(pos[v] for v in seq)
            keys.append(SimplexKey(len(seq) - 1, core.gen, word_of_surjection(surj)))
        return cls(necklace, target, tuple(keys))

    def collapse(self) -> tuple[NecklaceMorphism, "NecklaceMap"]:
        """Split off the degeneracies: a surjection onto a totally
        nondegenerate map with the same composite."""
        new_dims = [k.core_dim for k in self.bead_keys]
        vmap: list[int] = [0]
        base = 0
        for bead, key in zip(self.necklace.beads, self.bead_keys):
            surj = surjection_of_word(key.word, bead)
            vmap.extend(base + surj[t] for t in range(1, bead + 1))
            base += key.core_dim
        kept = [(d, k.core) for d, k in zip(new_dims, self.bead_keys) if d > 0]
        if kept:
            bar = NecklaceMap(Necklace(tuple(d for d, _ in kept)), self.target,
                              tuple(k for _, k in kept))
        else:
            vertex = vertex_chain(self.target, self.bead_keys[0])[0]
            bar = NecklaceMap(POINT, self.target, (SimplexKey(0, vertex),))
        return NecklaceMorphism(self.necklace, bar.necklace, tuple(vmap)), bar


def point_map(target: Complex, vertex: int) -> NecklaceMap:
    return NecklaceMap(POINT, target, (SimplexKey(0, vertex),))


def image_necklace(m: NecklaceMap) -> tuple[NecklaceMorphism, NecklaceMap]:
    """Factor a map into an ordered complex through its image necklace."""
    if not isinstance(m.target, OrderedComplex):
        raise ContractViolation("image necklace requires an ordered target")
    surj, bar = m.collapse()
    if not bar.is_injective:
        raise AssertionError("totally nondegenerate map into ordered target must inject")
    return surj, bar


def wedge_maps(f: NecklaceMap, g: NecklaceMap) -> tuple[NecklaceMap, int]:
    """Concatenate maps along a shared endpoint; returns the offset of g's vertices."""
    if f.target is not g.target:
        raise ContractViolation("wedge requires a common target")
    if f.b != g.a:
        raise ContractViolation(f"endpoint mismatch: {f.b} vs {g.a}")
    offset = f.necklace.vertex_count - 1
    pairs = [(b, k) for b, k in zip(f.necklace.beads + g.necklace.beads,
                                    f.bead_keys + g.bead_keys) if b > 0]
    if not pairs:
        return point_map(f.target, f.b), offset
    necklace = Necklace(tuple(b for b, _ in pairs))
    return NecklaceMap(necklace, f.target, tuple(k for _, k in pairs)), offset


def enumerate_injective_maps(target: OrderedComplex, a: int, b: int) -> list[NecklaceMap]:
    """Every injective necklace map into an ordered complex from a to b.

    In an ordered complex these are exactly the totally nondegenerate maps:
    compositions of stored chains of dimension >= 1 strung from a to b.
    Results come in lexicographic (bead list, vertex images) order.
    """
    if not isinstance(target, OrderedComplex):
        raise ContractViolation("enumeration requires an ordered complex")
    if not (0 <= a < target.vertex_count and 0 <= b < target.vertex_count):
        raise ContractViolation("endpoints out of range")
    rel = target.preorder()
    if a == b:
        return [point_map(target, a)]
    if not rel.leq(a, b):
        return []
    by_initial: dict[int, list[tuple[int, ...]]] = {}
    for d in range(1, target.dim + 1):
        for c in target.chains(d):
            if rel.leq(c[-1], b):
                by_initial.setdefault(c[0], []).append(c)
    results = []

    def extend(beads: tuple[int, ...], images: tuple[int, ...]):
        v = images[-1]
        if v == b:
            results.append(NecklaceMap.from_vertices(Necklace(beads), target, images))
            return
        for c in by_initial.get(v, []):
            extend(beads + (len(c) - 1,), images + c[1:])

    extend((), (a,))
    results.sort(key=lambda m: (m.necklace.beads, m.vertex_images))
    return results


def enumerate_all_maps(necklace: Necklace, target: OrderedComplex,
                       a: int, b: int) -> list[NecklaceMap]:
    """Every necklace map (degenerate bead images allowed) from a to b."""
    rel = target.preorder()
    if necklace == POINT:
        return [point_map(target, a)] if a == b else []
    results = []

    def bead_images(start: int, length: int, dedup: tuple[int, ...],
                    seq: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield seq
            return
        for w in sorted({seq[-1], *target.extensions(dedup)}):
            if rel.leq(w, b):
                yield from bead_images(start, length - 1,
                                       dedup if w == seq[-1] else dedup + (w,),
                                       seq + (w,))

    def extend(bead_pos: int, images: tuple[int, ...]):
        if bead_pos == len(necklace.beads):
            if images[-1] == b:
                results.append(NecklaceMap.from_vertices(necklace, target, images))
            return
        v = images[-1]
        for seq in bead_images(v, necklace.beads[bead_pos], (v,), (v,)):
            extend(bead_pos + 1, images + seq[1:])

    extend(0, (a,))
    return results
