"""Finite simplicial sets in two presentations behind one read interface.

An :class:`OrderedComplex` stores its nondegenerate simplices as strictly
increasing vertex chains; a :class:`GeneratedComplex` stores arbitrary
nondegenerate generators with an explicit face table.  Both expose the same
read surface (generator counts, faces of generators, vertex chains), and the
module-level operations :func:`face`, :func:`degeneracy`,
:func:`vertex_chain`, :func:`preceq`, :func:`is_ordered` and
:func:`is_simple_inclusion` work uniformly on either.

Degenerate simplices never get stored: every simplex is addressed by a
:class:`SimplexKey` holding a generator id plus a degeneracy word in normal
form, and every operator application renormalizes immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as iproduct
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

from .operators import (
    Word,
    codegeneracy_map,
    coface_map,
    compose_monotone,
    epi_mono_factor,
    is_normal_word,
    normal_words,
    surjection_of_word,
    word_of_surjection,
)


class ContractViolation(ValueError):
    """An operation was called outside its stated preconditions."""


@dataclass(frozen=True, order=True)
class SimplexKey:
    """Canonical reference to a (possibly degenerate) simplex.

    ``dim = core_dim + len(word)`` where ``core_dim`` is the dimension of the
    nondegenerate generator `gen`; the pair ``(gen, word)`` is the unique
    normal-form decomposition of the simplex.
    """

    dim: int
    gen: int
    word: Word = ()

    def __post_init__(self):
        if not is_normal_word(self.word):
            raise ContractViolation(f"degeneracy word {self.word!r} not in normal form")
        if self.core_dim < 0:
            raise ContractViolation(f"word longer than dimension in {self!r}")

    @property
    def core_dim(self) -> int:
        return self.dim - len(self.word)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.word)

    @property
    def core(self) -> "SimplexKey":
        return SimplexKey(self.core_dim, self.gen)


@dataclass(frozen=True)
class PreorderRelation:
    """Reflexive-transitive closure of the directed 1-simplex relation."""

    reach: tuple[frozenset, ...]

    def leq(self, a: int, b: int) -> bool:
        return b in self.reach[a]

    @property
    def is_partial_order(self) -> bool:
        return self.antisymmetry_witness() is None

    def antisymmetry_witness(self) -> Optional[tuple[int, int]]:
        """A pair a != b with a <= b <= a, or None when antisymmetric."""
        for a in range(len(self.reach)):
            for b in self.reach[a]:
                if b != a and a in self.reach[b]:
                    return (a, b)
        return None

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a in range(len(self.reach)):
            for b in sorted(self.reach[a]):
                yield (a, b)


def _closure(vertex_count: int, edges: Iterable[tuple[int, int]]) -> PreorderRelation:
    reach = [set([v]) for v in range(vertex_count)]
    adj = [set() for _ in range(vertex_count)]
    for u, v in edges:
        adj[u].add(v)
    for v in range(vertex_count):
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in reach[v]:
                    reach[v].add(w)
                    stack.append(w)
    return PreorderRelation(tuple(frozenset(r) for r in reach))


class OrderedComplex:
    """Finite ordered simplicial set: simplices are strictly increasing chains.

    The stored data is one sorted tuple of vertex chains per dimension,
    closed under taking subchains.  Chains determine their simplices, so the
    reachability preorder is required to be antisymmetric at construction.
    """

    presentation = "ordered"

    def __init__(self, chains_by_dim: Sequence[Sequence[tuple[int, ...]]],
                 vertex_count: int, check: bool = True):
        self._chains = tuple(tuple(sorted(set(map(tuple, level)))) for level in chains_by_dim)
        while self._chains and not self._chains[-1]:
            self._chains = self._chains[:-1]
        self.vertex_count = vertex_count
        self._index = {c: (d, i) for d, level in enumerate(self._chains)
                       for i, c in enumerate(level)}
        self._extensions: dict[tuple[int, ...], list[int]] = {}
        for level in self._chains[1:]:
            for c in level:
                self._extensions.setdefault(c[:-1], []).append(c[-1])
        self._preorder: Optional[PreorderRelation] = None
        if check:
            self._validate()

    def _validate(self):
        if self._chains and len(self._chains[0]) != self.vertex_count:
            raise ContractViolation("vertex chains must list every vertex exactly once")
        if self._chains and self._chains[0] != tuple((v,) for v in range(self.vertex_count)):
            raise ContractViolation("vertex ids must be dense 0..n-1")
        for d, level in enumerate(self._chains):
            for c in level:
                if len(c) != d + 1 or len(set(c)) != d + 1:
                    raise ContractViolation(f"chain {c} malformed at dimension {d}")
                for i in range(d + 1):
                    if d and c[:i] + c[i + 1:] not in self._index:
                        raise ContractViolation(f"complex not closed under faces: {c} misses face {i}")
        wit = self.preorder().antisymmetry_witness()
        if wit is not None:
            raise ContractViolation(
                f"reachability not antisymmetric: cycle through {wit[0]} and {wit[1]}")

    # -- read interface ----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._chains) - 1

    @property
    def gen_counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._chains)

    def gen_key(self, d: int, idx: int) -> SimplexKey:
        return SimplexKey(d, idx)

    def gen_face(self, d: int, idx: int, i: int) -> SimplexKey:
        c = self._chains[d][idx]
        fd, fi = self._index[c[:i] + c[i + 1:]]
        return SimplexKey(fd, fi)

    def vertex_chain_of_gen(self, d: int, idx: int) -> tuple[int, ...]:
        return self._chains[d][idx]

    # -- chain access ------------------------------------------------------

    def chains(self, d: int) -> tuple[tuple[int, ...], ...]:
        return self._chains[d] if 0 <= d <= self.dim else ()

    def has_chain(self, chain: tuple[int, ...]) -> bool:
        return chain in self._index

    def key_of_chain(self, chain: tuple[int, ...]) -> SimplexKey:
        d, i = self._index[tuple(chain)]
        return SimplexKey(d, i)

    def extensions(self, chain: tuple[int, ...]) -> list[int]:
        """Vertices w such that chain + (w,) is again a stored chain."""
        return self._extensions.get(tuple(chain), [])

    def maximal_chains(self) -> list[tuple[int, ...]]:
        proper = set()
        for level in self._chains:
            for c in level:
                for i in range(len(c)):
                    proper.add(c[:i] + c[i + 1:])
        return [c for level in self._chains for c in level if c not in proper]

    def preorder(self) -> PreorderRelation:
        if self._preorder is None:
            self._preorder = _closure(self.vertex_count,
                                      (c for c in self.chains(1)))
        return self._preorder


class OrderViolation(ContractViolation):
    """Raised when a construction would break antisymmetry; carries a cycle."""

    def __init__(self, cycle: tuple[int, ...]):
        super().__init__(f"reachability cycle {'->'.join(map(str, cycle))}")
        self.cycle = cycle


def _find_cycle(vertex_count: int, edges: list[tuple[int, int]]) -> tuple[int, ...]:
    adj = [set() for _ in range(vertex_count)]
    for u, v in edges:
        adj[u].add(v)

    def path(src: int, dst: int) -> Optional[list[int]]:
        prev = {src: src}
        stack = [src]
        while stack:
            u = stack.pop()
            if u == dst:
                out = [u]
                while out[-1] != src:
                    out.append(prev[out[-1]])
                return out[::-1]
            for w in sorted(adj[u]):
                if w not in prev:
                    prev[w] = u
                    stack.append(w)
        return None

    rel = _closure(vertex_count, edges)
    for a in range(vertex_count):
        for b in sorted(rel.reach[a]):
            if b != a and a in rel.reach[b]:
                fwd = path(a, b)
                back = path(b, a)
                if fwd and back:
                    return tuple(fwd + back[1:])
    raise AssertionError("no cycle found")


def from_maximal_chains(chains: Sequence[Sequence[int]]) -> OrderedComplex:
    """Build the ordered complex whose simplices are all nonempty subchains.

    Rejects inputs whose edge reachability fails antisymmetry, raising
    :class:`OrderViolation` with a witness cycle.
    """
    chains = [tuple(c) for c in chains]
    for c in chains:
        if len(set(c)) != len(c) or not c:
            raise ContractViolation(f"chain {c} has repeated or no vertices")
    vertices = sorted({v for c in chains for v in c})
    if vertices != list(range(len(vertices))):
        raise ContractViolation("vertex ids must be dense 0..n-1")
    vertex_count = len(vertices)
    edges = sorted({(c[i], c[j]) for c in chains
                    for i in range(len(c)) for j in range(i + 1, len(c))})
    rel = _closure(vertex_count, edges)
    if rel.antisymmetry_witness() is not None:
        raise OrderViolation(_find_cycle(vertex_count, edges))
    by_dim: list[set] = [set() for _ in range(max(len(c) for c in chains))]
    for c in chains:
        for r in range(1, len(c) + 1):
            for sub in combinations(c, r):
                by_dim[r - 1].add(sub)
    return OrderedComplex([sorted(level) for level in by_dim], vertex_count)


class GeneratedComplex:
    """Finite simplicial set presented by generators and a face table.

    ``faces[d][g]`` holds the d+1 faces of generator g in dimension d >= 1 as
    SimplexKeys (degenerate targets allowed).  Construction verifies the
    simplicial identities hold after normalization.
    """

    presentation = "generated"

    def __init__(self, vertex_count: int,
                 faces: Sequence[Sequence[Sequence[SimplexKey]]],
                 labels: Optional[Sequence[Sequence[object]]] = None,
                 check: bool = True):
        self.vertex_count = vertex_count
        self._faces = tuple(tuple(tuple(f) for f in level) for level in faces)
        while self._faces and not self._faces[-1]:
            self._faces = self._faces[:-1]
        self.labels = tuple(tuple(level) for level in labels) if labels is not None else None
        self._chain_memo: dict[tuple[int, int], tuple[int, ...]] = {}
        if check:
            self._validate()

    def _validate(self):
        counts = self.gen_counts
        for d, level in enumerate(self._faces, start=1):
            for g, fs in enumerate(level):
                if len(fs) != d + 1:
                    raise ContractViolation(f"generator ({d},{g}) needs {d + 1} faces")
                for key in fs:
                    if key.dim != d - 1:
                        raise ContractViolation(f"face of ({d},{g}) has wrong dimension")
                    if key.core_dim >= len(counts) or key.gen >= counts[key.core_dim]:
                        raise ContractViolation(f"face of ({d},{g}) references unknown generator")
        for d in range(2, self.dim + 1):
            for g in range(counts[d]):
                key = SimplexKey(d, g)
                for j in range(d + 1):
                    for i in range(j):
                        left = face(self, face(self, key, j), i)
                        right = face(self, face(self, key, i), j - 1)
                        if left != right:
                            raise ContractViolation(
                                f"simplicial identity d_{i} d_{j} fails on generator ({d},{g})")

    @property
    def dim(self) -> int:
        if self.vertex_count == 0:
            return -1
        return len(self._faces)

    @property
    def gen_counts(self) -> tuple[int, ...]:
        if self.vertex_count == 0:
            return ()
        return (self.vertex_count,) + tuple(len(level) for level in self._faces)

    def gen_key(self, d: int, idx: int) -> SimplexKey:
        return SimplexKey(d, idx)

    def gen_face(self, d: int, idx: int, i: int) -> SimplexKey:
        return self._faces[d - 1][idx][i]

    def vertex_chain_of_gen(self, d: int, idx: int) -> tuple[int, ...]:
        if d == 0:
            return (idx,)
        got = self._chain_memo.get((d, idx))
        if got is None:
            verts = []
            for pos in range(d + 1):
                key = SimplexKey(d, idx)
                for j in range(d, pos, -1):
                    key = face(self, key, j)
                for _ in range(pos):
                    key = face(self, key, 0)
                verts.append(key.gen)
            got = self._chain_memo[(d, idx)] = tuple(verts)
        return got


Complex = OrderedComplex | GeneratedComplex


def empty_complex() -> GeneratedComplex:
    return GeneratedComplex(0, [])


# -- operators on arbitrary simplices ---------------------------------------


def face(cx: Complex, key: SimplexKey, i: int) -> SimplexKey:
    """The i-th face of a simplex, renormalized to canonical form."""
    if key.dim == 0 or not 0 <= i <= key.dim:
        raise ContractViolation(f"face index {i} out of range for dimension {key.dim}")
    if not key.word:
        return cx.gen_face(key.dim, key.gen, i)
    f = compose_monotone(surjection_of_word(key.word, key.dim), coface_map(i, key.dim))
    missing, surj = epi_mono_factor(f, key.core_dim + 1)
    cur = key.core
    for j in missing:
        cur = face(cx, cur, j)
    total = compose_monotone(surjection_of_word(cur.word, cur.dim), surj)
    return SimplexKey(key.dim - 1, cur.gen, word_of_surjection(total))


def degeneracy(cx: Complex, key: SimplexKey, i: int) -> SimplexKey:
    """The i-th degeneracy of a simplex, in canonical form."""
    if not 0 <= i <= key.dim:
        raise ContractViolation(f"degeneracy index {i} out of range for dimension {key.dim}")
    total = compose_monotone(surjection_of_word(key.word, key.dim),
                             codegeneracy_map(i, key.dim))
    return SimplexKey(key.dim + 1, key.gen, word_of_surjection(total))


def vertex_chain(cx: Complex, key: SimplexKey) -> tuple[int, ...]:
    core = cx.vertex_chain_of_gen(key.core_dim, key.gen)
    if not key.word:
        return core
    return compose_monotone(core, surjection_of_word(key.word, key.dim))


def simplices_at_level(cx: Complex, n: int) -> Iterator[SimplexKey]:
    """All simplices of dimension n, degenerate ones included."""
    counts = cx.gen_counts
    for d in range(min(n, len(counts) - 1) + 1):
        for word in normal_words(n - d, n):
            for g in range(counts[d]):
                yield SimplexKey(n, g, word)


def level_count(cx: Complex, n: int) -> int:
    counts = cx.gen_counts
    return sum(counts[d] * comb(n, d) for d in range(min(n, len(counts) - 1) + 1))


def f_vector(cx: Complex) -> tuple[int, ...]:
    return cx.gen_counts


def nondegenerate_edges(cx: Complex) -> list[tuple[int, int, SimplexKey]]:
    counts = cx.gen_counts
    out = []
    if len(counts) > 1:
        for g in range(counts[1]):
            u, v = cx.vertex_chain_of_gen(1, g)
            out.append((u, v, SimplexKey(1, g)))
    return out


def preceq(cx: Complex) -> PreorderRelation:
    """Reachability preorder on vertices along directed 1-simplices."""
    if isinstance(cx, OrderedComplex):
        return cx.preorder()
    return _closure(cx.vertex_count, ((u, v) for u, v, _ in nondegenerate_edges(cx)))


@dataclass(frozen=True)
class OrderedVerdict:
    ok: bool
    cycle: Optional[tuple[int, ...]] = None
    pair: Optional[tuple[SimplexKey, SimplexKey]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_ordered(cx: Complex) -> OrderedVerdict:
    """Decide Def-style orderedness: antisymmetry plus vertex-determinedness.

    Vertex-sequence collisions are scanned level by level up to the top
    generator dimension; collisions above that force one at or below it, so
    the scan is complete.
    """
    edges = [(u, v) for u, v, _ in nondegenerate_edges(cx)]
    rel = _closure(cx.vertex_count, edges)
    if rel.antisymmetry_witness() is not None:
        return OrderedVerdict(False, cycle=_find_cycle(cx.vertex_count, edges))
    for n in range(1, cx.dim + 1):
        seen: dict[tuple[int, ...], SimplexKey] = {}
        for key in simplices_at_level(cx, n):
            c = vertex_chain(cx, key)
            if c in seen:
                return OrderedVerdict(False, pair=(seen[c], key))
            seen[c] = key
    return OrderedVerdict(True)


# -- simple inclusions -------------------------------------------------------


@dataclass(frozen=True)
class SimpleVerdict:
    ok: bool
    reason: str = ""
    witness: Optional[SimplexKey] = None
    through: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def subcomplex_keys(cx: OrderedComplex, chains: Iterable[Sequence[int]]) -> frozenset[SimplexKey]:
    """Translate vertex chains of an ordered complex into generator keys."""
    return frozenset(cx.key_of_chain(tuple(c)) for c in chains)


def validate_subcomplex(cx: Complex, keys: frozenset[SimplexKey]):
    counts = cx.gen_counts
    for key in keys:
        if key.word or key.dim >= len(counts) or key.gen >= counts[key.dim]:
            raise ContractViolation(f"{key} is not a generator of the ambient complex")
        if key.dim:
            for i in range(key.dim + 1):
                if face(cx, key, i).core not in keys:
                    raise ContractViolation(f"subcomplex not closed under faces at {key}")


def is_simple_inclusion(cx: Complex, sub: frozenset[SimplexKey]) -> SimpleVerdict:
    """Decide whether a subcomplex inclusion lifts against all endpoint pairs.

    Finite criterion: (a) every directed edge sitting on a path that starts
    and ends at subcomplex vertices must lie in the subcomplex together with
    its endpoints, and (b) every nondegenerate simplex whose first and last
    vertices lie in the subcomplex must itself lie in it.  Paths force the
    joints of any probing necklace into the subcomplex, and (b) then absorbs
    its beads, so (a)+(b) is equivalent to the lifting property.
    """
    validate_subcomplex(cx, sub)
    sub_verts = {key.gen for key in sub if key.dim == 0}
    rel = preceq(cx)

    def reaches_from_sub(v: int) -> Optional[int]:
        for s in sorted(sub_verts):
            if rel.leq(s, v):
                return s
        return None

    def reaches_into_sub(v: int) -> Optional[int]:
        for t in sorted(sub_verts):
            if rel.leq(v, t):
                return t
        return None

    for u, v, key in nondegenerate_edges(cx):
        s = reaches_from_sub(u)
        t = reaches_into_sub(v)
        if s is not None and t is not None:
            if key not in sub or u not in sub_verts or v not in sub_verts:
                return SimpleVerdict(False, "edge on a path between subcomplex vertices",
                                     witness=key, through=(s, t))
    counts = cx.gen_counts
    for d in range(1, len(counts)):
        for g in range(counts[d]):
            c = cx.vertex_chain_of_gen(d, g)
            if c[0] in sub_verts and c[-1] in sub_verts and SimplexKey(d, g) not in sub:
                return SimpleVerdict(False, "simplex with endpoints in the subcomplex",
                                     witness=SimplexKey(d, g))
    return SimpleVerdict(True)


# -- standard fixtures -------------------------------------------------------


def standard(name: str, *params: int) -> Complex:
    """Named fixtures: simplex, boundary, horn, loop, two_triangles."""
    if name == "simplex":
        (n,) = params
        if n < 0:
            raise ContractViolation("simplex dimension must be nonnegative")
        return from_maximal_chains([list(range(n + 1))])
    if name == "boundary":
        (n,) = params
        if n < 1:
            raise ContractViolation("boundary needs dimension >= 1")
        full = list(range(n + 1))
        return from_maximal_chains([full[:i] + full[i + 1:] for i in range(n + 1)])
    if name == "horn":
        n, k = params
        if n < 1 or not 0 <= k <= n:
            raise ContractViolation(f"invalid horn ({n},{k})")
        if n == 1:
            return from_maximal_chains([[v] for v in range(2)])
        full = list(range(n + 1))
        return from_maximal_chains(
            [full[:i] + full[i + 1:] for i in range(n + 1) if i != k])
    if name == "loop":
        v = SimplexKey(0, 0)
        return GeneratedComplex(1, [[(v, v)]])
    if name == "two_triangles":
        return from_maximal_chains([[0, 1, 2], [1, 2, 3]])
    raise ContractViolation(f"unknown fixture {name!r}")


# -- products ---------------------------------------------------------------


class ProductComplex(OrderedComplex):
    """Categorical product of two ordered complexes with projection data."""

    def __init__(self, chains_by_dim, vertex_count, pairs, left_map, right_map):
        super().__init__(chains_by_dim, vertex_count)
        self.vertex_pairs = pairs
        self.left_map = left_map
        self.right_map = right_map


def product(x: OrderedComplex, y: OrderedComplex) -> ProductComplex:
    """Product simplicial set: chains whose two projections are simplices.

    Vertices are pairs in lexicographic order; a strictly increasing chain of
    pairs is a simplex exactly when each coordinate projection, with
    consecutive duplicates removed, is a stored chain of the factor.
    """
    if not isinstance(x, OrderedComplex) or not isinstance(y, OrderedComplex):
        raise ContractViolation("product requires ordered complexes")
    pairs = [(u, v) for u in range(x.vertex_count) for v in range(y.vertex_count)]
    pid = {p: i for i, p in enumerate(pairs)}
    found: list[tuple[int, ...]] = []

    def extend(chain: tuple[int, ...], u: int, v: int,
               cx: tuple[int, ...], cy: tuple[int, ...]):
        found.append(chain)
        for u2 in sorted([u] + x.extensions(cx)):
            for v2 in sorted([v] + y.extensions(cy)):
                if (u2, v2) == (u, v):
                    continue
                extend(chain + (pid[(u2, v2)],), u2, v2,
                       cx if u2 == u else cx + (u2,),
                       cy if v2 == v else cy + (v2,))

    for (u, v) in pairs:
        extend((pid[(u, v)],), u, v, (u,), (v,))
    top = max(len(c) for c in found)
    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(top)]
    for c in found:
        by_dim[len(c) - 1].append(c)
    return ProductComplex(by_dim, len(pairs), tuple(pairs),
                          tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def validate_simplicial_map(src: OrderedComplex, dst: OrderedComplex,
                            vmap: Sequence[int]) -> None:
    """Check a vertex map carries every stored chain to a simplex of dst."""
    if len(vmap) != src.vertex_count:
        raise ContractViolation("vertex map has wrong length")
    for d in range(src.dim + 1):
        for c in src.chains(d):
            image = tuple(vmap[v] for v in c)
            dedup = tuple(v for i, v in enumerate(image) if i == 0 or v != image[i - 1])
            if len(set(dedup)) != len(dedup) or not dst.has_chain(dedup):
                raise ContractViolation(f"chain {c} is not carried to a simplex")


# -- simplicial maps between finite complexes --------------------------------


def enumerate_simplicial_maps(src: Complex, dst: Complex) -> list[dict[SimplexKey, SimplexKey]]:
    """All simplicial maps src -> dst, as assignments on nondegenerate generators.

    Assignments are built dimension by dimension; a candidate image must have
    faces matching the already-assigned images of the generator's faces.
    """
    counts = src.gen_counts
    gens = [(d, g) for d in range(len(counts)) for g in range(counts[d])]
    levels: dict[int, list[SimplexKey]] = {}
    for d in range(len(counts)):
        levels[d] = list(simplices_at_level(dst, d))
    results: list[dict[SimplexKey, SimplexKey]] = []

    def image_of(assignment: dict, key: SimplexKey) -> SimplexKey:
        img = assignment[key.core]
        for i in reversed(key.word):
            img = degeneracy(dst, img, i)
        return img

    def assign(pos: int, assignment: dict):
        if pos == len(gens):
            results.append(dict(assignment))
            return
        d, g = gens[pos]
        key = SimplexKey(d, g)
        if d == 0:
            wanted = None
        else:
            wanted = [image_of(assignment, face(src, key, i)) for i in range(d + 1)]
        for z in levels[d]:
            if wanted is not None:
                if any(face(dst, z, i) != wanted[i] for i in range(d + 1)):
                    continue
            assignment[key] = z
            assign(pos + 1, assignment)
            del assignment[key]

    assign(0, {})
    return results
