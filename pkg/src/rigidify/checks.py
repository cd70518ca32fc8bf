"""The verification suite: structural theorems checked at desk scale.

Each check recomputes its expectation through an independent oracle (subset
DP, literal comonad iteration, union-find quotients, exhaustive searches)
and compares against the library's construction.  The CLI `verify`
subcommand and the acceptance tests both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Iterable

from .category import categorify
from .complexes import (
    OrderedComplex,
    from_maximal_chains,
    is_ordered,
    is_simple_inclusion,
    level_count,
    preceq,
    product,
    standard,
    subcomplex_keys,
)
from .comonad import chain_count, comonad_level
from .homology import homology, is_homology_point, pi0
from .horns import inner_horn_report
from .mapping import (
    canonicalize,
    compose_simplices,
    flankify,
    induced_map,
    mapping_space,
    necklace_mapping_space,
    simplex_degeneracy,
    simplex_face,
)
from .necklaces import Necklace, POINT
from .nerve import coherent_nerve_truncated, nerve_truncation
from .oracles import (
    all_necklaces,
    count_strict_chains,
    count_subset_chains_brute,
    mapping_space_level_counts,
    quotient_class_counts,
    random_flanked_triple,
    random_triple,
    zigzag_members,
)

SEED = 20260809


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str
    seconds: float


class CheckFailure(AssertionError):
    pass


def _expect(condition: bool, message: str):
    if not condition:
        raise CheckFailure(message)


def check_two_triangles() -> str:
    """Mapping space of the glued-triangles fixture: three vertices, two
    edges sharing their final vertex."""
    source = standard("two_triangles")
    space = mapping_space(source, 0, 3)
    _expect(space.gen_counts == (3, 2),
            f"expected f-vector (3, 2), got {space.gen_counts}")
    vertex_images = sorted(m.nmap.vertex_images for m in space.simplices[0])
    _expect(vertex_images == [(0, 1, 2, 3), (0, 1, 3), (0, 2, 3)],
            f"unexpected vertex triples {vertex_images}")
    finals = {simplex_face(m, 0) for m in space.simplices[1]}
    _expect(len(space.simplices[1]) == 2 and len(finals) == 1,
            "the two edges must share their final vertex")
    shared = next(iter(finals))
    _expect(shared.nmap.necklace == Necklace((1, 1, 1))
            and shared.nmap.vertex_images == (0, 1, 2, 3),
            f"shared vertex is not the long spine: {shared}")
    initials = {simplex_face(m, 1).nmap.vertex_images for m in space.simplices[1]}
    _expect(initials == {(0, 1, 3), (0, 2, 3)},
            f"unexpected edge sources {initials}")
    return "f-vector (3, 2); edges end at the spine on vertices (0,1,2,3)"


def check_cube_theorem() -> str:
    """Necklace mapping spaces are cubes: simplex counts match subset-chain
    DP counts on the free vertices, and the homology is that of a point."""
    checked = 0
    for necklace in all_necklaces(6):
        ordered = from_maximal_chains(
            [list(range(p, q + 1)) for p, q in necklace.bead_spans()]
            if necklace != POINT else [[0]])
        for a in range(necklace.vertex_count):
            for b in range(a, necklace.vertex_count):
                nerve = necklace_mapping_space(necklace, a, b)
                vmask, jmask = necklace.interval_masks(a, b)
                free = bin(vmask & ~jmask).count("1")
                expected = [count_strict_chains(free, k) for k in range(free + 1)]
                while expected and expected[-1] == 0:
                    expected.pop()
                _expect(list(nerve.gen_counts) == expected,
                        f"{necklace.beads} ({a},{b}): nerve counts {nerve.gen_counts} "
                        f"!= chain DP {expected}")
                space = mapping_space(ordered, a, b)
                _expect(space.gen_counts == nerve.gen_counts,
                        f"{necklace.beads} ({a},{b}): enumerated space "
                        f"{space.gen_counts} != nerve {nerve.gen_counts}")
                _expect(is_homology_point(nerve),
                        f"{necklace.beads} ({a},{b}): not a homology point")
                checked += 1
        empty = necklace_mapping_space(necklace, necklace.omega, 0) \
            if necklace.omega else None
        if empty is not None:
            _expect(empty.vertex_count == 0, "reversed endpoints must give emptiness")
    return f"{checked} necklace mapping spaces match the subset-chain DP"


def check_boundary_and_horns() -> str:
    """Boundary and horn mapping spaces: equal to the full simplex away from
    the long diagonal; sphere homology and homology points on the diagonal."""
    sphere_bettis = {3: (1, 1), 4: (1, 0, 1)}

    def payload(space):
        return [sorted((m.nmap.necklace.beads, m.nmap.vertex_images, m.flag)
                       for m in level) for level in space.simplices]

    for n in range(2, 5):
        simplex = standard("simplex", n)
        boundary = standard("boundary", n)
        for i in range(n + 1):
            for j in range(n + 1):
                if (i, j) == (0, n):
                    continue
                full = mapping_space(simplex, i, j)
                part = mapping_space(boundary, i, j)
                _expect(payload(full) == payload(part),
                        f"boundary({n}) mapping space differs at ({i},{j})")
        diagonal = mapping_space(boundary, 0, n)
        if n == 2:
            _expect(diagonal.gen_counts == (2,),
                    f"boundary(2) diagonal should be two points, got {diagonal.gen_counts}")
        else:
            got = homology(diagonal).betti_vector
            _expect(got == sphere_bettis[n],
                    f"boundary({n}) diagonal homology {got} != {sphere_bettis[n]}")
            _expect(all(not t for _, t in homology(diagonal).groups),
                    f"boundary({n}) diagonal has torsion")
        for k in range(1, n):
            horn = standard("horn", n, k)
            _expect(is_homology_point(mapping_space(horn, 0, n)),
                    f"horn({n},{k}) diagonal is not a homology point")
    return "boundaries match the simplex off-diagonal; diagonals give sphere shells"


def check_comonad_oracle() -> str:
    """Comonad hom-set sizes equal subset-chain counts at every level."""
    rows = 0
    for n in range(4):
        for level in range(3):
            for i in range(n + 1):
                for j in range(i, n + 1):
                    got = comonad_level(n, level, i, j).count
                    expected = 1 if i == j else chain_count(j - i - 1, level)
                    _expect(got == expected,
                            f"comonad({n},{level},{i},{j}) = {got} != {expected}")
                    rows += 1
    for m in range(3):
        for level in range(3):
            _expect(chain_count(m, level) == count_subset_chains_brute(m, level),
                    f"chain_count({m},{level}) disagrees with brute enumeration")
    return f"{rows} comonad hom-set sizes match (level+2)^(j-i-1)"


def check_canonical_uniqueness() -> str:
    """Canonical forms are idempotent and constant along random zig-zags of
    flagged-necklace surjections."""
    rng = random.Random(SEED)
    fixtures = [(standard("two_triangles"), 0, 3), (standard("simplex", 4), 0, 4)]
    triples = 0
    zigzags = 0
    for source, a, b in fixtures:
        for _ in range(400):
            t = random_triple(rng, source, a, b, max_vertices=6,
                              length=rng.randint(0, 3))
            if t is None:
                continue
            canonical = canonicalize(t)
            triples += 1
            _expect(canonicalize(canonical.as_triple()) == canonical,
                    f"canonicalize not idempotent on {t}")
            _expect(canonicalize(flankify(t)) == canonical,
                    f"flankification changed the class of {t}")
        for _ in range(150):
            start = random_flanked_triple(rng, source, a, b, max_vertices=5,
                                          length=rng.randint(0, 3))
            if start is None:
                continue
            zigzags += 1
            expected = canonicalize(start)
            for member in zigzag_members(rng, start, rng.randint(1, 4)):
                triples += 1
                _expect(canonicalize(member) == expected,
                        f"zig-zag member {member} canonicalizes differently")
    _expect(triples >= 1000, f"only {triples} triples exercised")
    return f"{triples} triples over {zigzags} zig-zags share canonical forms"


def check_quotient_oracle() -> str:
    """Union-find over the generated relation on bounded triples reproduces
    the enumerated mapping spaces levelwise."""
    fixtures = [
        ("two_triangles", standard("two_triangles")),
        ("simplex3", standard("simplex", 3)),
        ("square", product(standard("simplex", 1), standard("simplex", 1))),
    ]
    compared = 0
    for name, source in fixtures:
        bound = source.vertex_count
        for a in range(source.vertex_count):
            for b in range(source.vertex_count):
                classes = quotient_class_counts(source, a, b, bound, 2)
                space = mapping_space(source, a, b)
                levels = mapping_space_level_counts(space, 2)
                _expect(classes == levels,
                        f"{name} ({a},{b}): quotient classes {classes} != "
                        f"mapping space levels {levels}")
                compared += 1
    return f"{compared} endpoint pairs agree with the union-find quotient"


def check_category_laws() -> str:
    """Strict associativity and unitality, and compatibility of composition
    with faces and degeneracies, on whole categories."""
    fixtures = [standard("two_triangles"), standard("simplex", 4)]
    composites = 0
    for source in fixtures:
        cat = categorify(source)  # construction already verifies the laws
        for (a, b), space in cat.spaces.items():
            for c in cat.objects:
                other = cat.space(b, c)
                for n in range(min(len(space.simplices), len(other.simplices), 3)):
                    for g in other.simplices[n]:
                        for f in space.simplices[n]:
                            gf = compose_simplices(g, f)
                            composites += 1
                            if n:
                                for i in range(n + 1):
                                    _expect(simplex_face(gf, i) ==
                                            compose_simplices(simplex_face(g, i),
                                                              simplex_face(f, i)),
                                            f"face {i} does not commute at {gf}")
                            for i in range(n + 1):
                                _expect(simplex_degeneracy(gf, i) ==
                                        compose_simplices(simplex_degeneracy(g, i),
                                                          simplex_degeneracy(f, i)),
                                        f"degeneracy {i} does not commute at {gf}")
    return f"laws verified; {composites} composites commute with all operators"


def check_product_evidence() -> str:
    """Mapping spaces of products are homology points and the comparison map
    to the factor mapping spaces is a bijection on path components."""
    edge = standard("simplex", 1)
    triangle = standard("simplex", 2)
    square = product(edge, edge)
    fixtures = [
        ("square", square, edge, edge),
        ("prism", product(triangle, edge), triangle, edge),
        ("cube", product(square, edge), square, edge),
    ]
    checked = 0
    for name, prod, left, right in fixtures:
        rel = preceq(prod)
        for a in range(prod.vertex_count):
            for b in range(prod.vertex_count):
                if not rel.leq(a, b):
                    continue
                space = mapping_space(prod, a, b)
                _expect(is_homology_point(space),
                        f"{name} ({a},{b}) is not a homology point")
                left_space = mapping_space(left, prod.left_map[a], prod.left_map[b])
                right_space = mapping_space(right, prod.right_map[a], prod.right_map[b])
                comp = _component_index(space)
                left_comp = _component_index(left_space)
                right_comp = _component_index(right_space)
                target_of: dict[int, tuple[int, int]] = {}
                for idx, m in enumerate(space.simplices[0]):
                    lm = induced_map(prod, left, prod.left_map, m)
                    rm = induced_map(prod, right, prod.right_map, m)
                    pair = (left_comp[left_space.key_of(lm).gen],
                            right_comp[right_space.key_of(rm).gen])
                    previous = target_of.setdefault(comp[idx], pair)
                    _expect(previous == pair,
                            f"{name} ({a},{b}): comparison not constant on a component")
                pairs = set(iproduct(range(len(pi0(left_space))),
                                     range(len(pi0(right_space)))))
                _expect(len(set(target_of.values())) == len(target_of)
                        and set(target_of.values()) == pairs,
                        f"{name} ({a},{b}): component comparison is not bijective")
                checked += 1
    return f"{checked} product mapping spaces are homology points with bijective pi0"


def _component_index(space) -> dict[int, int]:
    out = {}
    for idx, component in enumerate(pi0(space)):
        for v in component:
            out[v] = idx
    return out


def check_simple_inclusions() -> str:
    """Of the five edges of the square, all but the diagonal include simply;
    the circle fixture is not ordered."""
    square = product(standard("simplex", 1), standard("simplex", 1))
    simple = []
    for chain in square.chains(1):
        sub = subcomplex_keys(square, [(chain[0],), (chain[1],), chain])
        if is_simple_inclusion(square, sub):
            simple.append(chain)
    diagonal = (0, 3)
    _expect(len(square.chains(1)) == 5 and len(simple) == 4
            and diagonal not in simple,
            f"expected 4 simple edges without the diagonal, got {simple}")
    loop = standard("loop")
    verdict = is_ordered(loop)
    _expect(not verdict.ok and verdict.pair is not None,
            "circle fixture must fail orderedness with a witness pair")
    return "4 of 5 square edges are simple; circle fails orderedness"


def check_coherent_nerve() -> str:
    """Truncated coherent nerve of the rigidified edge matches the classical
    nerve of the arrow category, with no unfillable inner horns."""
    cat = categorify(standard("simplex", 1))
    levels = coherent_nerve_truncated(cat, 3)
    counts = [len(level.functors) for level in levels]
    _expect(counts == [2, 3, 4, 5],
            f"nerve level counts {counts} != [2, 3, 4, 5]")
    report = inner_horn_report(nerve_truncation(cat, 3), 3)
    _expect(report.ok, f"unfillable inner horns: {report.failures}")
    return f"levels {counts} match the arrow-category nerve; {report.checked} horns fill"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("two-triangles", check_two_triangles),
    ("cube", check_cube_theorem),
    ("boundary", check_boundary_and_horns),
    ("comonad", check_comonad_oracle),
    ("canonical", check_canonical_uniqueness),
    ("quotient", check_quotient_oracle),
    ("laws", check_category_laws),
    ("product", check_product_evidence),
    ("simple", check_simple_inclusions),
    ("nerve", check_coherent_nerve),
]


def run_checks(only: Iterable[str] | None = None) -> list[CheckResult]:
    wanted = set(only) if only else None
    if wanted:
        unknown = wanted - {name for name, _ in CHECKS}
        if unknown:
            raise KeyError(f"unknown suites: {sorted(unknown)}")
    results = []
    for name, fn in CHECKS:
        if wanted and name not in wanted:
            continue
        start = time.perf_counter()
        try:
            details = fn()
            passed = True
        except CheckFailure as failure:
            details = str(failure)
            passed = False
        results.append(CheckResult(name, passed, details, time.perf_counter() - start))
    return results
