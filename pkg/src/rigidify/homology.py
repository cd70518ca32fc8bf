"""Exact integral homology of finite complexes via Smith normal form.

Boundary matrices are taken over nondegenerate generators (normalized
chains): a degenerate face contributes nothing.  All arithmetic is exact on
Python integers; the matrices involved are tiny, so no pivoting strategy
beyond smallest-entry selection is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Complex, face


def boundary_matrices(cx: Complex) -> list[list[list[int]]]:
    """Matrix of each boundary map; entry [d][row][col] pairs a (d-1)-generator
    with a d-generator.  Verifies that consecutive boundaries compose to zero."""
    counts = cx.gen_counts
    mats = []
    for d in range(1, len(counts)):
        mat = [[0] * counts[d] for _ in range(counts[d - 1])]
        for g in range(counts[d]):
            key = cx.gen_key(d, g)
            for i in range(d + 1):
                f = face(cx, key, i)
                if not f.is_degenerate:
                    mat[f.gen][g] += (-1) ** i
        mats.append(mat)
    for lower, upper in zip(mats, mats[1:]):
        prod_rows = len(lower)
        for r in range(prod_rows):
            for c in range(len(upper[0])):
                if sum(lower[r][k] * upper[k][c] for k in range(len(upper))) != 0:
                    raise AssertionError("boundary maps do not compose to zero")
    return mats


def smith_invariant_factors(matrix: list[list[int]]) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix."""
    a = [row[:] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors: list[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                for j in range(t, cols):
                    a[i][j] -= q * a[t][j]
                dirty = dirty or bool(a[i][t])
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                for i in range(t, rows):
                    a[i][j] -= q * a[i][t]
                dirty = dirty or bool(a[t][j])
        if dirty:
            continue
        fixed = True
        for i in range(t + 1, rows):
            bad = next((j for j in range(t + 1, cols) if a[i][j] % a[t][t]), None)
            if bad is not None:
                for j in range(t, cols):
                    a[t][j] += a[i][j]
                fixed = False
                break
        if not fixed:
            continue
        factors.append(abs(a[t][t]))
        t += 1
    return factors


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers with torsion coefficients, one entry per dimension."""

    groups: tuple[tuple[int, tuple[int, ...]], ...]

    def betti(self, d: int) -> int:
        return self.groups[d][0] if d < len(self.groups) else 0

    def torsion(self, d: int) -> tuple[int, ...]:
        return self.groups[d][1] if d < len(self.groups) else ()

    @property
    def betti_vector(self) -> tuple[int, ...]:
        return tuple(b for b, _ in self.groups)


def homology(cx: Complex, dmax: int | None = None) -> HomologyResult:
    """Integral homology of the normalized chains up to dmax."""
    counts = cx.gen_counts
    if not counts:
        return HomologyResult(())
    top = cx.dim if dmax is None else min(dmax, cx.dim)
    mats = boundary_matrices(cx)
    factors = [smith_invariant_factors(m) for m in mats]
    ranks = [len([f for f in fs if f]) for fs in factors]
    groups = []
    for d in range(top + 1):
        rank_in = ranks[d - 1] if d >= 1 else 0
        rank_out = ranks[d] if d < len(ranks) else 0
        betti = counts[d] - rank_in - rank_out
        torsion = tuple(f for f in (factors[d] if d < len(factors) else []) if f > 1)
        groups.append((betti, torsion))
    return HomologyResult(tuple(groups))


def pi0(cx: Complex) -> list[list[int]]:
    """Path components under the undirected edge relation, sorted by minimum."""
    parent = list(range(cx.vertex_count))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    counts = cx.gen_counts
    if len(counts) > 1:
        for g in range(counts[1]):
            u, v = cx.vertex_chain_of_gen(1, g)
            parent[find(u)] = find(v)
    comps: dict[int, list[int]] = {}
    for v in range(cx.vertex_count):
        comps.setdefault(find(v), []).append(v)
    return sorted(comps.values(), key=lambda c: c[0])


def is_homology_point(cx: Complex) -> bool:
    """Connected with vanishing reduced integral homology up to its dimension.

    A necessary condition for contractibility, but not sufficient in general;
    reports that use it as a contractibility proxy say so.
    """
    if cx.vertex_count == 0 or len(pi0(cx)) != 1:
        return False
    result = homology(cx)
    if result.betti(0) != 1 or result.torsion(0):
        return False
    return all(result.betti(d) == 0 and not result.torsion(d)
               for d in range(1, cx.dim + 1))
