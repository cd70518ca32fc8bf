"""Inner-horn filling checks on truncated simplicial sets.

The checker only needs levelwise element lists plus face and degeneracy
callables, so it runs both on finite complexes and on coherent-nerve
truncations.  A horn map is an assignment of target simplices to the horn's
nondegenerate simplices commuting with faces; a filler is a top-level simplex
restricting to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .complexes import Complex, ContractViolation, face, degeneracy, simplices_at_level, standard


class TruncatedSimplicialSet:
    """Levels 0..nmax of a simplicial set with operator callables."""

    def __init__(self, levels: Sequence[Sequence[Any]],
                 face_fn: Callable[[int, Any, int], Any],
                 degeneracy_fn: Callable[[int, Any, int], Any]):
        self.levels = tuple(tuple(level) for level in levels)
        self.face = face_fn
        self.degeneracy = degeneracy_fn

    @property
    def nmax(self) -> int:
        return len(self.levels) - 1


def truncate_complex(cx: Complex, nmax: int) -> TruncatedSimplicialSet:
    levels = [sorted(simplices_at_level(cx, n)) for n in range(nmax + 1)]
    return TruncatedSimplicialSet(
        levels,
        lambda n, key, i: face(cx, key, i),
        lambda n, key, i: degeneracy(cx, key, i),
    )


@dataclass(frozen=True)
class HornFailure:
    n: int
    k: int
    assignment: tuple


@dataclass(frozen=True)
class HornReport:
    checked: int
    failures: tuple[HornFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def inner_horn_report(tss: TruncatedSimplicialSet, dmax: int) -> HornReport:
    """Search for unfillable inner horns in dimensions 2..dmax."""
    if dmax > 4:
        raise ContractViolation("horn check bounded at dimension 4")
    dmax = min(dmax, tss.nmax)
    checked = 0
    failures = []
    for n in range(2, dmax + 1):
        for k in range(1, n):
            horn = standard("horn", n, k)
            gens = [(d, g) for d in range(horn.dim + 1)
                    for g in range(horn.gen_counts[d])]
            chains = {(d, g): horn.vertex_chain_of_gen(d, g) for d, g in gens}
            full = tuple(range(n + 1))
            assignments: list[dict] = []

            def assign(pos: int, current: dict):
                if pos == len(gens):
                    assignments.append(dict(current))
                    return
                d, g = gens[pos]
                chain = chains[(d, g)]
                for z in tss.levels[d]:
                    if d and any(tss.face(d, z, i) != current[chain[:i] + chain[i + 1:]]
                                 for i in range(d + 1)):
                        continue
                    current[chain] = z
                    assign(pos + 1, current)
                    del current[chain]

            assign(0, {})
            for assignment in assignments:
                checked += 1
                wanted = {i: assignment[full[:i] + full[i + 1:]]
                          for i in range(n + 1) if i != k}
                if not any(all(tss.face(n, z, i) == wanted[i] for i in wanted)
                           for z in tss.levels[n]):
                    failures.append(HornFailure(
                        n, k, tuple(sorted((c, repr(v)) for c, v in assignment.items()
                                           if len(c) == n))))
    return HornReport(checked, tuple(failures))
