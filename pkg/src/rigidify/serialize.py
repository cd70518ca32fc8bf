"""JSON schemas for complexes and reports.

Field order is fixed so that identical inputs produce byte-identical report
files.  Complexes travel either as ``{"ordered": {"maximal_chains": ...}}``
or as ``{"generated": {"generators": ..., "faces": ...}}`` where a face
target is encoded as ``[generator_name, degeneracy_word]``.
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import (
    Complex,
    ContractViolation,
    GeneratedComplex,
    OrderedComplex,
    SimplexKey,
    f_vector,
    from_maximal_chains,
)
from .homology import HomologyResult
from .mapping import MappingComplex, MappingSimplex
from .necklaces import members


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _gen_name(d: int, idx: int) -> str:
    return f"g{d}_{idx}"


def complex_to_json(cx: Complex) -> dict:
    if isinstance(cx, OrderedComplex):
        return {"ordered": {"maximal_chains": [list(c) for c in cx.maximal_chains()]}}
    counts = cx.gen_counts
    generators = {str(d): [_gen_name(d, i) for i in range(counts[d])]
                  for d in range(len(counts))}
    faces = {}
    for d in range(1, len(counts)):
        for g in range(counts[d]):
            entries = []
            for i in range(d + 1):
                key = cx.gen_face(d, g, i)
                entries.append(["d", i, [_gen_name(key.core_dim, key.gen), list(key.word)]])
            faces[_gen_name(d, g)] = entries
    return {"generated": {"generators": generators, "faces": faces}}


def complex_from_json(data: dict) -> Complex:
    if "ordered" in data:
        return from_maximal_chains(data["ordered"]["maximal_chains"])
    if "generated" not in data:
        raise ContractViolation("complex JSON needs an 'ordered' or 'generated' entry")
    body = data["generated"]
    generators = body["generators"]
    dims = sorted(int(d) for d in generators)
    if dims != list(range(len(dims))):
        raise ContractViolation("generator dimensions must be consecutive from 0")
    name_to_key: dict[str, tuple[int, int]] = {}
    for d in dims:
        for i, name in enumerate(generators[str(d)]):
            if name in name_to_key:
                raise ContractViolation(f"duplicate generator name {name!r}")
            name_to_key[name] = (d, i)
    faces = []
    for d in dims[1:]:
        level = []
        for name in generators[str(d)]:
            entries = body["faces"].get(name)
            if entries is None or len(entries) != d + 1:
                raise ContractViolation(f"generator {name!r} needs {d + 1} faces")
            row: list[SimplexKey | None] = [None] * (d + 1)
            for tag, i, (target, word) in entries:
                if tag != "d" or not 0 <= i <= d or row[i] is not None:
                    raise ContractViolation(f"bad face entry for {name!r}")
                td, tg = name_to_key[target]
                row[i] = SimplexKey(td + len(word), tg, tuple(word))
            level.append(tuple(row))
        faces.append(level)
    return GeneratedComplex(len(generators.get("0", [])), faces)


def simplex_to_json(space: MappingComplex, m: MappingSimplex) -> dict:
    images = m.nmap.vertex_images
    out = {
        "beads": list(m.nmap.necklace.beads),
        "vertices": list(images),
        "flag": [[images[v] for v in members(mask)] for mask in m.flag],
    }
    if len(set(images)) != len(images):
        out["flag_positions"] = [list(members(mask)) for mask in m.flag]
    return out


def mapping_space_report(space: MappingComplex, source_json: dict) -> dict:
    report = {
        "command": "mapping-space",
        "complex": source_json,
        "from": space.a,
        "to": space.b,
        "f_vector": list(f_vector(space)),
        "simplices": {
            str(d): [simplex_to_json(space, m) for m in level]
            for d, level in enumerate(space.simplices)
        },
        "faces": {
            str(d): [[[face.gen, list(face.word)]
                      for face in (space.gen_face(d, g, i) for i in range(d + 1))]
                     for g in range(space.gen_counts[d])]
            for d in range(1, len(space.gen_counts))
        },
    }
    if space.truncated_at is not None:
        report["truncated"] = True
        report["necklace_size_bound"] = space.truncated_at
    return report


def homology_report(result: HomologyResult, target: str, source_json: dict) -> dict:
    return {
        "command": "homology",
        "complex": source_json,
        "target": target,
        "groups": [{"dim": d, "betti": betti, "torsion": list(torsion)}
                   for d, (betti, torsion) in enumerate(result.groups)],
    }


def categorify_report(presentation) -> dict:
    spaces = {}
    for (a, b), space in sorted(presentation.spaces.items()):
        if space.vertex_count:
            spaces[f"{a},{b}"] = {"f_vector": list(f_vector(space))}
    composition = {}
    for (a, b, c), table in sorted(presentation.composition.items()):
        rows = []
        for (kg, kf), result in sorted(table.items()):
            rows.append({
                "g": [kg.dim, kg.gen],
                "f": [kf.dim, kf.gen],
                "gf": [result.gen, list(result.word)],
            })
        composition[f"{a},{b},{c}"] = rows
    return {
        "command": "categorify",
        "objects": list(presentation.objects),
        "spaces": spaces,
        "composition": composition,
    }


def oracle_report(rows: list[dict]) -> dict:
    return {
        "command": "oracle",
        "rows": rows,
        "all_equal": all(r["equal"] for r in rows),
    }


def verify_report(results) -> dict:
    return {
        "command": "verify",
        "checks": [{"name": r.name, "passed": r.passed, "details": r.details}
                   for r in results],
        "all_passed": all(r.passed for r in results),
    }


def as_table(report: dict) -> str:
    """Human-readable rendering of a report dict."""
    lines = []
    command = report.get("command", "report")
    lines.append(command)
    lines.append("=" * len(command))
    if command == "mapping-space":
        lines.append(f"endpoints: {report['from']} -> {report['to']}")
        lines.append(f"f-vector:  {report['f_vector']}")
        if report.get("truncated"):
            lines.append(f"truncated at necklace size {report['necklace_size_bound']}")
        for d, simplices in sorted(report["simplices"].items(), key=lambda kv: int(kv[0])):
            lines.append(f"dimension {d}:")
            for s in simplices:
                flag = " < ".join("{" + ",".join(map(str, part)) + "}" for part in s["flag"])
                lines.append(f"  beads {s['beads']} vertices {s['vertices']} flag {flag}")
    elif command == "homology":
        lines.append(f"target: {report['target']}")
        for row in report["groups"]:
            torsion = f" torsion {row['torsion']}" if row["torsion"] else ""
            lines.append(f"  H_{row['dim']} rank {row['betti']}{torsion}")
    elif command == "categorify":
        lines.append(f"objects: {report['objects']}")
        for pair, body in report["spaces"].items():
            lines.append(f"  hom({pair}): f-vector {body['f_vector']}")
        lines.append(f"composition triples: {len(report['composition'])}")
    elif command == "oracle":
        lines.append("  n  level  i  j  comonad  chains  equal")
        for row in report["rows"]:
            lines.append(f"  {row['n']}  {row['level']}      {row['i']}  {row['j']}  "
                         f"{row['comonad']:>7}  {row['chains']:>6}  {row['equal']}")
        lines.append(f"all equal: {report['all_equal']}")
    elif command == "verify":
        for row in report["checks"]:
            status = "PASS" if row["passed"] else "FAIL"
            lines.append(f"  [{status}] {row['name']}: {row['details']}")
        lines.append(f"all passed: {report['all_passed']}")
    else:
        lines.append(json.dumps(report, indent=2))
    return "\n".join(lines) + "\n"
