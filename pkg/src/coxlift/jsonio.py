"""JSON input and output schemas.

Cone:    {"lattice_rank": d, "rays": [[...d ints...], ...]}
Fan:     {"lattice_rank": d, "rays": [[...]], "max_cones": [[ray indices]]}
Module:  {"type": "finitely_presented", "generators": [{"degree": [...]}],
          "relations": [{"degree": [...], "coeffs": [...]}]}
         {"type": "indicator", "style": "quotient"|"submodule",
          "constraints": [{"ray": i, "op": "<="|">=", "bound": b}],
          "exclude": [[...]]}
         {"type": "filtration", "ambient_dim": r,
          "filtrations": {"<ray index>": [{"level": i, "basis": [[...]]}]}}
Diagram: {"elements": [ids], "leq": [[i, j]], "dims": {id: n},
          "maps": {"i->j": [[...]]}}

Rationals are written as numbers when integral and as "p/q" strings
otherwise.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cones import Cone
from .derived import FinitePosetDiagram
from .fans import FanData
from .lifting import LiftComponent
from .linalg import Mat
from .modules import (
    FiltrationModule,
    FinitelyPresentedModule,
    GradedModule,
    IndicatorConstraint,
    IndicatorModule,
    Relation,
    ray_filtration,
)


def parse_fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, bool):
        raise ValueError("booleans are not numbers here")
    if isinstance(x, int):
        return Fraction(x)
    raise ValueError(f"cannot read {x!r} as an exact rational")


def fraction_out(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def load_cone(obj: dict) -> Cone:
    try:
        return Cone(int(obj["lattice_rank"]), tuple(tuple(r) for r in obj["rays"]))
    except KeyError as exc:
        raise ValueError(f"cone JSON is missing {exc}") from exc


def load_fan(obj: dict) -> FanData:
    try:
        return FanData(int(obj["lattice_rank"]),
                       tuple(tuple(r) for r in obj["rays"]),
                       tuple(tuple(mc) for mc in obj["max_cones"]))
    except KeyError as exc:
        raise ValueError(f"fan JSON is missing {exc}") from exc


def load_module(obj: dict, cone: Cone) -> GradedModule:
    kind = obj.get("type")
    if kind == "finitely_presented":
        gens = tuple(tuple(g["degree"]) for g in obj.get("generators", []))
        rels = tuple(
            Relation(tuple(rel["degree"]),
                     tuple(parse_fraction(x) for x in rel["coeffs"]))
            for rel in obj.get("relations", [])
        )
        return FinitelyPresentedModule(cone, gens, rels)
    if kind == "indicator":
        cons = tuple(
            IndicatorConstraint(int(c["ray"]), str(c["op"]), int(c["bound"]))
            for c in obj.get("constraints", [])
        )
        exclude = tuple(tuple(p) for p in obj.get("exclude", []))
        return IndicatorModule(cone, str(obj["style"]), cons, exclude)
    if kind == "filtration":
        ambient = int(obj["ambient_dim"])
        filts = []
        for ray, jumps in obj["filtrations"].items():
            data = [(int(j["level"]),
                     [[parse_fraction(x) for x in v] for v in j["basis"]])
                    for j in jumps]
            filts.append((int(ray), ray_filtration(data, ambient)))
        return FiltrationModule(cone, ambient, tuple(filts))
    raise ValueError(f"unknown module type {kind!r}")


def load_diagram(obj: dict) -> FinitePosetDiagram:
    try:
        elements = [str(e) for e in obj["elements"]]
        index = {e: i for i, e in enumerate(elements)}
        pairs = [(index[str(i)], index[str(j)]) for i, j in obj["leq"]]
        dims = [int(obj["dims"][e]) for e in elements]
        maps = {}
        for key, rows in obj.get("maps", {}).items():
            a, b = key.split("->")
            maps[(index[a.strip()], index[b.strip()])] = Mat.from_rows(
                [[parse_fraction(x) for x in row] for row in rows],
                ncols=dims[index[a.strip()]],
            )
    except KeyError as exc:
        raise ValueError(f"diagram JSON is missing {exc}") from exc
    return FinitePosetDiagram.from_maps(elements, pairs, dims, maps)


def load_json_file(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def component_to_json(comp: LiftComponent) -> dict:
    return {
        "degree": list(comp.degree),
        "dim": comp.dim,
        "minimal_elements": [list(m) for m in comp.minimal_points],
        "basis": [[fraction_out(x) for x in vec] for vec in comp.basis],
    }


def table_tsv_lines(cone: Cone, components: dict) -> list[str]:
    header = "\t".join([f"c{i + 1}" for i in range(cone.ray_count)] + ["dim"])
    lines = [header]
    for c in sorted(components):
        lines.append("\t".join([str(x) for x in c] + [str(components[c].dim)]))
    return lines
