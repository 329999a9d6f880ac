"""JSON interchange for presentations, polygons, and certificates.

Canonical output uses sorted keys and no insignificant whitespace, so
byte-level comparisons of round-tripped values are meaningful.
"""

from __future__ import annotations

import json

from .arc import ArcPresentation, validate
from .certify import BoundCheck, ConstructionCertificate, InvariantMatch, TorusCCheck
from .lattice import FIXED_COORDS, LatticePolygon, LatticeStick


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def presentation_from_obj(obj) -> ArcPresentation:
    if not isinstance(obj, dict) or "arcs" not in obj:
        raise ValueError('expected an object with an "arcs" key')
    return validate(obj["arcs"])


def polygon_from_obj(obj) -> LatticePolygon:
    if not isinstance(obj, dict) or "sticks" not in obj:
        raise ValueError('expected an object with a "sticks" key')
    sticks = []
    for k, raw in enumerate(obj["sticks"]):
        try:
            axis = raw["axis"]
            lo, hi = raw["range"]
            n1, n2 = FIXED_COORDS[axis]
            sticks.append(LatticeStick(axis, int(lo), int(hi), int(raw["fixed"][n1]), int(raw["fixed"][n2])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"stick {k} is malformed: {exc}") from exc
    return LatticePolygon(tuple(sticks))


def certificate_from_obj(obj) -> ConstructionCertificate:
    checks = tuple(
        BoundCheck(b["name"], int(b["lhs"]), int(b["rhs"]), bool(b["holds"]))
        for b in obj["bound_checks"]
    )
    im = obj["invariant_match"]
    match = InvariantMatch(
        status=im["status"],
        input_alexander=tuple(im["input_alexander"]) if im["input_alexander"] else None,
        output_alexander=tuple(im["output_alexander"]) if im["output_alexander"] else None,
    )
    tcc = obj.get("torus_c_check")
    return ConstructionCertificate(
        a=int(obj["a"]),
        branch=obj["branch"],
        stick_count=int(obj["stick_count"]),
        torus_params=tuple(obj["torus_params"]) if obj.get("torus_params") else None,
        crossing_number=obj.get("crossing_number"),
        bound_checks=checks,
        invariant_match=match,
        torus_c_check=TorusCCheck(tcc["expected"], tcc["supplied"], tcc["holds"]) if tcc else None,
    )


def detect_input(obj):
    """Parse a JSON object as a presentation or a polygon, whichever fits."""
    if isinstance(obj, dict) and "arcs" in obj:
        return presentation_from_obj(obj)
    if isinstance(obj, dict) and "sticks" in obj:
        return polygon_from_obj(obj)
    raise ValueError('expected an object with an "arcs" or "sticks" key')
