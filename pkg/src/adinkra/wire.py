"""JSON wire representations shared by the CLI and the HTTP service.

Vertices travel as integer bitmasks 0 .. 2^n - 1 with bit j-1 holding
coordinate x_j; faces as their color pair plus basepoint.
"""

from __future__ import annotations

from .heights import Height, fully_extended, valise
from .jacobian import GroupElt
from .morse import Divisor


def height_json(h: Height) -> dict:
    return {"n": h.n, "values": list(h.values)}


def height_from_json(data: dict) -> Height:
    return Height(int(data["n"]), tuple(int(x) for x in data["values"]))


def group_elt_json(k: int, g: GroupElt) -> dict:
    return {"k": k, "a": g.a, "b4": g.b4, "c2": g.c2}


def image_json(elts) -> dict:
    return {"curves": [group_elt_json(k + 1, g) for k, g in enumerate(elts)]}


def divisor_json(d: Divisor) -> dict:
    points = [
        {"type": "vertex", "id": v, "kappa": kap}
        for v, kap in enumerate(d.vertex_kappa)
        if kap != 0
    ]
    points.extend(
        {
            "type": "face",
            "colors": list(f.colors),
            "basepoint": f.basepoint,
            "kappa": 1,
        }
        for f in d.bowties
    )
    return {"points": points, "degree": d.degree}


def initial_height(n: int, init) -> Height:
    """Resolve the initial-height field of a session request: a named
    starting point or an explicit value list."""
    if init == "fully_extended":
        return fully_extended(n)
    if init == "valise":
        return valise(n)
    if isinstance(init, dict) and "values" in init:
        return Height(n, tuple(int(x) for x in init["values"]))
    raise ValueError(f"unknown initial height {init!r}")
