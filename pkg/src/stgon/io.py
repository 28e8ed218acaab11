"""JSON polygon and charge files.

Polygon file: ``type``, ``vertices`` (list of ``[re, im]``), optional
``punctures``, ``tolerance`` and ``far_end_choice``.  Numbers are written
with 17 significant digits, so reading a file back reproduces every float.
"""

from __future__ import annotations

import json

from .charge import CentralCharge, read_charge, write_charge
from .dynkin import DynkinType
from .hgon import DEFAULT_TOL, HGon


class FileFormatError(ValueError):
    """The document is not a well-formed polygon or charge file."""


def _pair(z: complex) -> list[float]:
    return [float(f"{z.real:.17g}"), float(f"{z.imag:.17g}")]


def _dump(doc: dict) -> str:
    # repr of a Python float is the shortest exact round-trip form (at most 17 digits)
    return json.dumps(doc, indent=1) + "\n"


def polygon_to_dict(g: HGon) -> dict:
    doc = {"type": str(g.type), "vertices": [_pair(complex(v)) for v in g.vertices]}
    if g.punctures is not None:
        doc["punctures"] = [_pair(p) for p in g.punctures]
    doc["tolerance"] = g.tol
    if g.far_end_choice is not None:
        doc["far_end_choice"] = g.far_end_choice
    return doc


def polygon_from_dict(doc: dict) -> HGon:
    try:
        t = DynkinType.parse(doc["type"])
        verts = [complex(float(a), float(b)) for a, b in doc["vertices"]]
        punct = doc.get("punctures")
        if punct is not None:
            punct = [complex(float(a), float(b)) for a, b in punct]
            if len(punct) == 1:
                punct = punct * 2
        tol = float(doc.get("tolerance", DEFAULT_TOL))
        choice = doc.get("far_end_choice")
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed polygon document: {exc}") from exc
    return HGon(t, verts, None if punct is None else tuple(punct), tol,
                None if choice is None else int(choice))


def dumps_polygon(g: HGon) -> str:
    return _dump(polygon_to_dict(g))


def loads_polygon(text: str) -> HGon:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FileFormatError("polygon document must be a JSON object")
    return polygon_from_dict(doc)


def write_polygon(path, g: HGon) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_polygon(g))


def read_polygon(path) -> HGon:
    with open(path, encoding="utf-8") as fh:
        return loads_polygon(fh.read())


def dumps_charge(Z: CentralCharge) -> str:
    doc = write_charge(Z)
    doc["values"] = [_pair(complex(a, b)) for a, b in doc["values"]]
    return _dump(doc)


def loads_charge(text: str) -> CentralCharge:
    try:
        return read_charge(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed charge document: {exc}") from exc
