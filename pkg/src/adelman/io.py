"""JSON forms of matrices, objects and morphisms.

Integers may be JSON numbers or decimal strings (for values beyond the
range other tools handle safely); serialisation writes strings for
integers of magnitude ``2**53`` or more.
"""

from __future__ import annotations

import json
from typing import Any

from .adel import Adel, AdelMorphism, AdelObject
from .errors import AdelmanError, DimensionError
from .linalg import ZMatrix
from .zfree import FreeMorphism, FreeObject, zfree_capability
from .zmod import GroupMorphism, PresentedGroup, make_group_morphism

KINDS = ("matrix", "free_object", "free_morphism", "adel_object", "adel_morphism",
         "group", "group_morphism")

_SAFE = 2 ** 53


class FormatError(AdelmanError, ValueError):
    """A document does not have the expected JSON form."""


def _int(x: Any) -> int:
    if isinstance(x, bool):
        raise FormatError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        t = x.strip()
        if t.lstrip("+-").isdigit():
            return int(t)
    raise FormatError(f"expected an integer or decimal string, got {x!r}")


def _int_out(x: int) -> int | str:
    return x if -_SAFE < x < _SAFE else str(x)


def _field(doc: dict, key: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing field {key!r}")
    return doc[key]


# -- matrices ---------------------------------------------------------------


def matrix_from_json(doc: Any, rows: int | None = None, cols: int | None = None) -> ZMatrix:
    """An array of rows, or ``{"rows": r, "cols": c, "data": [...]}``."""
    if isinstance(doc, dict):
        r, c = _int(_field(doc, "rows")), _int(_field(doc, "cols"))
        if (rows is not None and r != rows) or (cols is not None and c != cols):
            raise FormatError(f"matrix is {r}x{c}, expected {rows}x{cols}")
        rows, cols, doc = r, c, doc.get("data", [])
    if not isinstance(doc, list) or any(not isinstance(row, list) for row in doc):
        raise FormatError("a matrix must be an array of rows")
    data = [[_int(x) for x in row] for row in doc]
    if rows is None:
        rows = len(data)
    if cols is None:
        if not data or not data[0]:
            raise FormatError("explicit \"rows\"/\"cols\" are required for an empty matrix")
        cols = len(data[0])
    try:
        return ZMatrix(data, rows, cols)
    except DimensionError as exc:
        raise FormatError(str(exc)) from exc


def matrix_to_json(M: ZMatrix) -> Any:
    data = [[_int_out(x) for x in row] for row in M.tolist()]
    if M.rows == 0 or M.cols == 0:
        return {"rows": M.rows, "cols": M.cols, "data": data}
    return data


# -- Z-free -----------------------------------------------------------------


def free_object_from_json(doc: Any) -> FreeObject:
    return FreeObject(_int(_field(doc, "rank")))


def free_morphism_from_json(doc: Any) -> FreeMorphism:
    d, c = _int(_field(doc, "dom")), _int(_field(doc, "cod"))
    return FreeMorphism(FreeObject(d), FreeObject(c), matrix_from_json(_field(doc, "mat"), d, c))


def free_morphism_to_json(f: FreeMorphism) -> dict:
    return {"dom": f.dom.rank, "cod": f.cod.rank, "mat": matrix_to_json(f.mat)}


# -- Adel over Z-free -------------------------------------------------------


_ADEL = Adel(zfree_capability())


def adel_object_from_json(doc: Any) -> AdelObject:
    try:
        return _ADEL.make_object(free_morphism_from_json(_field(doc, "x0")),
                                 free_morphism_from_json(_field(doc, "x1")))
    except (DimensionError, TypeError) as exc:
        raise FormatError(str(exc)) from exc


def adel_object_to_json(A: AdelObject) -> dict:
    return {"x0": free_morphism_to_json(A.x0), "x1": free_morphism_to_json(A.x1)}


def adel_morphism_from_json(doc: Any) -> AdelMorphism:
    A = adel_object_from_json(_field(doc, "source"))
    B = adel_object_from_json(_field(doc, "target"))
    comps = [free_morphism_from_json(_field(doc, k)) for k in ("f0", "f1", "f2")]
    return _ADEL.make_morphism(A, B, *comps)


def adel_morphism_to_json(f: AdelMorphism) -> dict:
    return {"source": adel_object_to_json(f.source), "target": adel_object_to_json(f.target),
            "f0": free_morphism_to_json(f.f0), "f1": free_morphism_to_json(f.f1),
            "f2": free_morphism_to_json(f.f2)}


# -- presented groups -------------------------------------------------------


def group_from_json(doc: Any) -> PresentedGroup:
    g = _int(_field(doc, "gens"))
    return PresentedGroup(g, matrix_from_json(doc.get("rels", {"rows": 0, "cols": g}), None, g))


def group_to_json(G: PresentedGroup) -> dict:
    return {"gens": G.gens, "rels": matrix_to_json(G.rels)}


def group_morphism_from_json(doc: Any) -> GroupMorphism:
    A, B = group_from_json(_field(doc, "dom")), group_from_json(_field(doc, "cod"))
    return make_group_morphism(A, B, matrix_from_json(_field(doc, "mat"), A.gens, B.gens))


def group_morphism_to_json(f: GroupMorphism) -> dict:
    return {"dom": group_to_json(f.dom), "cod": group_to_json(f.cod), "mat": matrix_to_json(f.M)}


# -- tagged documents -------------------------------------------------------


_READERS = {
    "matrix": lambda d: matrix_from_json(d if "rows" in d else _field(d, "data")),
    "free_object": free_object_from_json,
    "free_morphism": free_morphism_from_json,
    "adel_object": adel_object_from_json,
    "adel_morphism": adel_morphism_from_json,
    "group": group_from_json,
    "group_morphism": group_morphism_from_json,
}


def to_document(value: Any) -> dict:
    """Tagged JSON document for any supported value."""
    if isinstance(value, ZMatrix):
        body = matrix_to_json(value)
        return {"kind": "matrix", **(body if isinstance(body, dict) else {"data": body})}
    if isinstance(value, FreeObject):
        return {"kind": "free_object", "rank": value.rank}
    if isinstance(value, FreeMorphism):
        return {"kind": "free_morphism", **free_morphism_to_json(value)}
    if isinstance(value, AdelObject):
        return {"kind": "adel_object", **adel_object_to_json(value)}
    if isinstance(value, AdelMorphism):
        return {"kind": "adel_morphism", **adel_morphism_to_json(value)}
    if isinstance(value, PresentedGroup):
        return {"kind": "group", **group_to_json(value)}
    if isinstance(value, GroupMorphism):
        return {"kind": "group_morphism", **group_morphism_to_json(value)}
    raise TypeError(f"no JSON form for {type(value).__name__}")


def from_document(doc: Any) -> Any:
    """Parse a tagged document; a bare array is read as a matrix."""
    if isinstance(doc, list):
        return matrix_from_json(doc)
    kind = _field(doc, "kind")
    if kind not in _READERS:
        raise FormatError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return _READERS[kind](doc)


def loads(text: str) -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def dumps(value: Any, **kw) -> str:
    return json.dumps(to_document(value), **kw)


def load(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)
