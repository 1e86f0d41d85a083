"""Workspace files: a single JSON document naming objects, squares, cells,
complexes and chain maps over one base ring.

The format is canonical - fixed key order, entries sorted by name, matrices
as row-major integer arrays - so parse(serialize(w)) is the identity and
serialized documents are byte-stable for golden testing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .baseobj import BaseObject, field_object, z_object
from .basemor import BaseMorphism, base_morphism
from .core2 import TwoCell, TwoMorphism, TwoObject, two_cell, two_morphism, two_object
from .rings import GF, ZZ, BaseRing
from .sequences import ComplexSequence


class WorkspaceError(ValueError):
    pass


@dataclass
class Workspace:
    ring: BaseRing
    objects: dict[str, TwoObject] = field(default_factory=dict)
    morphisms: dict[str, TwoMorphism] = field(default_factory=dict)
    cells: dict[str, TwoCell] = field(default_factory=dict)
    complexes: dict[str, ComplexSequence] = field(default_factory=dict)
    chainmaps: dict = field(default_factory=dict)

    def object(self, name: str) -> TwoObject:
        return self._get(self.objects, name, "object")

    def morphism(self, name: str) -> TwoMorphism:
        return self._get(self.morphisms, name, "morphism")

    def cell(self, name: str) -> TwoCell:
        return self._get(self.cells, name, "cell")

    def complex(self, name: str) -> ComplexSequence:
        return self._get(self.complexes, name, "complex")

    def chainmap(self, name: str):
        return self._get(self.chainmaps, name, "chain map")

    def _get(self, table, name, kind):
        if name not in table:
            raise WorkspaceError(f"unknown {kind} {name!r}")
        return table[name]


def _ring_to_json(ring: BaseRing):
    return {"field": ring.p} if ring.is_field else {"ring": "Z"}


def _ring_from_json(data) -> BaseRing:
    if not isinstance(data, dict):
        raise WorkspaceError("ring must be an object")
    if "field" in data:
        return GF(int(data["field"]))
    if data.get("ring") == "Z":
        return ZZ
    raise WorkspaceError(f"unrecognized ring {data!r}")


def _base_obj_to_json(x: BaseObject):
    if x.ring.is_field:
        return {"dim": x.ngens}
    return {"free": x.free_rank, "torsion": list(x.torsion)}


def _base_obj_from_json(ring: BaseRing, data, where: str) -> BaseObject:
    if not isinstance(data, dict):
        raise WorkspaceError(f"{where}: object must be a JSON object")
    try:
        if ring.is_field:
            if "dim" not in data:
                raise WorkspaceError(f"{where}: field objects need a dim")
            return field_object(ring, int(data["dim"]))
        return z_object(int(data.get("free", 0)), tuple(int(d) for d in data.get("torsion", [])))
    except ValueError as e:
        raise WorkspaceError(f"{where}: {e}") from e


def _matrix_to_json(m: BaseMorphism):
    return [list(r) for r in m.mat]


def _check_matrix(data, where: str):
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise WorkspaceError(f"{where}: matrix must be a list of rows")
    widths = {len(r) for r in data}
    if len(widths) > 1:
        raise WorkspaceError(f"{where}: ragged matrix")
    return data


def _mor_from_json(src: BaseObject, dst: BaseObject, data, where: str) -> BaseMorphism:
    rows = _check_matrix(data, where)
    if len(rows) != dst.ngens or any(len(r) != src.ngens for r in rows):
        raise WorkspaceError(
            f"{where}: matrix shape {len(rows)}x{len(rows[0]) if rows else 0} "
            f"does not match {dst.ngens}x{src.ngens}"
        )
    try:
        return base_morphism(src, dst, rows)
    except ValueError as e:
        raise WorkspaceError(f"{where}: {e}") from e


def parse_workspace(text: str) -> Workspace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceError(f"parse error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict) or "ring" not in data:
        raise WorkspaceError("workspace must be a JSON object with a ring")
    ring = _ring_from_json(data["ring"])
    ws = Workspace(ring)
    for name, od in sorted(data.get("objects", {}).items()):
        where = f"object {name!r}"
        top = _base_obj_from_json(ring, od.get("top"), where)
        bottom = _base_obj_from_json(ring, od.get("bottom"), where)
        try:
            ws.objects[name] = two_object(_mor_from_json(top, bottom, od.get("boundary"), where))
        except ValueError as e:
            raise WorkspaceError(f"{where}: {e}") from e
    for name, md in sorted(data.get("morphisms", {}).items()):
        where = f"morphism {name!r}"
        src = ws.object(md.get("source"))
        dst = ws.object(md.get("target"))
        try:
            ws.morphisms[name] = two_morphism(
                src,
                dst,
                _mor_from_json(src.top, dst.top, md.get("top"), where),
                _mor_from_json(src.bottom, dst.bottom, md.get("bottom"), where),
            )
        except ValueError as e:
            raise WorkspaceError(f"{where}: {e}") from e
    for name, cd in sorted(data.get("cells", {}).items()):
        where = f"cell {name!r}"
        cfrom = ws.morphism(cd.get("from"))
        cto = ws.morphism(cd.get("to"))
        try:
            ws.cells[name] = two_cell(
                cfrom,
                cto,
                _mor_from_json(cfrom.src.bottom, cfrom.dst.top, cd.get("matrix"), where),
            )
        except ValueError as e:
            raise WorkspaceError(f"{where}: {e}") from e
    for name, xd in sorted(data.get("complexes", {}).items()):
        where = f"complex {name!r}"
        objs = tuple(ws.object(n) for n in xd.get("objects", []))
        diffs = tuple(ws.morphism(n) for n in xd.get("differentials", []))
        cells = tuple(ws.cell(n) for n in xd.get("nullhomotopies", []))
        try:
            ws.complexes[name] = ComplexSequence(int(xd.get("lo", 0)), objs, diffs, cells)
        except ValueError as e:
            raise WorkspaceError(f"{where}: {e}") from e
    for name, md in sorted(data.get("chainmaps", {}).items()):
        where = f"chain map {name!r}"
        from .les import ChainMap

        src = ws.complex(md.get("source"))
        dst = ws.complex(md.get("target"))
        squares = tuple(ws.morphism(n) for n in md.get("squares", []))
        cells = tuple(ws.cell(n) for n in md.get("homotopies", []))
        try:
            ws.chainmaps[name] = ChainMap(src, dst, squares, cells)
        except ValueError as e:
            raise WorkspaceError(f"{where}: {e}") from e
    return ws


def serialize_workspace(ws: Workspace) -> str:
    doc: dict = {"ring": _ring_to_json(ws.ring)}
    objs = {}
    for name in sorted(ws.objects):
        x = ws.objects[name]
        objs[name] = {
            "top": _base_obj_to_json(x.top),
            "bottom": _base_obj_to_json(x.bottom),
            "boundary": _matrix_to_json(x.boundary),
        }
    doc["objects"] = objs
    mors = {}
    for name in sorted(ws.morphisms):
        u = ws.morphisms[name]
        mors[name] = {
            "source": _find_name(ws.objects, u.src, f"morphism {name!r} source"),
            "target": _find_name(ws.objects, u.dst, f"morphism {name!r} target"),
            "top": _matrix_to_json(u.top),
            "bottom": _matrix_to_json(u.bottom),
        }
    doc["morphisms"] = mors
    cells = {}
    for name in sorted(ws.cells):
        c = ws.cells[name]
        cells[name] = {
            "from": _find_name(ws.morphisms, c.cfrom, f"cell {name!r} source"),
            "to": _find_name(ws.morphisms, c.cto, f"cell {name!r} target"),
            "matrix": _matrix_to_json(c.mat),
        }
    doc["cells"] = cells
    cxs = {}
    for name in sorted(ws.complexes):
        cx = ws.complexes[name]
        cxs[name] = {
            "lo": cx.lo,
            "objects": [_find_name(ws.objects, o, f"complex {name!r}") for o in cx.objects],
            "differentials": [_find_name(ws.morphisms, d, f"complex {name!r}") for d in cx.diffs],
            "nullhomotopies": [_find_name(ws.cells, c, f"complex {name!r}") for c in cx.cells],
        }
    doc["complexes"] = cxs
    cms = {}
    for name in sorted(ws.chainmaps):
        cm = ws.chainmaps[name]
        cms[name] = {
            "source": _find_name(ws.complexes, cm.src, f"chain map {name!r}"),
            "target": _find_name(ws.complexes, cm.dst, f"chain map {name!r}"),
            "squares": [_find_name(ws.morphisms, s, f"chain map {name!r}") for s in cm.squares],
            "homotopies": [_find_name(ws.cells, c, f"chain map {name!r}") for c in cm.cells],
        }
    doc["chainmaps"] = cms
    return json.dumps(doc, indent=2) + "\n"


def _find_name(table: dict, value, where: str) -> str:
    for k, v in table.items():
        if v == value:
            return k
    raise WorkspaceError(f"{where}: entity is not named in the workspace")
