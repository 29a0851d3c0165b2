"""Tiling spec data model, JSON serialization, validation, builtin corpus.

A spec records the combinatorial cell-type data of a substitution tiling:
cell types per degree with symmetry orders, boundary matrices, optional
substitution data (chain level or homology level), optional rotation data
(edge rotations plus clockwise vertex laps, feeding the winding-number map),
and the orders of the rotationally invariant tilings in the hull.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import IntMatrix


class SpecError(Exception):
    """Schema violation; the message is path-addressed."""


@dataclass(frozen=True)
class CellType:
    id: str
    dimension: int
    symmetry: int = 1
    reverses_orientation: bool = False


@dataclass(frozen=True)
class RotationData:
    edge_rotations: dict      # edge id -> Fraction, in full turns
    vertex_stars: dict        # vertex id -> tuple of (edge id, sign) for one clockwise lap


@dataclass(frozen=True)
class SubstitutionData:
    kind: str                              # "chain_map" | "homology_map"
    chain_map: dict | None = None          # degree -> IntMatrix
    homology_map: dict | None = None       # degree -> (generator cycles, image cycles)


@dataclass(frozen=True, eq=True)
class TilingSpec:
    name: str
    dimension: int
    geometry_mode: str                     # "translation" | "rigid"
    cells: dict                            # degree -> tuple of CellType
    boundaries: dict                       # degree 1..dimension -> IntMatrix
    substitution: SubstitutionData | None = None
    rotation: RotationData | None = None
    symmetric_tilings: tuple = ()

    @property
    def is_hierarchical(self):
        return self.substitution is not None

    def cell_ids(self, degree):
        return tuple(c.id for c in self.cells[degree])

    def cell_index(self, degree, cell_id):
        for i, c in enumerate(self.cells[degree]):
            if c.id == cell_id:
                return i
        raise SpecError("unknown %d-cell %r" % (degree, cell_id))


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    issues: tuple

    def __str__(self):
        if self.passed:
            return "ok"
        return "\n".join(self.issues)


# ---------------------------------------------------------------------------
# construction and schema


def make_spec(name, dimension, geometry_mode, cells, boundaries,
              substitution=None, rotation=None, symmetric_tilings=()):
    """Build a TilingSpec from plain data, enforcing the structural schema."""
    if dimension not in (1, 2):
        raise SpecError("dimension: must be 1 or 2")
    if geometry_mode not in ("translation", "rigid"):
        raise SpecError("geometry_mode: must be 'translation' or 'rigid'")

    for k in cells:
        if not 0 <= k <= dimension:
            raise SpecError("cells.%d: beyond the spec dimension" % k)
    for k in boundaries:
        if not 1 <= k <= dimension:
            raise SpecError("boundaries.%d: beyond the spec dimension" % k)

    cell_map = {}
    seen = set()
    for k in range(dimension + 1):
        if k not in cells:
            raise SpecError("cells.%d: missing" % k)
        row = []
        for i, c in enumerate(cells[k]):
            path = "cells.%d[%d]" % (k, i)
            if not isinstance(c, CellType):
                raise SpecError("%s: expected CellType" % path)
            if c.dimension != k:
                raise SpecError("%s: dimension %d != %d" % (path, c.dimension, k))
            if c.id in seen:
                raise SpecError("%s: duplicate id %r" % (path, c.id))
            seen.add(c.id)
            if c.symmetry < 1:
                raise SpecError("%s.symmetry: must be >= 1" % path)
            if geometry_mode == "translation" and (c.symmetry != 1 or c.reverses_orientation):
                raise SpecError("%s: translation specs have trivial cell symmetry" % path)
            row.append(c)
        cell_map[k] = tuple(row)

    bmap = {}
    for k in range(1, dimension + 1):
        if k not in boundaries:
            raise SpecError("boundaries.%d: missing" % k)
        b = boundaries[k]
        want = (len(cell_map[k - 1]), len(cell_map[k]))
        if (b.rows, b.cols) != want:
            raise SpecError("boundaries.%d: shape (%d, %d) != expected (%d, %d)"
                            % (k, b.rows, b.cols, want[0], want[1]))
        bmap[k] = b

    if substitution is not None:
        _check_substitution_shape(substitution, cell_map, dimension, geometry_mode)
    if rotation is not None:
        _check_rotation_shape(rotation, cell_map, dimension, geometry_mode)
    orders = tuple(sorted(int(n) for n in symmetric_tilings))
    if any(n < 2 for n in orders):
        raise SpecError("symmetric_tilings: orders must be >= 2")

    return TilingSpec(name=name, dimension=dimension, geometry_mode=geometry_mode,
                      cells=cell_map, boundaries=bmap, substitution=substitution,
                      rotation=rotation, symmetric_tilings=orders)


def _visible_count(cell_map, k, geometry_mode):
    if geometry_mode == "translation":
        return len(cell_map[k])
    return sum(1 for c in cell_map[k] if not c.reverses_orientation)


def _check_substitution_shape(sub, cell_map, dimension, geometry_mode):
    if sub.kind not in ("chain_map", "homology_map"):
        raise SpecError("substitution.kind: unknown kind %r" % sub.kind)
    if sub.kind == "chain_map":
        if not sub.chain_map:
            raise SpecError("substitution.chain_map: missing")
        for k in sub.chain_map:
            if not 0 <= k <= dimension:
                raise SpecError("substitution.chain_map.%d: beyond the spec "
                                "dimension" % k)
        for k in range(dimension + 1):
            if k not in sub.chain_map:
                raise SpecError("substitution.chain_map.%d: missing" % k)
            m = sub.chain_map[k]
            n = len(cell_map[k])
            if (m.rows, m.cols) != (n, n):
                raise SpecError("substitution.chain_map.%d: expected %dx%d matrix" % (k, n, n))
    else:
        if not sub.homology_map:
            raise SpecError("substitution.homology_map: missing")
        for k in sub.homology_map:
            if not 0 <= k <= dimension:
                raise SpecError("substitution.homology_map.%d: beyond the spec "
                                "dimension" % k)
        for k in range(dimension + 1):
            if k not in sub.homology_map:
                raise SpecError("substitution.homology_map.%d: missing" % k)
            gens, images = sub.homology_map[k]
            if len(gens) != len(images):
                raise SpecError("substitution.homology_map.%d: generator/image "
                                "count mismatch" % k)
            n = _visible_count(cell_map, k, geometry_mode)
            for label, vecs in (("generators", gens), ("images", images)):
                for i, v in enumerate(vecs):
                    if len(v) != n:
                        raise SpecError("substitution.homology_map.%d.%s[%d]: length %d "
                                        "!= %d chain coordinates" % (k, label, i, len(v), n))


def _check_rotation_shape(rot, cell_map, dimension, geometry_mode):
    if geometry_mode != "rigid" or dimension != 2:
        raise SpecError("rotation: only meaningful for 2-dimensional rigid specs")
    edge_ids = {c.id for c in cell_map[1]}
    vertex_ids = {c.id for c in cell_map[0]}
    for eid in rot.edge_rotations:
        if eid not in edge_ids:
            raise SpecError("rotation.edge_rotations.%s: unknown edge" % eid)
    if set(rot.vertex_stars) != vertex_ids:
        missing = sorted(vertex_ids - set(rot.vertex_stars))
        extra = sorted(set(rot.vertex_stars) - vertex_ids)
        raise SpecError("rotation.vertex_stars: missing %r, unknown %r" % (missing, extra))
    for vid, star in rot.vertex_stars.items():
        for i, (eid, sign) in enumerate(star):
            path = "rotation.vertex_stars.%s[%d]" % (vid, i)
            if eid not in edge_ids:
                raise SpecError("%s.edge: unknown edge %r" % (path, eid))
            if eid not in rot.edge_rotations:
                raise SpecError("%s.edge: no rotation assigned to %r" % (path, eid))
            if sign not in (1, -1):
                raise SpecError("%s.sign: must be 1 or -1" % path)


# ---------------------------------------------------------------------------
# JSON round trip

_TOP_KEYS = ("name", "dimension", "geometry_mode", "cells", "boundaries",
             "substitution", "rotation", "symmetric_tilings")


def _frac_str(f: Fraction) -> str:
    return "%d/%d" % (f.numerator, f.denominator)


def _parse_frac(s, path):
    if not isinstance(s, str) or "." in s:
        raise SpecError("%s: rationals are reduced-fraction strings" % path)
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise SpecError("%s: cannot parse rational %r" % (path, s))


def _require_keys(obj, allowed, required, path):
    if not isinstance(obj, dict):
        raise SpecError("%s: expected an object" % path)
    for key in obj:
        if key not in allowed:
            raise SpecError("%s.%s: unknown key" % (path, key))
    for key in required:
        if key not in obj:
            raise SpecError("%s.%s: missing" % (path, key))


def _parse_matrix(data, path):
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise SpecError("%s: expected a list of integer rows" % path)
    for i, r in enumerate(data):
        for j, x in enumerate(r):
            if not isinstance(x, int) or isinstance(x, bool):
                raise SpecError("%s[%d][%d]: expected an integer" % (path, i, j))
    if not data:
        raise SpecError("%s: empty matrix needs explicit shape; declare cells instead" % path)
    return IntMatrix.from_rows(data)


def _parse_vectors(data, path):
    if not isinstance(data, list):
        raise SpecError("%s: expected a list of integer vectors" % path)
    out = []
    for i, v in enumerate(data):
        if not isinstance(v, list) or any(isinstance(x, bool) or not isinstance(x, int)
                                          for x in v):
            raise SpecError("%s[%d]: expected an integer vector" % (path, i))
        out.append(tuple(v))
    return tuple(out)


def load_spec(document: str) -> TilingSpec:
    """Parse a spec document; structural violations raise path-addressed errors."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as e:
        raise SpecError("document: invalid JSON (%s)" % e)
    _require_keys(data, _TOP_KEYS, ("name", "dimension", "geometry_mode",
                                    "cells", "boundaries"), "document")
    name = data["name"]
    dimension = data["dimension"]
    geometry_mode = data["geometry_mode"]
    if not isinstance(name, str):
        raise SpecError("name: expected a string")
    if dimension not in (1, 2):
        raise SpecError("dimension: must be 1 or 2")

    cells = {}
    if not isinstance(data["cells"], dict):
        raise SpecError("cells: expected an object")
    for key, arr in data["cells"].items():
        if key not in ("0", "1", "2"):
            raise SpecError("cells.%s: unknown degree" % key)
        k = int(key)
        if not isinstance(arr, list):
            raise SpecError("cells.%s: expected an array" % key)
        row = []
        for i, c in enumerate(arr):
            path = "cells.%s[%d]" % (key, i)
            _require_keys(c, ("id", "symmetry", "reverses_orientation"),
                          ("id", "symmetry"), path)
            if not isinstance(c["id"], str):
                raise SpecError("%s.id: expected a string" % path)
            if not isinstance(c["symmetry"], int) or isinstance(c["symmetry"], bool):
                raise SpecError("%s.symmetry: expected an integer" % path)
            rev = c.get("reverses_orientation", False)
            if not isinstance(rev, bool):
                raise SpecError("%s.reverses_orientation: expected a boolean" % path)
            row.append(CellType(id=c["id"], dimension=k, symmetry=c["symmetry"],
                                reverses_orientation=rev))
        cells[k] = tuple(row)

    boundaries = {}
    if not isinstance(data["boundaries"], dict):
        raise SpecError("boundaries: expected an object")
    for key, mat in data["boundaries"].items():
        if key not in ("1", "2"):
            raise SpecError("boundaries.%s: unknown degree" % key)
        boundaries[int(key)] = _parse_matrix(mat, "boundaries.%s" % key)

    substitution = None
    if "substitution" in data:
        sdata = data["substitution"]
        _require_keys(sdata, ("kind", "chain_map", "homology_map"), ("kind",),
                      "substitution")
        kind = sdata["kind"]
        if kind == "chain_map":
            _require_keys(sdata, ("kind", "chain_map"), ("chain_map",), "substitution")
            cm = {}
            for key, mat in sdata["chain_map"].items():
                if key not in ("0", "1", "2"):
                    raise SpecError("substitution.chain_map.%s: unknown degree" % key)
                cm[int(key)] = _parse_matrix(mat, "substitution.chain_map.%s" % key)
            substitution = SubstitutionData(kind="chain_map", chain_map=cm)
        elif kind == "homology_map":
            _require_keys(sdata, ("kind", "homology_map"), ("homology_map",),
                          "substitution")
            hm = {}
            for key, entry in sdata["homology_map"].items():
                if key not in ("0", "1", "2"):
                    raise SpecError("substitution.homology_map.%s: unknown degree" % key)
                path = "substitution.homology_map.%s" % key
                _require_keys(entry, ("generators", "images"),
                              ("generators", "images"), path)
                hm[int(key)] = (_parse_vectors(entry["generators"], path + ".generators"),
                                _parse_vectors(entry["images"], path + ".images"))
            substitution = SubstitutionData(kind="homology_map", homology_map=hm)
        else:
            raise SpecError("substitution.kind: unknown kind %r" % kind)

    rotation = None
    if "rotation" in data:
        rdata = data["rotation"]
        _require_keys(rdata, ("edge_rotations", "vertex_stars"),
                      ("edge_rotations", "vertex_stars"), "rotation")
        rots = {}
        for eid, s in rdata["edge_rotations"].items():
            rots[eid] = _parse_frac(s, "rotation.edge_rotations.%s" % eid)
        stars = {}
        for vid, lap in rdata["vertex_stars"].items():
            if not isinstance(lap, list):
                raise SpecError("rotation.vertex_stars.%s: expected an array" % vid)
            entries = []
            for i, step in enumerate(lap):
                path = "rotation.vertex_stars.%s[%d]" % (vid, i)
                _require_keys(step, ("edge", "sign"), ("edge", "sign"), path)
                entries.append((step["edge"], step["sign"]))
            stars[vid] = tuple(entries)
        rotation = RotationData(edge_rotations=rots, vertex_stars=stars)

    symmetric = data.get("symmetric_tilings", [])
    if not isinstance(symmetric, list) or any(isinstance(n, bool) or not isinstance(n, int)
                                              for n in symmetric):
        raise SpecError("symmetric_tilings: expected an array of integers")

    return make_spec(name=name, dimension=dimension, geometry_mode=geometry_mode,
                     cells=cells, boundaries=boundaries, substitution=substitution,
                     rotation=rotation, symmetric_tilings=tuple(symmetric))


def save_spec(spec: TilingSpec) -> str:
    """Canonical document: fixed key order, declaration-order maps, one per spec."""
    doc = {
        "name": spec.name,
        "dimension": spec.dimension,
        "geometry_mode": spec.geometry_mode,
        "cells": {
            str(k): [
                {"id": c.id, "symmetry": c.symmetry,
                 "reverses_orientation": c.reverses_orientation}
                for c in spec.cells[k]
            ]
            for k in range(spec.dimension + 1)
        },
        "boundaries": {str(k): spec.boundaries[k].to_rows()
                       for k in range(1, spec.dimension + 1)},
    }
    if spec.substitution is not None:
        sub = spec.substitution
        if sub.kind == "chain_map":
            doc["substitution"] = {
                "kind": "chain_map",
                "chain_map": {str(k): sub.chain_map[k].to_rows()
                              for k in sorted(sub.chain_map)},
            }
        else:
            doc["substitution"] = {
                "kind": "homology_map",
                "homology_map": {
                    str(k): {"generators": [list(v) for v in gens],
                             "images": [list(v) for v in images]}
                    for k, (gens, images) in sorted(sub.homology_map.items())
                },
            }
    if spec.rotation is not None:
        doc["rotation"] = {
            "edge_rotations": {c.id: _frac_str(spec.rotation.edge_rotations[c.id])
                               for c in spec.cells[1]
                               if c.id in spec.rotation.edge_rotations},
            "vertex_stars": {c.id: [{"edge": e, "sign": s}
                                    for e, s in spec.rotation.vertex_stars[c.id]]
                             for c in spec.cells[0]},
        }
    if spec.symmetric_tilings:
        doc["symmetric_tilings"] = list(spec.symmetric_tilings)
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


# ---------------------------------------------------------------------------
# semantic validation


def validate_spec(spec: TilingSpec) -> ValidationReport:
    """Semantic checks: the complex builds in every applicable mode, rotation
    laps close up, and substitution data is consistent; all failures reported."""
    from . import complexes

    issues = []

    if spec.dimension == 2 and not (spec.boundaries[1] * spec.boundaries[2]).is_zero():
        issues.append("boundaries: boundary of boundary is nonzero")

    if spec.geometry_mode == "translation":
        modes = [complexes.MODE_TRANSLATION]
    else:
        modes = [complexes.MODE_RIGID, complexes.MODE_RIGID_MODIFIED]
    for mode in modes:
        try:
            complexes.build_chain_complex(spec, mode)
        except complexes.ComplexError as e:
            issues.append("build[%s]: %s" % (mode, e))

    if spec.rotation is not None:
        for c in spec.cells[0]:
            star = spec.rotation.vertex_stars[c.id]
            total = sum(sign * spec.rotation.edge_rotations[eid] for eid, sign in star)
            if total.denominator != 1:
                issues.append("rotation.vertex_stars.%s: lap sums to %s of a full "
                              "turn; rotations must close up" % (c.id, total))

    if spec.substitution is not None and not issues:
        base = modes[0]
        try:
            complexes.substitution_homology_maps(spec, base)
        except Exception as e:
            issues.append("substitution[%s]: %s" % (base, e))
        if spec.substitution.kind == "chain_map" and spec.geometry_mode == "rigid":
            try:
                complexes.substitution_homology_maps(spec, complexes.MODE_RIGID_MODIFIED)
            except Exception as e:
                issues.append("substitution[rigid_modified]: %s" % e)

    return ValidationReport(passed=not issues, issues=tuple(issues))


# ---------------------------------------------------------------------------
# builtin corpus
#
# Printed matrices and maps follow the source computations; data that is only
# implied (kite/dart face boundaries, vertex laps, the barycentric complexes)
# was derived from the standard geometry, with the known homology groups and
# the sun+star-queen winding chain as the derivation oracle.


def _cells(k, *specs):
    out = []
    for s in specs:
        if isinstance(s, str):
            out.append(CellType(id=s, dimension=k))
        else:
            out.append(CellType(id=s[0], dimension=k, symmetry=s[1]))
    return tuple(out)


def _fibonacci():
    return make_spec(
        name="fibonacci", dimension=1, geometry_mode="translation",
        cells={0: _cells(0, "0.1", "1.0", "0.0"), 1: _cells(1, "0", "1")},
        boundaries={1: IntMatrix.from_rows([[1, -1], [-1, 1], [0, 0]])},
        substitution=SubstitutionData(
            kind="homology_map",
            homology_map={
                0: (((1, 0, 0), (0, 0, 1)), ((1, 0, 1), (1, 0, 0))),
                1: (((1, 1),), ((1, 1),)),
            }),
    )


def _thue_morse():
    return make_spec(
        name="thue-morse", dimension=1, geometry_mode="translation",
        cells={0: _cells(0, "0.0", "0.1", "1.0", "1.1"), 1: _cells(1, "0", "1")},
        boundaries={1: IntMatrix.from_rows([[0, 0], [1, -1], [-1, 1], [0, 0]])},
        substitution=SubstitutionData(
            kind="homology_map",
            homology_map={
                # generators 0.1, 0.0, 1.1; the marker of 0.1 substitutes to
                # 0.1+0.0+1.1, the others land on single vertex types.
                0: (((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1)),
                    ((1, 1, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0))),
                1: (((1, 1),), ((1, 1),)),
            }),
    )


_TRIANGLE_T1 = IntMatrix.from_rows([[0, 0, 0]])
_TRIANGLE_T2 = IntMatrix.from_rows([[1, -1], [-1, 1], [1, -1]])


def _triangle_translation(name, substitution=None):
    return make_spec(
        name=name, dimension=2, geometry_mode="translation",
        cells={0: _cells(0, "v"), 1: _cells(1, "a", "b", "c"),
               2: _cells(2, "up", "down")},
        boundaries={1: _TRIANGLE_T1, 2: _TRIANGLE_T2},
        substitution=substitution,
    )


def _triangle_periodic_translation():
    return _triangle_translation("triangle-periodic-translation")


def _triangle_solenoid_translation():
    return _triangle_translation(
        "triangle-solenoid-translation",
        substitution=SubstitutionData(
            kind="homology_map",
            homology_map={
                0: (((1,),), ((4,),)),
                1: (((1, 0, 0), (0, 1, 0)), ((2, 0, 0), (0, 2, 0))),
                2: (((1, 1),), ((1, 1),)),
            }),
    )


# Barycentric triangle lattice: vertex types V6/V2/V3 at the lattice points,
# edge midpoints and face centres; edges a: V6->V2, b: V6->V3, c: V2->V3;
# faces are the two chiralities of the barycentric triangle.
_TRIANGLE_R1 = IntMatrix.from_rows([[-6, -6, 0], [2, 0, -2], [0, 3, 3]])
_TRIANGLE_R2 = IntMatrix.from_rows([[1, -1], [-1, 1], [1, -1]])
_TRIANGLE_ROT = RotationData(
    edge_rotations={"a": Fraction(1, 6), "b": Fraction(0, 1), "c": Fraction(-1, 3)},
    vertex_stars={
        "V6": (("a", 1), ("b", -1)) * 6,
        "V2": (("c", 1), ("a", -1), ("c", 1), ("a", -1)),
        "V3": (("c", -1), ("b", 1)) * 3,
    })


def _triangle_rigid(name, substitution=None):
    return make_spec(
        name=name, dimension=2, geometry_mode="rigid",
        cells={0: _cells(0, ("V6", 6), ("V2", 2), ("V3", 3)),
               1: _cells(1, "a", "b", "c"),
               2: _cells(2, "F1", "F2")},
        boundaries={1: _TRIANGLE_R1, 2: _TRIANGLE_R2},
        substitution=substitution,
        rotation=_TRIANGLE_ROT,
        symmetric_tilings=(6, 2, 3),
    )


def _triangle_periodic_rigid():
    return _triangle_rigid("triangle-periodic-rigid")


def _triangle_solenoid_rigid():
    # Degree-0 generators: V6 marker (infinite order), the order-2 class
    # (-3, 1, 0) and the order-3 class (-2, 0, 1); the substitution sends the
    # V6 marker to the chain marking V6 and V2 together.
    return _triangle_rigid(
        "triangle-solenoid-rigid",
        substitution=SubstitutionData(
            kind="homology_map",
            homology_map={
                0: (((1, 0, 0), (-3, 1, 0), (-2, 0, 1)),
                    ((1, 1, 0), (-3, 1, 0), (-2, 0, 1))),
                1: ((), ()),
                2: (((1, 1),), ((1, 1),)),
            }),
    )


# Barycentric square lattice: V4a lattice points, V2 edge midpoints, V4b face
# centres; edges a: V4a->V2, b: V4b->V2, c: V4a->V4b.
_SQUARE_R1 = IntMatrix.from_rows([[-4, 0, -4], [2, 2, 0], [0, -4, 4]])
_SQUARE_R2 = IntMatrix.from_rows([[1, -1], [-1, 1], [-1, 1]])
_SQUARE_ROT = RotationData(
    edge_rotations={"a": Fraction(1, 4), "b": Fraction(-1, 4), "c": Fraction(0, 1)},
    vertex_stars={
        "V4a": (("a", 1), ("c", -1)) * 4,
        "V2": (("b", 1), ("a", -1), ("b", 1), ("a", -1)),
        "V4b": (("c", 1), ("b", -1)) * 4,
    })


def _square_rigid(name, substitution=None):
    return make_spec(
        name=name, dimension=2, geometry_mode="rigid",
        cells={0: _cells(0, ("V4a", 4), ("V2", 2), ("V4b", 4)),
               1: _cells(1, "a", "b", "c"),
               2: _cells(2, "F1", "F2")},
        boundaries={1: _SQUARE_R1, 2: _SQUARE_R2},
        substitution=substitution,
        rotation=_SQUARE_ROT,
        symmetric_tilings=(4, 2, 4),
    )


def _square_periodic_rigid():
    return _square_rigid("square-periodic-rigid")


def _square_solenoid_rigid():
    # Adapted degree-0 basis: free class V4a, order-2 class (-2, 1, 0) and
    # order-4 class (1, 0, -1); the substitution multiplies the free class by
    # four, kills the order-2 class and folds the order-4 class diagonally.
    return _square_rigid(
        "square-solenoid-rigid",
        substitution=SubstitutionData(
            kind="homology_map",
            homology_map={
                0: (((1, 0, 0), (-2, 1, 0), (1, 0, -1)),
                    ((4, 0, 0), (0, 0, 0), (-1, 1, -1))),
                1: ((), ()),
                2: (((1, 1),), ((1, 1),)),
            }),
    )


# Penrose kite and dart, vertex types in Conway's order sun, star, ace, deuce,
# jack, queen, king and edge types E1..E7.  The degree-1 boundary matrix is
# the classical 7x7 incidence matrix; the face boundaries place the kite/dart
# seam along E3+E4 (short edges) and E5-E6 (long edges).
_PENROSE_D1 = IntMatrix.from_rows([
    [5, 0, 0, 0, 0, 0, 0],
    [0, -5, 0, 0, 0, 0, 0],
    [-1, 0, -1, 1, 0, 0, 0],
    [0, 1, 1, -1, 0, 0, 1],
    [1, 0, 1, -1, -1, -1, 0],
    [-1, 0, 0, 0, 1, 1, -2],
    [0, -2, 0, 0, 1, 1, -1],
])
_PENROSE_D2 = IntMatrix.from_rows([
    [0, 0],
    [0, 0],
    [1, -1],
    [1, -1],
    [1, -1],
    [-1, 1],
    [0, 0],
])
# Chain-level substitution: commutes with the boundaries and induces the
# substitution action on homology (sun -> 3 sun - star + 2 t on degree zero,
# orientation-reversing on the dart cycle in degree one, identity on top).
_PENROSE_F0 = IntMatrix.from_columns([
    [5, 1, 0, 0, 0, -2, 0],     # sun
    [1, 0, 0, 0, 0, 0, 0],      # star
    [20, -5, 0, 0, 0, -2, 0],   # ace
    [15, 0, 0, 0, 0, -4, 0],    # deuce
    [10, 0, 0, 0, 0, -3, 0],    # jack
    [5, 0, 0, 0, 0, -1, 0],     # queen
    [5, 0, 0, 0, 0, -2, 0],     # king
])
_PENROSE_F1 = IntMatrix.from_columns([
    [2, -2, 0, 2, 0, 0, 4],     # E1
    [0, 0, 0, 0, 0, 0, 0],      # E2
    [1, -1, 0, 1, 1, -1, 2],    # E3
    [-1, 1, 0, -1, 0, 0, -2],   # E4
    [0, 0, 1, 1, 0, 0, 0],      # E5
    [0, 0, 0, 0, 0, 0, 0],      # E6
    [0, 0, 0, 0, 0, 0, 0],      # E7
])
_PENROSE_F2 = IntMatrix.identity(2)
_PENROSE_ROT = RotationData(
    edge_rotations={
        "E1": Fraction(-1, 5), "E2": Fraction(1, 5), "E3": Fraction(3, 5),
        "E4": Fraction(2, 5), "E5": Fraction(-1, 2), "E6": Fraction(1, 2),
        "E7": Fraction(-2, 5),
    },
    vertex_stars={
        "sun": (("E1", -1),) * 5,
        "star": (("E2", 1),) * 5,
        "ace": (("E4", -1), ("E1", 1), ("E3", 1)),
        "deuce": (("E2", -1), ("E3", -1), ("E7", -1), ("E4", 1)),
        "jack": (("E4", 1), ("E6", 1), ("E1", -1), ("E5", 1), ("E3", -1)),
        "queen": (("E6", -1), ("E5", -1), ("E7", 1), ("E1", 1), ("E7", 1)),
        "king": (("E7", 1), ("E6", -1), ("E2", 1), ("E2", 1), ("E5", -1)),
    })


def _penrose():
    return make_spec(
        name="penrose-kite-dart", dimension=2, geometry_mode="rigid",
        cells={0: _cells(0, ("sun", 5), ("star", 5), "ace", "deuce", "jack",
                         "queen", "king"),
               1: _cells(1, "E1", "E2", "E3", "E4", "E5", "E6", "E7"),
               2: _cells(2, "kite", "dart")},
        boundaries={1: _PENROSE_D1, 2: _PENROSE_D2},
        substitution=SubstitutionData(
            kind="chain_map",
            chain_map={0: _PENROSE_F0, 1: _PENROSE_F1, 2: _PENROSE_F2}),
        rotation=_PENROSE_ROT,
        symmetric_tilings=(5, 5),
    )


_BUILTINS = {
    "fibonacci": _fibonacci,
    "thue-morse": _thue_morse,
    "triangle-periodic-translation": _triangle_periodic_translation,
    "triangle-periodic-rigid": _triangle_periodic_rigid,
    "square-periodic-rigid": _square_periodic_rigid,
    "triangle-solenoid-translation": _triangle_solenoid_translation,
    "triangle-solenoid-rigid": _triangle_solenoid_rigid,
    "square-solenoid-rigid": _square_solenoid_rigid,
    "penrose-kite-dart": _penrose,
}


def builtin_names():
    return tuple(sorted(_BUILTINS))


def builtin(name: str) -> TilingSpec:
    if name not in _BUILTINS:
        raise SpecError("unknown builtin %r; available: %s"
                        % (name, ", ".join(builtin_names())))
    return _BUILTINS[name]()
