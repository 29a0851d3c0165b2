"""Cellular chain complexes of a tiling spec and their homology.

Three build modes: the translation complex uses the declared cell types as-is;
the rigid complex drops orientation-reversing generators (x = -x forces x = 0
over the integers); the modified rigid complex rescales each generator by its
symmetry order, dividing boundary entries accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import IntMatrix
from .groups import SubquotientPresentation, homology_presentation, induced_hom

MODE_TRANSLATION = "translation"
MODE_RIGID = "rigid"
MODE_RIGID_MODIFIED = "rigid_modified"
MODES = (MODE_TRANSLATION, MODE_RIGID, MODE_RIGID_MODIFIED)


class ComplexError(Exception):
    pass


@dataclass(frozen=True)
class ChainComplex:
    top_dim: int
    ranks: tuple
    boundary: tuple  # boundary[k]: degree k -> k-1; boundary[0] has zero rows
    generator_labels: tuple

    def boundary_or_zero(self, k):
        """Boundary map out of degree k, a zero map beyond the ends."""
        if k == 0:
            return IntMatrix.zero(0, self.ranks[0])
        if k == self.top_dim + 1:
            return IntMatrix.zero(self.ranks[self.top_dim], 0)
        if 0 < k <= self.top_dim:
            return self.boundary[k]
        raise ComplexError("degree %d out of range" % k)


@dataclass(frozen=True)
class ChainMap:
    """Degreewise matrices between two chain complexes of equal shape."""

    source: ChainComplex
    target: ChainComplex
    matrices: tuple

    def matrix(self, k):
        return self.matrices[k]


@dataclass(frozen=True)
class ChainMapReport:
    ok: bool
    violations: tuple

    def __str__(self):
        if self.ok:
            return "chain map commutes with the boundary in every degree"
        return "; ".join(self.violations)


def _mode_cells(spec, mode):
    """Visible cell types per degree for the given mode (index lists)."""
    keep = {}
    for k in range(spec.dimension + 1):
        cells = spec.cells[k]
        if mode == MODE_TRANSLATION:
            keep[k] = list(range(len(cells)))
        else:
            keep[k] = [i for i, c in enumerate(cells) if not c.reverses_orientation]
    return keep


def _restrict(matrix, row_idx, col_idx):
    rows = [[matrix[i, j] for j in col_idx] for i in row_idx]
    if not rows:
        return IntMatrix.zero(len(row_idx), len(col_idx))
    if not rows[0]:
        return IntMatrix.zero(len(row_idx), 0)
    return IntMatrix.from_rows(rows)


def build_chain_complex(spec, mode) -> ChainComplex:
    if mode not in MODES:
        raise ComplexError("unknown mode %r" % (mode,))
    if mode == MODE_TRANSLATION:
        if spec.geometry_mode != "translation":
            raise ComplexError("translation complex requires a translation-mode spec")
        for k in range(spec.dimension + 1):
            for c in spec.cells[k]:
                if c.symmetry != 1:
                    raise ComplexError(
                        "translation mode requires symmetry order 1 (cell %r)" % c.id)
    else:
        if spec.geometry_mode != "rigid":
            raise ComplexError("%s complex requires a rigid-mode spec" % mode)

    keep = _mode_cells(spec, mode)
    ranks = tuple(len(keep[k]) for k in range(spec.dimension + 1))
    boundaries = [IntMatrix.zero(0, ranks[0])]
    for k in range(1, spec.dimension + 1):
        boundaries.append(_restrict(spec.boundaries[k], keep[k - 1], keep[k]))

    labels = []
    for k in range(spec.dimension + 1):
        row = []
        for i in keep[k]:
            c = spec.cells[k][i]
            if mode == MODE_RIGID_MODIFIED and c.symmetry > 1:
                row.append("%d*%s" % (c.symmetry, c.id))
            else:
                row.append(c.id)
        labels.append(tuple(row))

    if mode == MODE_RIGID_MODIFIED:
        rescaled = [boundaries[0]]
        for k in range(1, spec.dimension + 1):
            b = boundaries[k]
            rows = []
            for ri, i in enumerate(keep[k - 1]):
                nv = spec.cells[k - 1][i].symmetry
                row = []
                for rj, j in enumerate(keep[k]):
                    ne = spec.cells[k][j].symmetry
                    num = b[ri, rj] * ne
                    if num % nv != 0:
                        raise ComplexError(
                            "non-integral rescaled boundary entry at degree %d, "
                            "cell %r over %r" % (k, spec.cells[k][j].id,
                                                 spec.cells[k - 1][i].id))
                    row.append(num // nv)
                rows.append(row)
            rescaled.append(IntMatrix.from_rows(rows) if rows
                            else IntMatrix.zero(0, len(keep[k])))
        boundaries = rescaled

    for k in range(2, spec.dimension + 1):
        if not (boundaries[k - 1] * boundaries[k]).is_zero():
            raise ComplexError("boundary of boundary is nonzero at degree %d" % k)

    return ChainComplex(top_dim=spec.dimension, ranks=ranks,
                        boundary=tuple(boundaries), generator_labels=tuple(labels))


def homology(complex: ChainComplex, k: int) -> SubquotientPresentation:
    if not 0 <= k <= complex.top_dim:
        raise ComplexError("degree %d out of range 0..%d" % (k, complex.top_dim))
    return homology_presentation(complex.boundary_or_zero(k),
                                 complex.boundary_or_zero(k + 1))


def validate_chain_map(f: ChainMap) -> ChainMapReport:
    """Check boundary-compatibility degreewise; failures are located, not raised."""
    violations = []
    if f.source.top_dim != f.target.top_dim or f.source.ranks != f.target.ranks:
        return ChainMapReport(False, ("complex shapes are incompatible",))
    for k in range(1, f.source.top_dim + 1):
        lhs = f.target.boundary[k] * f.matrices[k]
        rhs = f.matrices[k - 1] * f.source.boundary[k]
        if lhs.entries != rhs.entries:
            for i in range(lhs.rows):
                for j in range(lhs.cols):
                    if lhs[i, j] != rhs[i, j]:
                        violations.append(
                            "degree %d: boundary/f mismatch at row %d, col %d "
                            "(%d != %d)" % (k, i, j, lhs[i, j], rhs[i, j]))
                        break
                else:
                    continue
                break
    return ChainMapReport(not violations, tuple(violations))


def _modified_scaling(spec, keep):
    return [tuple(spec.cells[k][i].symmetry for i in keep[k])
            for k in range(spec.dimension + 1)]


def chain_map_from_spec(spec, mode) -> ChainMap:
    """The spec's substitution chain data, restricted/rescaled for the mode."""
    sub = spec.substitution
    if sub is None or sub.kind != "chain_map":
        raise ComplexError("spec carries no chain-level substitution data")
    cplx = build_chain_complex(spec, mode)
    keep = _mode_cells(spec, mode)
    mats = []
    for k in range(spec.dimension + 1):
        if k not in sub.chain_map:
            raise ComplexError("substitution chain map missing degree %d" % k)
        m = _restrict(sub.chain_map[k], keep[k], keep[k])
        if mode == MODE_RIGID_MODIFIED:
            scale = _modified_scaling(spec, keep)[k]
            rows = []
            for i in range(m.rows):
                row = []
                for j in range(m.cols):
                    num = m[i, j] * scale[j]
                    if num % scale[i] != 0:
                        raise ComplexError(
                            "substitution does not preserve the modified complex "
                            "at degree %d (%d, %d)" % (k, i, j))
                    row.append(num // scale[i])
                rows.append(row)
            m = IntMatrix.from_rows(rows) if rows else m
        mats.append(m)
    return ChainMap(source=cplx, target=cplx, matrices=tuple(mats))


def substitution_homology_maps(spec, mode):
    """Induced substitution endomorphisms on homology, one per degree.

    Chain-level data is validated for boundary-compatibility and pushed to
    homology; homology-level data goes through the generator/image route.
    The modified complex needs chain-level data, since homology generators of
    the unmodified complex say nothing about the rescaled one.
    """
    sub = spec.substitution
    if sub is None:
        raise ComplexError("spec carries no substitution data")
    cplx = build_chain_complex(spec, mode)
    pres = {k: homology(cplx, k) for k in range(cplx.top_dim + 1)}
    out = {}
    if sub.kind == "chain_map":
        f = chain_map_from_spec(spec, mode)
        report = validate_chain_map(f)
        if not report.ok:
            raise ComplexError("substitution chain data: %s" % report)
        for k, p in pres.items():
            gens = p.generator_cycles()
            images = [f.matrices[k].mul_vector(g) for g in gens]
            out[k] = induced_hom(p, gens, images)
        return out
    if mode == MODE_RIGID_MODIFIED:
        raise ComplexError(
            "modified-complex substitution maps require chain-level data")
    for k, p in pres.items():
        if k not in sub.homology_map:
            raise ComplexError("substitution homology map missing degree %d" % k)
        gens, images = sub.homology_map[k]
        out[k] = induced_hom(p, list(gens), list(images))
    return out
