"""Two-row spectral sequence for the rigid hull of a 2D tiling.

The E2 page stacks the homology of the unmodified rigid complex (row q=1)
over the modified one (row q=0).  The only differential left, d2 from (2,0)
to (0,1), is generated by the winding-number chain: each vertex type gets the
total rotation accumulated in one clockwise lap around it.  Degreewise totals
of the E-infinity page, regraded by n -> 3-n, give the Cech cohomology of the
rigid hull; the translation and rotation-quotient hulls come from plain
regrading of the corresponding complexes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import complexes
from .complexes import MODE_RIGID, MODE_RIGID_MODIFIED, MODE_TRANSLATION
from .dirlimit import direct_limit
from .groups import FgAbelianGroup, quotient_by


class SpectralError(Exception):
    pass


@dataclass(frozen=True)
class SpectralPage:
    entries: dict  # (p, q) in {0,1,2} x {0,1} -> FgAbelianGroup

    def entry(self, p, q):
        return self.entries.get((p, q), FgAbelianGroup.trivial())


@dataclass(frozen=True)
class HullCohomology:
    groups: tuple            # degree 0..D, FgAbelianGroup or DirectLimitGroup
    extension_flags: tuple   # per degree, tuple of flag strings
    notes: tuple = ()

    def render(self):
        return tuple(g.render() for g in self.groups)


def _require_rigid_2d(spec):
    if spec.dimension != 2 or spec.geometry_mode != "rigid":
        raise SpectralError("the rigid-hull pipeline needs a 2-dimensional rigid spec")


def winding_chain(spec):
    """Integer 0-chain of per-vertex-type winding numbers, in declaration order."""
    _require_rigid_2d(spec)
    if spec.rotation is None:
        raise SpectralError("spec carries no rotation data")
    rot = spec.rotation
    chain = []
    for c in spec.cells[0]:
        total = sum(sign * rot.edge_rotations[eid] for eid, sign in rot.vertex_stars[c.id])
        if total.denominator != 1:
            raise SpectralError("vertex %r: lap sums to %s, not a whole number of turns"
                                % (c.id, total))
        chain.append(int(total))
    return tuple(chain)


def _rigid_presentations(spec):
    rigid = complexes.build_chain_complex(spec, MODE_RIGID)
    modified = complexes.build_chain_complex(spec, MODE_RIGID_MODIFIED)
    pres_u = {k: complexes.homology(rigid, k) for k in range(3)}
    pres_m = {k: complexes.homology(modified, k) for k in range(3)}
    return pres_u, pres_m


def _check_stationary(spec):
    """Hierarchical specs enter the spectral pipeline only when the substitution
    acts by isomorphisms on all six E2 groups."""
    if spec.substitution is None:
        return
    maps_u = complexes.substitution_homology_maps(spec, MODE_RIGID)
    if not all(h.is_isomorphism() for h in maps_u.values()):
        raise SpectralError("non-stationary homology unsupported")
    try:
        maps_m = complexes.substitution_homology_maps(spec, MODE_RIGID_MODIFIED)
    except complexes.ComplexError as e:
        raise SpectralError(str(e))
    if not all(h.is_isomorphism() for h in maps_m.values()):
        raise SpectralError("non-stationary homology unsupported")


def e2_page(spec) -> SpectralPage:
    _require_rigid_2d(spec)
    _check_stationary(spec)
    pres_u, pres_m = _rigid_presentations(spec)
    entries = {}
    for p in range(3):
        entries[(p, 0)] = pres_m[p].structure
        entries[(p, 1)] = pres_u[p].structure
    return SpectralPage(entries=entries)


def d2_image(spec):
    """Class of the winding chain in degree-0 homology, with its order."""
    _require_rigid_2d(spec)
    _check_stationary(spec)
    pres_u, _ = _rigid_presentations(spec)
    sigma = pres_u[0].class_of(winding_chain(spec))
    return sigma, sigma.order()


def _total_degree(entries_by_pq, n):
    parts = [g for (p, q), g in sorted(entries_by_pq.items()) if p + q == n]
    total = FgAbelianGroup.trivial()
    for g in parts:
        total = total.direct_sum(g)
    nonzero = [g for g in parts if not g.is_trivial]
    flags = ()
    if len(nonzero) >= 2 and any(g.torsion for g in nonzero):
        flags = ("assumed_split",)
    return total, flags


def _einf_entries(spec):
    """E-infinity differs from E2 only through d2: the (0,1) entry is divided
    by the winding class and the (2,0) entry survives exactly when that class
    has finite order."""
    _require_rigid_2d(spec)
    _check_stationary(spec)
    pres_u, pres_m = _rigid_presentations(spec)
    sigma = pres_u[0].class_of(winding_chain(spec))
    notes = []
    entries = {
        (0, 0): pres_m[0].structure,
        (1, 0): pres_m[1].structure,
        (0, 1): quotient_by(pres_u[0].structure, [sigma]),
        (1, 1): pres_u[1].structure,
        (2, 1): pres_u[2].structure,
    }
    if sigma.order() is None:
        entries[(2, 0)] = FgAbelianGroup.trivial()
        notes.append("winding class has infinite order; the (2,0) entry dies")
    else:
        entries[(2, 0)] = FgAbelianGroup.free(1)
    return entries, tuple(notes)


def rigid_hull_cohomology(spec) -> HullCohomology:
    """Cech cohomology of the rigid hull, assembled degreewise from E-infinity."""
    einf, notes = _einf_entries(spec)
    totals = []
    flags = []
    for n in range(4):
        g, f = _total_degree(einf, n)
        totals.append(g)
        flags.append(f)
    # Regrade: Cech degree i is homological degree 3 - i.
    groups = tuple(totals[3 - i] for i in range(4))
    ext = tuple(flags[3 - i] for i in range(4))
    return HullCohomology(groups=groups, extension_flags=ext, notes=notes)


def einf_page(spec) -> SpectralPage:
    """The stabilized page, for reporting."""
    entries, _ = _einf_entries(spec)
    return SpectralPage(entries=entries)


HULL_TRANSLATION = "translation"
HULL_ROTATION_QUOTIENT = "rotation_quotient"


def hull_cohomology(spec, hull) -> HullCohomology:
    """Cech cohomology of the translation hull or the rotation quotient.

    Poincare duality enters purely as the regrading H^(d-k) = H_k, with the
    unmodified complex for the translation hull and the modified one for the
    rotation quotient; hierarchical specs take direct limits degreewise.
    """
    if hull == HULL_TRANSLATION:
        if spec.geometry_mode != "translation":
            raise SpectralError("translation hull needs a translation-mode spec")
        mode = MODE_TRANSLATION
        top = spec.dimension
    elif hull == HULL_ROTATION_QUOTIENT:
        _require_rigid_2d(spec)
        mode = MODE_RIGID_MODIFIED
        top = 2
    else:
        raise SpectralError("unknown hull %r" % (hull,))

    cplx = complexes.build_chain_complex(spec, mode)
    pres = {k: complexes.homology(cplx, k) for k in range(top + 1)}
    if spec.is_hierarchical:
        try:
            maps = complexes.substitution_homology_maps(spec, mode)
        except complexes.ComplexError as e:
            raise SpectralError(str(e))
        by_degree = {k: direct_limit(pres[k].structure, maps[k]) for k in pres}
    else:
        by_degree = {k: pres[k].structure for k in pres}
    groups = tuple(by_degree[top - i] for i in range(top + 1))
    return HullCohomology(groups=groups,
                          extension_flags=tuple(() for _ in range(top + 1)))
