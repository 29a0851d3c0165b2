"""Finitely generated abelian groups in invariant-factor normal form.

The canonical coordinates of every group computed here come from a single
Smith-normal-form pipeline (`cokernel_structure`), so elements, generators and
homomorphism matrices are reproducible values, not just isomorphism types.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactalg import (
    IntMatrix,
    column_span_basis,
    inverse_unimodular,
    kernel_basis,
    smith_normal_form,
    solve_in_lattice,
)


class GroupError(Exception):
    pass


def _lcm(a, b):
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk."""

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        if self.free_rank < 0:
            raise GroupError("negative free rank")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise GroupError("invariant factor %d < 2" % d)
            if i and d % self.torsion[i - 1] != 0:
                raise GroupError("torsion %r violates divisibility" % (self.torsion,))

    @staticmethod
    def free(rank):
        return FgAbelianGroup(rank, ())

    @staticmethod
    def trivial():
        return FgAbelianGroup(0, ())

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self):
        return not self.torsion

    def torsion_order(self):
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def element(self, free_coords=(), torsion_coords=()):
        free_coords = tuple(int(x) for x in free_coords)
        torsion_coords = tuple(int(x) for x in torsion_coords)
        if len(free_coords) != self.free_rank or len(torsion_coords) != len(self.torsion):
            raise GroupError("coordinate length mismatch")
        torsion_coords = tuple(c % d for c, d in zip(torsion_coords, self.torsion))
        return GroupElement(self, free_coords, torsion_coords)

    def zero(self):
        return self.element((0,) * self.free_rank, (0,) * len(self.torsion))

    def generators(self):
        """Canonical generating elements, free ones first."""
        gens = []
        for i in range(self.free_rank):
            f = [0] * self.free_rank
            f[i] = 1
            gens.append(self.element(f, (0,) * len(self.torsion)))
        for i in range(len(self.torsion)):
            t = [0] * len(self.torsion)
            t[i] = 1
            gens.append(self.element((0,) * self.free_rank, t))
        return gens

    def direct_sum(self, other):
        factors = list(self.torsion) + list(other.torsion)
        return from_divisors(factors, extra_free=self.free_rank + other.free_rank)

    def render(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class GroupElement:
    owner: FgAbelianGroup
    free_coords: tuple
    torsion_coords: tuple

    def _check(self, other):
        if self.owner != other.owner:
            raise GroupError("elements belong to different groups")

    def __add__(self, other):
        self._check(other)
        return self.owner.element(
            tuple(a + b for a, b in zip(self.free_coords, other.free_coords)),
            tuple(a + b for a, b in zip(self.torsion_coords, other.torsion_coords)),
        )

    def __neg__(self):
        return self.owner.element(tuple(-a for a in self.free_coords),
                                  tuple(-a for a in self.torsion_coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n):
        n = int(n)
        return self.owner.element(tuple(n * a for a in self.free_coords),
                                  tuple(n * a for a in self.torsion_coords))

    @property
    def is_zero(self):
        return all(a == 0 for a in self.free_coords) and all(a == 0 for a in self.torsion_coords)

    def order(self):
        """Order of the element; None means infinite."""
        if any(a != 0 for a in self.free_coords):
            return None
        n = 1
        for c, d in zip(self.torsion_coords, self.owner.torsion):
            n = _lcm(n, d // gcd(d, c))
        return n

    def int_coords(self):
        """Integer lift (free coords, then torsion representatives)."""
        return tuple(self.free_coords) + tuple(self.torsion_coords)


def from_divisors(divisors, extra_free=0):
    """Normal form of Z^extra_free + sum of Z/n over the given divisors."""
    divisors = [int(n) for n in divisors if int(n) != 1]
    if any(n < 1 for n in divisors):
        raise GroupError("divisors must be positive")
    if not divisors:
        return FgAbelianGroup(extra_free, ())
    rel = IntMatrix.from_rows([[divisors[i] if i == j else 0 for j in range(len(divisors))]
                               for i in range(len(divisors))])
    g, _ = cokernel_structure(rel, len(divisors))
    return FgAbelianGroup(g.free_rank + extra_free, g.torsion)


@dataclass(frozen=True)
class CoordinateMap:
    """Unimodular change of basis identifying Z^n / relations with its normal form.

    y = U x diagonalises the relation lattice; torsion_idx/free_idx pick the
    surviving y-coordinates, diag the corresponding invariant factors.
    """

    ambient_rank: int
    U: IntMatrix
    Uinv: IntMatrix
    diag: tuple
    torsion_idx: tuple
    free_idx: tuple
    structure: FgAbelianGroup

    def to_canonical(self, x):
        x = [int(v) for v in x]
        if len(x) != self.ambient_rank:
            raise GroupError("ambient vector length mismatch")
        y = self.U.mul_vector(x)
        free = tuple(y[i] for i in self.free_idx)
        tors = tuple(y[i] % self.diag[i] for i in self.torsion_idx)
        return self.structure.element(free, tors)

    def lift(self, element):
        if element.owner != self.structure:
            raise GroupError("element does not belong to this quotient")
        y = [0] * self.ambient_rank
        for k, i in enumerate(self.free_idx):
            y[i] = element.free_coords[k]
        for k, i in enumerate(self.torsion_idx):
            y[i] = element.torsion_coords[k]
        return self.Uinv.mul_vector(y)


def cokernel_structure(relations: IntMatrix, ambient_rank: int):
    """Normal form of Z^ambient_rank / column span, with coordinate data."""
    if relations.rows != ambient_rank:
        raise GroupError("relations have %d rows, ambient rank is %d"
                         % (relations.rows, ambient_rank))
    snf = smith_normal_form(relations)
    n = ambient_rank
    diag = [0] * n
    for i in range(min(n, relations.cols)):
        diag[i] = snf.S[i, i]
    torsion_idx = tuple(i for i in range(n) if diag[i] >= 2)
    free_idx = tuple(i for i in range(n) if diag[i] == 0)
    structure = FgAbelianGroup(len(free_idx), tuple(diag[i] for i in torsion_idx))
    U = snf.U if n else IntMatrix.zero(0, 0)
    cmap = CoordinateMap(
        ambient_rank=n,
        U=U,
        Uinv=inverse_unimodular(U) if n else IntMatrix.zero(0, 0),
        diag=tuple(diag),
        torsion_idx=torsion_idx,
        free_idx=free_idx,
        structure=structure,
    )
    return structure, cmap


def relation_lattice(group: FgAbelianGroup) -> IntMatrix:
    """Columns spanning the relations of the canonical integer coordinates."""
    n = group.free_rank + len(group.torsion)
    cols = []
    for k, d in enumerate(group.torsion):
        col = [0] * n
        col[group.free_rank + k] = d
        cols.append(col)
    if not cols:
        return IntMatrix.zero(n, 0)
    return IntMatrix.from_columns(cols, rows=n)


def express(group: FgAbelianGroup, element: GroupElement, generators):
    """Coefficients a with element = sum a_j * generators[j], or None."""
    if element.owner != group:
        raise GroupError("element does not belong to the group")
    for g in generators:
        if g.owner != group:
            raise GroupError("generator does not belong to the group")
    n = group.free_rank + len(group.torsion)
    gen_cols = [list(g.int_coords()) for g in generators]
    rel = relation_lattice(group)
    cols = gen_cols + [list(rel.column(j)) for j in range(rel.cols)]
    if not cols:
        return () if element.is_zero else None
    A = IntMatrix.from_columns(cols, rows=n)
    sol = solve_in_lattice(A, element.int_coords())
    if sol is None:
        return None
    return tuple(sol[:len(generators)])


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism in canonical coordinates (columns = images of generators)."""

    domain: FgAbelianGroup
    codomain: FgAbelianGroup
    matrix: IntMatrix

    def __post_init__(self):
        nd = self.domain.free_rank + len(self.domain.torsion)
        nc = self.codomain.free_rank + len(self.codomain.torsion)
        if (self.matrix.rows, self.matrix.cols) != (nc, nd):
            raise GroupError("hom matrix shape mismatch")
        fc = self.codomain.free_rank
        reduced = IntMatrix.from_rows(
            [[self.matrix[i, j] if i < fc
              else self.matrix[i, j] % self.codomain.torsion[i - fc]
              for j in range(nd)] for i in range(nc)]) if nc and nd else self.matrix
        object.__setattr__(self, "matrix", reduced)
        # A torsion generator of order d must map to an element killed by d.
        for j, d in enumerate(self.domain.torsion):
            col = self.matrix.column(self.domain.free_rank + j)
            if any(col[i] != 0 for i in range(self.codomain.free_rank)):
                raise GroupError("torsion generator maps to infinite-order element")
            for k, dc in enumerate(self.codomain.torsion):
                if (d * col[self.codomain.free_rank + k]) % dc != 0:
                    raise GroupError("hom not well defined on torsion")

    @staticmethod
    def from_columns(domain, codomain, image_elements):
        cols = [list(e.int_coords()) for e in image_elements]
        n = codomain.free_rank + len(codomain.torsion)
        m = IntMatrix.from_columns(cols, rows=n) if cols else IntMatrix.zero(n, 0)
        return GroupHom(domain, codomain, m)

    def apply(self, element: GroupElement) -> GroupElement:
        if element.owner != self.domain:
            raise GroupError("element not in the domain")
        img = self.matrix.mul_vector(element.int_coords())
        f = self.codomain.free_rank
        return self.codomain.element(img[:f], img[f:])

    def compose(self, inner: "GroupHom") -> "GroupHom":
        if inner.codomain != self.domain:
            raise GroupError("composition domain mismatch")
        images = [self.apply(self.domain.element(
            inner.matrix.column(j)[:self.domain.free_rank],
            inner.matrix.column(j)[self.domain.free_rank:]))
            for j in range(inner.matrix.cols)]
        return GroupHom.from_columns(inner.domain, self.codomain, images)

    def free_block(self) -> IntMatrix:
        """Induced matrix on the free quotients (torsion discarded)."""
        rows = [[self.matrix[i, j] for j in range(self.domain.free_rank)]
                for i in range(self.codomain.free_rank)]
        if not rows:
            return IntMatrix.zero(self.codomain.free_rank, self.domain.free_rank)
        return IntMatrix.from_rows(rows)

    def kernel_structure(self) -> FgAbelianGroup:
        """Isomorphism type of the kernel."""
        nd = self.domain.free_rank + len(self.domain.torsion)
        rel_c = relation_lattice(self.codomain)
        stacked = self.matrix.hstack(rel_c)
        ker = kernel_basis(stacked)
        # x-parts of the kernel generate the preimage lattice of 0; its
        # quotient by the domain relations is ker(f).
        f = self.domain.free_rank
        gens = [self.domain.element(tuple(ker[i, j] for i in range(f)),
                                    tuple(ker[i, j] for i in range(f, nd)))
                for j in range(ker.cols)]
        return subgroup_structure(self.domain, gens)

    def cokernel(self) -> FgAbelianGroup:
        images = [self.apply(g) for g in self.domain.generators()]
        return quotient_by(self.codomain, images)

    def is_injective(self) -> bool:
        return self.kernel_structure().is_trivial

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.cokernel().is_trivial


def subgroup_structure(group: FgAbelianGroup, elements) -> FgAbelianGroup:
    """Isomorphism type of the subgroup generated by the elements."""
    n = group.free_rank + len(group.torsion)
    rel = relation_lattice(group)
    cols = [list(e.int_coords()) for e in elements]
    for e in elements:
        if e.owner != group:
            raise GroupError("element does not belong to the group")
    cols += [list(rel.column(j)) for j in range(rel.cols)]
    if not cols:
        return FgAbelianGroup.trivial()
    lattice = column_span_basis(IntMatrix.from_columns(cols, rows=n))
    if lattice.cols == 0:
        return FgAbelianGroup.trivial()
    # Quotient the lattice by the relation lattice, expressed in its basis.
    rcols = []
    for j in range(rel.cols):
        sol = solve_in_lattice(lattice, rel.column(j))
        rcols.append(list(sol))
    rel_in_basis = (IntMatrix.from_columns(rcols, rows=lattice.cols)
                    if rcols else IntMatrix.zero(lattice.cols, 0))
    return cokernel_structure(rel_in_basis, lattice.cols)[0]


def quotient_by(group: FgAbelianGroup, elements) -> FgAbelianGroup:
    """Normal form of group / <elements>."""
    n = group.free_rank + len(group.torsion)
    cols = [list(e.int_coords()) for e in elements]
    for e in elements:
        if e.owner != group:
            raise GroupError("element does not belong to the group")
    rel = relation_lattice(group)
    cols += [list(rel.column(j)) for j in range(rel.cols)]
    relations = IntMatrix.from_columns(cols, rows=n) if cols else IntMatrix.zero(n, 0)
    return cokernel_structure(relations, n)[0]


def symmetry_defect(orders) -> FgAbelianGroup:
    """Quotient group contributed by rotationally invariant tilings.

    One cyclic summand Z/n per symmetric tiling of order n; the result is the
    chain-level quotient of the full by the modified degree-0 chains, returned
    in invariant-factor normal form.
    """
    orders = [int(n) for n in orders]
    if any(n < 2 for n in orders):
        raise GroupError("symmetry orders must be >= 2")
    return from_divisors(orders)


@dataclass(frozen=True)
class SubquotientPresentation:
    """Homology group ker d_k / im d_{k+1} with canonical coordinates."""

    ambient_rank: int
    cycle_basis: IntMatrix
    boundary_in_cycle_coords: IntMatrix
    structure: FgAbelianGroup
    coordinate_map: CoordinateMap

    def class_of(self, cycle) -> GroupElement:
        cycle = [int(v) for v in cycle]
        if len(cycle) != self.ambient_rank:
            raise GroupError("chain has length %d, ambient rank is %d"
                             % (len(cycle), self.ambient_rank))
        coords = solve_in_lattice(self.cycle_basis, cycle)
        if coords is None:
            raise GroupError("chain is not a cycle")
        return self.coordinate_map.to_canonical(coords)

    def lift(self, element: GroupElement):
        """An ambient cycle representing the class."""
        coords = self.coordinate_map.lift(element)
        return self.cycle_basis.mul_vector(coords)

    def generator_cycles(self):
        return [self.lift(g) for g in self.structure.generators()]


def homology_presentation(d_k: IntMatrix, d_k1: IntMatrix) -> SubquotientPresentation:
    """Presentation of ker d_k / im d_{k+1}; rejects non-complexes."""
    if d_k.cols != d_k1.rows:
        raise GroupError("boundary shapes are incompatible")
    if not (d_k * d_k1).is_zero():
        raise GroupError("d_k * d_{k+1} != 0: corrupt chain complex")
    Z = kernel_basis(d_k)
    cols = []
    for j in range(d_k1.cols):
        sol = solve_in_lattice(Z, d_k1.column(j))
        assert sol is not None  # guaranteed by d*d = 0 and saturation of Z
        cols.append(list(sol))
    Y = IntMatrix.from_columns(cols, rows=Z.cols) if cols else IntMatrix.zero(Z.cols, 0)
    structure, cmap = cokernel_structure(Y, Z.cols)
    return SubquotientPresentation(
        ambient_rank=d_k.cols,
        cycle_basis=Z,
        boundary_in_cycle_coords=Y,
        structure=structure,
        coordinate_map=cmap,
    )


def induced_hom(pres: SubquotientPresentation, generator_cycles, image_cycles) -> GroupHom:
    """The endomorphism of pres.structure sending generator classes to image classes.

    Verified to be well defined: the generator classes must generate, and every
    relation among them must be satisfied by the images.
    """
    if len(generator_cycles) != len(image_cycles):
        raise GroupError("generator/image count mismatch")
    G = pres.structure
    gcls = [pres.class_of(c) for c in generator_cycles]
    icls = [pres.class_of(c) for c in image_cycles]
    n = G.free_rank + len(G.torsion)
    rel = relation_lattice(G)
    cols = [list(g.int_coords()) for g in gcls]
    cols += [list(rel.column(j)) for j in range(rel.cols)]
    A = IntMatrix.from_columns(cols, rows=n) if cols else IntMatrix.zero(n, 0)
    # Relations among the generators must map to relations among the images.
    relations = kernel_basis(A)
    for j in range(relations.cols):
        coeffs = relations.column(j)[:len(gcls)]
        acc = G.zero()
        for a, h in zip(coeffs, icls):
            acc = acc + h.scale(a)
        if not acc.is_zero:
            raise GroupError("images violate a relation among the generators")
    images = []
    for e in G.generators():
        sol = solve_in_lattice(A, e.int_coords())
        if sol is None:
            raise GroupError("generator cycles do not generate the homology group")
        acc = G.zero()
        for a, h in zip(sol[:len(gcls)], icls):
            acc = acc + h.scale(a)
        images.append(acc)
    return GroupHom.from_columns(G, G, images)
