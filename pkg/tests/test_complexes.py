import random

import pytest

from tilecohom.complexes import (
    MODE_RIGID,
    MODE_RIGID_MODIFIED,
    MODE_TRANSLATION,
    ChainMap,
    ComplexError,
    build_chain_complex,
    chain_map_from_spec,
    homology,
    substitution_homology_maps,
    validate_chain_map,
)
from tilecohom.exactalg import IntMatrix
from tilecohom.groups import FgAbelianGroup
from tilecohom.tilings import CellType, builtin, builtin_names, make_spec


def perturb(matrix, i, j, delta=1):
    rows = matrix.to_rows()
    rows[i][j] += delta
    return IntMatrix.from_rows(rows)


def spec_with_boundary(spec, degree, matrix):
    boundaries = dict(spec.boundaries)
    boundaries[degree] = matrix
    return make_spec(spec.name, spec.dimension, spec.geometry_mode,
                     spec.cells, boundaries, spec.substitution, spec.rotation,
                     spec.symmetric_tilings)


class TestBuild:
    def test_triangle_translation_shape(self):
        cplx = build_chain_complex(builtin("triangle-periodic-translation"),
                                   MODE_TRANSLATION)
        assert cplx.ranks == (1, 3, 2)  # 0 <- Z <- Z^3 <- Z^2 <- 0

    def test_penrose_modified_rescales_rows(self):
        spec = builtin("penrose-kite-dart")
        rigid = build_chain_complex(spec, MODE_RIGID)
        mod = build_chain_complex(spec, MODE_RIGID_MODIFIED)
        assert rigid.boundary[1].row(0) == (5, 0, 0, 0, 0, 0, 0)
        assert mod.boundary[1].row(0) == (1, 0, 0, 0, 0, 0, 0)
        assert rigid.boundary[1].row(1) == (0, -5, 0, 0, 0, 0, 0)
        assert mod.boundary[1].row(1) == (0, -1, 0, 0, 0, 0, 0)
        # other rows and the degree-2 boundary are untouched
        for i in range(2, 7):
            assert rigid.boundary[1].row(i) == mod.boundary[1].row(i)
        assert rigid.boundary[2].entries == mod.boundary[2].entries
        assert mod.generator_labels[0][0] == "5*sun"
        assert mod.generator_labels[0][2] == "ace"

    def test_trivial_symmetry_modified_equals_rigid(self):
        spec = make_spec(
            "flat", 2, "rigid",
            cells={0: (CellType("v", 0),),
                   1: (CellType("a", 1), CellType("b", 1)),
                   2: (CellType("f", 2),)},
            boundaries={1: IntMatrix.zero(1, 2),
                        2: IntMatrix.from_rows([[0], [0]])})
        rigid = build_chain_complex(spec, MODE_RIGID)
        mod = build_chain_complex(spec, MODE_RIGID_MODIFIED)
        assert rigid.boundary[1].entries == mod.boundary[1].entries
        assert rigid.boundary[2].entries == mod.boundary[2].entries
        assert rigid.generator_labels == mod.generator_labels

    def test_mode_spec_mismatch(self):
        with pytest.raises(ComplexError):
            build_chain_complex(builtin("penrose-kite-dart"), MODE_TRANSLATION)
        with pytest.raises(ComplexError):
            build_chain_complex(builtin("fibonacci"), MODE_RIGID)

    def test_orientation_reversing_cells_drop(self):
        # one reversing edge type: the chain group loses that generator
        spec = make_spec(
            "pent-like", 2, "rigid",
            cells={0: (CellType("p", 0), CellType("q", 0)),
                   1: (CellType("e", 1, reverses_orientation=True),),
                   2: (CellType("f", 2),)},
            boundaries={1: IntMatrix.from_rows([[1], [-1]]),
                        2: IntMatrix.from_rows([[5]])})
        cplx = build_chain_complex(spec, MODE_RIGID)
        assert cplx.ranks == (2, 0, 1)
        assert homology(cplx, 0).structure == FgAbelianGroup(2, ())
        assert homology(cplx, 1).structure.is_trivial
        assert homology(cplx, 2).structure == FgAbelianGroup(1, ())

    def test_non_integral_rescaling_rejected(self):
        spec = make_spec(
            "bad-divisibility", 2, "rigid",
            cells={0: (CellType("v", 0, symmetry=3),),
                   1: (CellType("e", 1),),
                   2: (CellType("f", 2),)},
            boundaries={1: IntMatrix.from_rows([[1]]),
                        2: IntMatrix.from_rows([[0]])})
        build_chain_complex(spec, MODE_RIGID)
        with pytest.raises(ComplexError):
            build_chain_complex(spec, MODE_RIGID_MODIFIED)

    def test_boundary_square_fuzz_detected(self):
        spec = builtin("penrose-kite-dart")
        bad = spec_with_boundary(spec, 2, perturb(spec.boundaries[2], 2, 0))
        with pytest.raises(ComplexError):
            build_chain_complex(bad, MODE_RIGID)


class TestHomology:
    def test_penrose_rigid(self):
        cplx = build_chain_complex(builtin("penrose-kite-dart"), MODE_RIGID)
        assert homology(cplx, 0).structure == FgAbelianGroup(2, (5,))
        h1 = homology(cplx, 1)
        assert h1.structure == FgAbelianGroup(1, ())
        # generated by the class of E3 + E4
        cls = h1.class_of((0, 0, 1, 1, 0, 0, 0))
        assert cls.free_coords in ((1,), (-1,))

    def test_penrose_modified(self):
        cplx = build_chain_complex(builtin("penrose-kite-dart"), MODE_RIGID_MODIFIED)
        assert [homology(cplx, k).structure for k in range(3)] == [
            FgAbelianGroup(2, ()), FgAbelianGroup(1, ()), FgAbelianGroup(1, ())]

    def test_degree_out_of_range(self):
        cplx = build_chain_complex(builtin("fibonacci"), MODE_TRANSLATION)
        with pytest.raises(ComplexError):
            homology(cplx, 2)
        with pytest.raises(ComplexError):
            homology(cplx, -1)

    def test_euler_characteristic_conservation(self):
        for name in builtin_names():
            spec = builtin(name)
            modes = ([MODE_TRANSLATION] if spec.geometry_mode == "translation"
                     else [MODE_RIGID, MODE_RIGID_MODIFIED])
            for mode in modes:
                cplx = build_chain_complex(spec, mode)
                chi_cells = sum((-1) ** k * r for k, r in enumerate(cplx.ranks))
                chi_hom = sum((-1) ** k * homology(cplx, k).structure.free_rank
                              for k in range(cplx.top_dim + 1))
                assert chi_cells == chi_hom, (name, mode)

    def test_top_homology_is_fundamental_class(self):
        for name in builtin_names():
            spec = builtin(name)
            if spec.dimension != 2:
                continue
            mode = (MODE_TRANSLATION if spec.geometry_mode == "translation"
                    else MODE_RIGID)
            cplx = build_chain_complex(spec, mode)
            top = homology(cplx, 2)
            assert top.structure == FgAbelianGroup(1, ()), name
            # coefficient one on every 2-cell generates
            cls = top.class_of((1,) * cplx.ranks[2])
            assert cls.free_coords in ((1,), (-1,)), name

    def test_rigid_vs_modified_differ_only_at_symmetric_degrees(self):
        for name in ("triangle-periodic-rigid", "square-periodic-rigid",
                     "penrose-kite-dart"):
            spec = builtin(name)
            rigid = build_chain_complex(spec, MODE_RIGID)
            mod = build_chain_complex(spec, MODE_RIGID_MODIFIED)
            # only degree-0 generators rescale for the 2D corpus
            assert rigid.boundary[2].entries == mod.boundary[2].entries
            assert rigid.generator_labels[1] == mod.generator_labels[1]
            assert rigid.generator_labels[2] == mod.generator_labels[2]


class TestChainMap:
    def test_identity_chain_map(self):
        cplx = build_chain_complex(builtin("triangle-periodic-rigid"), MODE_RIGID)
        f = ChainMap(cplx, cplx, tuple(IntMatrix.identity(r) for r in cplx.ranks))
        assert validate_chain_map(f).ok

    def test_penrose_substitution_chain_data(self):
        spec = builtin("penrose-kite-dart")
        for mode in (MODE_RIGID, MODE_RIGID_MODIFIED):
            f = chain_map_from_spec(spec, mode)
            report = validate_chain_map(f)
            assert report.ok, (mode, str(report))

    def test_perturbed_map_fails_with_location(self):
        cplx = build_chain_complex(builtin("fibonacci"), MODE_TRANSLATION)
        mats = [IntMatrix.identity(3), IntMatrix.identity(2)]
        mats[1] = perturb(mats[1], 0, 0)
        report = validate_chain_map(ChainMap(cplx, cplx, tuple(mats)))
        assert not report.ok
        assert "degree 1" in report.violations[0]

    def test_shape_mismatch_reported(self):
        a = build_chain_complex(builtin("fibonacci"), MODE_TRANSLATION)
        b = build_chain_complex(builtin("thue-morse"), MODE_TRANSLATION)
        report = validate_chain_map(ChainMap(a, b, (IntMatrix.identity(3),
                                                    IntMatrix.identity(2))))
        assert not report.ok


class TestSubstitutionMaps:
    def test_penrose_all_modes(self):
        spec = builtin("penrose-kite-dart")
        for mode in (MODE_RIGID, MODE_RIGID_MODIFIED):
            maps = substitution_homology_maps(spec, mode)
            assert all(h.is_isomorphism() for h in maps.values()), mode

    def test_penrose_omega1_reverses_orientation(self):
        spec = builtin("penrose-kite-dart")
        cplx = build_chain_complex(spec, MODE_RIGID)
        h1 = homology(cplx, 1)
        w1 = substitution_homology_maps(spec, MODE_RIGID)[1]
        gen = h1.class_of((0, 0, 1, 1, 0, 0, 0))
        assert w1.apply(gen) == -gen

    def test_homology_map_kind(self):
        maps = substitution_homology_maps(builtin("fibonacci"), MODE_TRANSLATION)
        assert maps[0].matrix.to_rows() == [[1, 1], [1, 0]]
        assert maps[1].matrix.to_rows() == [[1]]

    def test_modified_needs_chain_data(self):
        with pytest.raises(ComplexError):
            substitution_homology_maps(builtin("triangle-solenoid-rigid"),
                                       MODE_RIGID_MODIFIED)

    def test_no_substitution_data(self):
        with pytest.raises(ComplexError):
            substitution_homology_maps(builtin("triangle-periodic-rigid"),
                                       MODE_RIGID)


class TestBoundaryFuzz:
    def test_random_single_entry_fuzz_is_detected(self):
        rng = random.Random(424242)
        spec = builtin("square-periodic-rigid")
        for _ in range(12):
            degree = rng.choice([1, 2])
            b = spec.boundaries[degree]
            i, j = rng.randrange(b.rows), rng.randrange(b.cols)
            bad = spec_with_boundary(spec, degree, perturb(b, i, j))
            with pytest.raises(ComplexError):
                build_chain_complex(bad, MODE_RIGID)
