import random

import pytest

from acutemesh import shapes
from acutemesh.fvector import (
    CombCorollaryReport,
    NotFull,
    NotRich,
    comb_corollary_check,
    corollary_ds_4d,
    dehn_sommerville,
    flag_count_inequality,
    is_full_subcomplex,
    isoperimetry_report,
    richness_obstruction,
    simplicial_neighborhood,
    vertex_boundary,
)
from acutemesh.simplicial import (
    BadLink,
    ComplexError,
    NotPure,
    SimplicialComplex,
    boundary_complex,
    build_complex,
    cone,
    euler_characteristic,
    induced_subcomplex,
    is_rich,
)


class TestDehnSommerville:
    def test_single_4_simplex(self):
        rep = dehn_sommerville(shapes.simplex_complex(4))
        assert rep.all_zero
        # hand check of the k=1 specialization: (2*10 - 10) = 3*10 - 6*5 + 10*1
        assert 2 * rep.f[1] - rep.f_boundary[1] == 3 * rep.f[2] - 6 * rep.f[3] + 10 * rep.f[4]

    def test_boundary_d5_closed(self, boundary_d5):
        rep = dehn_sommerville(boundary_d5, 4)
        assert rep.all_zero
        # k=2 check with empty boundary: 0 = -4*15 + 10*6 up to the identity
        assert -rep.f_boundary[2] == -4 * rep.f[3] + 10 * rep.f[4]

    def test_single_3_simplex(self):
        rep = dehn_sommerville(shapes.simplex_complex(3), 3)
        assert rep.all_zero

    def test_not_pure(self):
        K = build_complex([(0, 1, 2), (3, 4)])
        with pytest.raises(NotPure):
            dehn_sommerville(K)

    @pytest.mark.parametrize("make,m", [
        (lambda: shapes.simplex_complex(1), 1),
        (lambda: shapes.simplex_complex(2), 2),
        (lambda: shapes.simplex_complex(3), 3),
        (lambda: shapes.simplex_complex(4), 4),
        (lambda: shapes.boundary_simplex(3), 2),
        (lambda: shapes.boundary_simplex(4), 3),
        (lambda: shapes.boundary_simplex(5), 4),
        (lambda: shapes.cross_polytope_boundary(3), 2),
        (lambda: cone(shapes.boundary_simplex(4)), 4),
        (lambda: cone(shapes.simplex_complex(3)), 4),
        (lambda: shapes.freudenthal_torus(3, 3), 3),
    ])
    def test_residuals_vanish_on_manifold_corpus(self, make, m):
        assert dehn_sommerville(make(), m).all_zero

    def test_x543_with_m3(self, x543):
        assert dehn_sommerville(x543, 3).all_zero


class TestCorollary4d:
    def test_single_4_simplex(self):
        assert corollary_ds_4d(shapes.simplex_complex(4)) == (0, 0)

    def test_boundary_d5(self, boundary_d5):
        # 2*15 - 0 = 30 vs 3*20 - 6*15 + 10*6 = 30
        assert corollary_ds_4d(boundary_d5) == (0, 0)

    def test_cone_over_boundary_d4(self):
        assert corollary_ds_4d(cone(shapes.boundary_simplex(4))) == (0, 0)

    def test_rejects_wrong_dimension(self, x543):
        with pytest.raises(NotPure):
            corollary_ds_4d(x543)


class TestRichnessObstruction:
    def test_boundary_d5_violates_closed_bound(self, boundary_d5):
        rep = richness_obstruction(boundary_d5)
        assert rep.f0 == 6 and rep.chi == 2
        assert rep.closed
        assert rep.f0 - rep.chi == 4  # closed-case slack is -4
        assert rep.lhs == 12 and rep.rhs == 4 and rep.slack == -8
        assert not rep.closed_inequality_holds
        # the theorem forces a richness witness
        assert rep.rich_witness is not None
        assert rep.rich_witness.link_length == 3

    def test_single_4_simplex(self):
        rep = richness_obstruction(shapes.simplex_complex(4))
        assert (rep.lhs, rep.rhs, rep.slack) == (10, 12, 2)
        assert rep.rich and not rep.closed

    def test_deleted_facet_family(self, boundary_d5):
        # removing any facet must keep the contrapositive intact
        for skip in range(6):
            cells = [c for i, c in enumerate(boundary_d5.simplices(4)) if i != skip]
            K = build_complex(cells)
            rep = richness_obstruction(K)
            assert rep.slack >= 0 or not rep.rich


class TestFlagCount:
    def test_single_4_simplex(self):
        assert flag_count_inequality(shapes.simplex_complex(4)) == (10, 0)

    def test_boundary_d5_not_rich(self, boundary_d5):
        with pytest.raises(NotRich):
            flag_count_inequality(boundary_d5)

    def test_flags_equal_ten_f4_and_exceed_bound(self):
        for K in (shapes.simplex_complex(4), cone(shapes.boundary_simplex(4))):
            if is_rich(K) is not None:
                continue
            flags, bound = flag_count_inequality(K)
            assert flags == 10 * K.f_vector()[4]
            assert flags >= bound


class TestFullSubcomplex:
    def test_single_vertex_ok(self, x543):
        Y = induced_subcomplex(x543, [0])
        assert is_full_subcomplex(x543, Y) is None

    def test_two_endpoints_without_edge(self, x543):
        e = x543.simplices(1)[0]
        assert is_full_subcomplex(x543, set(e)) == e

    def test_whole_vertex_set_hull_is_everything(self, x543):
        hull = induced_subcomplex(x543, x543.vertices)
        assert hull == x543
        assert is_full_subcomplex(x543, hull) is None

    def test_induced_always_full(self, boundary_d5):
        Y = induced_subcomplex(boundary_d5, [0, 1, 2])
        assert is_full_subcomplex(boundary_d5, Y) is None


class TestSimplicialNeighborhood:
    def test_tet_vertex_is_cone_over_barycentric_link(self):
        from acutemesh.simplicial import are_isomorphic

        X = build_complex([(0, 1, 2, 3)])
        Y = induced_subcomplex(X, [0])
        N = simplicial_neighborhood(X, Y)
        assert N.complex.is_pure(3)
        assert (0,) in N.complex  # contains the vertex of Y (relabeled to 0)
        assert N.vertex_origin[0] == ("vertex", 0)
        # oracle: cone over the barycentric subdivision of the closed link
        # triangle, built by hand (3 corners, 3 edge points, 1 center)
        sd = build_complex(
            [(0, 3, 6), (1, 3, 6), (0, 4, 6), (2, 4, 6), (1, 5, 6), (2, 5, 6)]
        )
        oracle = cone(sd)
        assert N.complex.f_vector() == oracle.f_vector() == (8, 19, 18, 6)
        assert are_isomorphic(N.complex, oracle) is not None

    def test_closed_ambient_interior_vertices_equal_y(self, boundary_d5):
        Y = induced_subcomplex(boundary_d5, [0])
        N = simplicial_neighborhood(boundary_d5, Y)
        assert N.complex.is_pure(4)
        assert euler_characteristic(N.complex) == 1  # a 4-ball neighborhood
        bd = boundary_complex(N.complex)
        interior = set(N.complex.vertices) - set(bd.vertices)
        assert {N.vertex_origin[v] for v in interior} == {("vertex", 0)}

    def test_richness_preserved_on_600cell(self, cell600):
        K, _ = cell600
        for seed_verts in ([0], list(K.simplices(1)[0])):
            Y = induced_subcomplex(K, seed_verts)
            N = simplicial_neighborhood(K, Y)
            assert is_rich(N.complex) is None
            bd = boundary_complex(N.complex)
            interior = sorted(set(N.complex.vertices) - set(bd.vertices))
            assert [N.vertex_origin[v] for v in interior] == [
                ("vertex", v) for v in sorted(seed_verts)
            ]

    def test_not_full_raises(self, boundary_d5):
        Y = build_complex([(0,), (1,)])
        with pytest.raises(NotFull):
            simplicial_neighborhood(boundary_d5, Y)

    def test_barycenter_positions(self):
        X = build_complex([(0, 1, 2, 3)])
        Y = induced_subcomplex(X, [0])
        points = {0: (0, 0, 0), 1: (2, 0, 0), 2: (0, 2, 0), 3: (0, 0, 2)}
        N = simplicial_neighborhood(X, Y, points)
        for v, (kind, payload) in N.vertex_origin.items():
            if kind == "vertex":
                assert N.positions[v] == points[payload]
            else:
                k = len(payload)
                expected = tuple(
                    sum(points[u][i] for u in payload) / k for i in range(3)
                )
                assert tuple(map(float, N.positions[v])) == pytest.approx(expected)


class TestCombCorollary:
    def test_single_4_simplex(self):
        rep = comb_corollary_check(shapes.simplex_complex(4))
        assert (rep.lhs, rep.rhs) == (10, 32)
        assert rep.applicable and rep.holds

    def test_closed_input_flagged_inapplicable(self, boundary_d5):
        rep = comb_corollary_check(boundary_d5)
        assert not rep.applicable
        assert rep.rhs == 2

    def test_rich_4d_cone_over_x543(self, x543):
        # the cone over the rich 3-ball is a rich, PL-embeddable 4-ball
        K = cone(x543)
        assert is_rich(K) is None
        rep = comb_corollary_check(K)
        assert rep.applicable and rep.holds

    def test_neighborhood_of_vertex_in_rich_4_complex(self, x543):
        K = cone(x543)
        apex = max(K.vertices)
        Y = induced_subcomplex(K, [apex])
        N = simplicial_neighborhood(K, Y).complex
        assert N.is_pure(4)
        if is_rich(N) is None:
            rep = comb_corollary_check(N)
            assert rep.holds


class TestIsoperimetryHarness:
    def test_vertex_boundary(self, boundary_d5):
        omega = {0, 1}
        vb = vertex_boundary(boundary_d5, omega)
        assert vb == set(boundary_d5.vertices) - omega

    def test_report_fields(self, cell600):
        K, _ = cell600
        rep = isoperimetry_report(K, [0])
        assert rep["omega"] == 1
        assert rep["vertex_boundary"] == 12  # icosahedral link
        assert rep["f0"] > 0 and rep["fb2"] > 0


def test_theorem_main_contrapositive_on_corpus(boundary_d5):
    corpus = [
        shapes.simplex_complex(4),
        boundary_d5,
        cone(shapes.boundary_simplex(4)),
        cone(shapes.simplex_complex(3)),
    ]
    for K in corpus:
        try:
            rep = richness_obstruction(K)
        except (BadLink, ComplexError):
            continue
        assert not (rep.rich and rep.lhs > rep.rhs)
