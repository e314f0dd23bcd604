import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acutemesh import refdata, shapes
from acutemesh.simplicial import (
    BadLink,
    CliqueTooLarge,
    DegenerateSimplex,
    DuplicateSimplex,
    NonPseudomanifold,
    NotPure,
    SimplexNotFound,
    are_isomorphic,
    boundary_complex,
    build_complex,
    complex_from_edges,
    complex_from_json_dict,
    complex_to_json_dict,
    cone,
    euler_characteristic,
    f_vector,
    find_empty_square,
    induced_subcomplex,
    interior_simplices,
    is_flag,
    is_rich,
    link,
)


class TestBuildComplex:
    def test_single_tetrahedron(self):
        K = build_complex([(0, 1, 2, 3)])
        assert f_vector(K) == (4, 6, 4, 1)

    def test_five_tet_cube(self, five_tet_cube):
        K, _ = five_tet_cube
        assert f_vector(K) == (8, 18, 16, 5)

    def test_empty_triangle_closure_does_not_invent(self):
        K = build_complex([(0, 1), (1, 2), (0, 2)])
        assert f_vector(K) == (3, 3)

    def test_duplicate_simplex(self):
        with pytest.raises(DuplicateSimplex):
            build_complex([(0, 1, 2), (2, 1, 0)])

    def test_degenerate_simplex(self):
        with pytest.raises(DegenerateSimplex):
            build_complex([(0, 1, 1)])

    def test_face_of_other_input_tolerated(self):
        K = build_complex([(0, 1, 2, 3), (0, 1, 2)])
        assert f_vector(K) == (4, 6, 4, 1)


class TestFVector:
    def test_full_simplex(self):
        assert f_vector(shapes.simplex_complex(4)) == (5, 10, 10, 5, 1)

    def test_boundary_of_5_simplex(self):
        assert f_vector(shapes.boundary_simplex(5)) == (6, 15, 20, 15, 6)

    def test_x543(self, x543):
        assert f_vector(x543) == (116, 678, 1106, 543)


class TestEuler:
    def test_x543_is_ball(self, x543):
        assert euler_characteristic(x543) == 1

    def test_boundary_d5_is_sphere(self, boundary_d5):
        assert euler_characteristic(boundary_d5) == 2

    def test_torus_4d(self):
        T = shapes.freudenthal_torus(dim=4, k=3)
        assert euler_characteristic(T) == 0
        assert T.is_pure(4)


class TestLink:
    def test_600cell_vertex_link_is_icosahedron(self, cell600):
        K, _ = cell600
        assert link(K, (0,)).complex.f_vector() == (12, 30, 20)

    def test_600cell_edge_link_is_pentagon(self, cell600):
        K, _ = cell600
        e = K.simplices(1)[0]
        L = link(K, e).complex
        assert L.f_vector() == (5, 5)
        assert all(len(L.adjacency()[v]) == 2 for v in L.vertices)

    def test_link_of_triangle_in_boundary_d5(self, boundary_d5):
        L = link(boundary_d5, (0, 1, 2)).complex
        # the complementary triangle's boundary: a 3-cycle
        assert L.f_vector() == (3, 3)

    def test_link_missing_simplex(self, boundary_d5):
        with pytest.raises(SimplexNotFound):
            link(boundary_d5, (0, 1, 2, 3, 4, 5))

    def test_link_relabeling_map(self, boundary_d5):
        res = link(boundary_d5, (0,))
        assert sorted(res.to_parent) == [1, 2, 3, 4, 5]


class TestBoundary:
    def test_single_4_simplex(self):
        bd = boundary_complex(shapes.simplex_complex(4))
        assert bd.f_vector() == (5, 10, 10, 5)

    def test_closed_manifold_has_empty_boundary(self, boundary_d5):
        assert boundary_complex(boundary_d5).dim == -1

    def test_x543_boundary_is_2_sphere(self, x543):
        bd = boundary_complex(x543)
        assert bd.f_vector() == (22, 60, 40)
        assert euler_characteristic(bd) == 2

    def test_not_pure(self):
        K = build_complex([(0, 1, 2), (3, 4)])
        with pytest.raises(NotPure):
            boundary_complex(K)

    def test_non_pseudomanifold(self):
        K = build_complex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
        with pytest.raises(NonPseudomanifold):
            boundary_complex(K)

    @pytest.mark.parametrize("make", [
        lambda: shapes.simplex_complex(3),
        lambda: shapes.boundary_simplex(4),
        lambda: shapes.cross_polytope_boundary(3),
    ])
    def test_boundary_of_boundary_is_empty(self, make):
        K = make()
        bd = boundary_complex(K)
        if bd.dim >= 0:
            assert boundary_complex(bd).dim == -1


class TestInteriorSimplices:
    def test_single_tet_has_no_interior_edges(self):
        assert interior_simplices(build_complex([(0, 1, 2, 3)]), 1) == []

    def test_x543_interior_edge_count(self, x543):
        assert len(interior_simplices(x543, 1)) == 678 - 60

    def test_w_interior(self, five_tet_cube):
        K, _ = five_tet_cube
        # the central cell's edges are all cube face-diagonals, on the boundary
        assert interior_simplices(K, 1) == []
        assert len(interior_simplices(K, 2)) == 4


class TestFlag:
    def test_empty_triangle_witness(self):
        assert is_flag(build_complex([(0, 1), (1, 2), (0, 2)])) == (0, 1, 2)

    def test_x543_is_flag(self, x543):
        assert is_flag(x543) is None

    def test_single_tet_is_flag(self):
        assert is_flag(build_complex([(0, 1, 2, 3)])) is None

    def test_missing_tetrahedron_witness(self):
        K = build_complex([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
        assert is_flag(K) == (0, 1, 2, 3)


class TestEmptySquare:
    def test_x543_has_none(self, x543):
        assert find_empty_square(x543) is None

    def test_four_cycle(self):
        K = build_complex([(0, 1), (1, 2), (2, 3), (0, 3)])
        a, b, c, d = find_empty_square(K)
        adj = K.adjacency()
        assert b in adj[a] and c in adj[b] and d in adj[c] and a in adj[d]
        assert c not in adj[a] and d not in adj[b]

    def test_octahedron_equatorial_square(self):
        K = shapes.cross_polytope_boundary(3)
        assert find_empty_square(K) is not None


class TestRich:
    def test_x543_is_rich(self, x543):
        assert is_rich(x543) is None

    def test_boundary_d5_witness_is_short_triangle_link(self, boundary_d5):
        witness = is_rich(boundary_d5)
        assert witness is not None
        assert len(witness.simplex) == 3
        assert witness.link_length == 3

    def test_single_4_simplex_vacuously_rich(self):
        assert is_rich(shapes.simplex_complex(4)) is None

    def test_bad_link(self):
        # two triangle cones sharing an apex: the apex is interior (every
        # edge at it lies in two triangles) but its link is two 3-cycles
        K = build_complex(
            [(6, 0, 1), (6, 1, 2), (6, 0, 2), (6, 3, 4), (6, 4, 5), (6, 3, 5)]
        )
        with pytest.raises(BadLink):
            is_rich(K)

    def test_dimension_too_low(self):
        with pytest.raises(NotPure):
            is_rich(build_complex([(0, 1)]))


class TestIsomorphism:
    def test_random_relabeling(self, x543):
        rng = random.Random(7)
        perm = list(x543.vertices)
        rng.shuffle(perm)
        relabeled = build_complex(
            [tuple(perm[v] for v in c) for c in x543.simplices(3)]
        )
        iso = are_isomorphic(x543, relabeled)
        assert iso is not None
        for c in x543.simplices(3):
            assert tuple(sorted(iso[v] for v in c)) in relabeled

    def test_appendix_complex_is_x543(self, x543, appendix_complex):
        assert are_isomorphic(appendix_complex, x543) is not None

    def test_different_f_vectors(self, x543):
        cells = x543.simplices(3)
        smaller = build_complex(cells[:-1])
        assert are_isomorphic(x543, smaller) is None

    def test_reflexive_on_corpus(self, boundary_d5, five_tet_cube):
        for K in (boundary_d5, five_tet_cube[0], shapes.simplex_complex(3)):
            iso = are_isomorphic(K, K)
            assert iso is not None

    def test_same_f_vector_not_isomorphic(self):
        # two graphs with f=(6,6): a hexagon vs two triangles
        hexagon = build_complex([(i, (i + 1) % 6) for i in range(6)])
        triangles = build_complex(
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        assert are_isomorphic(hexagon, triangles) is None


class TestComplexFromEdges:
    def test_appendix_edges(self, appendix_complex):
        assert appendix_complex.f_vector() == (116, 678, 1106, 543)

    def test_complete_graph_k4(self):
        K = complex_from_edges(4, list(combinations(range(4), 2)))
        assert f_vector(K) == (4, 6, 4, 1)

    def test_five_cycle(self):
        K = complex_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert f_vector(K) == (5, 5)

    def test_five_clique_rejected(self):
        with pytest.raises(CliqueTooLarge):
            complex_from_edges(5, list(combinations(range(5), 2)))

    def test_isolated_vertices_kept(self):
        K = complex_from_edges(4, [(0, 1)])
        assert f_vector(K) == (4, 1)


class TestJsonInterchange:
    def test_round_trip(self, five_tet_cube):
        K, _ = five_tet_cube
        doc = complex_to_json_dict(K)
        K2 = complex_from_json_dict(doc)
        assert K2 == K

    def test_sorted_output(self, x543):
        doc = complex_to_json_dict(x543)
        sims = doc["maximal_simplices"]
        assert sims == sorted(sims)
        assert all(s == sorted(s) for s in sims)


# -- properties ----------------------------------------------------------

small_complexes = st.lists(
    st.lists(st.integers(0, 7), min_size=1, max_size=5, unique=True).map(
        lambda s: tuple(sorted(s))
    ),
    min_size=1,
    max_size=8,
    unique=True,
)


@settings(max_examples=80, deadline=None)
@given(small_complexes)
def test_face_closure_property(maximal):
    try:
        K = build_complex(maximal)
    except DuplicateSimplex:
        return
    for d in range(1, K.dim + 1):
        for s in K.simplices(d):
            for f in combinations(s, d):
                assert f in K
    # incidence index consistent with simplex sets
    cof = K.cofacets()
    for s, above in cof.items():
        for t in above:
            assert set(s) < set(t) and len(t) == len(s) + 1


@settings(max_examples=40, deadline=None)
@given(small_complexes)
def test_isomorphism_reflexive_property(maximal):
    try:
        K = build_complex(maximal)
    except DuplicateSimplex:
        return
    iso = are_isomorphic(K, K)
    assert iso is not None
    for s in K.all_simplices():
        assert tuple(sorted(iso[v] for v in s)) in K


def test_flag_no_square_implies_rich_on_corpus(x543, cell600):
    for K in (x543, cell600[0]):
        assert is_flag(K) is None
        assert find_empty_square(K) is None
        assert is_rich(K) is None


def test_induced_subcomplex_is_full(x543):
    verts = x543.vertices[:30]
    sub = induced_subcomplex(x543, verts)
    for s in x543.all_simplices():
        if set(s) <= set(verts):
            assert s in sub


def test_cone_over_boundary_d4():
    # a 4-ball with five facets: each boundary facet coned to the apex
    K = cone(shapes.boundary_simplex(4))
    assert f_vector(K) == (6, 15, 20, 15, 5)
    assert boundary_complex(K) == shapes.boundary_simplex(4)
