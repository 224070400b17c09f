import pytest

from morsenorm import (
    ComplexError,
    Simplex,
    SimplicialComplex,
    build_complex,
    hasse_diagram,
)

from helpers import sx, triangle_boundary


class TestSimplex:
    def test_vertices_sorted_on_construction(self):
        assert Simplex([2, 0, 1]).vertices == (0, 1, 2)

    def test_dim(self):
        assert sx(3).dim == 0
        assert sx(0, 1, 2, 3).dim == 3

    def test_rejects_empty(self):
        with pytest.raises(ComplexError, match="empty simplex"):
            Simplex([])

    def test_rejects_repeated_vertex(self):
        with pytest.raises(ComplexError, match="repeated vertex"):
            Simplex([1, 1])

    def test_rejects_negative_vertex(self):
        with pytest.raises(ComplexError, match="negative vertex"):
            Simplex([-1, 0])

    def test_rejects_non_integer_vertex(self):
        with pytest.raises(ComplexError):
            Simplex([0.5, 1])
        with pytest.raises(ComplexError):
            Simplex([True])

    def test_equality_is_structural(self):
        assert sx(0, 1) == Simplex((1, 0))
        assert sx(0, 1) != sx(0, 2)

    def test_canonical_order_is_dimension_then_vertices(self):
        got = sorted([sx(0, 2), sx(2), sx(0, 1), sx(0), sx(1, 2), sx(1)])
        assert got == [sx(0), sx(1), sx(2), sx(0, 1), sx(0, 2), sx(1, 2)]

    def test_faces_drop_one_vertex(self):
        assert sx(0, 1, 2).faces() == (sx(0, 1), sx(0, 2), sx(1, 2))
        assert sx(4).faces() == ()

    def test_immutable(self):
        with pytest.raises(AttributeError):
            sx(0).vertices = (1,)


class TestBuildComplex:
    def test_closure_of_a_single_triangle(self):
        cx = build_complex([[0, 1, 2]])
        assert len(cx) == 7
        assert sx(0, 1, 2) in cx and sx(0, 2) in cx and sx(1) in cx

    def test_triangle_boundary(self):
        cx = triangle_boundary()
        assert len(cx) == 6
        assert sx(0, 1, 2) not in cx

    def test_duplicate_facets_and_faces_collapse(self):
        cx = build_complex([[0, 1], [1, 0], [0], [0, 1, 2], [1, 2]])
        assert cx == build_complex([[0, 1, 2]])

    def test_facet_order_is_irrelevant(self):
        assert build_complex([[2, 3], [0, 1, 2]]) == build_complex([[0, 1, 2], [3, 2]])

    def test_empty_facet_list_rejected(self):
        with pytest.raises(ComplexError, match="empty complex"):
            build_complex([])

    def test_degenerate_facet_rejected(self):
        with pytest.raises(ComplexError, match="degenerate facet"):
            build_complex([[0, 1, 1]])

    def test_single_vertex(self):
        cx = build_complex([[5]])
        assert len(cx) == 1 and cx.dim == 0


class TestComplexLookups:
    def test_immediate_faces(self):
        cx = build_complex([[0, 1, 2]])
        assert cx.immediate_faces(sx(0, 1, 2)) == {sx(0, 1), sx(0, 2), sx(1, 2)}
        assert cx.immediate_faces(sx(0)) == frozenset()

    def test_immediate_cofaces(self):
        cx = triangle_boundary()
        assert cx.immediate_cofaces(sx(0)) == {sx(0, 1), sx(0, 2)}
        assert cx.immediate_cofaces(sx(0, 1)) == frozenset()

    def test_unknown_simplex_rejected(self):
        cx = triangle_boundary()
        with pytest.raises(ComplexError, match="unknown simplex"):
            cx.immediate_faces(sx(0, 1, 2))
        with pytest.raises(ComplexError, match="unknown simplex"):
            cx.immediate_cofaces(sx(7))

    def test_iteration_is_canonical(self):
        cx = build_complex([[1, 2], [0, 2], [0, 1]])
        assert list(cx) == [sx(0), sx(1), sx(2), sx(0, 1), sx(0, 2), sx(1, 2)]

    def test_face_coface_duality(self):
        cx = build_complex([[0, 1, 2], [2, 3]])
        for s in cx:
            for f in cx.immediate_faces(s):
                assert s in cx.immediate_cofaces(f)
            for t in cx.immediate_cofaces(s):
                assert s in cx.immediate_faces(t)

    def test_constructor_requires_downward_closure(self):
        with pytest.raises(ComplexError, match="missing face"):
            SimplicialComplex([sx(0, 1)])


class TestHasseDiagram:
    def test_counts_on_small_complexes(self):
        assert hasse_diagram(build_complex([[0]])).n_edges == 0
        assert hasse_diagram(triangle_boundary()).n_edges == 6
        assert hasse_diagram(build_complex([[0, 1, 2]])).n_edges == 9

    def test_edge_count_formula(self):
        # every simplex of dimension d >= 1 contributes d + 1 edges
        for facets in ([[0, 1, 2], [2, 3]], [[0, 1, 2, 3]], [[0], [1]]):
            cx = build_complex(facets)
            expected = sum(s.dim + 1 for s in cx if s.dim >= 1)
            assert hasse_diagram(cx).n_edges == expected

    def test_edges_go_coface_to_face_and_unmatched(self):
        cx = build_complex([[0, 1, 2]])
        dg = hasse_diagram(cx)
        assert dg.n_matched == 0
        for u, v, matched in dg.edges():
            assert not matched
            assert v in cx.immediate_faces(u)

    def test_nodes_are_all_simplices_in_order(self):
        cx = build_complex([[0, 1, 2], [1, 3]])
        assert hasse_diagram(cx).nodes == cx.simplices
