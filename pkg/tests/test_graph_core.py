import pytest
from hypothesis import given, settings, strategies as st

from helpers import brute_alpha, brute_dominating, brute_gamma
from swapsets import (
    Graph,
    GraphParseError,
    SwapCertificate,
    cartesian_product,
    certificate_violations,
    complete_graph,
    cycle_graph,
    domination_number,
    format_graph,
    grid_graph,
    has_dominating_set,
    independence_number,
    is_connected,
    is_dominating,
    is_independent,
    is_strong_graph,
    is_tree,
    matching_between,
    parse_graph,
    path_graph,
    star_graph,
    subdivided_doubled_triangle,
    verify_certificate,
)
from swapsets.graph_core import (
    classify_stems,
    connected_components,
    lex_least_matching,
    mask_of,
    members_of,
    product_coords,
    product_index,
)


def random_graphs(max_n=7):
    """Connected graphs drawn by keeping a random subset of complete-graph
    edges plus a random spanning tree to force connectivity."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=2, max_value=max_n))
        edges = set()
        for v in range(1, n):
            edges.add((draw(st.integers(min_value=0, max_value=v - 1)), v))
        for u in range(n):
            for v in range(u + 1, n):
                if draw(st.booleans()):
                    edges.add((u, v))
        return Graph(n, sorted(edges))

    return build()


class TestGraphBasics:
    def test_construction_normalizes_edges(self):
        g = Graph(3, [(2, 0), (0, 1)])
        assert g.edges == ((0, 1), (0, 2))
        assert g.neighbors(0) == (1, 2)
        assert g.degree(0) == 2 and g.degree(1) == 1

    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 1), (1, 0)])

    def test_masks(self):
        g = path_graph(4)
        assert g.open_mask(1) == 0b101
        assert g.closed_mask(1) == 0b111
        assert mask_of([0, 3], 4) == 0b1001
        assert members_of(0b1010) == frozenset({1, 3})

    def test_equality_and_hash(self):
        assert path_graph(3) == Graph(3, [(1, 2), (0, 1)])
        assert hash(path_graph(3)) == hash(Graph(3, [(1, 2), (0, 1)]))
        assert path_graph(3) != cycle_graph(3)


class TestParseFormat:
    def test_round_trip(self):
        g = grid_graph(3, 2)
        assert parse_graph(format_graph(g)) == g

    def test_comments_and_blanks(self):
        g = parse_graph("# a path\n\n3 2\n0 1\n\n# middle\n1 2\n")
        assert g == path_graph(3)

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("3\n", 1),
        ("2 1\n0 5\n", 2),
        ("2 1\n1 1\n", 2),
        ("3 2\n0 1\n", 1),
        ("2 2\n0 1\n1 0\n", 1),
        ("x y\n", 1),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphParseError) as exc:
            parse_graph(text)
        assert exc.value.line_no == line

    @settings(derandomize=True, max_examples=40)
    @given(random_graphs())
    def test_round_trip_property(self, g):
        assert parse_graph(format_graph(g)) == g


class TestGenerators:
    def test_shapes(self):
        assert path_graph(5).edge_count() == 4
        assert cycle_graph(5).edge_count() == 5
        assert star_graph(4).edge_count() == 4 and star_graph(4).n == 5
        assert complete_graph(4).edge_count() == 6
        g = grid_graph(4, 3)
        assert g.n == 12 and g.edge_count() == 4 * 2 + 3 * 3

    def test_grid_vertex_layout(self):
        g = grid_graph(3, 2)
        assert g.has_edge(0, 1)
        assert g.has_edge(0, 2)
        assert not g.has_edge(1, 2)

    def test_nine_vertex_graph(self):
        g = subdivided_doubled_triangle()
        assert g.n == 9 and g.edge_count() == 12
        assert all(g.degree(v) == 4 for v in range(3))
        assert all(g.degree(v) == 2 for v in range(3, 9))


class TestPredicates:
    def test_dominating(self):
        g = path_graph(4)
        assert is_dominating(g, [1, 2])
        assert is_dominating(g, [0, 2])
        assert not is_dominating(g, [0, 1])

    def test_independent(self):
        g = cycle_graph(5)
        assert is_independent(g, [0, 2])
        assert not is_independent(g, [0, 1])

    def test_connectivity(self):
        assert is_connected(path_graph(6))
        assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
        comps = connected_components(Graph(4, [(0, 1), (2, 3)]))
        assert sorted(map(sorted, comps)) == [[0, 1], [2, 3]]

    def test_is_tree(self):
        assert is_tree(path_graph(5))
        assert is_tree(star_graph(6))
        assert not is_tree(cycle_graph(4))
        assert not is_tree(Graph(3, [(0, 1)]))

    def test_stems(self):
        assert classify_stems(path_graph(2)) == ("weak", "weak")
        kinds = classify_stems(star_graph(3))
        assert kinds[0] == "strong"
        assert not is_strong_graph(path_graph(5))
        assert is_strong_graph(star_graph(2))
        spider = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
        assert not is_strong_graph(spider)


class TestMatching:
    def test_perfect_matching_found(self):
        g = cycle_graph(6)
        m = matching_between(g, [0, 3], [1, 4])
        assert m is not None and len(m) == 2

    def test_no_matching(self):
        g = star_graph(3)
        assert matching_between(g, [1, 2], [0, 3]) is None

    def test_lex_least_is_least(self):
        g = cycle_graph(4)
        assert lex_least_matching(g, [0, 2], [1, 3]) == ((0, 1), (2, 3))

    @settings(derandomize=True, max_examples=40)
    @given(random_graphs(max_n=6), st.data())
    def test_matching_symmetry(self, g, data):
        k = data.draw(st.integers(min_value=1, max_value=g.n // 2))
        verts = data.draw(st.permutations(range(g.n)))
        a, b = verts[:k], verts[k:2 * k]
        forward = matching_between(g, a, b)
        backward = matching_between(g, b, a)
        assert (forward is None) == (backward is None)


class TestSwapCertificate:
    def good(self):
        return SwapCertificate.build([0, 2], [1, 3], [(0, 1), (2, 3)])

    def test_verifies_on_path(self):
        assert verify_certificate(path_graph(4), self.good())

    def test_json_round_trip(self):
        cert = self.good()
        assert SwapCertificate.from_json_dict(cert.to_json_dict()) == cert

    def test_malformed_json_rejected(self):
        with pytest.raises(ValueError):
            SwapCertificate.from_json_dict({"d": [0]})

    def test_violation_catalog(self):
        g = path_graph(4)
        overlap = SwapCertificate.build([0, 1], [1, 3], [(0, 1), (1, 3)])
        assert any(v.startswith("sets-not-disjoint") for v in certificate_violations(g, overlap))
        nondom = SwapCertificate.build([0, 1], [2, 3], [(0, 2)])
        probs = certificate_violations(g, nondom)
        assert any(v.startswith("matching-size-mismatch") for v in probs)
        assert "d-not-dominating" in probs
        nonedge = SwapCertificate.build([0, 2], [1, 3], [(0, 3), (2, 1)])
        assert any(v.startswith("pair-not-an-edge") for v in certificate_violations(g, nonedge))
        out = SwapCertificate.build([0, 9], [1, 3], [(0, 1), (9, 3)])
        assert certificate_violations(g, out) == ("vertex-out-of-range:9",)
        stranger = SwapCertificate.build([0, 2], [1, 3], [(0, 1), (3, 3)])
        probs = certificate_violations(g, stranger)
        assert any(v.startswith("matched-vertex-not-in-d:") for v in probs)


class TestInvariantNumbers:
    @pytest.mark.parametrize("g,alpha", [
        (path_graph(4), 2),
        (path_graph(5), 3),
        (cycle_graph(5), 2),
        (complete_graph(4), 1),
        (star_graph(3), 3),
        (subdivided_doubled_triangle(), 6),
    ])
    def test_independence_number(self, g, alpha):
        assert independence_number(g) == alpha

    @pytest.mark.parametrize("g,gamma", [
        (path_graph(4), 2),
        (path_graph(7), 3),
        (cycle_graph(5), 2),
        (star_graph(5), 1),
        (grid_graph(3, 3), 3),
        (grid_graph(4, 4), 4),
    ])
    def test_domination_number(self, g, gamma):
        assert domination_number(g) == gamma

    def test_has_dominating_set_threshold(self):
        g = path_graph(7)
        assert not has_dominating_set(g, 2)
        assert has_dominating_set(g, 3)
        assert not has_dominating_set(g, -1)
        assert not has_dominating_set(g, 0)

    @settings(derandomize=True, max_examples=30)
    @given(random_graphs(max_n=6))
    def test_numbers_match_brute_force(self, g):
        assert independence_number(g) == brute_alpha(g)
        assert domination_number(g) == brute_gamma(g)

    @settings(derandomize=True, max_examples=30)
    @given(random_graphs(max_n=7))
    def test_gamma_at_most_alpha(self, g):
        assert domination_number(g) <= independence_number(g)

    @settings(derandomize=True, max_examples=30)
    @given(random_graphs(max_n=7), st.data())
    def test_dominating_predicate_against_brute(self, g, data):
        s = data.draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
        assert is_dominating(g, s) == brute_dominating(g, s)


class TestCartesianProduct:
    def test_c4_as_product(self):
        p2 = path_graph(2)
        prod = cartesian_product(p2, p2)
        assert prod.n == 4 and prod.edge_count() == 4
        assert all(prod.degree(v) == 2 for v in range(4))

    def test_edge_count_formula(self):
        g, h = path_graph(3), cycle_graph(4)
        prod = cartesian_product(g, h)
        assert prod.n == 12
        assert prod.edge_count() == g.n * h.edge_count() + h.n * g.edge_count()

    def test_index_coords_round_trip(self):
        h = cycle_graph(5)
        for a in range(3):
            for b in range(5):
                assert product_coords(h, product_index(h, a, b)) == (a, b)

    def test_grid_is_path_product(self):
        prod = cartesian_product(path_graph(4), path_graph(3))
        assert prod == grid_graph(4, 3)
