import pytest
from hypothesis import given, settings

from swapsets import (
    ContractError,
    FINITE,
    cartesian_product,
    complete_graph,
    cycle_graph,
    dd_m_exact,
    enumerate_trees,
    is_tree,
    path_graph,
    product_question_scan,
    product_swap_general,
    star_graph,
    star_partition_order2,
    star_product_layout,
    star_product_swap,
    tree_product_swap,
    verify_certificate,
)
from swapsets.product_constructions import bfs_spanning_tree, partition_stats
from test_tree_algorithms import random_trees, spider


class TestStarProductLayout:
    def test_c4_base_case(self):
        layout = star_product_layout(1, 1)
        assert set(layout.d_coords) == {(0, 0), (1, 1)}
        assert set(layout.d_prime_coords) == {(0, 1), (1, 0)}
        assert len(layout.matching_coords) == 2

    def test_sizes_follow_formula(self):
        for p in range(1, 6):
            for q in range(1, p + 1):
                layout = star_product_layout(p, q)
                expected = max(2, p + q - 1)
                assert len(layout.d_coords) == expected
                assert len(layout.d_prime_coords) == expected
                assert len(layout.matching_coords) == expected

    def test_rejects_bad_order(self):
        with pytest.raises(ContractError):
            star_product_layout(1, 2)
        with pytest.raises(ContractError):
            star_product_layout(0, 0)


class TestStarProductSwap:
    def test_certificates_verify(self):
        for p in range(1, 6):
            for q in range(1, 6):
                if p + q > 6:
                    continue
                g, cert = star_product_swap(p, q)
                assert g.n == (p + 1) * (q + 1)
                assert verify_certificate(g, cert)
                assert cert.size() == max(2, p + q - 1)

    def test_transposed_arguments_agree_in_size(self):
        g1, c1 = star_product_swap(3, 1)
        g2, c2 = star_product_swap(1, 3)
        assert c1.size() == c2.size() == 3
        assert g1.n == g2.n == 8

    def test_sizes_are_optimal(self):
        for p, q in ((1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1)):
            g, cert = star_product_swap(p, q)
            exact = dd_m_exact(g)
            assert exact.status == FINITE
            assert cert.size() == exact.k


class TestStarPartitionOrder2:
    def test_partitions_cover_with_big_parts(self):
        for n in range(2, 10):
            for t in enumerate_trees(n):
                partition = star_partition_order2(t)
                seen = [v for c, ls in partition.parts for v in (c, *ls)]
                assert sorted(seen) == list(range(t.n))
                for center, leaves in partition.parts:
                    assert len(leaves) >= 1
                    assert all(t.has_edge(center, v) for v in leaves)

    def test_stats(self):
        partition = star_partition_order2(path_graph(6))
        count, widest = partition_stats(partition)
        assert count == len(partition.parts)
        assert widest == max(len(ls) for _, ls in partition.parts)

    @settings(derandomize=True, max_examples=40)
    @given(random_trees())
    def test_random_trees(self, t):
        partition = star_partition_order2(t)
        seen = sorted(v for c, ls in partition.parts for v in (c, *ls))
        assert seen == list(range(t.n))
        assert all(ls for _, ls in partition.parts)


class TestTreeProductSwap:
    def test_path_pairs_verify(self):
        for a in (2, 3, 4, 5):
            for b in (2, 3, 4):
                g, cert, bound = tree_product_swap(path_graph(a), path_graph(b))
                assert g.n == a * b
                assert verify_certificate(g, cert)
                assert bound >= 1

    def test_spider_pairs_verify(self):
        pairs = [(spider(1, 2, 2), path_graph(4)), (spider(2, 2), star_graph(3))]
        for t, u in pairs:
            g, cert, _ = tree_product_swap(t, u)
            assert verify_certificate(g, cert)

    def test_all_small_tree_pairs(self):
        trees = [t for n in range(2, 6) for t in enumerate_trees(n)]
        for t in trees:
            for u in trees:
                g, cert, _ = tree_product_swap(t, u)
                assert verify_certificate(g, cert)


class TestBfsSpanningTree:
    @pytest.mark.parametrize("g", [
        cycle_graph(7),
        complete_graph(5),
        cartesian_product(cycle_graph(3), path_graph(3)),
    ])
    def test_spans(self, g):
        t = bfs_spanning_tree(g)
        assert t.n == g.n and is_tree(t)
        assert set(t.edges) <= set(g.edges)


class TestProductSwapGeneral:
    def test_mixed_factor_pairs(self):
        pairs = [
            (cycle_graph(5), cycle_graph(4)),
            (complete_graph(4), path_graph(3)),
            (star_graph(3), star_graph(2)),
            (cycle_graph(3), complete_graph(3)),
        ]
        for g, h in pairs:
            prod, cert = product_swap_general(g, h)
            assert prod.n == g.n * h.n
            assert verify_certificate(prod, cert)

    def test_works_for_strong_factors(self):
        # factors without swap sets still give a swap set in the product
        g, h = star_graph(3), star_graph(4)
        prod, cert = product_swap_general(g, h)
        assert verify_certificate(prod, cert)

    def test_trivial_factor_rejected(self):
        with pytest.raises(ContractError):
            product_swap_general(path_graph(1), path_graph(4))


class TestProductQuestionScan:
    def test_small_scope_clean(self):
        report = product_question_scan(12)
        assert report.gg_violations == 0
        # every product at this scope is small enough for an exact value
        assert all(r.ddm_product == "infinity" or r.ddm_product.isdigit()
                   for r in report.rows)

    def test_tsv_shape(self):
        report = product_question_scan(9)
        lines = report.to_tsv().strip().split("\n")
        assert lines[0].split("\t")[0] == "g_id"
        assert len(lines) == len(report.rows) + 1

    def test_deterministic(self):
        assert product_question_scan(10).to_tsv() == product_question_scan(10).to_tsv()

    def test_gamma_product_bound_spot_checks(self):
        # gamma(G x H) >= max(gamma(G), gamma(H)) via projection; an exact
        # swap number can never undercut that
        report = product_question_scan(12)
        for row in report.rows:
            if row.ddm_product.isdigit():
                assert int(row.ddm_product) >= max(row.gamma_g, row.gamma_h)
