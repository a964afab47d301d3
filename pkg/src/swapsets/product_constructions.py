"""Constructive swap certificates on Cartesian products.

Three routes, from specific to general: an exact-size construction for
products of two stars; a block tiling that covers a product of trees with
star-times-star blocks, each carrying its own small certificate; and the
spanning-tree route that makes the tiling work for arbitrary connected
factors, because a certificate valid on a spanning subgraph stays valid in
the host graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact_solver import dd_m_exact, swap_pair_below, INFINITE, FINITE
from .graph_core import (
    ContractError,
    Graph,
    SwapCertificate,
    cartesian_product,
    domination_number,
    has_dominating_set,
    is_connected,
    is_tree,
    star_graph,
    verify_certificate,
)
from .tree_algorithms import StarPartition, _require_nontrivial_tree


# ---------------------------------------------------------------------------
# star products (K_{1,p} x K_{1,q})

@dataclass(frozen=True)
class StarProductLayout:
    """Certificate for K_{1,p} box K_{1,q} in (u-index, v-index) coordinates.

    Index 0 is the star center on both axes.  Size is max(2, p+q-1): the
    formula value except for the 4-cycle p = q = 1, where two disjoint
    dominating singletons cannot exist.
    """

    p: int
    q: int
    d_coords: tuple[tuple[int, int], ...]
    d_prime_coords: tuple[tuple[int, int], ...]
    matching_coords: tuple[tuple[tuple[int, int], tuple[int, int]], ...]


def star_product_layout(p: int, q: int) -> StarProductLayout:
    """Layout with p >= q >= 1 (callers normalize)."""
    if q > p or q < 1:
        raise ContractError("layout requires p >= q >= 1")
    if p == 1:
        # C4: opposite corners vs. the other diagonal, matched vertically
        d = ((0, 0), (1, 1))
        dp = ((0, 1), (1, 0))
        matching = (((0, 0), (0, 1)), ((1, 1), (1, 0)))
        return StarProductLayout(p, q, d, dp, matching)
    d = tuple((i, 0) for i in range(1, p)) + tuple((p, i) for i in range(1, q + 1))
    dp = tuple((0, i) for i in range(0, q + 1)) + tuple((i, q) for i in range(1, p - 1))
    matching = (
        tuple(((i, 0), (i, q)) for i in range(1, p - 1))
        + (((p - 1, 0), (0, 0)),)
        + tuple(((p, i), (0, i)) for i in range(1, q + 1))
    )
    return StarProductLayout(p, q, d, dp, matching)


def star_product_swap(p: int, q: int) -> tuple[Graph, SwapCertificate]:
    """Product of two stars with a verified certificate of size max(2, p+q-1)."""
    if p < 1 or q < 1:
        raise ContractError("star products need p, q >= 1")
    product = cartesian_product(star_graph(p), star_graph(q))
    if p >= q:
        layout = star_product_layout(p, q)
        to_vertex = lambda c: c[0] * (q + 1) + c[1]
    else:
        layout = star_product_layout(q, p)
        to_vertex = lambda c: c[1] * (q + 1) + c[0]
    cert = SwapCertificate.build(
        [to_vertex(c) for c in layout.d_coords],
        [to_vertex(c) for c in layout.d_prime_coords],
        [(to_vertex(a), to_vertex(b)) for a, b in layout.matching_coords],
    )
    if not verify_certificate(product, cert):
        raise AssertionError("star product certificate failed verification")
    return product, cert


# ---------------------------------------------------------------------------
# star partitions with no singleton parts

def star_partition_order2(t: Graph) -> StarPartition:
    """Partition a non-trivial tree into induced stars of order >= 2.

    Greedy: repeatedly take the deepest vertex whose remaining children are
    all leaves and cut it off with them; a root left alone at the end joins
    the part of one of its former children (always possible: that child is a
    part center, or its K2 part can be re-centered).
    """
    _require_nontrivial_tree(t)
    parent = [-1] * t.n
    depth = [0] * t.n
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in t.neighbors(v):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                depth[u] = depth[v] + 1
                order.append(u)
    children = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    remaining = set(range(t.n))
    live_children = {v: set(children[v]) for v in range(t.n)}
    parts: list[tuple[int, list[int]]] = []
    while remaining:
        if len(remaining) == 1:
            (r,) = remaining
            placed = False
            for idx, (c, leaves) in enumerate(parts):
                if t.has_edge(r, c):
                    leaves.append(r)
                    placed = True
                elif len(leaves) == 1 and t.has_edge(r, leaves[0]):
                    # re-center a K2 at the endpoint adjacent to the root
                    parts[idx] = (leaves[0], [c, r])
                    placed = True
                if placed:
                    break
            if not placed:
                raise AssertionError("lone root could not join any star part")
            remaining.clear()
            break
        stems = [v for v in remaining
                 if live_children[v] and all(not live_children[c] for c in live_children[v])]
        v = max(stems, key=lambda x: (depth[x], -x))
        members = sorted(live_children[v])
        parts.append((v, members))
        for x in [v, *members]:
            remaining.discard(x)
        if parent[v] != -1:
            live_children[parent[v]].discard(v)
    partition = StarPartition.build(parts)
    assert all(ls for _, ls in partition.parts)
    return partition


def partition_stats(p: StarPartition) -> tuple[int, int]:
    """(number of parts, leaf count of the largest star part)."""
    return len(p.parts), max(len(ls) for _, ls in p.parts)


# ---------------------------------------------------------------------------
# tree products and the general route

def tree_product_swap(t: Graph, t_prime: Graph) -> tuple[Graph, SwapCertificate, int]:
    """Certificate on a product of trees by tiling star-times-star blocks.

    Both factors are partitioned into stars of order >= 2; each block
    S x S' induces K_{1,a} box K_{1,b} inside the product and receives that
    product's certificate.  Returns the product, the certificate, and the
    a-priori bound x * x' * (l + l' - 1) from the part counts and largest
    leaf counts; the concrete certificate size is sum of max(2, a+b-1) over
    blocks, which exceeds the bound only through all-K2 blocks.
    """
    _require_nontrivial_tree(t)
    _require_nontrivial_tree(t_prime)
    parts = star_partition_order2(t)
    parts_p = star_partition_order2(t_prime)
    product = cartesian_product(t, t_prime)
    hn = t_prime.n
    d: list[int] = []
    dp: list[int] = []
    matching: list[tuple[int, int]] = []
    for c, leaves in parts.parts:
        us = [c, *leaves]
        for c2, leaves2 in parts_p.parts:
            vs = [c2, *leaves2]
            a, b = len(leaves), len(leaves2)
            if a >= b:
                layout = star_product_layout(a, b)
                to_vertex = lambda coord: us[coord[0]] * hn + vs[coord[1]]
            else:
                layout = star_product_layout(b, a)
                to_vertex = lambda coord: us[coord[1]] * hn + vs[coord[0]]
            d.extend(to_vertex(x) for x in layout.d_coords)
            dp.extend(to_vertex(x) for x in layout.d_prime_coords)
            matching.extend((to_vertex(x), to_vertex(y)) for x, y in layout.matching_coords)
    cert = SwapCertificate.build(d, dp, matching)
    x, l = partition_stats(parts)
    x2, l2 = partition_stats(parts_p)
    paper_bound = x * x2 * (l + l2 - 1)
    if not verify_certificate(product, cert):
        raise AssertionError("tree product certificate failed verification")
    return product, cert, paper_bound


def bfs_spanning_tree(g: Graph) -> Graph:
    """Breadth-first spanning tree from vertex 0, neighbors in ascending order."""
    if not is_connected(g):
        raise ContractError("spanning tree needs a connected graph")
    edges = []
    seen = {0}
    queue = [0]
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                edges.append((v, u))
                queue.append(u)
    return Graph(g.n, edges)


def product_swap_general(g: Graph, h: Graph) -> tuple[Graph, SwapCertificate]:
    """Verified certificate on g box h for any connected non-trivial factors,
    whether or not the factors themselves admit swap pairs: the tree-product
    tiling on breadth-first spanning trees stays valid in the host product."""
    if g.n < 2 or h.n < 2:
        raise ContractError("product factors must be non-trivial")
    if not (is_connected(g) and is_connected(h)):
        raise ContractError("product factors must be connected")
    tg = g if is_tree(g) else bfs_spanning_tree(g)
    th = h if is_tree(h) else bfs_spanning_tree(h)
    _, cert, _ = tree_product_swap(tg, th)
    product = cartesian_product(g, h)
    if not verify_certificate(product, cert):
        raise AssertionError("spanning-tree certificate failed on the host product")
    return product, cert


# ---------------------------------------------------------------------------
# the two product lower-bound questions

@dataclass
class ProductScanRow:
    g_id: str
    h_id: str
    ddm_product: str  # exact integer, or "lo..hi" when only bracketed
    gamma_g: int
    gamma_h: int
    min_expr: str  # min(ddm_g * gamma_h, gamma_g * ddm_h), "infinity" possible
    violation: str  # "none", "gg", "min", or "unknown"


@dataclass
class ProductScanReport:
    max_vertices: int
    rows: list[ProductScanRow] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def gg_violations(self) -> int:
        return sum(1 for r in self.rows if r.violation == "gg")

    def to_tsv(self) -> str:
        lines = ["g_id\th_id\tddm_product\tgamma_g\tgamma_h\tmin_expr\tviolation_flag"]
        for r in self.rows:
            lines.append(
                f"{r.g_id}\t{r.h_id}\t{r.ddm_product}\t{r.gamma_g}\t{r.gamma_h}"
                f"\t{r.min_expr}\t{r.violation}"
            )
        return "\n".join(lines) + "\n"


def _times(a, b):
    if a == "infinity" or b == "infinity":
        return "infinity"
    return a * b


def _lt(a, b) -> bool:
    """a < b under the 'infinity' convention."""
    if b == "infinity":
        return a != "infinity"
    if a == "infinity":
        return False
    return a < b


def product_question_scan(max_vertices: int, exact_threshold: int = 12,
                          pair_budget: int = 2_000_000) -> ProductScanReport:
    """Test both conjectured lower bounds for DD_m of products, exhaustively
    over unordered pairs of connected non-trivial factors with
    |V(g)| * |V(h)| <= max_vertices.

    The gamma*gamma verdict is always exact: a violation needs a swap pair
    smaller than gamma(g)*gamma(h), and the bounded search below that value
    is certified either way.  Exact DD_m of the product is tabulated when the
    product has at most exact_threshold vertices; above that the table shows
    a bracket [known lower .. construction size].  The min-expression verdict
    degrades to "unknown" only if its bounded search runs out of budget.
    """
    from .small_alpha import canonical_id, enumerate_connected_graphs

    factors: list[Graph] = []
    n = 2
    while n <= 8 and n * 2 <= max_vertices:
        factors.extend(enumerate_connected_graphs(n))
        n += 1
    report = ProductScanReport(max_vertices)
    factor_info = {}
    for g in factors:
        r = dd_m_exact(g)
        factor_info[g] = (canonical_id(g), domination_number(g),
                          r.k if r.status == FINITE else "infinity")
    for i, g in enumerate(factors):
        for h in factors[i:]:
            if g.n * h.n > max_vertices:
                continue
            g_id, gamma_g, ddm_g = factor_info[g]
            h_id, gamma_h, ddm_h = factor_info[h]
            product, cert = product_swap_general(g, h)
            upper = cert.size()
            gg = gamma_g * gamma_h
            min_expr = min(_times(ddm_g, gamma_h), _times(gamma_g, ddm_h),
                           key=lambda x: (x == "infinity", x if x != "infinity" else 0))
            ddm_cell: str
            ddm_val = None
            violation = "none"
            counterexample_cert = None
            if product.n <= exact_threshold:
                res = dd_m_exact(product)
                assert res.status == FINITE  # the construction guarantees a pair
                ddm_val = res.k
                ddm_cell = str(ddm_val)
                if ddm_val < gg:
                    violation = "gg"
                elif _lt(ddm_val, min_expr):
                    violation = "min"
            else:
                lo = gg
                if has_dominating_set(product, gg - 1):
                    # the domination number alone no longer rules a pair out
                    lo = domination_number(product)
                    found = swap_pair_below(product, gg, node_budget=pair_budget)
                    if found.status == FINITE:
                        violation = "gg"
                        counterexample_cert = found.certificate
                    elif found.status != INFINITE:
                        violation = "unknown"
                ddm_cell = f"{lo}..{upper}"
                if violation == "none":
                    if _lt(upper, min_expr):
                        violation = "min"
                        counterexample_cert = cert
                    elif min_expr != "infinity" and min_expr > gg and \
                            has_dominating_set(product, min_expr - 1):
                        found = swap_pair_below(product, min_expr,
                                                node_budget=pair_budget)
                        if found.status == FINITE:
                            violation = "min"
                            counterexample_cert = found.certificate
                        elif found.status != INFINITE:
                            violation = "unknown"
            if violation in ("gg", "min"):
                entry = {
                    "g_id": g_id, "h_id": h_id, "question": violation,
                    "ddm_product": ddm_cell, "gamma_g": gamma_g, "gamma_h": gamma_h,
                    "min_expr": str(min_expr),
                }
                if counterexample_cert is None and ddm_val is not None:
                    counterexample_cert = dd_m_exact(product).certificate
                if counterexample_cert is not None:
                    entry["certificate"] = counterexample_cert.to_json_dict()
                report.counterexamples.append(entry)
            report.rows.append(ProductScanRow(
                g_id, h_id, ddm_cell, gamma_g, gamma_h, str(min_expr), violation))
    return report
