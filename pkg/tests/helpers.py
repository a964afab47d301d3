"""Independent brute-force oracles shared by the test modules.

Everything here recomputes quantities from first principles using only the
Graph accessors, so disagreements point at the library, not the oracle.
"""

from __future__ import annotations

from itertools import combinations, permutations

from swapsets import Graph


def brute_dominating(g: Graph, s) -> bool:
    left = set(range(g.n))
    for v in s:
        left.discard(v)
        for u in g.neighbors(v):
            left.discard(u)
    return not left


def brute_has_perfect_matching(g: Graph, a, b) -> bool:
    """All bijections, edges checked one by one; fine for |a| <= 6."""
    a = list(a)
    for image in permutations(b):
        if all(g.has_edge(u, v) for u, v in zip(a, image)):
            return True
    return False


def brute_ddm(g: Graph):
    """Swap number by unfiltered enumeration; None encodes infinity."""
    for k in range(1, g.n // 2 + 1):
        for d in combinations(range(g.n), k):
            if not brute_dominating(g, d):
                continue
            rest = [v for v in range(g.n) if v not in d]
            for dp in combinations(rest, k):
                if brute_dominating(g, dp) and brute_has_perfect_matching(g, d, dp):
                    return k
    return None


def brute_alpha(g: Graph) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for cand in combinations(range(g.n), k):
            if all(not g.has_edge(u, v) for u, v in combinations(cand, 2)):
                return k
    return best


def brute_gamma(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for cand in combinations(range(g.n), k):
            if brute_dominating(g, cand):
                return k
    raise AssertionError("unreachable for nonempty graphs")


def _is_star_part(t: Graph, part: tuple[int, ...]) -> bool:
    if len(part) <= 1:
        return True
    return any(all(u == c or t.has_edge(c, u) for u in part) for c in part)


def _may_become_star(t: Graph, part: tuple[int, ...]) -> bool:
    """Star already, or independent with a common neighbor still to come.
    Vertices join parts in index order, so a future center exceeds max(part)."""
    if _is_star_part(t, part):
        return True
    if any(t.has_edge(u, v) for u, v in combinations(part, 2)):
        return False
    cands = set(t.neighbors(part[0]))
    for u in part[1:]:
        cands &= set(t.neighbors(u))
    return any(w > max(part) for w in cands)


def star_partition_weight_oracle(t: Graph):
    """Minimum weight over all simple star partitionings, by exhaustive
    enumeration: every part induces a star, every vertex with exactly one
    leaf neighbor sits in a K2 with that leaf, and every K1 part touches at
    least two larger parts.  None if no valid partitioning exists."""
    weak_stems = {}
    for v in range(t.n):
        leaf_nbrs = [u for u in t.neighbors(v) if t.degree(u) == 1]
        if len(leaf_nbrs) == 1:
            weak_stems[v] = leaf_nbrs[0]

    best = [None]

    def finish(parts: list[tuple[int, ...]]) -> None:
        if not all(_is_star_part(t, part) for part in parts):
            return
        where = {}
        for i, part in enumerate(parts):
            for v in part:
                where[v] = i
        for stem, leaf in weak_stems.items():
            i = where[stem]
            if len(parts[i]) != 2 or where[leaf] != i:
                return
        for i, part in enumerate(parts):
            if len(part) > 1:
                continue
            nbr_parts = {where[u] for u in t.neighbors(part[0])}
            if sum(1 for j in nbr_parts if len(parts[j]) >= 2) < 2:
                return
        weight = t.n - len(parts)
        if best[0] is None or weight < best[0]:
            best[0] = weight

    def extend(v: int, parts: list[tuple[int, ...]]) -> None:
        if v == t.n:
            finish(parts)
            return
        for i, part in enumerate(parts):
            grown = part + (v,)
            if _may_become_star(t, grown):
                parts[i] = grown
                extend(v + 1, parts)
                parts[i] = part
        parts.append((v,))
        extend(v + 1, parts)
        parts.pop()

    extend(0, [])
    return best[0]
