"""Exact swap-number solver and small brute-force oracles.

The swap number of a graph is the least k admitting two disjoint dominating
sets of size k joined by a perfect matching; graphs without such a pair have
infinite swap number.  The solver certifies both outcomes: a finite answer
carries a certificate, an infinite one means every k up to n//2 was exhausted
(beyond n//2 two disjoint size-k sets cannot exist).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph_core import (
    ContractError,
    Graph,
    SwapCertificate,
    _mask_members,
    domination_number,
    is_dominating,
    is_strong_graph,
    is_tree,
    lex_least_matching,
    mask_of,
    matching_between,
    members_of,
)

FINITE = "finite"
INFINITE = "infinite"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class DdmResult:
    """Outcome of a swap-number computation.

    status is one of "finite", "infinite", "budget_exceeded"; k and
    certificate are populated exactly when finite.
    """

    status: str
    k: int | None = None
    certificate: SwapCertificate | None = None

    @property
    def is_finite(self) -> bool:
        return self.status == FINITE

    @property
    def is_infinite(self) -> bool:
        return self.status == INFINITE

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == FINITE:
            out["ddm"] = self.k
            out["certificate"] = self.certificate.to_json_dict()
        elif self.status == INFINITE:
            out["ddm"] = "infinity"
        else:
            out["ddm"] = None
        return out


def finite_result(cert: SwapCertificate) -> DdmResult:
    return DdmResult(FINITE, cert.size(), cert)


def dominating_sets_lex(g: Graph, k: int, allowed_mask: int | None = None) -> Iterator[int]:
    """Yield bitmasks of all dominating sets of g of size exactly k drawn from
    allowed_mask, in lexicographic order of the sorted vertex tuple.

    Sets need not be minimal: redundant members are legal, which matters when
    k exceeds the domination number.
    """
    if allowed_mask is None:
        allowed_mask = g.full_mask
    n = g.n
    # suffix_cover[s] = union of closed neighborhoods of allowed vertices >= s
    suffix_cover = [0] * (n + 1)
    for s in range(n - 1, -1, -1):
        suffix_cover[s] = suffix_cover[s + 1]
        if allowed_mask >> s & 1:
            suffix_cover[s] |= g.closed_mask(s)
    max_cover = max((g.closed_mask(v).bit_count() for v in _mask_members(allowed_mask)),
                    default=1)

    def rec(start: int, chosen: int, undominated: int, slots: int) -> Iterator[int]:
        if not undominated and slots == 0:
            yield chosen
            return
        if slots == 0:
            return
        if undominated and slots * max_cover < undominated.bit_count():
            return
        for v in range(start, n):
            if not (allowed_mask >> v & 1):
                continue
            if undominated & ~suffix_cover[v]:
                break  # some vertex can no longer be covered by any later pick
            yield from rec(v + 1, chosen | (1 << v), undominated & ~g.closed_mask(v),
                           slots - 1)

    yield from rec(0, 0, g.full_mask, k)


def _neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in _mask_members(mask):
        out |= g.open_mask(v)
    return out


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self) -> bool:
        """Consume one unit; False once exhausted."""
        if self.remaining <= 0:
            return False
        self.remaining -= 1
        return True


def _certificate_for(g: Graph, d_mask: int, dp_mask: int) -> SwapCertificate:
    d = members_of(d_mask)
    dp = members_of(dp_mask)
    matching = lex_least_matching(g, d, dp)
    assert matching is not None
    return SwapCertificate.build(d, dp, matching)


def swap_pair_search(g: Graph, k: int, budget: _Budget) -> tuple[int, int] | str | None:
    """First (d_mask, dp_mask) swap pair of size k in lexicographic order,
    None if none exists, or "budget" if the budget ran out first."""
    for d_mask in dominating_sets_lex(g, k):
        allowed = _neighborhood_mask(g, d_mask) & ~d_mask
        if allowed.bit_count() < k:
            continue
        for dp_mask in dominating_sets_lex(g, k, allowed):
            if not budget.spend():
                return "budget"
            if matching_between(g, members_of(d_mask), members_of(dp_mask)) is not None:
                return d_mask, dp_mask
    return None


def dd_m_exact(g: Graph, node_budget: int = 100_000_000,
               use_strong_shortcut: bool = True) -> DdmResult:
    """Exact swap number with certificate.

    Searches k from the domination number up to n//2, enumerating candidate
    (D, D') pairs; node_budget bounds how many pairs are examined.  The
    returned certificate is the lexicographically least one at the minimum k
    (least D, then least D', then least matching).  A vertex with two or more
    leaf neighbors makes every outcome infinite, so that case short-circuits
    unless use_strong_shortcut is off.
    """
    if g.n == 0:
        raise ContractError("swap number needs a non-empty graph")
    if use_strong_shortcut and is_strong_graph(g):
        return DdmResult(INFINITE)
    budget = _Budget(node_budget)
    gamma = domination_number(g)
    for k in range(gamma, g.n // 2 + 1):
        found = swap_pair_search(g, k, budget)
        if found == "budget":
            return DdmResult(BUDGET_EXCEEDED)
        if found is not None:
            d_mask, dp_mask = found
            return finite_result(_certificate_for(g, d_mask, dp_mask))
    return DdmResult(INFINITE)


def has_swap_set(g: Graph, node_budget: int = 100_000_000) -> DdmResult:
    """Does g admit any swap pair?  Finite results carry the first certificate
    found (which here is also minimum); infinite means certified absence."""
    return dd_m_exact(g, node_budget=node_budget)


def swap_pair_below(g: Graph, bound: int, node_budget: int = 100_000_000) -> DdmResult:
    """Search for a swap pair of size strictly below bound.

    Certified: finite means a pair of size < bound exists, infinite means no
    pair of any size < bound exists.  Used to refute or confirm lower-bound
    claims without computing the full swap number.
    """
    if g.n == 0:
        raise ContractError("swap pair search needs a non-empty graph")
    budget = _Budget(node_budget)
    gamma = domination_number(g)
    for k in range(gamma, min(bound, g.n // 2 + 1)):
        found = swap_pair_search(g, k, budget)
        if found == "budget":
            return DdmResult(BUDGET_EXCEEDED)
        if found is not None:
            return finite_result(_certificate_for(g, *found))
    return DdmResult(INFINITE)


# ---------------------------------------------------------------------------
# star-partition weight oracle (brute force, small trees only)

def star_partition_weight_oracle(t: Graph, max_n: int = 10) -> int:
    """Minimum weight of a simple star partitioning of a tree, by exhaustive
    partition enumeration; weight of a partition is n minus its part count.

    Parts must induce stars; a vertex adjacent to exactly one leaf must form
    a K2 part with that leaf; singleton parts need two or more non-singleton
    neighbor parts.  Returns None if no partitioning exists.
    """
    if not is_tree(t):
        raise ContractError("star partition oracle expects a tree")
    if t.n < 2:
        raise ContractError("star partition needs a non-trivial tree")
    if t.n > max_n:
        raise ContractError(f"oracle capped at n={max_n}")
    n = t.n
    # weak stems and their forced leaf partner
    forced_partner = {}
    for v in range(n):
        leaves = [u for u in t.neighbors(v) if t.degree(u) == 1]
        if len(leaves) == 1:
            forced_partner[v] = leaves[0]
            forced_partner[leaves[0]] = v

    best: list[int | None] = [None]

    def star_ok(members: list[int]) -> bool:
        if len(members) == 1:
            return True
        for c in members:
            cm = t.open_mask(c)
            if all(cm >> u & 1 for u in members if u != c):
                return True
        return False

    def extendable(members: list[int], next_v: int) -> bool:
        """Could members still become a star using only vertices >= next_v?"""
        if star_ok(members):
            return True
        # need a future common neighbor adjacent to every current member
        common = t.full_mask
        for u in members:
            common &= t.open_mask(u)
        return bool(common >> next_v)

    def finish_check(parts: list[list[int]]) -> bool:
        non_k1 = [i for i, p in enumerate(parts) if len(p) > 1]
        part_of = {}
        for i, p in enumerate(parts):
            for v in p:
                part_of[v] = i
        for i, p in enumerate(parts):
            if len(p) == 1:
                nbr_parts = {part_of[u] for u in t.neighbors(p[0])} - {i}
                if sum(1 for j in nbr_parts if len(parts[j]) > 1) < 2:
                    return False
        return True

    def rec(v: int, parts: list[list[int]], weight: int) -> None:
        if best[0] is not None and weight >= best[0]:
            return
        if v == n:
            if all(star_ok(p) for p in parts) and finish_check(parts):
                best[0] = weight
            return
        partner = forced_partner.get(v)
        if partner is None or partner > v:
            if partner is None:
                for p in parts:
                    # parts holding a vertex locked into a forced K2 cannot grow
                    if any(u in forced_partner for u in p):
                        continue
                    p.append(v)
                    if extendable(p, v + 1):
                        rec(v + 1, parts, weight + 1)
                    p.pop()
            parts.append([v])
            rec(v + 1, parts, weight)
            parts.pop()
        else:
            # v's forced partner is already placed: join it, and only it
            for p in parts:
                if p == [partner]:
                    p.append(v)
                    rec(v + 1, parts, weight + 1)
                    p.pop()
                    break

    rec(0, [], 0)
    return best[0]
