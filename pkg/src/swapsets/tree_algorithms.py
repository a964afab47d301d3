"""Tree machinery: star partitionings, weak reduction, and tree swap numbers.

The minimum weight S(T) of a simple star partitioning of a non-trivial tree
equals the tree's swap number whenever the tree is weak (no vertex has two or
more leaf neighbors), and a minimum partition converts into a swap
certificate by a deterministic labeling pass.  Strong trees have no swap
pair, but S(T) still makes sense and reduces leaf-by-leaf to the weak
reduction: each stripped leaf adds one to the weight and rejoins its stem's
star part on the way back out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact_solver import DdmResult, INFINITE, finite_result
from .graph_core import (
    ContractError,
    Graph,
    SwapCertificate,
    is_tree,
    verify_certificate,
)

_INF = 10 ** 9


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise ContractError("expected a tree")


def _require_nontrivial_tree(t: Graph) -> None:
    _require_tree(t)
    if t.n < 2:
        raise ContractError("expected a non-trivial tree")


# ---------------------------------------------------------------------------
# star partitions

@dataclass(frozen=True)
class StarPartition:
    """Vertex partition into induced stars; weight is n minus the part count.

    Each part is (center, leaves) with leaves sorted; a K1 part has no
    leaves; a K2 part's center is its lower-index endpoint.  Parts are kept
    sorted by center.
    """

    parts: tuple[tuple[int, tuple[int, ...]], ...]
    weight: int

    @classmethod
    def build(cls, raw_parts) -> "StarPartition":
        norm = []
        total = 0
        for center, leaves in raw_parts:
            members = sorted({center, *leaves})
            total += len(members) - 1
            if len(members) == 1:
                norm.append((members[0], ()))
            elif len(members) == 2:
                norm.append((members[0], (members[1],)))
            else:
                norm.append((center, tuple(v for v in members if v != center)))
        return cls(tuple(sorted(norm)), total)

    def part_of(self) -> dict[int, int]:
        out = {}
        for i, (c, leaves) in enumerate(self.parts):
            out[c] = i
            for v in leaves:
                out[v] = i
        return out

    def to_json_dict(self) -> dict:
        return {
            "parts": [{"center": c, "leaves": list(ls)} for c, ls in self.parts],
            "weight": self.weight,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "StarPartition":
        try:
            raw = [(int(p["center"]), [int(v) for v in p["leaves"]]) for p in obj["parts"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed star partition object: {exc}")
        sp = cls.build(raw)
        if "weight" in obj and obj["weight"] != sp.weight:
            raise ValueError(f"stated weight {obj['weight']} != computed {sp.weight}")
        return sp


def validate_star_partition(t: Graph, p: StarPartition) -> tuple[str, ...]:
    """All violations of the simple-star-partitioning conditions, empty if valid.

    Conditions: parts partition V(t) and induce stars around their stated
    centers; every vertex adjacent to exactly one leaf of t lies in a K2 part
    with that leaf; every K1 part has at least two neighbor parts of size 2
    or more.
    """
    problems = []
    seen: dict[int, int] = {}
    for i, (c, leaves) in enumerate(p.parts):
        for v in (c, *leaves):
            if not 0 <= v < t.n:
                problems.append(f"vertex-out-of-range:{v}")
            elif v in seen:
                problems.append(f"vertex-in-two-parts:{v}")
            else:
                seen[v] = i
        for v in leaves:
            if not t.has_edge(c, v):
                problems.append(f"leaf-not-adjacent-to-center:{v}-{c}")
        for a_idx in range(len(leaves)):
            for b_idx in range(a_idx + 1, len(leaves)):
                if t.has_edge(leaves[a_idx], leaves[b_idx]):
                    problems.append(f"part-not-a-star:{leaves[a_idx]}-{leaves[b_idx]}")
    if len(seen) != t.n:
        missing = sorted(set(range(t.n)) - set(seen))
        if missing:
            problems.append(f"vertex-unassigned:{missing[0]}")
    if problems:
        return tuple(problems)
    size = [1 + len(ls) for _, ls in p.parts]
    for v in range(t.n):
        leaf_nbrs = [u for u in t.neighbors(v) if t.degree(u) == 1]
        if len(leaf_nbrs) == 1:
            i = seen[v]
            if size[i] != 2 or seen[leaf_nbrs[0]] != i:
                problems.append(f"weak-stem-not-paired-with-leaf:{v}")
    for i, (c, leaves) in enumerate(p.parts):
        if leaves:
            continue
        nbr_parts = {seen[u] for u in t.neighbors(c)} - {i}
        if sum(1 for j in nbr_parts if size[j] >= 2) < 2:
            problems.append(f"k1-part-undersupported:{c}")
    if p.weight != t.n - len(p.parts):
        problems.append(f"weight-mismatch:{p.weight}!={t.n - len(p.parts)}")
    return tuple(problems)


# ---------------------------------------------------------------------------
# weak trees and weak reduction

def is_weak_tree(t: Graph) -> bool:
    """True iff no vertex of the tree has two or more leaf neighbors."""
    _require_tree(t)
    for v in range(t.n):
        if sum(1 for u in t.neighbors(v) if t.degree(u) == 1) >= 2:
            return False
    return True


@dataclass(frozen=True)
class WeakReduction:
    """Result of stripping all but the lowest-index leaf from each strong stem.

    embedding maps reduced vertex ids back to the original tree; removed
    lists (stem, leaf) pairs in original labels.
    """

    reduced: Graph
    removed: tuple[tuple[int, int], ...]
    embedding: tuple[int, ...]

    def original_of(self, v: int) -> int:
        return self.embedding[v]


def weak_reduction(t: Graph) -> WeakReduction:
    _require_tree(t)
    drop = set()
    removed = []
    for v in range(t.n):
        leaves = [u for u in t.neighbors(v) if t.degree(u) == 1]
        if len(leaves) >= 2:
            for u in leaves[1:]:
                drop.add(u)
                removed.append((v, u))
    keep = [v for v in range(t.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in t.edges if u not in drop and v not in drop]
    return WeakReduction(Graph(len(keep), edges), tuple(sorted(removed)), tuple(keep))


# ---------------------------------------------------------------------------
# S(T) dynamic program on weak trees

def _rooted(t: Graph, root: int = 0):
    parent = [-1] * t.n
    order = [root]
    seen = {root}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in t.neighbors(v):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                order.append(u)
    children = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    for cs in children:
        cs.sort()
    return parent, children, order


# Per-vertex states for the K1/K2-only partition DP:
#   P  - in a K2 part with its parent (the pair's weight charged at the parent)
#   C  - in a K2 part with one child
#   K0 - a K1 part already adjacent to >= 2 non-K1 child parts
#   K1 - a K1 part adjacent to exactly 1 so far; the parent's part must be a K2
# A K1 part with no non-K1 child parts can never be rescued by its single
# parent, so that configuration is simply infeasible.

def _weak_partition_dp(t: Graph) -> tuple[int, list[tuple[int, tuple[int, ...]]]]:
    """Minimum-weight K1/K2 simple star partitioning of a weak non-trivial tree.

    Returns (weight, parts).  Weight counts the K2 parts.  Ties break toward
    pairing with the parent, then toward the lower-index child partner.
    """
    n = t.n
    parent, children, order = _rooted(t)
    forced: dict[int, tuple] = {}
    for v in range(n):
        leaves = [u for u in t.neighbors(v) if t.degree(u) == 1]
        if len(leaves) == 1:
            leaf = leaves[0]
            forced[v] = ("C", leaf) if parent[leaf] == v else ("P",)
        elif len(leaves) >= 2:
            raise ContractError("partition DP requires a weak tree")

    dp: list[dict[str, int]] = [dict() for _ in range(n)]
    trace: list[dict[str, tuple]] = [dict() for _ in range(n)]

    def child_cost(c: int, states: tuple[str, ...]) -> tuple[int, str | None]:
        best_cost, best_state = _INF, None
        for s in states:
            cost = dp[c].get(s, _INF)
            if cost < best_cost:
                best_cost, best_state = cost, s
        return best_cost, best_state

    for v in reversed(order):
        cs = children[v]
        f = forced.get(v)
        # state P: pair with parent; children settle on C/K0/K1
        if parent[v] != -1 and (f is None or f == ("P",)):
            total = 0
            assign = {}
            for c in cs:
                cost, st = child_cost(c, ("C", "K0", "K1"))
                total += cost
                assign[c] = st
            if total < _INF:
                dp[v]["P"] = total
                trace[v]["P"] = (None, assign)
        # state C: pair with one child c_star in state P
        if f is None or f[0] == "C":
            partner_choices = [f[1]] if f is not None else cs
            base = 0
            base_assign = {}
            for c in cs:
                cost, st = child_cost(c, ("C", "K0", "K1"))
                base += cost
                base_assign[c] = st
            best = (_INF, None)
            for c_star in partner_choices:
                p_cost = dp[c_star].get("P", _INF)
                if p_cost >= _INF:
                    continue
                other, _ = child_cost(c_star, ("C", "K0", "K1"))
                total = 1 + p_cost + (base - other if base < _INF else _INF)
                if base >= _INF:
                    # some non-partner child infeasible unless it was c_star itself
                    rest = 0
                    ok = True
                    for c in cs:
                        if c == c_star:
                            continue
                        cost, _st = child_cost(c, ("C", "K0", "K1"))
                        if cost >= _INF:
                            ok = False
                            break
                        rest += cost
                    if not ok:
                        continue
                    total = 1 + p_cost + rest
                if total < best[0]:
                    assign = dict(base_assign)
                    assign[c_star] = "P"
                    best = (total, (c_star, assign))
            if best[0] < _INF:
                dp[v]["C"] = best[0]
                trace[v]["C"] = best[1]
        # states K0/K1: v is a K1 part; children settle on C (counts) or K0
        if f is None:
            options = []
            feasible = True
            for c in cs:
                c_cost = dp[c].get("C", _INF)
                k_cost = dp[c].get("K0", _INF)
                if c_cost >= _INF and k_cost >= _INF:
                    feasible = False
                    break
                options.append((c, c_cost, k_cost))
            if feasible:
                for state, need in (("K1", 1), ("K0", 2)):
                    total = 0
                    assign = {}
                    have = 0
                    upgrades = []
                    ok = True
                    for c, c_cost, k_cost in options:
                        if c_cost <= k_cost:
                            total += c_cost
                            assign[c] = "C"
                            have += 1
                        else:
                            total += k_cost
                            assign[c] = "K0"
                            if c_cost < _INF:
                                upgrades.append((c_cost - k_cost, c))
                    if have < need:
                        upgrades.sort()
                        for delta, c in upgrades[: need - have]:
                            total += delta
                            assign[c] = "C"
                            have += 1
                        if have < need:
                            ok = False
                    if ok and total < _INF:
                        dp[v][state] = total
                        trace[v][state] = (None, assign)

    root = order[0]
    root_states = [s for s in ("C", "K0") if s in dp[root]]
    if not root_states:
        raise AssertionError("no simple star partitioning found on a weak tree")
    best_state = min(root_states, key=lambda s: (dp[root][s], s != "C"))

    parts: list[tuple[int, tuple[int, ...]]] = []

    def emit(v: int, state: str) -> None:
        partner, assign = trace[v][state]
        if state == "C":
            a, b = (v, partner) if v < partner else (partner, v)
            parts.append((a, (b,)))
        elif state in ("K0", "K1"):
            parts.append((v, ()))
        for c in children[v]:
            emit(c, assign[c])

    emit(root, best_state)
    return dp[root][best_state], parts


def s_weight(t: Graph) -> tuple[int, StarPartition]:
    """Exact minimum weight of a simple star partitioning, with a witness.

    Strong stems are handled by reduction: strip all but one leaf per strong
    stem, solve the weak remainder by DP, then re-expand each stripped leaf
    into its stem's part (the stem becomes the center of a bigger star).
    Each stripped leaf contributes exactly 1 to the weight.
    """
    _require_nontrivial_tree(t)
    red = weak_reduction(t)
    w_red, parts_red = _weak_partition_dp(red.reduced)
    emb = red.embedding
    extra: dict[int, list[int]] = {}
    for stem, leaf in red.removed:
        extra.setdefault(stem, []).append(leaf)
    raw = []
    for c, leaves in parts_red:
        members = [emb[c]] + [emb[x] for x in leaves]
        stems = [v for v in members if v in extra]
        if stems:
            (stem,) = stems  # a strong stem always pairs with its kept leaf
            raw.append((stem, [v for v in members if v != stem] + extra[stem]))
        else:
            raw.append((members[0], members[1:]))
    partition = StarPartition.build(raw)
    total = w_red + len(red.removed)
    assert partition.weight == total
    return total, partition


# ---------------------------------------------------------------------------
# Swap certificate from a K1/K2 partition

def swap_set_from_partition(t: Graph, p: StarPartition) -> SwapCertificate:
    """Convert a K1/K2 simple star partitioning of a weak tree into a swap
    certificate of the same size.

    Each K2 part contributes one endpoint to D and the other to D', matched
    along the part's edge.  K1 parts carry no tokens but force their
    neighboring K2 parts to expose both labels: processing K1 parts by
    ascending center, an unlabeled neighbor pair gets (D, D'); a single
    unlabeled neighbor gets whichever label is missing; if all neighbors are
    labeled with one label only, every labeled vertex in the component of
    t minus the K1 center containing the first such neighbor has its label
    flipped.
    """
    _require_nontrivial_tree(t)
    if not is_weak_tree(t):
        raise ContractError("swap sets exist only on weak trees")
    bad = validate_star_partition(t, p)
    if bad:
        raise ContractError(f"invalid star partition: {bad[0]}")
    if any(len(ls) > 1 for _, ls in p.parts):
        raise ContractError("partition must contain only K1 and K2 parts")

    part_of = p.part_of()
    k2_edge = {i: (c, ls[0]) for i, (c, ls) in enumerate(p.parts) if ls}
    label: dict[int, str] = {}  # vertex -> "D" | "D'"

    def set_pair(i: int, d_end: int) -> None:
        a, b = k2_edge[i]
        other = b if d_end == a else a
        label[d_end] = "D"
        label[other] = "D'"

    def flip_component(avoid: int, start: int) -> None:
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in t.neighbors(x):
                if y != avoid and y not in comp:
                    comp.add(y)
                    stack.append(y)
        for x in comp:
            if x in label:
                label[x] = "D" if label[x] == "D'" else "D'"

    k1_centers = sorted(c for i, (c, ls) in enumerate(p.parts) if not ls)
    for u in k1_centers:
        nbr_parts = []
        seen_parts = set()
        for x in sorted(t.neighbors(u)):
            i = part_of[x]
            if i in k2_edge and i not in seen_parts:
                seen_parts.add(i)
                nbr_parts.append((x, i))  # x is the endpoint adjacent to u
        unlabeled = [(x, i) for x, i in nbr_parts if k2_edge[i][0] not in label]
        labeled = [(x, i) for x, i in nbr_parts if k2_edge[i][0] in label]
        if len(unlabeled) >= 2:
            set_pair(unlabeled[0][1], unlabeled[0][0])
            v2, i2 = unlabeled[1]
            a, b = k2_edge[i2]
            set_pair(i2, b if v2 == a else a)  # v2 takes the D' end
            for x, i in unlabeled[2:]:
                set_pair(i, min(k2_edge[i]))
        elif len(unlabeled) == 1:
            seen_labels = {label[x] for x, _ in labeled}
            v1, i1 = unlabeled[0]
            if "D'" in seen_labels:
                set_pair(i1, v1)
            else:
                a, b = k2_edge[i1]
                set_pair(i1, b if v1 == a else a)
        else:
            seen_labels = {label[x] for x, _ in labeled}
            if len(seen_labels) == 1:
                flip_component(u, labeled[0][0])

    for i in sorted(k2_edge):
        if k2_edge[i][0] not in label:
            set_pair(i, min(k2_edge[i]))

    d = sorted(v for v, l in label.items() if l == "D")
    d_prime = sorted(v for v, l in label.items() if l == "D'")
    matching = []
    for i, (a, b) in sorted(k2_edge.items()):
        d_end = a if label[a] == "D" else b
        matching.append((d_end, b if d_end == a else a))
    return SwapCertificate.build(d, d_prime, matching)


def dd_m_tree(t: Graph) -> DdmResult:
    """Swap number of a non-trivial tree: infinite iff the tree is strong,
    otherwise S(t) with a certificate built from a minimum partition."""
    _require_nontrivial_tree(t)
    if not is_weak_tree(t):
        return DdmResult(INFINITE)
    weight, partition = s_weight(t)
    cert = swap_set_from_partition(t, partition)
    if not verify_certificate(t, cert) or cert.size() != weight:
        raise AssertionError("tree certificate construction failed")
    return finite_result(cert)


# ---------------------------------------------------------------------------
# hat graphs and equality characterizations

def hat_graph(h: Graph) -> Graph:
    """Attach a pendant leaf n+i to every vertex i."""
    edges = list(h.edges) + [(i, h.n + i) for i in range(h.n)]
    return Graph(2 * h.n, edges)


def four_way_equality(t: Graph) -> bool:
    """True iff the tree is a hat of a tree on half its vertices: every
    non-leaf has exactly one leaf neighbor and leaves are half the order.
    Exactly these trees have gamma = eviction = swap number = independence
    number all equal."""
    _require_nontrivial_tree(t)
    if t.n == 2:
        return True
    if t.n % 2:
        return False
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    if len(leaves) != t.n // 2:
        return False
    for v in range(t.n):
        if t.degree(v) == 1:
            continue
        if sum(1 for u in t.neighbors(v) if t.degree(u) == 1) != 1:
            return False
    return True


def alpha_equals_ddm(t: Graph) -> bool:
    """True iff the independence number equals the swap number: the tree is
    weak and S(t) is half the order."""
    _require_nontrivial_tree(t)
    return is_weak_tree(t) and 2 * s_weight(t)[0] == t.n


def alpha_equals_eviction(t: Graph) -> bool:
    """True iff the independence number equals the eviction number, decided
    through the weak reduction: S(T') must be half of |V(T')|."""
    _require_nontrivial_tree(t)
    red = weak_reduction(t)
    w_red, _ = _weak_partition_dp(red.reduced)
    return 2 * w_red == red.reduced.n


# ---------------------------------------------------------------------------
# tree enumeration (test scaffolding, n <= 10 intended)

def _ahu_key(t: Graph, root: int) -> str:
    def encode(v: int, parent: int) -> str:
        subs = sorted(encode(u, v) for u in t.neighbors(v) if u != parent)
        return "(" + "".join(subs) + ")"

    return encode(root, -1)


def tree_canonical_key(t: Graph) -> str:
    """Isomorphism-invariant string: rooted canonical encoding minimized over
    the tree's one or two centers."""
    _require_tree(t)
    if t.n == 1:
        return "()"
    degree = [t.degree(v) for v in range(t.n)]
    alive = set(range(t.n))
    deg = degree[:]
    layer = [v for v in alive if deg[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
        for v in layer:
            for u in t.neighbors(v):
                if u in alive:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return min(_ahu_key(t, c) for c in alive)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic trees on n >= 2 vertices, deterministically ordered.

    Generated by adding a pendant leaf to every vertex of every (n-1)-tree
    and deduplicating by canonical key.
    """
    if n < 2:
        raise ContractError("enumeration covers non-trivial trees only")
    if n == 2:
        return (Graph(2, [(0, 1)]),)
    found: dict[str, Graph] = {}
    for t in enumerate_trees(n - 1):
        for v in range(t.n):
            bigger = Graph(t.n + 1, list(t.edges) + [(v, t.n)])
            key = tree_canonical_key(bigger)
            if key not in found:
                found[key] = bigger
    return tuple(found[k] for k in sorted(found))
