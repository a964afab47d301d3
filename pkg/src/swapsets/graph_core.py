"""Core graph machinery: immutable graphs, domination tests, matchings, certificates.

Vertex sets travel through the public API as plain iterables of ints and come
back as frozensets; internally everything is a bitmask (one Python int per
set) so domination and adjacency checks are word-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Malformed edge-list text; message names the offending line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ContractError(ValueError):
    """An operation was called outside its stated precondition."""


class BudgetError(RuntimeError):
    """An exact solver was asked to run beyond its configured size cap."""


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Adjacency is stored both as sorted neighbor tuples and as per-vertex
    bitmasks (open and closed neighborhoods).  Instances hash and compare
    by (n, edges) so they can key caches.
    """

    __slots__ = ("n", "edges", "full_mask", "_adj", "_open", "_closed", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
        self.n = n
        self.edges = tuple(sorted(seen))
        self.full_mask = (1 << n) - 1
        open_masks = [0] * n
        for u, v in self.edges:
            open_masks[u] |= 1 << v
            open_masks[v] |= 1 << u
        self._open = tuple(open_masks)
        self._closed = tuple(m | (1 << v) for v, m in enumerate(open_masks))
        self._adj = tuple(tuple(_mask_members(m)) for m in open_masks)
        self._hash = hash((n, self.edges))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def open_mask(self, v: int) -> int:
        """Bitmask of N(v)."""
        return self._open[v]

    def closed_mask(self, v: int) -> int:
        """Bitmask of N[v] = N(v) plus v itself."""
        return self._closed[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._open[u] >> v & 1)

    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _mask_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Bitmask for a vertex collection, range-checked against n."""
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        m |= 1 << v
    return m


def members_of(mask: int) -> frozenset[int]:
    return frozenset(_mask_members(mask))


# ---------------------------------------------------------------------------
# parsing and generators

def parse_graph(text: str) -> Graph:
    """Parse edge-list text: a header line "n m" then m lines "u v".

    Blank lines and lines starting with '#' are skipped.  Errors name the
    1-based line number they occurred on.
    """
    header = None
    edges = []
    expected = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphParseError(line_no, f"expected header 'n m', got {raw!r}")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphParseError(line_no, f"non-integer header field in {raw!r}")
            if n < 0 or m < 0:
                raise GraphParseError(line_no, "header counts must be nonnegative")
            header = (n, m)
            expected = m
            continue
        if len(fields) != 2:
            raise GraphParseError(line_no, f"expected edge 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(line_no, f"non-integer endpoint in {raw!r}")
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(line_no, f"endpoint out of range 0..{n - 1} in {raw!r}")
        if u == v:
            raise GraphParseError(line_no, f"loop at vertex {u}")
        edges.append((u, v))
    if header is None:
        raise GraphParseError(1, "empty input, expected header 'n m'")
    if len(edges) != expected:
        raise GraphParseError(1, f"header promised {expected} edges, found {len(edges)}")
    try:
        return Graph(header[0], edges)
    except ValueError as exc:
        raise GraphParseError(1, str(exc))


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph: header plus one line per edge."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid_graph(m: int, n: int) -> Graph:
    """Grid with m columns and n rows; cell (i, j), 1-based, has id (i-1)*n + (j-1)."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    return Graph(m * n, edges)


def subdivided_doubled_triangle() -> Graph:
    """Triangle with every edge doubled, then every edge subdivided: 9 vertices.

    Vertices 0,1,2 are the original triangle; each pair is joined by two
    length-2 paths through fresh subdivision vertices 3..8.
    """
    edges = []
    nxt = 3
    for a, b in ((0, 1), (0, 2), (1, 2)):
        for _ in range(2):
            edges.append((a, nxt))
            edges.append((nxt, b))
            nxt += 1
    return Graph(9, edges)


# ---------------------------------------------------------------------------
# domination and related

def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex is in s or adjacent to a member of s."""
    covered = 0
    for v in _mask_members(mask_of(s, g.n)):
        covered |= g.closed_mask(v)
    return covered == g.full_mask


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s, g.n)
    for v in _mask_members(m):
        if g.open_mask(v) & m:
            return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _mask_members(frontier):
            nxt |= g.open_mask(v)
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and len(g.edges) == g.n - 1 and is_connected(g)


def connected_components(g: Graph) -> list[frozenset[int]]:
    out = []
    remaining = g.full_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _mask_members(frontier):
                nxt |= g.open_mask(v)
            frontier = nxt & remaining & ~seen
            seen |= frontier
        out.append(members_of(seen))
        remaining &= ~seen
    return out


def classify_stems(g: Graph) -> tuple[str, ...]:
    """Label every vertex 'none', 'weak', or 'strong' by its count of leaf neighbors.

    A leaf is a degree-1 vertex; a weak stem has exactly one leaf neighbor,
    a strong stem two or more.
    """
    labels = []
    for v in range(g.n):
        leaf_nbrs = sum(1 for u in g.neighbors(v) if g.degree(u) == 1)
        labels.append("none" if leaf_nbrs == 0 else "weak" if leaf_nbrs == 1 else "strong")
    return tuple(labels)


def is_strong_graph(g: Graph) -> bool:
    """True iff some vertex has two or more degree-1 neighbors."""
    return "strong" in classify_stems(g)


# ---------------------------------------------------------------------------
# matchings

def matching_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[tuple[int, int], ...] | None:
    """Perfect matching between disjoint equal-size vertex sets a and b using
    edges of g, or None if there is none.

    Augmenting-path search over a in ascending order, partners tried in
    ascending order, so the result is deterministic.
    """
    a_list = sorted(set(a))
    b_list = sorted(set(b))
    if len(a_list) != len(b_list):
        raise ContractError("matching endpoints must have equal size")
    if set(a_list) & set(b_list):
        raise ContractError("matching endpoints must be disjoint")
    b_mask = mask_of(b_list, g.n)
    adj = {u: [v for v in g.neighbors(u) if b_mask >> v & 1] for u in a_list}
    match_of_b: dict[int, int] = {}

    def augment(u: int, visited: set[int]) -> bool:
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_of_b or augment(match_of_b[v], visited):
                match_of_b[v] = u
                return True
        return False

    for u in a_list:
        if not augment(u, set()):
            return None
    match_of_a = {u: v for v, u in match_of_b.items()}
    return tuple((u, match_of_a[u]) for u in a_list)


def lex_least_matching(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[tuple[int, int], ...] | None:
    """Perfect matching between a and b minimizing the partner sequence of
    ascending a, or None.  Greedy with a feasibility probe at each step."""
    a_list = sorted(set(a))
    b_set = set(b)
    chosen: list[tuple[int, int]] = []
    for i, u in enumerate(a_list):
        placed = False
        for v in sorted(b_set):
            if not g.has_edge(u, v):
                continue
            rest = matching_between(g, a_list[i + 1:], b_set - {v}) if len(a_list) - i - 1 else ()
            if rest is not None:
                chosen.append((u, v))
                b_set.remove(v)
                placed = True
                break
        if not placed:
            return None
    return tuple(chosen)


# ---------------------------------------------------------------------------
# swap certificates

@dataclass(frozen=True)
class SwapCertificate:
    """Disjoint sets d and d_prime with a perfect matching between them.

    Matching pairs carry the d-side endpoint first.  A certificate verifies
    against a graph when both sets dominate it and every pair is an edge.
    """

    d: frozenset[int]
    d_prime: frozenset[int]
    matching: tuple[tuple[int, int], ...]

    def size(self) -> int:
        return len(self.d)

    def to_json_dict(self) -> dict:
        return {
            "d": sorted(self.d),
            "d_prime": sorted(self.d_prime),
            "matching": [list(p) for p in sorted(self.matching)],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "SwapCertificate":
        try:
            d = frozenset(int(v) for v in obj["d"])
            dp = frozenset(int(v) for v in obj["d_prime"])
            matching = tuple((int(p[0]), int(p[1])) for p in obj["matching"])
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise ValueError(f"malformed certificate object: {exc}")
        return cls(d, dp, matching)

    @classmethod
    def build(cls, d: Iterable[int], d_prime: Iterable[int],
              matching: Iterable[tuple[int, int]]) -> "SwapCertificate":
        return cls(frozenset(d), frozenset(d_prime), tuple(sorted(matching)))


def certificate_violations(g: Graph, cert: SwapCertificate) -> tuple[str, ...]:
    """All reasons the certificate fails against g, empty when it verifies."""
    problems = []
    out_of_range = [v for v in sorted(cert.d | cert.d_prime) if not 0 <= v < g.n]
    if out_of_range:
        return (f"vertex-out-of-range:{out_of_range[0]}",)
    overlap = cert.d & cert.d_prime
    if overlap:
        problems.append(f"sets-not-disjoint:{min(overlap)}")
    if len(cert.d) != len(cert.d_prime):
        problems.append(f"size-mismatch:{len(cert.d)}!={len(cert.d_prime)}")
    if len(cert.matching) != len(cert.d):
        problems.append(f"matching-size-mismatch:{len(cert.matching)}!={len(cert.d)}")
    seen_d, seen_dp = set(), set()
    for u, v in cert.matching:
        if u not in cert.d:
            problems.append(f"matched-vertex-not-in-d:{u}")
        elif u in seen_d:
            problems.append(f"vertex-matched-twice:{u}")
        if v not in cert.d_prime:
            problems.append(f"matched-vertex-not-in-d-prime:{v}")
        elif v in seen_dp:
            problems.append(f"vertex-matched-twice:{v}")
        seen_d.add(u)
        seen_dp.add(v)
        if 0 <= u < g.n and 0 <= v < g.n and not g.has_edge(u, v):
            problems.append(f"pair-not-an-edge:{u}-{v}")
    if not is_dominating(g, cert.d):
        problems.append("d-not-dominating")
    if not is_dominating(g, cert.d_prime):
        problems.append("d-prime-not-dominating")
    return tuple(problems)


def verify_certificate(g: Graph, cert: SwapCertificate) -> bool:
    """True iff d and d_prime are disjoint dominating sets of g joined by a
    perfect matching along edges of g."""
    return not certificate_violations(g, cert)


# ---------------------------------------------------------------------------
# independence and domination numbers

def independence_number(g: Graph, max_n: int = 40) -> int:
    """Exact maximum independent set size by branch and bound."""
    if g.n > max_n:
        raise BudgetError(f"independence_number capped at n={max_n}, got n={g.n}")
    best = 0

    def grow(candidates: int, size: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        # branch on a maximum-degree candidate: either exclude it or take it
        pivot, pivot_deg = -1, -1
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (g.open_mask(v) & candidates).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        if pivot_deg == 0:
            best = max(best, size + candidates.bit_count())
            return
        grow(candidates & ~g.closed_mask(pivot), size + 1)
        grow(candidates & ~(1 << pivot), size)

    grow(g.full_mask, 0)
    return best


def _exists_dominating(g: Graph, k: int) -> bool:
    """Is there a dominating set of size at most k?"""
    max_cover = max((m.bit_count() for m in g._closed), default=1)

    def rec(undominated: int, slots: int) -> bool:
        if not undominated:
            return True
        if slots * max_cover < undominated.bit_count():
            return False
        u = (undominated & -undominated).bit_length() - 1
        for x in _mask_members(g.closed_mask(u)):
            if rec(undominated & ~g.closed_mask(x), slots - 1):
                return True
        return False

    return rec(g.full_mask, k)


def has_dominating_set(g: Graph, k: int) -> bool:
    """Is there a dominating set of size at most k?  Cheaper than computing
    the domination number when only a threshold matters."""
    if k < 0:
        return False
    return _exists_dominating(g, k)


def domination_number(g: Graph, max_n: int = 30) -> int:
    """Exact domination number by increasing-cardinality search."""
    if g.n > max_n:
        raise BudgetError(f"domination_number capped at n={max_n}, got n={g.n}")
    if g.n == 0:
        return 0
    lb = -(-g.n // max(m.bit_count() for m in g._closed))
    for k in range(lb, g.n + 1):
        if _exists_dominating(g, k):
            return k
    raise AssertionError("unreachable: V(g) dominates g")


# ---------------------------------------------------------------------------
# products

def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (a, b) gets flat id a * h.n + b.

    (a,b) ~ (a',b') iff a=a' and bb' is an edge of h, or b=b' and aa' is an
    edge of g.
    """
    edges = []
    for a in range(g.n):
        base = a * h.n
        for u, v in h.edges:
            edges.append((base + u, base + v))
    for u, v in g.edges:
        for b in range(h.n):
            edges.append((u * h.n + b, v * h.n + b))
    return Graph(g.n * h.n, edges)


def product_index(h: Graph, a: int, b: int) -> int:
    return a * h.n + b


def product_coords(h: Graph, idx: int) -> tuple[int, int]:
    return divmod(idx, h.n)
