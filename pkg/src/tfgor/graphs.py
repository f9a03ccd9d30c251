"""Finite simple graphs and their independence combinatorics.

Vertices are the integer labels 0..n-1.  Graph values are immutable once
built and every operation returns a fresh graph, so they can be shared
freely across worker processes.  All set-valued results come back sorted
(lexicographically for lists of sets) to keep reports reproducible.
"""

from __future__ import annotations

import math
from itertools import combinations

__all__ = [
    "Graph",
    "from_edge_list",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "write_edge_list",
    "generate",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "girth4_planar",
    "disjoint_union",
    "girth",
    "is_triangle_free",
    "components",
    "has_isolated_vertices",
    "is_connected",
    "induced_subgraph",
    "delete_vertex",
    "delete_edge",
    "is_independent_set",
    "localize",
    "localized_vertices",
    "edge_localize",
    "edge_localized_vertices",
    "maximal_independent_sets",
    "independence_number",
    "is_well_covered",
    "is_in_w2",
    "is_alpha_critical",
]


def _bits_to_tuple(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        b = bits & -bits
        out.append(b.bit_length() - 1)
        bits ^= b
    return tuple(out)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency is kept both as sorted neighbor tuples and as per-vertex
    bitmasks; the bitmasks drive the independent-set enumeration.
    """

    __slots__ = ("n", "_nbr_bits", "_nbrs")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        bits = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {tuple(e)!r} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self._nbr_bits = tuple(bits)
        self._nbrs = tuple(_bits_to_tuple(b) for b in bits)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (
            0 <= u < self.n
            and 0 <= v < self.n
            and bool(self._nbr_bits[u] >> v & 1)
        )

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._nbrs) // 2

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._nbr_bits == other._nbr_bits
        )

    def __hash__(self):
        return hash((self.n, self._nbr_bits))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from a vertex count and an iterable of edge pairs."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# graph6 encoding
#
# Standard packing: the vertex count as one byte N+63 for n <= 62 (or the
# '~'-prefixed 18/36-bit forms), then the upper-triangle adjacency bits in
# column-major order -- pairs (0,1),(0,2),(1,2),(0,3),... -- six bits per
# byte, each byte offset by 63, final byte zero-padded.
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6-encoded graph (optional '>>graph6<<' header)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(x < 0 or x > 63 for x in data):
        raise ValueError("illegal character in graph6 string")
    if data[0] < 63:
        n, idx = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        idx = 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        idx = 8
    else:
        raise ValueError("malformed graph6 length prefix")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(data) - idx != nbytes:
        raise ValueError(
            f"graph6 body has {len(data) - idx} bytes, expected {nbytes} for n={n}"
        )
    body = data[idx:]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    for k in range(npairs, nbytes * 6):
        if body[k // 6] >> (5 - k % 6) & 1:
            raise ValueError("nonzero padding bits in graph6 string")
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 string (no header)."""
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    elif n <= 68719476735:
        head = [63, 63] + [(n >> 6 * (5 - i)) & 63 for i in range(6)]
    else:
        raise ValueError("graph too large for graph6")
    npairs = n * (n - 1) // 2
    body = [0] * ((npairs + 5) // 6)
    k = 0
    for j in range(1, n):
        bj = g._nbr_bits[j]
        for i in range(j):
            if bj >> i & 1:
                body[k // 6] |= 1 << (5 - k % 6)
            k += 1
    return "".join(chr(x + 63) for x in head + body)


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" (0-based).
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def girth4_planar(n: int) -> Graph:
    """Connected planar girth-4 graph on 3n-1 vertices (n >= 3).

    A strip of quadrilaterals: with 1-based labels x1..x(3n-1) the edges are
    x1x2, then for k = 1..n-1 the block x(3k-1)x(3k), x(3k)x(3k+1),
    x(3k+1)x(3k+2), x(3k+2)x(3k-2), and the chords x(3l-3)x(3l) for
    l = 2..n-1.  Vertex i here is x(i+1).  Members are well-covered with
    independence number n and Gorenstein independence complex.
    """
    if n < 3:
        raise ValueError("girth4-planar family needs n >= 3")
    edges = [(0, 1)]
    for k in range(1, n):
        edges += [
            (3 * k - 2, 3 * k - 1),
            (3 * k - 1, 3 * k),
            (3 * k, 3 * k + 1),
            (3 * k + 1, 3 * k - 3),
        ]
    for l in range(2, n):
        edges.append((3 * l - 4, 3 * l - 1))
    return Graph(3 * n - 1, edges)


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 3),
    "complete": (complete_graph, 1),
    "girth4-planar": (girth4_planar, 3),
}


def generate(family: str, n: int) -> Graph:
    """Generate a named family member: path, cycle, complete, girth4-planar."""
    try:
        builder, min_n = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    if n < min_n:
        raise ValueError(f"family {family!r} needs n >= {min_n}")
    return builder(n)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; the vertices of h are shifted up by g.n."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)


# ---------------------------------------------------------------------------
# Elementary invariants
# ---------------------------------------------------------------------------


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or math.inf when g is a forest."""
    best = math.inf
    for u, v in g.edges():
        d = _dist_avoiding_edge(g, u, v)
        if d is not None and d + 1 < best:
            best = d + 1
            if best == 3:
                return 3
    return best


def _dist_avoiding_edge(g: Graph, u: int, v: int):
    # BFS distance u -> v in g minus the edge uv.
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if (x, y) in ((u, v), (v, u)) or y in dist:
                    continue
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                nxt.append(y)
        frontier = nxt
    return None


def is_triangle_free(g: Graph) -> bool:
    """True iff the girth is at least 4 (forests count)."""
    return all(g._nbr_bits[u] & g._nbr_bits[v] == 0 for u, v in g.edges())


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, sorted lexicographically."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, frontier = [s], [s]
        seen[s] = True
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.neighbors(x):
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        nxt.append(y)
            frontier = nxt
        out.append(tuple(sorted(comp)))
    return sorted(out)


def has_isolated_vertices(g: Graph) -> bool:
    return any(len(nb) == 0 for nb in g._nbrs)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# ---------------------------------------------------------------------------
# Subgraphs and localizations
# ---------------------------------------------------------------------------


def _vertex_subset(g: Graph, s) -> tuple[int, ...]:
    kept = tuple(sorted(set(s)))
    for x in kept:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range for n={g.n}")
    return kept


def induced_subgraph(g: Graph, s) -> Graph:
    """Induced subgraph on s, relabeled 0..|s|-1 in increasing label order.

    New vertex i corresponds to sorted(s)[i].
    """
    kept = _vertex_subset(g, s)
    index = {x: i for i, x in enumerate(kept)}
    edges = [
        (index[u], index[v]) for u, v in g.edges() if u in index and v in index
    ]
    return Graph(len(kept), edges)


def delete_vertex(g: Graph, x: int) -> Graph:
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    return induced_subgraph(g, [v for v in range(g.n) if v != x])


def delete_edge(g: Graph, e) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{(u, v)} is not an edge")
    return Graph(g.n, [f for f in g.edges() if f not in ((u, v), (v, u))])


def is_independent_set(g: Graph, s) -> bool:
    kept = _vertex_subset(g, s)
    mask = 0
    for x in kept:
        mask |= 1 << x
    return all(g._nbr_bits[x] & mask == 0 for x in kept)


def localized_vertices(g: Graph, s) -> tuple[int, ...]:
    """Original labels surviving the localization at the independent set s."""
    kept = _vertex_subset(g, s)
    if not is_independent_set(g, kept):
        raise ValueError(f"{kept} is not an independent set")
    removed = set(kept)
    for x in kept:
        removed.update(g.neighbors(x))
    return tuple(v for v in range(g.n) if v not in removed)


def localize(g: Graph, s) -> Graph:
    """Delete the independent set s together with all its neighbors.

    The result is relabeled 0..k-1; localized_vertices(g, s) gives the
    original label of each new vertex.
    """
    return induced_subgraph(g, localized_vertices(g, s))


def edge_localized_vertices(g: Graph, a: int, b: int) -> tuple[int, ...]:
    """Original labels surviving the localization at the edge ab."""
    if not g.has_edge(a, b):
        raise ValueError(f"{(a, b)} is not an edge")
    removed = set(g.neighbors(a)) | set(g.neighbors(b))
    return tuple(v for v in range(g.n) if v not in removed)


def edge_localize(g: Graph, a: int, b: int) -> Graph:
    """Induced subgraph on V minus N(a) and N(b); a and b go too."""
    return induced_subgraph(g, edge_localized_vertices(g, a, b))


# ---------------------------------------------------------------------------
# Independence combinatorics
#
# Maximal independent sets of g are the maximal cliques of the complement,
# enumerated by Bron-Kerbosch with pivoting on bitmasks.  Exhaustive
# enumeration is fine at the target scale (n up to ~20).
# ---------------------------------------------------------------------------


def _maximal_independent_masks(g: Graph):
    n = g.n
    if n == 0:
        yield 0
        return
    full = (1 << n) - 1
    nonadj = tuple(full & ~b & ~(1 << v) for v, b in enumerate(g._nbr_bits))

    def extend(chosen, cand, excl):
        if cand == 0 and excl == 0:
            yield chosen
            return
        pool = cand | excl
        best_u, best = -1, -1
        m = pool
        while m:
            u = (m & -m).bit_length() - 1
            score = (cand & nonadj[u]).bit_count()
            if score > best:
                best, best_u = score, u
            m &= m - 1
        todo = cand & ~nonadj[best_u]
        while todo:
            bit = todo & -todo
            v = bit.bit_length() - 1
            yield from extend(chosen | bit, cand & nonadj[v], excl & nonadj[v])
            cand &= ~bit
            excl |= bit
            todo ^= bit

    yield from extend(0, full, 0)


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal independent sets, sorted lexicographically."""
    return sorted(_bits_to_tuple(m) for m in _maximal_independent_masks(g))


def independence_number(g: Graph) -> int:
    return max(m.bit_count() for m in _maximal_independent_masks(g))


def is_well_covered(g: Graph) -> bool:
    """True iff every maximal independent set has the same size."""
    size = None
    for m in _maximal_independent_masks(g):
        c = m.bit_count()
        if size is None:
            size = c
        elif c != size:
            return False
    return True


def is_in_w2(g: Graph) -> bool:
    """True iff g is well-covered and stays well-covered with the same
    independence number after deleting any single vertex.

    Graphs with isolated vertices (K1 included) are not in W2; the empty
    graph is, vacuously.
    """
    if g.n == 0:
        return True
    if has_isolated_vertices(g):
        return False
    if not is_well_covered(g):
        return False
    alpha = independence_number(g)
    for x in range(g.n):
        h = delete_vertex(g, x)
        if independence_number(h) != alpha or not is_well_covered(h):
            return False
    return True


def is_alpha_critical(g: Graph) -> bool:
    """True iff deleting any edge increases the independence number."""
    alpha = independence_number(g)
    return all(
        independence_number(delete_edge(g, e)) > alpha for e in g.edges()
    )
