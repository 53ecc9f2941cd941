"""Small simple graphs on up to 64 vertices, stored as per-vertex bitsets.

A vertex set is a plain int bitmask; bit v set means vertex v is in the set.
Graphs are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Graph would exceed the 64-vertex capacity."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def vset(vertices: Iterable[int]) -> int:
    """Bitmask for a collection of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbourhood bitset N(v)."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"order {n} outside 0..{MAX_VERTICES}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency bit >= order in row {v}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in bits(rows[v]):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Trusted fast path for internal callers that already hold valid rows.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                yield (v, u + v + 1)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"


def empty_graph(n: int) -> Graph:
    """Graph on n vertices with no edges."""
    if n < 0 or n > MAX_VERTICES:
        raise CapacityError(f"order {n} outside 0..{MAX_VERTICES}")
    return Graph._raw(n, (0,) * n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given edge list."""
    rows = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge ({u},{v}) for order {n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._raw(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def extend_rows(adj: tuple[int, ...], n: int, s: int) -> tuple[int, ...]:
    """Rows of the order-(n+1) graph whose new vertex n is adjacent to mask s."""
    bit = 1 << n
    return tuple(
        (row | bit) if (s >> u) & 1 else row for u, row in enumerate(adj)
    ) + (s,)


def extend_with_vertex(g: Graph, s: int) -> Graph:
    """Add one vertex (receiving the highest index) adjacent exactly to s."""
    if g.n >= MAX_VERTICES:
        raise CapacityError(f"cannot extend past {MAX_VERTICES} vertices")
    if s & ~g.vertex_mask():
        raise ValueError("extension set contains an index >= order")
    return Graph._raw(g.n + 1, extend_rows(g.adj, g.n, s))


def complement_rows(n: int, adj: Sequence[int]) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(full & ~(row | (1 << v)) for v, row in enumerate(adj))


def complement(g: Graph) -> Graph:
    """Graph with edge uv iff uv is a non-edge of g (u != v)."""
    return Graph._raw(g.n, complement_rows(g.n, g.adj))


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by mask s, relabeled by ascending original index."""
    if s & ~g.vertex_mask():
        raise ValueError("vertex set contains an index >= order")
    keep = list(bits(s))
    pos = {v: idx for idx, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph._raw(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertex_mask() & ~(1 << v))


def degree_in(g: Graph, v: int, s: int) -> int:
    """|N(v) ∩ s|."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return (g.adj[v] & s).bit_count()


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise CapacityError(f"union order {total} exceeds {MAX_VERTICES}")
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph._raw(total, tuple(rows))


# --- graph6 ------------------------------------------------------------
#
# Header-less graph6: N(n) is byte 63+n for n <= 62, else 126 followed by
# three bytes carrying n in big-endian 6-bit groups.  The upper triangle is
# written in column order x(0,1), x(0,2), x(1,2), ..., zero-padded to a
# 6-bit boundary, each group emitted as value+63.


def _triangle_bits(g: Graph) -> Iterator[int]:
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            yield (col >> i) & 1


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126), chr(63 + ((n >> 12) & 63)), chr(63 + ((n >> 6) & 63)),
               chr(63 + (n & 63))]
    acc = 0
    count = 0
    for b in _triangle_bits(g):
        acc = (acc << 1) | b
        count += 1
        if count == 6:
            out.append(chr(63 + acc))
            acc = count = 0
    if count:
        out.append(chr(63 + (acc << (6 - count))))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ascii graph6 data") from exc
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range")
        vals.append(v)
    if vals[0] == 63:
        if len(vals) < 4:
            raise Graph6Error("truncated long-form order")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds capacity {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6Error(f"expected {expect} data bytes, got {len(body)}")
    stream = 0
    for v in body:
        stream = (stream << 6) | v
    pad = 6 * expect - nbits
    if pad and stream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    stream >>= pad
    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (stream >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph._raw(n, tuple(rows))
