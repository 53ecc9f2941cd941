"""Graph class recognition: bipartite, chordal, cograph, perfect.

Full recognizers decide membership from scratch.  The incremental variants
assume the graph minus one designated vertex is already in the class, which
is exactly what level-by-level generation guarantees, and only look for a
violation through that vertex.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Iterator

from .graph import Graph, bits, complement_rows


class GraphClass(Enum):
    ALL = "all"
    PERFECT = "perfect"
    BIPARTITE = "bipartite"
    CHORDAL = "chordal"
    COGRAPH = "cograph"


# --- bipartite ---------------------------------------------------------


def bipartite_rows(n: int, rows: tuple[int, ...]) -> bool:
    color = [-1] * n
    for start in range(n):
        if color[start] >= 0 or not rows[start]:
            if color[start] < 0:
                color[start] = 0
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(rows[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_bipartite(g: Graph) -> bool:
    """True iff g is 2-colorable."""
    return bipartite_rows(g.n, g.adj)


# --- chordal -----------------------------------------------------------


def chordal_rows(n: int, rows: tuple[int, ...]) -> bool:
    alive = (1 << n) - 1
    remaining = n
    while remaining:
        found = False
        for v in bits(alive):
            nb = rows[v] & alive
            # v is simplicial iff its live neighbourhood induces a clique
            if all(nb & ~(rows[u] | (1 << u)) == 0 for u in bits(nb)):
                alive ^= 1 << v
                remaining -= 1
                found = True
                break
        if not found:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    """True iff repeated simplicial elimination empties the graph."""
    return chordal_rows(g.n, g.adj)


# --- cograph -----------------------------------------------------------


def _induces_p4(rows: tuple[int, ...], quad: tuple[int, int, int, int]) -> bool:
    degs = []
    edge_count = 0
    qmask = 0
    for v in quad:
        qmask |= 1 << v
    for v in quad:
        d = (rows[v] & qmask).bit_count()
        if d > 2:
            return False
        degs.append(d)
        edge_count += d
    return edge_count == 6 and sorted(degs) == [1, 1, 2, 2]


def has_p4_through(n: int, rows: tuple[int, ...], v: int) -> bool:
    others = [u for u in range(n) if u != v]
    for trio in combinations(others, 3):
        if _induces_p4(rows, (v,) + trio):
            return True
    return False


def is_cograph(g: Graph) -> bool:
    """True iff no four vertices induce a path."""
    if g.n <= 16:
        return not any(
            _induces_p4(g.adj, quad) for quad in combinations(range(g.n), 4)
        )
    return _cograph_recursive(g.n, g.adj)


def _components(n: int, rows: tuple[int, ...]) -> list[int]:
    seen = 0
    comps = []
    for start in range(n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = rows[start] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(comp)
    return comps


def _cograph_recursive(n: int, rows: tuple[int, ...]) -> bool:
    if n <= 2:
        return True
    comps = _components(n, rows)
    if len(comps) == 1:
        rows = complement_rows(n, rows)
        comps = _components(n, rows)
        if len(comps) == 1:
            return False
    from .graph import Graph as _G, induced_subgraph

    host = _G._raw(n, rows)
    return all(
        _cograph_recursive(c.bit_count(), induced_subgraph(host, c).adj)
        for c in comps
    )


# --- perfect -----------------------------------------------------------


def odd_hole_through(n: int, rows: tuple[int, ...], v: int) -> bool:
    """Is there an induced odd cycle of length >= 5 through v?

    Depth-first enumeration of induced paths v, p1, ..., pt.  A path vertex
    may only touch its predecessor; a closing vertex must touch exactly v
    and the path tip.  Parity is checked at closure.
    """
    vrow = rows[v]
    vbit = 1 << v

    def rec(last: int, pathmask: int, midnbrs: int, length: int) -> bool:
        # length = number of path vertices including v
        lrow = rows[last]
        if length >= 4 and length % 2 == 0:
            # closing vertex gives an odd cycle on length+1 >= 5 vertices
            if lrow & vrow & ~midnbrs & ~pathmask:
                return True
        forbidden = pathmask | midnbrs | vrow
        for w in bits(lrow & ~forbidden):
            if rec(w, pathmask | (1 << w), midnbrs | lrow, length + 1):
                return True
        return False

    for p1 in bits(vrow):
        if rec(p1, vbit | (1 << p1), 0, 2):
            return True
    return False


def extension_stays_perfect(n: int, rows: tuple[int, ...], v: int) -> bool:
    if odd_hole_through(n, rows, v):
        return False
    return not odd_hole_through(n, complement_rows(n, rows), v)


def remains_perfect_after_extension(g: Graph, v: int) -> bool:
    """Assuming g - v is perfect: is g perfect?

    Checks for an odd hole or odd antihole through v.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return extension_stays_perfect(g.n, g.adj, v)


def is_perfect(g: Graph) -> bool:
    """Full perfectness test via odd-hole search from every vertex."""
    crows = complement_rows(g.n, g.adj)
    for v in range(g.n):
        if odd_hole_through(g.n, g.adj, v):
            return False
        if odd_hole_through(g.n, crows, v):
            return False
    return True


def _induces_cycle(rows: tuple[int, ...], smask: int, size: int) -> bool:
    verts = list(bits(smask))
    for v in verts:
        if (rows[v] & smask).bit_count() != 2:
            return False
    # all degrees 2: a disjoint union of cycles; connected iff single cycle
    start = verts[0]
    comp = 1 << start
    frontier = rows[start] & smask & ~comp
    while frontier:
        comp |= frontier
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & smask & ~comp
    return comp == smask


def is_perfect_naive(g: Graph) -> bool:
    """Odd-subset enumeration oracle; test use only (n <= ~14)."""
    crows = complement_rows(g.n, g.adj)
    for size in range(5, g.n + 1, 2):
        for combo in combinations(range(g.n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if _induces_cycle(g.adj, smask, size):
                return False
            if _induces_cycle(crows, smask, size):
                return False
    return True


# --- cliques -----------------------------------------------------------


def clique_masks(n: int, rows: tuple[int, ...]) -> Iterator[int]:
    def rec(mask: int, cand: int) -> Iterator[int]:
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            cur = mask | low
            yield cur
            yield from rec(cur, cand & rows[w])

    yield 0
    yield from rec(0, (1 << n) - 1)


def enumerate_cliques(g: Graph) -> Iterator[int]:
    """Every vertex set inducing a complete graph (including the empty set),
    each exactly once, in ascending-lexicographic member order."""
    return clique_masks(g.n, g.adj)


def in_class(g: Graph, cls: GraphClass) -> bool:
    """Full (non-incremental) membership test."""
    if cls is GraphClass.ALL:
        return True
    if cls is GraphClass.BIPARTITE:
        return is_bipartite(g)
    if cls is GraphClass.CHORDAL:
        return is_chordal(g)
    if cls is GraphClass.COGRAPH:
        return is_cograph(g)
    return is_perfect(g)
