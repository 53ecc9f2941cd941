"""Canonical labeling by partition refinement and individualization.

The canonical key of a graph is a byte string equal for two graphs exactly
when they are isomorphic: one order byte followed by the lexicographically
smallest column-major upper-triangle encoding reachable through the
refinement tree.  Leaves that tie with the current best reveal
automorphisms, which prune sibling branches via orbit representatives.
"""

from __future__ import annotations

from .graph import Graph


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement: split cells (bit masks) by neighbour counts
    into each cell, ordering split parts by signature for label-invariance."""
    while True:
        new: list[int] = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            rest = cell
            while rest:
                low = rest & -rest
                rest ^= low
                rv = rows[low.bit_length() - 1]
                sig = tuple((rv & m).bit_count() for m in cells)
                groups[sig] = groups.get(sig, 0) | low
            if len(groups) == 1:
                new.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new.append(groups[sig])
        if not changed:
            return new
        cells = new


def _encode(n: int, rows: tuple[int, ...], perm: list[int]) -> int:
    """Upper-triangle bits of the relabeled graph, column-major like graph6."""
    enc = 0
    for jpos in range(1, n):
        col = rows[perm[jpos]]
        for ipos in range(jpos):
            enc = (enc << 1) | ((col >> perm[ipos]) & 1)
    return enc


def _in_orbit_of(
    v: int,
    tried: list[int],
    autos: list[tuple[int, ...]],
    prefix: list[int],
    n: int,
) -> bool:
    """Is v in the orbit of some already-tried vertex under the group
    generated by the stored automorphisms that fix the prefix pointwise?"""
    usable = [a for a in autos if all(a[p] == p for p in prefix)]
    if not usable:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in usable:
        for w in range(n):
            ra, rw = find(a[w]), find(w)
            if ra != rw:
                parent[ra] = rw
    rv = find(v)
    return any(find(u) == rv for u in tried)


_MAX_AUTOS = 64


def canonical_form(g: Graph) -> tuple[bytes, list[int]]:
    """(canonical key, permutation) where perm[position] = original vertex."""
    n = g.n
    if n <= 1:
        return bytes([n]), list(range(n))
    rows = g.adj
    best_enc: int | None = None
    best_perm: list[int] = []
    autos: list[tuple[int, ...]] = []

    def rec(cells: list[int], prefix: list[int]) -> None:
        nonlocal best_enc, best_perm
        cells = _refine(rows, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                target = idx
                break
        if target < 0:
            perm = [c.bit_length() - 1 for c in cells]
            enc = _encode(n, rows, perm)
            if best_enc is None or enc < best_enc:
                best_enc = enc
                best_perm = perm
            elif enc == best_enc and len(autos) < _MAX_AUTOS:
                aut = [0] * n
                for pos in range(n):
                    aut[best_perm[pos]] = perm[pos]
                if any(aut[v] != v for v in range(n)):
                    autos.append(tuple(aut))
            return
        cell = cells[target]
        tried: list[int] = []
        rest = cell
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            # skip v if an automorphism fixing the prefix maps it onto an
            # already-explored sibling; orbits are recomputed because deeper
            # branches keep discovering automorphisms
            if tried and _in_orbit_of(v, tried, autos, prefix, n):
                continue
            tried.append(v)
            child = cells[:target] + [low, cell ^ low] + cells[target + 1 :]
            rec(child, prefix + [v])

    rec([(1 << n) - 1], [])
    assert best_enc is not None
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + best_enc.to_bytes(nbytes, "big"), best_perm


def canonical_key(g: Graph) -> bytes:
    """Label-invariant key; equal keys iff isomorphic graphs."""
    return canonical_form(g)[0]


def canonical_key_rows(n: int, rows: tuple[int, ...]) -> bytes:
    return canonical_form(Graph._raw(n, rows))[0]


def graph_from_key(key: bytes) -> Graph:
    """Rebuild the canonically labeled graph encoded by a key."""
    n = key[0]
    if n <= 1:
        return Graph._raw(n, (0,) * n)
    enc = int.from_bytes(key[1:], "big")
    nbits = n * (n - 1) // 2
    rows = [0] * n
    pos = nbits
    for jpos in range(1, n):
        for ipos in range(jpos):
            pos -= 1
            if (enc >> pos) & 1:
                rows[ipos] |= 1 << jpos
                rows[jpos] |= 1 << ipos
    return Graph._raw(n, tuple(rows))
