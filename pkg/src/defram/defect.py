"""Detection of k-sparse and k-dense vertex sets of a fixed target size.

A set S is k-sparse when every member has at most k neighbours inside S,
and k-dense when every member misses at most k other members (equivalently,
k-sparse in the complement).  The incremental searches here only look for
sets through a designated vertex, which is all the generator needs once the
parent graph is known to be clean.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, complement_rows, vset


@dataclass(frozen=True)
class DefectParams:
    """Defectiveness level k with dense target size i and sparse target j."""

    k: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"defectiveness level {self.k} < 0")
        if self.i < self.k + 2 or self.j < self.k + 2:
            raise ValueError(
                f"targets i={self.i}, j={self.j} must be >= k+2 = {self.k + 2}"
            )


def is_k_sparse(g: Graph, s: int, k: int) -> bool:
    """True iff every v in s has at most k neighbours inside s."""
    adj = g.adj
    return all((adj[v] & s).bit_count() <= k for v in bits(s))


def is_k_dense(g: Graph, s: int, k: int) -> bool:
    """True iff every v in s is non-adjacent to at most k other members."""
    adj = g.adj
    size = s.bit_count()
    return all(size - 1 - (adj[v] & s).bit_count() <= k for v in bits(s))


def find_bounded_degree_set(
    rows: tuple[int, ...], n: int, k: int, size: int, anchor: int | None = None
) -> int:
    """Mask of `size` vertices inducing maximum degree <= k w.r.t. rows, or 0.

    If anchor is given the set must contain it.  Backtracking grows the set
    in ascending vertex order; `counts` holds per-member inside-degrees and
    `sat` the members already at k, whose neighbours are thereby excluded.
    """
    if size > n or size < 1:
        return 0
    counts = [0] * n
    full = (1 << n) - 1

    def rec(smask: int, sat: int, cand: int, remaining: int) -> int:
        if remaining == 0:
            return smask
        while cand:
            if cand.bit_count() < remaining:
                return 0
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            nb = rows[w] & smask
            if nb & sat:
                continue
            dw = nb.bit_count()
            if dw > k:
                continue
            counts[w] = dw
            newsat = sat | (low if dw == k else 0)
            rest = nb
            while rest:
                ub = rest & -rest
                rest ^= ub
                u = ub.bit_length() - 1
                counts[u] += 1
                if counts[u] == k:
                    newsat |= ub
            got = rec(smask | low, newsat, cand, remaining - 1)
            if got:
                return got
            rest = nb
            while rest:
                ub = rest & -rest
                rest ^= ub
                counts[ub.bit_length() - 1] -= 1
        return 0

    if anchor is None:
        return rec(0, 0, full, size)
    abit = 1 << anchor
    return rec(abit, abit if k == 0 else 0, full ^ abit, size - 1)


def has_forbidden_set_through(g: Graph, v: int, p: DefectParams) -> bool:
    """Does g contain a k-dense i-set or a k-sparse j-set through v?

    Assumes g - v is already known to be free of such sets, so this decides
    whether g itself is.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return _forbidden_through(g.n, g.adj, v, p)


def _forbidden_through(
    n: int, rows: tuple[int, ...], v: int, p: DefectParams
) -> bool:
    if p.i <= n:
        crows = complement_rows(n, rows)
        if find_bounded_degree_set(crows, n, p.k, p.i, anchor=v):
            return True
    if p.j <= n:
        if find_bounded_degree_set(rows, n, p.k, p.j, anchor=v):
            return True
    return False


def brute_force_forbidden(g: Graph, p: DefectParams) -> bool:
    """Subset-enumeration oracle for the same predicate; test use, n <= ~16."""
    verts = range(g.n)
    if p.i <= g.n:
        for combo in combinations(verts, p.i):
            if is_k_dense(g, vset(combo), p.k):
                return True
    if p.j <= g.n:
        for combo in combinations(verts, p.j):
            if is_k_sparse(g, vset(combo), p.k):
                return True
    return False


def find_k_defective_set(g: Graph, k: int, t: int) -> int | None:
    """Some k-sparse or k-dense t-set of g as a mask, or None.

    Any set of at most k+2 vertices is k-defective, so small targets are
    immediate.
    """
    if t < 1:
        raise ValueError(f"target size {t} < 1")
    if t > g.n:
        return None
    if t <= k + 2:
        return (1 << t) - 1
    got = find_bounded_degree_set(g.adj, g.n, k, t)
    if got:
        return got
    crows = complement_rows(g.n, g.adj)
    got = find_bounded_degree_set(crows, g.n, k, t)
    return got or None
