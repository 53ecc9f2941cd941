"""Defective cocoloring: partitions into k-sparse and k-dense classes.

c_k(m) for a graph class is the largest order n such that every graph of
the class with at most n vertices admits a partition of its vertices into
m classes, each either k-sparse or k-dense.  Witnesses for c_k(m) < n are
graphs of order n with no such partition.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from .defect import DefectParams, is_k_dense, is_k_sparse
from .generate import (
    LevelSet,
    ResourceStop,
    SearchParams,
    iter_children,
    run_seeded,
    singleton_level,
)
from .canon import canonical_key
from .graph import Graph, complete_graph, disjoint_union, empty_graph, from_edges
from .recognition import GraphClass, in_class


class Flavor(enum.Enum):
    SPARSE = "sparse"
    DENSE = "dense"


@dataclass(frozen=True)
class CocolorParams:
    """Defect bound k, class count m, and the graph class under study."""

    graph_class: GraphClass
    k: int
    m: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"defect bound {self.k} must be >= 0")
        if self.m < 1:
            raise ValueError(f"class count {self.m} must be >= 1")


@dataclass
class Cocoloring:
    """Assignment of each vertex to a class, with a flavor per class."""

    classes: list[int]          # masks, one per color class
    flavors: list[Flavor]

    def validate(self, g: Graph, k: int) -> bool:
        total = 0
        for mask, flavor in zip(self.classes, self.flavors):
            if mask & total:
                return False
            total |= mask
            ok = is_k_sparse if flavor is Flavor.SPARSE else is_k_dense
            if not ok(g, mask, k):
                return False
        return total == g.vertex_mask()


def find_cocoloring(g: Graph, k: int, m: int) -> Cocoloring | None:
    """A (k, m)-cocoloring of g, or None if there is none.

    Backtracking over vertices in descending-degree order.  Each class keeps
    two feasibility flags: whether its current members could still be read
    as a k-sparse class and as a k-dense class.  A class stays alive while
    either reading survives, so no flavor needs to be branched on until the
    end.  Symmetry break: a vertex may open only the lowest-index empty
    class.
    """
    n = g.n
    if n == 0:
        return Cocoloring([], [])
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    rows = g.adj
    crows = [g.vertex_mask() & ~r & ~(1 << v) for v, r in enumerate(rows)]
    masks = [0] * m
    can_sparse = [True] * m
    can_dense = [True] * m

    def fits(v: int, c: int) -> tuple[bool, bool]:
        mask = masks[c]
        sp = can_sparse[c]
        dn = can_dense[c]
        if sp:
            hit = rows[v] & mask
            if hit.bit_count() > k:
                sp = False
            while sp and hit:
                u = (hit & -hit).bit_length() - 1
                hit &= hit - 1
                # a neighbor already at the defect bound cannot take v
                if (rows[u] & mask).bit_count() >= k:
                    sp = False
        if dn:
            hit = crows[v] & mask
            if hit.bit_count() > k:
                dn = False
            while dn and hit:
                u = (hit & -hit).bit_length() - 1
                hit &= hit - 1
                if (crows[u] & mask).bit_count() >= k:
                    dn = False
        return sp, dn

    def place(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        opened_empty = False
        for c in range(m):
            if not masks[c]:
                if opened_empty:
                    break
                opened_empty = True
            sp, dn = fits(v, c)
            if not (sp or dn):
                continue
            old = can_sparse[c], can_dense[c]
            masks[c] |= 1 << v
            can_sparse[c], can_dense[c] = sp, dn
            if place(idx + 1):
                return True
            masks[c] &= ~(1 << v)
            can_sparse[c], can_dense[c] = old
        return False

    if not place(0):
        return None
    classes = [mk for mk in masks if mk]
    flavors = [
        Flavor.SPARSE if can_sparse[c] else Flavor.DENSE
        for c in range(m)
        if masks[c]
    ]
    return Cocoloring(classes, flavors)


def cocolorable(g: Graph, k: int, m: int) -> bool:
    return find_cocoloring(g, k, m) is not None


class NeedsCandidatesError(ValueError):
    """Raised when witness search has no way to enumerate candidates."""


def _witness_candidates(
    params: CocolorParams, order: int, time_limit: float | None
) -> list[Graph]:
    """Complete list of order-n graphs in the class that could fail to be
    (k, 2)-cocolorable.  Such a graph has no k-defective t-set for
    t = n - (k + 2): removing one would leave k + 2 vertices, and any set
    of at most k + 2 vertices is both k-sparse or k-dense after checking
    one reading, giving a 2-class partition."""
    t = order - (params.k + 2)
    if t < params.k + 2:
        # every graph of this order is trivially 2-cocolorable
        return []
    search = SearchParams(params.graph_class, DefectParams(params.k, t, t))
    level = singleton_level()
    for level in run_seeded(
        singleton_level(), search, stop_order=order, time_limit=time_limit
    ):
        if not level.graphs:
            return []
    if level.order != order:
        return []
    return list(level.graphs)


def _scan_generated_witnesses(
    params: CocolorParams, order: int, time_limit: float | None
) -> list[Graph]:
    """Complete witness list at one order for m = 2, without deduplicating
    the final level: its members are scanned as raw extensions of the
    complete level below, since a cocolorability check on duplicates is
    cheaper than canonical labeling of the whole level."""
    t = order - (params.k + 2)
    if t < params.k + 2:
        return []
    search = SearchParams(params.graph_class, DefectParams(params.k, t, t))
    level = singleton_level()
    if order > 1:
        for level in run_seeded(
            singleton_level(), search, stop_order=order - 1,
            time_limit=time_limit,
        ):
            if not level.graphs:
                return []
    if level.order != order - 1:
        return []
    found: dict[bytes, Graph] = {}
    for parent in level.graphs:
        for rows in iter_children(parent, search, complete=True):
            g = Graph._raw(order, rows)
            if not cocolorable(g, params.k, 2):
                found.setdefault(canonical_key(g), g)
    return [found[key] for key in sorted(found)]


def find_witnesses(
    params: CocolorParams,
    order: int,
    candidates: list[Graph] | None = None,
    time_limit: float | None = None,
) -> list[Graph]:
    """Order-n graphs of the class that are not (k, m)-cocolorable.

    For m = 2 the candidate pool is generated exhaustively, so the returned
    list is complete.  For other m an explicit candidate list is required.
    """
    if candidates is None:
        if params.m != 2:
            raise NeedsCandidatesError(
                f"witness search for m={params.m} needs a candidate file"
            )
        return _scan_generated_witnesses(params, order, time_limit)
    out = []
    for g in candidates:
        if g.n != order:
            raise ValueError(f"candidate of order {g.n}, expected {order}")
        if not cocolorable(g, params.k, params.m):
            out.append(g)
    return out


def check_all_colorable(
    params: CocolorParams, graphs: list[Graph]
) -> Graph | None:
    """First graph in the list with no (k, m)-cocoloring, else None."""
    for g in graphs:
        if not cocolorable(g, params.k, params.m):
            return g
    return None


def verify_c_value(
    params: CocolorParams,
    n: int,
    candidates: list[Graph] | None = None,
    time_limit: float | None = None,
) -> tuple[bool, list[Graph]]:
    """Check c_k(m) = n: no witness at order n, at least one at order n + 1.

    An isolated vertex can always join any class of a cocoloring, so the
    parameter is monotone and orders below n need no check.  `candidates`,
    if given, stands in for the generated order-(n + 1) pool.  Returns the
    verdict together with the order-(n + 1) witnesses found.
    """
    if find_witnesses(params, n, time_limit=time_limit):
        return False, []
    witnesses = find_witnesses(params, n + 1, candidates, time_limit=time_limit)
    return bool(witnesses), witnesses


def search_c_value(
    params: CocolorParams,
    start: int | None = None,
    time_limit: float | None = None,
) -> tuple[int, list[Graph]]:
    """Exact c_k(2) by scanning orders upward until a witness appears.

    Returns the value and the complete witness list one order above it.
    """
    if params.m != 2:
        raise NeedsCandidatesError("exact search is implemented for m = 2 only")
    deadline = time.monotonic() + time_limit if time_limit else None
    n = start if start is not None else 2 * (params.k + 2) - 1
    while True:
        remaining = deadline - time.monotonic() if deadline else None
        if remaining is not None and remaining <= 0:
            raise ResourceStop(
                f"time limit hit; c >= {n}", n, LevelSet(0, [])
            )
        witnesses = find_witnesses(params, n + 1, time_limit=remaining)
        if witnesses:
            return n, witnesses
        n += 1


# --- bounds and closed forms --------------------------------------------

_CLIQUE_CLOSED = {
    GraphClass.ALL,
    GraphClass.PERFECT,
    GraphClass.CHORDAL,
    GraphClass.COGRAPH,
}


def straight_lower_bound(
    params: CocolorParams,
    prev_c: int,
    ramsey_tt: "dict[int, int] | None" = None,
) -> int:
    """c_k(m) >= c_k(m-1) + t for the largest t with
    c_k(m-1) + t >= R_k(t, t): a graph of that order has a k-defective
    t-set, and the rest is coverable with m - 1 classes.

    ramsey_tt maps t to R_k(t, t) where known; t <= k + 1 always works
    since any t-set is then k-defective.
    """
    k = params.k
    best = k + 1
    t = k + 2
    table = ramsey_tt or {}
    while t in table and prev_c + t >= table[t]:
        best = t
        t += 1
    return prev_c + best


def straight_upper_bound(params: CocolorParams, prev_c: int) -> int:
    """c_k(m) <= c_k(m-1) + m(k+1) + 1, from adding a disjoint clique of
    order m(k+1) + 1 to a witness for c_k(m-1).  Needs the class to be
    closed under disjoint union with cliques, which bipartite graphs are
    not."""
    if params.graph_class not in _CLIQUE_CLOSED:
        raise ValueError(
            f"no clique-union upper bound for class {params.graph_class.value}"
        )
    return prev_c + params.m * (params.k + 1) + 1


def formula_c_oracle(graph_class: GraphClass, k: int, m: int) -> int | None:
    """Closed-form c_k(m) when one is known, else None."""
    if k < 0 or m < 1:
        raise ValueError("invalid parameters")
    if m == 1:
        # K_{1,k+2} and its complement are not k-defective, and every graph
        # on k + 2 vertices is; all classes here contain the star
        return k + 2
    if graph_class is GraphClass.COGRAPH and m == 2:
        return 3 * k + 5
    if k == 0 and graph_class in (GraphClass.PERFECT, GraphClass.COGRAPH):
        return m * (m + 3) // 2
    return None


def star(k: int) -> Graph:
    """K_{1,k+2}: the smallest graph that is neither k-sparse nor k-dense."""
    return from_edges(k + 3, [(0, v) for v in range(1, k + 3)])


def disjoint_cliques(m: int) -> Graph:
    """K_1 + K_2 + ... + K_{m+1}: the classic witness for c_0(m) < order."""
    g = empty_graph(0)
    for size in range(1, m + 2):
        g = disjoint_union(g, complete_graph(size))
    return g


def clique_union_witness(params: CocolorParams, h: Graph) -> Graph:
    """K_{1+m(k+1)} joined disjointly to a witness h for c_k(m-1):
    the standard construction behind the straight upper bound."""
    return disjoint_union(complete_graph(1 + params.m * (params.k + 1)), h)
