"""Level-by-level generation of sub-extremal graphs.

Each level T_n holds, up to isomorphism, every order-n graph of the target
class with no k-dense i-set and no k-sparse j-set.  Extending a complete
level by one vertex in all admissible ways and deduplicating by canonical
key yields the complete next level; iterating from the single-vertex graph
until a level empties gives the defective Ramsey number and the full list
of extremal graphs.
"""

from __future__ import annotations

import hashlib
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_key_rows, graph_from_key
from .defect import DefectParams, find_bounded_degree_set
from .graph import (
    MAX_VERTICES,
    CapacityError,
    Graph,
    complement_rows,
    empty_graph,
    extend_rows,
    from_edges,
    to_graph6,
    from_graph6,
)
from .recognition import (
    GraphClass,
    bipartite_rows,
    clique_masks,
    extension_stays_perfect,
    has_p4_through,
)


@dataclass(frozen=True)
class SearchParams:
    """Target graph class plus the forbidden-set family (None = no filter)."""

    graph_class: GraphClass
    defect: DefectParams | None = None


class LevelSet:
    """Canonical, duplicate-free set of clean graphs at one order.

    Graphs are stored in their canonical labeling, sorted by key, so output
    is byte-identical regardless of how the work was scheduled.
    """

    __slots__ = ("order", "graphs", "keys")

    def __init__(self, order: int, keys: Sequence[bytes]):
        self.order = order
        self.keys = sorted(keys)
        self.graphs = [graph_from_key(k) for k in self.keys]

    @classmethod
    def from_graphs(cls, order: int, graphs: Iterable[Graph]) -> "LevelSet":
        keys = set()
        for g in graphs:
            if g.n != order:
                raise ValueError(f"graph of order {g.n} in level of order {order}")
            keys.add(canonical_key_rows(g.n, g.adj))
        return cls(order, list(keys))

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LevelSet)
            and self.order == other.order
            and self.keys == other.keys
        )


@dataclass
class RamseyResult:
    """Computed defective Ramsey number with its extremal level."""

    value: int
    extremal: LevelSet
    complete: bool


class ResourceStop(Exception):
    """A run hit a time or memory limit; carries the honest partial result."""

    def __init__(self, message: str, lower_bound: int, last_level: LevelSet):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.last_level = last_level


def iter_children(
    parent: Graph, params: SearchParams, complete: bool = False
) -> Iterator[tuple[int, ...]]:
    """Adjacency rows of every admissible one-vertex extension of parent.

    Children are not deduplicated across parents (or even within one); use
    the canonical key for that.  `complete` enables the minimum-degree
    pruning: when the parent level is the complete list for its order,
    every child also arises from deleting one of its own minimum-degree
    vertices, so only extensions where the new vertex ends up with minimum
    degree are needed.
    """
    n = parent.n
    adj = parent.adj
    n1 = n + 1
    cls = params.graph_class
    defect = params.defect
    full = (1 << n) - 1
    cadj = complement_rows(n, adj)
    prune = complete and cls is not GraphClass.CHORDAL
    if prune:
        degs = [r.bit_count() for r in adj]
        d_min = min(degs, default=0)
        minmask = 0
        for v, d in enumerate(degs):
            if d == d_min:
                minmask |= 1 << v
    if cls is GraphClass.CHORDAL:
        subsets: Iterable[int] = clique_masks(n, adj)
    else:
        subsets = range(1 << n)
    for s in subsets:
        if prune:
            size = s.bit_count()
            if size > d_min + 1 or (size == d_min + 1 and minmask & ~s):
                continue
        rows = extend_rows(adj, n, s)
        if cls is GraphClass.BIPARTITE and not bipartite_rows(n1, rows):
            continue
        if defect is not None:
            # only sets through the new vertex can be new; its complement
            # row extends the parent's complement rows directly
            if defect.i <= n1:
                crows = extend_rows(cadj, n, full ^ s)
                if find_bounded_degree_set(crows, n1, defect.k, defect.i,
                                           anchor=n):
                    continue
            if defect.j <= n1 and find_bounded_degree_set(
                rows, n1, defect.k, defect.j, anchor=n
            ):
                continue
        if cls is GraphClass.PERFECT and not extension_stays_perfect(n1, rows, n):
            continue
        if cls is GraphClass.COGRAPH and has_p4_through(n1, rows, n):
            continue
        yield rows


def _children_keys(
    parent: Graph, params: SearchParams, complete: bool = False
) -> set[bytes]:
    n1 = parent.n + 1
    return {
        canonical_key_rows(n1, rows)
        for rows in iter_children(parent, params, complete)
    }


def extend_level(
    level: LevelSet, params: SearchParams, threads: int = 1,
    complete: bool = False,
) -> LevelSet:
    """All clean order-(n+1) graphs containing a member of the level, as a
    maximal non-isomorphic set.  Complete input level => complete output.

    `complete` asserts the input level is the complete list for its order,
    enabling the minimum-degree extension pruning; with a partial seed it
    would silently drop graphs.
    """
    if level.order >= MAX_VERTICES:
        raise CapacityError(f"cannot extend past {MAX_VERTICES} vertices")
    keys: set[bytes] = set()
    if threads > 1 and len(level) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(
                lambda g: _children_keys(g, params, complete), level.graphs
            ):
                keys |= part
    else:
        for g in level.graphs:
            keys |= _children_keys(g, params, complete)
    return LevelSet(level.order + 1, list(keys))


def singleton_level() -> LevelSet:
    """T_1 = {K_1}: the universal starting point."""
    return LevelSet.from_graphs(1, [empty_graph(1)])


def run_seeded(
    seed: LevelSet,
    params: SearchParams,
    stop_order: int | None = None,
    threads: int = 1,
    on_level: Callable[[LevelSet], None] | None = None,
    time_limit: float | None = None,
    max_level_graphs: int | None = None,
    complete: bool | None = None,
) -> Iterator[LevelSet]:
    """Iterate extend_level from the seed, yielding each produced level.

    Levels contain exactly the clean graphs containing a seed member as an
    induced subgraph, so results from a partial seed are not the complete
    lists.  Stops after the level of stop_order, when a level empties, or
    with ResourceStop at a limit.

    `complete` marks the seed as the complete level for its order (always
    true for order 1); completeness then propagates, allowing faster
    extension.  Pass False when seeding from a hand-picked graph list.
    """
    deadline = time.monotonic() + time_limit if time_limit else None
    level = seed
    if complete is None:
        complete = seed.order == 1
    while True:
        if stop_order is not None and level.order >= stop_order:
            return
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceStop(
                f"time limit hit after completing order {level.order}",
                level.order + 1,
                level,
            )
        nxt = extend_level(level, params, threads=threads, complete=complete)
        if max_level_graphs is not None and len(nxt) > max_level_graphs:
            raise ResourceStop(
                f"level of order {nxt.order} exceeds cap of "
                f"{max_level_graphs} graphs",
                nxt.order + 1,
                nxt,
            )
        if on_level is not None:
            on_level(nxt)
        yield nxt
        if not nxt.graphs:
            return
        level = nxt


def run_ramsey(
    params: SearchParams,
    threads: int = 1,
    time_limit: float | None = None,
    max_level_graphs: int | None = None,
    on_level: Callable[[LevelSet], None] | None = None,
) -> RamseyResult:
    """Defective Ramsey number and complete extremal list for the params.

    Starts from T_1 = {K_1} and extends until a level is empty; the order of
    the empty level is the Ramsey number and the preceding level holds every
    extremal graph.
    """
    if params.defect is None:
        raise ValueError("run_ramsey needs forbidden-set parameters")
    level = singleton_level()
    for nxt in run_seeded(
        singleton_level(),
        params,
        threads=threads,
        on_level=on_level,
        time_limit=time_limit,
        max_level_graphs=max_level_graphs,
    ):
        if not nxt.graphs:
            return RamseyResult(value=nxt.order, extremal=level, complete=True)
        level = nxt
    raise AssertionError("unreachable: generation neither emptied nor stopped")


# --- closed forms -------------------------------------------------------

_CLIQUE_CLOSED = {
    GraphClass.ALL,
    GraphClass.PERFECT,
    GraphClass.CHORDAL,
    GraphClass.COGRAPH,
}


def formula_oracle(
    graph_class: GraphClass, k: int, i: int, j: int
) -> int | None:
    """Closed-form defective Ramsey value when one is known, else None."""
    if k < 0 or i < k + 2 or j < k + 2:
        raise ValueError("invalid parameters")
    if i == k + 2:
        # classes containing all edgeless graphs: every one considered here
        return j
    if j == k + 2:
        if graph_class is GraphClass.BIPARTITE:
            return k + 3
        if graph_class in _CLIQUE_CLOSED:
            return i
        return None
    if graph_class is GraphClass.CHORDAL and k == 1 and i == 4 and j >= 3:
        return 2 * j - 2
    if graph_class is GraphClass.PERFECT and k == 0:
        return (i - 1) * (j - 1) + 1
    return None


def triangle_chain(j: int) -> Graph:
    """The order-(2j-3) chordal graph with no 1-dense 4-set and no 1-sparse
    j-set: j-3 consecutively vertex-sharing triangles with a pendant vertex
    hanging off each end of the shared path."""
    if j < 3:
        raise ValueError(f"target size {j} must be >= 3")
    t = j - 3
    # shared path y_0..y_t, apexes x_0..x_{t-1}, pendants at y_0 and y_t
    edges = []
    y = list(range(t + 1))
    x = list(range(t + 1, 2 * t + 1))
    for a in range(t):
        edges += [(y[a], y[a + 1]), (x[a], y[a]), (x[a], y[a + 1])]
    p_left, p_right = 2 * t + 1, 2 * t + 2
    edges += [(p_left, y[0]), (p_right, y[t])]
    return from_edges(2 * j - 3, edges)


# --- checkpoints --------------------------------------------------------


def _params_header(params: SearchParams, order: int) -> str:
    d = params.defect
    kij = f"k={d.k} i={d.i} j={d.j}" if d else "k=- i=- j=-"
    return f"# class={params.graph_class.value} {kij} order={order}"


def write_level(path: str, level: LevelSet, params: SearchParams) -> None:
    """One graph6 line per graph, preceded by param and content-hash headers."""
    lines = [to_graph6(g) for g in level.graphs]
    digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()
    with open(path, "w") as fh:
        fh.write("# defram level checkpoint\n")
        fh.write(_params_header(params, level.order) + "\n")
        fh.write(f"# count={len(lines)} sha256={digest}\n")
        for line in lines:
            fh.write(line + "\n")


def read_level(path: str) -> tuple[LevelSet, SearchParams]:
    """Load a checkpoint, verifying the content hash and param header."""
    header: dict[str, str] = {}
    lines = []
    with open(path) as fh:
        for raw in fh:
            raw = raw.strip()
            if not raw:
                continue
            if raw.startswith("#"):
                for tok in raw[1:].split():
                    if "=" in tok:
                        key, _, val = tok.partition("=")
                        header[key] = val
                continue
            lines.append(raw)
    for field in ("class", "order", "sha256"):
        if field not in header:
            raise ValueError(f"checkpoint missing {field} header")
    digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()
    if digest != header["sha256"]:
        raise ValueError("checkpoint content hash mismatch")
    order = int(header["order"])
    if header.get("k", "-") == "-":
        defect = None
    else:
        defect = DefectParams(
            k=int(header["k"]), i=int(header["i"]), j=int(header["j"])
        )
    params = SearchParams(GraphClass(header["class"]), defect)
    graphs = [from_graph6(line) for line in lines]
    return LevelSet.from_graphs(order, graphs), params


def checkpoint_path(directory: str, params: SearchParams, order: int) -> str:
    d = params.defect
    kij = f"{d.k}_{d.i}_{d.j}" if d else "none"
    name = f"level_{params.graph_class.value}_{kij}_n{order}.g6"
    return os.path.join(directory, name)
