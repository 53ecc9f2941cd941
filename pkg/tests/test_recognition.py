import random
from itertools import combinations

from defram.graph import (
    complement,
    complete_graph,
    cycle_graph,
    extend_with_vertex,
    from_edges,
    path_graph,
    vset,
)
from defram.recognition import (
    GraphClass,
    enumerate_cliques,
    in_class,
    is_bipartite,
    is_chordal,
    is_cograph,
    is_perfect,
    is_perfect_naive,
    remains_perfect_after_extension,
)


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < 0.5]
    return from_edges(n, edges)


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [pairs[t] for t in range(len(pairs))
                             if mask >> t & 1])


def test_known_classes():
    c4, c5, c7 = cycle_graph(4), cycle_graph(5), cycle_graph(7)
    assert is_bipartite(c4) and not is_bipartite(c5)
    assert is_perfect(c4) and not is_perfect(c5) and not is_perfect(c7)
    assert not is_chordal(c4)
    assert is_cograph(c4) and not is_cograph(path_graph(4))
    tree = from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert is_bipartite(tree) and is_chordal(tree) and is_perfect(tree)
    k4e = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_chordal(k4e) and is_cograph(k4e)


def test_wheel_and_antiholes():
    w4 = extend_with_vertex(cycle_graph(4), vset([0, 1, 2, 3]))
    assert is_perfect(w4)
    assert not is_perfect(complement(cycle_graph(7)))  # odd antihole


def test_classes_agree_with_naive_perfect():
    for n in range(1, 7):
        for g in all_graphs(n):
            assert is_perfect(g) == is_perfect_naive(g)


def test_classes_agree_with_naive_perfect_random():
    rng = random.Random(31)
    for _ in range(150):
        g = random_graph(rng, rng.randint(5, 9))
        assert is_perfect(g) == is_perfect_naive(g)


def test_subclass_containments():
    # bipartite, chordal and cographs are all perfect
    for n in range(1, 7):
        for g in all_graphs(n):
            if is_bipartite(g) or is_chordal(g) or is_cograph(g):
                assert is_perfect(g)


def test_in_class_dispatch():
    g = cycle_graph(6)
    assert in_class(g, GraphClass.ALL)
    assert in_class(g, GraphClass.BIPARTITE)
    assert in_class(g, GraphClass.PERFECT)
    assert not in_class(g, GraphClass.CHORDAL)
    assert not in_class(g, GraphClass.COGRAPH)


def test_cograph_recursive_matches_scan():
    # the modular-decomposition path (n > 16) must agree with the quad scan
    from defram.recognition import _cograph_recursive
    rng = random.Random(32)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9))
        assert is_cograph(g) == _cograph_recursive(g.n, g.adj)


def test_remains_perfect_matches_naive():
    rng = random.Random(33)
    checked = 0
    while checked < 120:
        n = rng.randint(2, 9)
        g = random_graph(rng, n)
        if not is_perfect_naive(from_edges(n - 1, [
            (u, v) for u, v in g.edges() if u < n - 1 and v < n - 1
        ])):
            continue
        checked += 1
        assert remains_perfect_after_extension(g, n - 1) == is_perfect_naive(g)


def test_enumerate_cliques():
    cliques = list(enumerate_cliques(complete_graph(3)))
    assert len(cliques) == 8  # all subsets of a triangle
    assert len(set(cliques)) == 8
    c4 = cycle_graph(4)
    assert len(list(enumerate_cliques(c4))) == 9  # empty + 4 vertices + 4 edges
    rng = random.Random(34)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        got = sorted(enumerate_cliques(g))
        want = []
        for size in range(g.n + 1):
            for combo in combinations(range(g.n), size):
                if all(g.has_edge(u, v) for u, v in combinations(combo, 2)):
                    want.append(vset(combo))
        assert got == sorted(want)
