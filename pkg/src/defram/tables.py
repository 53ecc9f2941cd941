"""Registry of known defective Ramsey values with extremal counts.

Each entry records R_k(i, j) for one graph class together with the number
of extremal graphs and a cost tier:

- "small":  recomputable in seconds to a few minutes,
- "medium": minutes to an hour on one core,
- "full":   desk-scale runs (hours to weeks); recorded, not recomputed
            by the test suite.

A count of None means the extremal list was never completed; only the
value is known.
"""

from __future__ import annotations

from dataclasses import dataclass

from .recognition import GraphClass


@dataclass(frozen=True)
class Entry:
    graph_class: GraphClass
    k: int
    i: int
    j: int
    value: int
    count: int | None
    tier: str


def _tier(value: int, count: int | None) -> str:
    if count is None or value > 15:
        return "full"
    if value > 12:
        return "medium"
    return "small"


# (class, k, i) -> {j: (value, count)}
_ROWS: dict[tuple[GraphClass, int, int], dict[int, tuple[int, int | None]]] = {
    (GraphClass.PERFECT, 1, 3): {
        3: (3, 2), 4: (4, 2), 5: (5, 3), 6: (6, 3), 7: (7, 4),
        8: (8, 4), 9: (9, 5), 10: (10, 5),
    },
    (GraphClass.PERFECT, 1, 4): {
        3: (4, 2), 4: (6, 1), 5: (8, 2), 6: (10, 4), 7: (13, 3),
        8: (15, 3), 9: (19, 1), 10: (22, None),
    },
    (GraphClass.PERFECT, 1, 5): {3: (5, 3), 4: (8, 2), 5: (13, 2)},
    (GraphClass.PERFECT, 2, 4): {
        4: (4, 4), 5: (5, 4), 6: (6, 4), 7: (7, 4), 8: (8, 4),
        9: (9, 4), 10: (10, 4),
    },
    (GraphClass.PERFECT, 2, 5): {
        4: (5, 4), 5: (7, 2), 6: (8, 13), 7: (10, 16), 8: (12, 6),
        9: (15, 2),
    },
    (GraphClass.PERFECT, 2, 6): {4: (6, 4), 5: (8, 13), 6: (10, 2), 7: (13, 7)},
    (GraphClass.PERFECT, 3, 5): {
        5: (5, 11), 6: (6, 11), 7: (7, 12), 8: (8, 12), 9: (9, 13),
        10: (10, 13), 11: (11, 14),
    },
    (GraphClass.PERFECT, 3, 6): {
        5: (6, 11), 6: (8, 4), 7: (9, 28), 8: (10, 159), 9: (12, 3),
        10: (13, 67),
    },
    (GraphClass.PERFECT, 3, 7): {5: (7, 12), 6: (9, 28), 7: (11, 4)},
    (GraphClass.PERFECT, 4, 6): {
        6: (6, 33), 7: (7, 33), 8: (8, 33), 9: (9, 33), 10: (10, 33),
        11: (11, 33), 12: (12, 33),
    },
    (GraphClass.PERFECT, 4, 7): {
        6: (7, 33), 7: (9, 11), 8: (10, 84), 9: (11, 549), 10: (13, 4),
        11: (14, 28),
    },
    (GraphClass.PERFECT, 4, 8): {6: (8, 33), 7: (10, 84), 8: (12, 8)},
    (GraphClass.BIPARTITE, 1, 4): {10: (18, None), 11: (20, None)},
    (GraphClass.BIPARTITE, 2, 5): {
        4: (5, 1), 5: (6, 4), 6: (8, 1), 7: (10, 2), 8: (11, 56),
    },
    (GraphClass.BIPARTITE, 2, 6): {
        4: (5, 1), 5: (7, 3), 6: (9, 1), 7: (11, 35), 8: (14, 3),
    },
    (GraphClass.BIPARTITE, 2, 7): {
        4: (5, 1), 5: (9, 2), 6: (11, 6), 7: (13, 249),
    },
    (GraphClass.BIPARTITE, 2, 8): {
        4: (5, 1), 5: (9, 2), 6: (11, 6), 7: (13, 249),
    },
    (GraphClass.BIPARTITE, 3, 6): {
        5: (6, 1), 6: (7, 5), 7: (9, 1), 8: (10, 8), 9: (12, 1),
        10: (13, 9),
    },
    (GraphClass.BIPARTITE, 3, 7): {
        5: (6, 1), 6: (8, 2), 7: (10, 1), 8: (12, 2), 9: (14, 26),
    },
    (GraphClass.BIPARTITE, 3, 8): {
        5: (6, 1), 6: (8, 2), 7: (10, 10), 8: (13, 2), 9: (15, 423),
    },
    (GraphClass.BIPARTITE, 3, 9): {
        5: (6, 1), 6: (8, 2), 7: (13, 5), 8: (15, 40),
    },
    (GraphClass.BIPARTITE, 4, 7): {
        6: (7, 1), 7: (8, 6), 8: (10, 1), 9: (11, 7), 10: (12, 34),
    },
    (GraphClass.BIPARTITE, 4, 8): {
        6: (7, 1), 7: (9, 2), 8: (11, 1), 9: (12, 29), 10: (14, 16),
    },
    (GraphClass.BIPARTITE, 4, 9): {
        6: (7, 1), 7: (9, 2), 8: (11, 7), 9: (13, 19), 10: (15, 133),
    },
    (GraphClass.BIPARTITE, 4, 10): {
        6: (7, 1), 7: (9, 2), 8: (11, 7), 9: (13, 70),
    },
    (GraphClass.CHORDAL, 1, 3): {
        3: (3, 2), 4: (4, 2), 5: (5, 3), 6: (6, 3), 7: (7, 4),
        8: (8, 4), 9: (9, 5), 10: (10, 5), 11: (11, 6),
    },
    (GraphClass.CHORDAL, 1, 4): {
        3: (4, 2), 4: (6, 1), 5: (8, 1), 6: (10, 1), 7: (12, 1),
        8: (14, 1), 9: (16, 1), 10: (18, 1), 11: (20, 1),
    },
    (GraphClass.CHORDAL, 1, 5): {
        3: (5, 2), 4: (7, 4), 5: (10, 4), 6: (12, 44), 7: (15, 18),
    },
    (GraphClass.CHORDAL, 1, 6): {
        3: (6, 2), 4: (8, 8), 5: (12, 17), 6: (14, 1397),
    },
    (GraphClass.CHORDAL, 1, 7): {3: (7, 2), 4: (10, 1), 5: (14, 68)},
    (GraphClass.CHORDAL, 1, 8): {3: (8, 2), 4: (11, 2), 5: (16, 293)},
    (GraphClass.CHORDAL, 1, 9): {3: (9, 2), 4: (12, 4), 5: (18, 1245)},
    (GraphClass.CHORDAL, 2, 4): {
        4: (4, 4), 5: (5, 4), 6: (6, 4), 7: (7, 4), 8: (8, 4),
        9: (9, 4), 10: (10, 4),
    },
    (GraphClass.CHORDAL, 2, 5): {
        4: (5, 4), 5: (7, 2), 6: (8, 11), 7: (9, 101), 8: (11, 66),
        9: (13, 24),
    },
    (GraphClass.CHORDAL, 2, 6): {
        4: (6, 4), 5: (8, 8), 6: (10, 2), 7: (12, 45), 8: (14, 92),
    },
    (GraphClass.CHORDAL, 2, 7): {
        4: (7, 4), 5: (9, 22), 6: (11, 50), 7: (14, 316),
    },
    (GraphClass.CHORDAL, 2, 8): {4: (8, 4), 5: (11, 1), 6: (12, 469)},
    (GraphClass.CHORDAL, 2, 9): {4: (9, 4), 5: (12, 4), 6: (14, 13)},
    (GraphClass.CHORDAL, 2, 10): {4: (10, 4), 5: (13, 11), 6: (15, 194)},
    (GraphClass.CHORDAL, 3, 5): {
        5: (5, 10), 6: (6, 10), 7: (7, 11), 8: (8, 11), 9: (9, 12),
        10: (10, 12),
    },
    (GraphClass.CHORDAL, 3, 6): {
        5: (6, 10), 6: (8, 4), 7: (9, 24), 8: (10, 123), 9: (12, 2),
        10: (13, 43),
    },
    (GraphClass.CHORDAL, 3, 7): {
        5: (7, 10), 6: (9, 19), 7: (11, 4), 8: (12, 151), 9: (14, 2),
    },
    (GraphClass.CHORDAL, 3, 8): {
        5: (8, 10), 6: (10, 62), 7: (12, 124), 8: (14, 7),
    },
    (GraphClass.CHORDAL, 3, 9): {5: (9, 10), 6: (12, 2), 7: (13, 1846)},
    (GraphClass.CHORDAL, 4, 6): {
        6: (6, 27), 7: (7, 27), 8: (8, 27), 9: (9, 27), 10: (10, 27),
        11: (11, 27),
    },
    (GraphClass.CHORDAL, 4, 7): {
        6: (7, 27), 7: (9, 10), 8: (10, 64), 9: (11, 360), 10: (13, 4),
        11: (14, 24),
    },
    (GraphClass.CHORDAL, 4, 8): {
        6: (8, 27), 7: (10, 53), 8: (12, 8), 9: (13, 364),
    },
    (GraphClass.CHORDAL, 4, 9): {6: (9, 27), 7: (11, 207), 8: (13, 322)},
    (GraphClass.CHORDAL, 4, 10): {6: (10, 27), 7: (13, 4)},
}

# cells bumped above their size-based tier: the extremal lists took
# desk-scale effort to complete and the suite should not recompute them
_FORCE_FULL = {
    (GraphClass.PERFECT, 1, 4, 8),
}


def entries() -> list[Entry]:
    out = []
    for (cls, k, i), row in _ROWS.items():
        for j, (value, count) in sorted(row.items()):
            tier = _tier(value, count)
            if (cls, k, i, j) in _FORCE_FULL:
                tier = "full"
            out.append(Entry(cls, k, i, j, value, count, tier))
    return out


def lookup(cls: GraphClass, k: int, i: int, j: int) -> Entry | None:
    row = _ROWS.get((cls, k, i))
    if row is None or j not in row:
        return None
    value, count = row[j]
    tier = _tier(value, count)
    if (cls, k, i, j) in _FORCE_FULL:
        tier = "full"
    return Entry(cls, k, i, j, value, count, tier)
