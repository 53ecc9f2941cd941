"""Walk through a defective Ramsey computation step by step.

We compute R_1^perfect(4,5): the smallest n such that every perfect graph
on n vertices has a 1-dense 4-set or a 1-sparse 5-set.  Along the way we
watch the sub-extremal levels grow and shrink, and at the end we inspect
the extremal graphs.
"""

from defram import (
    DefectParams,
    GraphClass,
    SearchParams,
    brute_force_forbidden,
    run_ramsey,
    run_seeded,
    singleton_level,
    to_graph6,
)

params = SearchParams(GraphClass.PERFECT, DefectParams(k=1, i=4, j=5))

# Level n holds one canonical representative of every perfect graph on n
# vertices with no 1-dense 4-set and no 1-sparse 5-set.  Level 1 is K_1;
# each next level is built by attaching a new vertex to each parent in
# every admissible way.
print("level sizes:")
for level in run_seeded(singleton_level(), params):
    print(f"  n={level.order}: {len(level)} graphs")

# The first empty level marks the Ramsey value; the level just before it
# is the complete list of extremal graphs.
result = run_ramsey(params)
print(f"\nR_1^perfect(4,5) = {result.value}")
print(f"extremal graphs ({len(result.extremal)}):")
for g in result.extremal:
    print(f"  {to_graph6(g)}  degrees={sorted(g.degree(v) for v in range(g.n))}")

# Sanity: every extremal graph really avoids both kinds of forbidden set,
# checked here by plain subset enumeration rather than the search code.
assert all(not brute_force_forbidden(g, params.defect) for g in result.extremal)
print("\nextremal graphs re-verified by brute force")
