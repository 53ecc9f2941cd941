"""Find a defective cocoloring threshold and its witness graphs.

c_k(m) is the smallest order at which some graph in the class admits no
partition into m parts that are each k-sparse or k-dense.  We locate
c_1^perfect(2) = 7 by scanning orders upward, then look at the witnesses
of order 8 and show one explicit non-partitionable example.
"""

from defram import (
    CocolorParams,
    GraphClass,
    cocolorable,
    find_cocoloring,
    find_witnesses,
    search_c_value,
    to_graph6,
)
from defram.cocolor import disjoint_cliques

params = CocolorParams(GraphClass.PERFECT, k=1, m=2)

# search_c_value generates, order by order, the perfect graphs that could
# possibly fail (those with no large 1-defective set) and keeps the ones
# that really admit no (1,2)-cocoloring.  The first order with a witness
# is c + 1.
value, witnesses = search_c_value(params)
print(f"c_1^perfect(2) = {value}")
print(f"witnesses at order {value + 1}: {len(witnesses)}")
for g in witnesses[:5]:
    print(f"  {to_graph6(g)}")

# Every graph below the threshold is colorable; here is what a coloring
# looks like for one small example.
g = disjoint_cliques(2)  # K_1 + K_2 + K_3, order 6
coloring = find_cocoloring(g, k=0, m=3)
print(f"\nK_1+K_2+K_3 with k=0, m=3: classes "
      f"{[bin(c) for c in coloring.classes]}, flavors "
      f"{[f.name for f in coloring.flavors]}")

# The same graph is the canonical witness for c_0(2) = 5: six vertices,
# no 2-part partition into 0-sparse/0-dense (independent/clique) parts.
assert not cocolorable(g, k=0, m=2)
assert not find_witnesses(CocolorParams(GraphClass.PERFECT, 0, 2), 5)
print("c_0^perfect(2) = 5, witnessed at order 6 by K_1+K_2+K_3")
