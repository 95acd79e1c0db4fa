"""Expansions, true twins and the twin quotient.

Replacing each vertex of a skeleton by a clique gives an expansion. Vertices
in one bag have the same closed neighbourhood, and for long paths and cycles
these bags are exactly the true-twin classes, so the quotient returns the
skeleton.
"""

from __future__ import annotations

import numpy as np

from cbstruct.expansion import (
    expand,
    quotient,
    recognize_cycle_expansion,
    recognize_path_expansion,
    true_twin_partition,
)
from cbstruct.graph import cycle_graph, path_graph

# %% Blow up P_5 with bag sizes 2, 1, 3, 1, 2
g, bags = expand(path_graph(5), [2, 1, 3, 1, 2])
print("vertices:", g.n, "edges:", g.num_edges())
print("bags:", bags)

# %% Adjacency matrix, bag blocks visible along the diagonal
adj = np.array([[int(g.has_edge(u, v)) for v in range(g.n)] for u in range(g.n)])
print(adj)

# %% Twin classes recover the bags, the quotient recovers the skeleton
p = true_twin_partition(g)
q, class_of = quotient(g, p)
print("twin classes:", p.classes)
print("quotient is P_5:", q == path_graph(5), "class_of:", class_of)

# %% The recognizers return bags in skeleton order
print(recognize_path_expansion(g))
h, _ = expand(cycle_graph(7), [2, 1, 1, 2, 1, 1, 1])
print(recognize_cycle_expansion(h))

# %% P_4 is too short to count as a path expansion
print("P_4:", recognize_path_expansion(path_graph(4)))
