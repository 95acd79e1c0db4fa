"""Seeded samples from each class.

All generators draw from NumPy's PCG64, so one configuration always yields
the same graph. Batches use per-item seeds derived with splitmix64.
"""

from __future__ import annotations

from collections import Counter

from cbstruct.classifier import classify
from cbstruct.formats import graph6_encode
from cbstruct.generate import (
    GenConfig,
    derive_seed,
    gen_co_triangle_free,
    gen_cycle_expansion,
    gen_gnp,
    gen_path_expansion,
)
from cbstruct.graph import is_connected

# %% The same seed gives the same graph6 line
cfg = GenConfig(seed=7, size=5, max_bag=3)
print(graph6_encode(gen_path_expansion(cfg)[0]).decode(), graph6_encode(gen_path_expansion(cfg)[0]).decode())

# %% Each class generator lands in its class
for name, make in (
    ("path", lambda s: gen_path_expansion(GenConfig(seed=s, size=6, max_bag=3, shuffle=True))[0]),
    ("cycle", lambda s: gen_cycle_expansion(GenConfig(seed=s, size=7, max_bag=3, shuffle=True))[0]),
    ("co-triangle-free", lambda s: gen_co_triangle_free(GenConfig(seed=s, size=9, edge_prob=0.4))),
):
    labels = Counter(classify(make(derive_seed(1, i))).label for i in range(200))
    print(f"{name:>16}: {dict(labels)}")

# %% Plain G(n, 1/2) graphs almost always contain a claw or bull
labels = Counter()
for i in range(500):
    g = gen_gnp(GenConfig(seed=derive_seed(2, i), size=9))
    labels[classify(g).label if is_connected(g) else "disconnected"] += 1
print("G(9, 1/2):", dict(labels))
