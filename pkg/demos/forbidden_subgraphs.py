"""Finding induced claws and bulls.

A claw is K_{1,3}; a bull is a triangle with pendant edges at two of its
vertices. Both detectors return the witness whose sorted vertex tuple is
smallest, so results are reproducible across runs and machines.
"""

from __future__ import annotations

from cbstruct.forbidden import find_induced_bull, find_induced_claw, verify_witness
from cbstruct.graph import bull_graph, complement, cycle_graph, petersen_graph
from cbstruct.oracles import brute_force_cb_free

# %% The Petersen graph has girth 5, so every vertex with its neighbours is a claw
pet = petersen_graph()
w = find_induced_claw(pet)
print("Petersen claw:", w, "valid:", verify_witness(pet, w))

# %% The bull is self-complementary, so its complement contains one too
co_bull = complement(bull_graph())
print("bull in the complement of the bull:", find_induced_bull(co_bull))

# %% Cycles of length at least 4 contain neither pattern
for k in (4, 5, 6, 9):
    print(f"C_{k}: claw={find_induced_claw(cycle_graph(k))} bull={find_induced_bull(cycle_graph(k))}")

# %% The subset-by-subset oracle agrees, and picks the same claw
print("oracle on Petersen:", brute_force_cb_free(pet))
