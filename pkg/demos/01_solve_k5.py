"""K5 drawn with a single crossing: solve it and check against enumeration."""

import itertools

from onepmaxcut import Crossing, OnePlanarInstance, WeightedGraph, brute_force_max_cut, solve, validate

# K5 has crossing number 1: draw 1..5 around a pentagon-ish shape and only
# the diagonals (1,3) and (2,4) meet.
k5 = WeightedGraph(range(1, 6), {e: 1 for e in itertools.combinations(range(1, 6), 2)})
inst = OnePlanarInstance(k5, (Crossing((1, 3), (2, 4)),))

report = validate(inst)
print("valid:", report.ok, "warnings:", report.warnings)

sol = solve(inst)
print(f"max cut {sol.value} with side {sol.sorted_side()}")
print(f"planar leaves solved: {sol.stats.leaves}, depth {sol.stats.max_depth}")

best, side = brute_force_max_cut(k5)
print(f"enumeration agrees: {best} (side {sorted(side)})")

# signed weights work the same way
signed = WeightedGraph(range(1, 6), {e: (-1) ** sum(e) * (e[1] - e[0]) for e in k5.edges})
sol = solve(OnePlanarInstance(signed, inst.crossings))
print(f"signed K5: {sol.value} == {brute_force_max_cut(signed)[0]}")
