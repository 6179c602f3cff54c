"""What happens at a planar leaf: faces, dual graph, odd set, T-join, cut."""

from onepmaxcut.graph import WeightedGraph, cut_value
from onepmaxcut.planar import dual, odd_set, planar_embedding, planar_max_cut, t_join

# a 2x3 grid with a diagonal, mixed signs
#   1 - 2 - 3
#   | \ |   |
#   4 - 5 - 6
g = WeightedGraph(
    range(1, 7),
    {(1, 2): 3, (2, 3): -2, (1, 4): 2, (2, 5): 4, (3, 6): 1, (4, 5): -1, (5, 6): 2, (1, 5): 5},
)

emb = planar_embedding(g)
print("rotation (clockwise):")
for v, rot in emb.rotation.items():
    print(f"  {v}: {list(rot)}")
print(f"{len(emb.faces)} faces, Euler check {emb.euler_holds()}")
for i, face in enumerate(emb.faces):
    print(f"  face {i}: {' -> '.join(str(u) for u, _ in face)}")

d = dual(emb, g)
positive = [i for i, w in enumerate(d.weights) if w > 0]
T = odd_set(d, positive)
J = t_join(d, T)
print("positive edges:", [d.primal[i] for i in positive])
print("odd faces T:", sorted(T))
print("minimum T-join:", [d.primal[i] for i in sorted(J)], "cost", sum(abs(d.weights[i]) for i in J))

chosen = sorted(d.primal[i] for i in set(positive) ^ J)
value = sum(d.weights[i] for i in positive) - sum(abs(d.weights[i]) for i in J)
print("cut edges:", chosen, "value", value)

sol = planar_max_cut(g)
print(f"planar_max_cut: {sol.value}, side {sol.sorted_side()}, recheck {cut_value(g, sol.side)}")
