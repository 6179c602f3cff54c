"""Print the three-way branching tree of a small generated instance."""

from onepmaxcut import GenParams, branch, gen_one_planar, select_crossing, solve
from onepmaxcut.onep import subdivide_negative
from onepmaxcut.planar import planar_max_cut
from onepmaxcut.solver import project_back


def show(inst, depth=0, label="root"):
    pad = "  " * depth
    if not inst.crossings:
        sol = planar_max_cut(inst.graph)
        print(f"{pad}{label}: n={inst.graph.number_of_nodes()} leaf value {sol.value}")
        return sol.side, sol.value
    chi = select_crossing(inst)
    print(f"{pad}{label}: n={inst.graph.number_of_nodes()} k={inst.k} branch on {chi}")
    _, _, _, helper, offset = subdivide_negative(inst, chi)
    if helper is not None:
        # the crossed edge to delete is negative: it is split into two
        # positive halves first, and child values shift back by the offset
        print(f"{pad}  negative edge subdivided: helper {helper} plays w, offset {offset}")
    results = []
    for child, trace in branch(inst, chi):
        side, value = show(child, depth + 1, trace.kind)
        results.append((value + trace.offset, project_back(side, trace)))
    value, side = max(results, key=lambda r: r[0])
    return side, value


inst = gen_one_planar(GenParams(nodes=9, crossings=2, seed=11))
side, value = show(inst)
print("tree value", value, "solver value", solve(inst).value)
