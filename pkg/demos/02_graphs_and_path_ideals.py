"""Graph constructors and their ideals: edge ideals, t-path ideals,
complementary edge ideals, suspensions and depolarization.

Run:  python demos/02_graphs_and_path_ideals.py
"""

from liccilab import (
    classify,
    complementary_edge_ideal,
    complete,
    cycle,
    depolarize_suspension,
    edge_ideal,
    from_edges,
    suspension,
    t_path_ideal,
)

# The 3-path ideal of a triangle is principal: one path set {x1, x2, x3}.
K3 = complete(3)
print("P_3(K3) =", t_path_ideal(K3, 3))

# Suspension: attach a pendant path of length t-1 to every vertex.
S3 = suspension(K3, 3)
print("Sigma_3 K3 has", S3.n, "vertices and", len(S3.edges), "edges")
P = t_path_ideal(S3, 3)
print("P_3(Sigma_3 K3) has", len(P.gens), "generators")

# Depolarize: fold the whisker variables back onto their base vertex.
dep = depolarize_suspension(K3, 3)
print("depolarization:", dep)
print("artinian:", dep.is_artinian(), " radical:", dep.radical())

# Complementary edge ideal: one degree n-2 generator per edge.
g = from_edges(4, [(1, 2), (1, 3), (2, 3), (1, 4)])
print("I_c(example) =", complementary_edge_ideal(g))

# Recognizers drive the classification tasks.
for name, graph in [("C4", cycle(4)), ("K3", K3), ("2K2", from_edges(4, [(1, 2), (3, 4)]))]:
    cls = classify(graph)
    print(
        f"{name}: forest={cls.is_forest} star+iso={cls.is_star_plus_isolated} "
        f"triangle={cls.has_triangle} two_disjoint={cls.has_two_disjoint_edges}"
    )

print("edge ideal of C4 =", edge_ideal(cycle(4)))
