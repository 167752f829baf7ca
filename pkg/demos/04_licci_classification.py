"""Licci verdicts: the rule cascade and the standard-form iteration.

Run:  python demos/04_licci_classification.py
"""

from liccilab import (
    MonomialIdeal,
    classify_licci,
    complementary_edge_ideal,
    complete,
    cycle,
    depolarize_suspension,
    hu_decide,
    licci_bound_check,
    star,
    t_path_ideal,
)


def show(label, verdict):
    rule = verdict.fired_rule or "-"
    print(f"{label:28s} {verdict.status:9s} via {rule}")
    for firing in verdict.rules:
        print(f"    [{firing.rule}] {firing.witness}")
        print(f"         {firing.citation}")
    if verdict.hu_trace:
        for step in verdict.hu_trace:
            print(f"    step {step.k}: {step.ideal}  ({step.note})")


# The cascade: cheap certificates first, then the Artinian iteration.
show("P_3(C_4) (CM, height 2)", classify_licci(t_path_ideal(cycle(4), 3)))
show("P_3(C_7) (Gorenstein ht 3)", classify_licci(t_path_ideal(cycle(7), 3)))
show("P_3(C_5) (not CM)", classify_licci(t_path_ideal(cycle(5), 3)))
show("I_c(K_4) (obstructed)", classify_licci(complementary_edge_ideal(complete(4))))

worked = MonomialIdeal(
    ["x1", "x2", "x3"], [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1)]
)
show("worked Artinian example", classify_licci(worked))

# The iteration alone, on depolarized suspension ideals.
show("depol P_2(whiskered K3)", hu_decide(depolarize_suspension(complete(3), 2)))
show("depol P_3(2-edge star)", hu_decide(depolarize_suspension(star(2), 3)))

# Every licci verdict on a squarefree ideal obeys ht <= floor(n/alpha) + 1.
c5 = t_path_ideal(cycle(5), 2)
v = classify_licci(c5)
print("height bound holds for the 5-cycle edge ideal:", licci_bound_check(c5, v))
