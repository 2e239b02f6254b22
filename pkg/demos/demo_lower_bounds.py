"""Reproduce the exact feasibility landscape at small sizes.

Three headline facts, each certified by exhaustive search:
  * two agents and three tasks already force a maximum switching cost of 2;
  * six agents and four tasks still admit cost 2, over all 84 demand vectors;
  * three agents and five tasks force cost 3, even on 0/1 demand vectors.
"""
from switchalloc import ProblemInstance, SUBSET, feasible, min_max_distortion, verify_witness


def show(instance, D):
    outcome = feasible(instance, D)
    tag = f"n={instance.n}, k={instance.k}, regime={instance.regime}"
    print(f"{tag}: max cost {D} -> {outcome.verdict} "
          f"({outcome.stats.nodes_expanded} nodes searched)")
    if outcome.feasible:
        assert verify_witness(outcome)
    return outcome


def main():
    print("A single unit of moved demand can already force two agents to switch:")
    show(ProblemInstance(2, 3), 1)
    show(ProblemInstance(2, 3), 2)
    print()

    print("Cost 2 survives up to six agents on four tasks (84 demand vectors):")
    outcome = show(ProblemInstance(6, 4), 2)
    print(f"  witness covers {len(outcome.witness.entries)} demand vectors")
    print()

    print("But five tasks break cost 2 for three agents, in both regimes:")
    show(ProblemInstance(3, 5, SUBSET), 2)
    show(ProblemInstance(3, 5), 2)
    D, _ = min_max_distortion(ProblemInstance(3, 5, SUBSET))
    print(f"  the optimum at n=3, k=5 (subset regime) is exactly {D}")


if __name__ == "__main__":
    main()
