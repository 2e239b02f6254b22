"""Two explicit allocation tables with provable cost guarantees.

The ordered table keeps agents sorted by task id: moving one unit of demand
from task i to task j relays agents through every task in between, costing at
most |i - j| and never more than k-1.  The group table dedicates a group of
agents to each non-special task and parks the leftovers on the special task;
moves between regular tasks then cost exactly 2.
"""
from switchalloc import (
    ProblemInstance,
    group_construction,
    iter_adjacent_entry_pairs,
    max_switching_cost,
    ordered_construction,
    switching_cost,
)


def main():
    print("Ordered table, n=4 agents on k=4 tasks:")
    table = ordered_construction(ProblemInstance(4, 4))
    report = max_switching_cost(table)
    print(f"  {len(table.entries)} entries, max switching cost {report.max_cost} "
          f"(bound: k-1 = 3)")
    w = report.witness
    print(f"  worst move: one unit from task {w.source} to task {w.target} "
          f"at {w.before} -> {w.after}")
    print()

    print("Group table, n=6, k=4, special task 3:")
    table = group_construction(ProblemInstance(6, 4), 3)
    print(f"  partial domain of {len(table.entries)} vectors "
          f"(regular tasks capped at n/(k-1) = 2 agents)")
    regular = special = 0
    for w, v, v2 in iter_adjacent_entry_pairs(table):
        cost = switching_cost(table.entries[v], table.entries[v2])
        if w.source != 3 and w.target != 3:
            assert cost == 2
            regular += 1
        else:
            assert cost <= 2
            special += 1
    print(f"  all {regular} regular-task moves cost exactly 2; "
          f"all {special} special-task moves cost at most 2")


if __name__ == "__main__":
    main()
