"""Exact tools for dynamic task allocation with bounded switching cost."""

from .model import (
    FULL,
    SUBSET,
    AdjacencyWitness,
    AllocationTable,
    CapacityError,
    DistortionReport,
    DomainError,
    ProblemInstance,
    ValidationReport,
    adjacency,
    assignment_counts,
    demand_to_multiset,
    enumerate_demand_vectors,
    iter_adjacent_entry_pairs,
    max_switching_cost,
    multiset_to_demand,
    neighbors,
    restrict_tasks,
    switching_cost,
    symmetric_difference_size,
    validate_table,
)
from .construct import (
    GroupScheme,
    group_construction,
    group_domain,
    group_scheme,
    ordered_construction,
)
from .tableio import TableFormatError, load_table, save_table, table_from_doc, table_to_doc
from .solver import (
    SolveOutcome,
    SolveStats,
    feasible,
    min_max_distortion,
    verify_witness,
)
from .structure import (
    Config,
    ConsistencyMaps,
    FreezeReport,
    IrregularPairReport,
    LemmaReport,
    LocalFamily,
    SemiFreezeReport,
    TaskClassification,
    TaskType,
    build_consistency_maps,
    check_local_lemma,
    check_table_lemma,
    classify_config,
    classify_task,
    count_irregular_pairs,
    detect_freezing,
    detect_semi_freeze,
    enumerate_local_families,
    irregular_pair_bounds,
)
from .simulate import (
    StepRecord,
    Trace,
    TraceError,
    load_trace,
    random_walk,
    run_trace,
    save_trace,
    walk_stats,
)

__all__ = [name for name in dir() if not name.startswith("_")]
