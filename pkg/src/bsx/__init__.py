"""Toolkit for the combinatorics of two-generator one-relator groups with
a stable letter: labeled quotient graphs, pre-actions, phenotype
arithmetic, and subgroup-space classification."""

from .arith import (
    INF,
    BSParams,
    ExtCard,
    Infinity,
    approximation_level_N,
    confinement_bound_R,
    enumerate_phenotype_preimage,
    is_inf,
    order_r,
    phenotype,
    special_divisor_s,
    valuation,
)
from .errors import BsxError
from .mn_graph import (
    MnGraph,
    SaturationReport,
    ValidationReport,
    admissible_neighbor_labels,
    connect_path,
    detect_unbounded,
    flip,
    forest_saturate,
    graph_from_json_obj,
    graph_of_groups,
    graph_phenotype,
    graph_to_dot,
    graph_to_json_obj,
    is_saturated,
    isomorphic,
    merge_graphs,
    saturation_report,
    validate,
    weld,
)
from .preaction import (
    PointedAction,
    PreAction,
    ball,
    bass_serre,
    evaluate,
    merge_preactions,
    pointed_eq_R,
    preaction_from_json_obj,
    preaction_to_json_obj,
    realize,
    realize_extending,
    validate_preaction,
)
from .subgroups import (
    KernelVerdict,
    classify_kernel,
    conjugate,
    contains_normal_closure,
    mcq_member,
    quotient_action,
    stabilizer_contains,
    subgroup_phenotype,
    triangle_preaction,
)
from .words import BrittonForm, Word, britton_reduce, commute_power, parse_word, t_stats

__version__ = "0.1.0"
