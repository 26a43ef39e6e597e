"""
Homomorphism-count query algorithms over finite relational structures:
structures and constructors, structural parameters, exact hom counting
with closed forms for cycle unions, adaptive/non-adaptive query
algorithm runners, a minimal Datalog evaluator, and brute-force oracles.
"""

from .structures import (
    Signature,
    Structure,
    DIGRAPH_SIG,
    GuardExceeded,
    complete_pair,
    complete_singleton,
    decode_structure,
    digraph,
    direct_product,
    directed_cycle,
    directed_path,
    disjoint_union,
    encode_structure,
    isomorphic,
    make_structure,
    n_ary_cycle,
    scalar_multiple,
)
from .analysis import (
    component_count,
    core,
    gamma,
    hom_equiv_to_acyclic,
    incidence_multigraph,
    is_berge_acyclic,
    maps_to_cycle,
    star_transform,
)
from .homs import (
    BOOLEAN,
    COUNT,
    WorkBudgetExceeded,
    hom_count,
    hom_equivalent,
    hom_exists,
    hom_into_cycle_union_formula,
    hom_into_nary_cycle_union_formula,
    nu2,
)
from .query import (
    LEFT,
    RIGHT,
    Halt,
    NonAdaptiveAlgorithm,
    Query,
    RunReport,
    StrategyContractError,
    bounded_depth_check,
    flatten_adaptive_boolean,
    lift_non_adaptive,
    run_adaptive,
    run_non_adaptive,
)
from .oracle import oracle_gamma, oracle_hom_count
from .catalog import enumerate_digraphs, enumerate_digraphs_upto
from .datalog import builtin_programs, classify_program, evaluate, parse_program
from .registry import REGISTRY, run_registered
from .experiments import EXPERIMENTS
