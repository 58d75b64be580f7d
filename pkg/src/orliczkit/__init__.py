"""Numerical toolkit for Orlicz-space interpolation between weak-type classes.

Young functions and their complementary functions, exact step-function
rearrangement arithmetic, Hardy/Calderon averaging operators with
distribution sandwiches, Lorentz and Luxemburg functionals, integral
condition checkers for interpolation pairs, and a cross-validation harness
that compares condition verdicts with direct modular-inequality tests.
"""

from .calderon import (
    Average,
    CalderonSum,
    HardyHead,
    HardyTail,
    JointHardy,
    distribution_of,
    sandwich_calderon,
    sandwich_hardy_head,
    tail_reduction_bound,
)
from .conditions import (
    ConditionReport,
    check_average,
    check_cianchi_lower,
    check_cianchi_upper,
    check_stepanov_pair,
    check_theorem_joint,
    check_zs_lower,
    check_zs_upper,
    sup_search,
)
from .norms import gauge_norm, lorentz_norm, modular, modular_of_operator
from .stepfn import StepFunction
from .verify import (
    ModularReport,
    TestFamily,
    cross_check,
    default_panel,
    op_log_tail,
    op_rearrange,
    reproduce_worked_example,
    verify_dominance,
    verify_modular,
    verify_weak_type,
    worked_example_pair,
)
from .young import (
    ExpYoungFunction,
    Piece,
    TabulatedYoungFunction,
    YoungFunction,
    complementary,
    load_young,
    power_young,
)

# external-interface alias
reproduce_section6 = reproduce_worked_example

__version__ = "0.1.0"

__all__ = [
    "Average", "CalderonSum", "HardyHead", "HardyTail", "JointHardy",
    "distribution_of", "sandwich_calderon", "sandwich_hardy_head",
    "tail_reduction_bound",
    "ConditionReport", "check_average", "check_cianchi_lower",
    "check_cianchi_upper", "check_stepanov_pair", "check_theorem_joint",
    "check_zs_lower", "check_zs_upper", "sup_search",
    "gauge_norm", "lorentz_norm", "modular", "modular_of_operator",
    "StepFunction",
    "ModularReport", "TestFamily", "cross_check", "default_panel",
    "op_log_tail", "op_rearrange", "reproduce_worked_example",
    "reproduce_section6", "verify_dominance", "verify_modular",
    "verify_weak_type", "worked_example_pair",
    "ExpYoungFunction", "Piece", "TabulatedYoungFunction", "YoungFunction",
    "complementary", "load_young", "power_young",
]
