"""Exact total activity of the single-seeded Rule 150 cellular automaton.

Three independent routes to X(t): the string-doubling iteration
(:func:`activity_series`), the spin-block product
(:func:`activity_closed_form`) and direct lattice simulation
(:func:`simulate_activity`).
"""
from ._backend import NAME as BACKEND
from .block_sums import (
    binet,
    block_sum,
    block_sum_fib,
    detrend_offset,
    detrended_series,
    eigenvalue_ratio,
    fibonacci,
)
from .eca_oracle import (
    LatticeWindow,
    row150_polynomial,
    simulate_activity,
    step,
)
from .exact import ActivityOverflowError
from .replication_engine import (
    RULE150,
    SIERPINSKI,
    THUE_MORSE,
    ActivityString,
    GenerationState,
    ReplicationRule,
    RuleSyntaxError,
    activity_at,
    activity_series,
    apply_generation,
    initial_state,
    parse_rule,
    run_rule,
    self_similarity_check,
)
from .spin_algebra import (
    SpinWord,
    activity_closed_form,
    chi,
    chi_closed,
    rule90_activity,
    spin_blocks,
    spin_decompose,
)

__version__ = "0.1.0"
