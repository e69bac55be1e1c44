"""Negotiation-aware task allocation with contrastive explanations.

Compute a fair allocation as the subgame-perfect outcome of a simulated
round-robin bargaining chain, anticipate the counterfactuals boundedly
rational teammates with noisy beliefs would raise, and refute them with
minimal-disclosure negotiation-tree explanations.
"""

from .core import (
    Allocation,
    EnumerationCapExceeded,
    PerformanceModel,
    Scenario,
    agent_cost,
    discounted_cost,
    dump_scenario,
    enumerate_allocations,
    format_allocation,
    hamming_distance,
    hamming_neighbors,
    load_scenario,
    parse_allocation,
    performance_cost,
    scale_costs,
    scenario_from_json,
    scenario_to_json,
)
from .negotiation import (
    ChainNode,
    CostView,
    Decision,
    FairnessVerdict,
    NegotiationChain,
    build_chain,
    chain_to_dot,
    chain_to_json,
    fair_allocation,
    round_robin_order,
    selfishness_bound,
    solve_spe,
    verify_fairness,
)
from .beliefs import (
    BeliefModel,
    Counterfactual,
    FoilVerdict,
    belief_from_json,
    belief_to_json,
    believed_cost,
    counterfactual_candidates,
    exact_belief,
    make_belief_model,
    optimal_counterfactual,
    validate_counterfactual,
)
from .explanation import (
    Explanation,
    ExplanationStep,
    ModelInconsistencyError,
    baseline_explanation,
    explain,
    explanation_from_json,
    explanation_length,
    explanation_to_json,
    render_explanation,
)
from .noiselab import (
    NoiseConfig,
    SweepResult,
    build_belief_model,
    export_csv,
    run_noise_sweep,
    run_subset_sweep,
    sample_noisy_costs,
)

__version__ = "0.1.0"
