"""Belief models and the boundedly-rational counterfactual search.

A human knows its own task costs exactly but sees everyone else's (and the
team-performance metric) through a possibly noisy lens. Offered an
allocation, it can only imagine single-task edits: it replays the
negotiation over that small candidate pool with its believed costs, and the
equilibrium of that imagined game, when it beats the offer under the
human's own true costs, is the counterfactual it would raise.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core import (
    Allocation,
    PerformanceModel,
    Scenario,
    TABLE,
    _cost_from_json,
    _cost_to_json,
    agent_cost,
    hamming_distance,
    hamming_neighbors,
    parse_allocation,
)
from .negotiation import CostView, NegotiationChain, build_chain, solve_spe


@dataclass(frozen=True)
class BeliefModel:
    """One human's view of every cost function.

    ``view`` is a scenario whose cost rows are the believed rows and whose
    performance model is the believed one (for derived kinds the believed
    performance follows mechanically from the believed rows). The owner's
    own row always equals the true row, and every agent in ``exact`` is
    seen without noise; the allocator's index in ``exact`` marks exact
    knowledge of a table performance model.
    """

    owner: int
    view: Scenario
    exact: frozenset[int]

    @property
    def believed_costs(self) -> tuple[tuple[float, ...], ...]:
        return self.view.costs

    @property
    def believed_performance(self) -> PerformanceModel:
        return self.view.performance


def make_belief_model(
    scenario: Scenario,
    owner: int,
    believed_costs: tuple[tuple[float, ...], ...],
    believed_performance: PerformanceModel | None = None,
    exact: frozenset[int] = frozenset(),
) -> BeliefModel:
    """Validated construction: own row exact, exact-mask rows exact."""
    if not 0 <= owner < scenario.num_humans:
        raise ValueError(f"belief owner must be a human, got {owner}")
    if believed_performance is None:
        if scenario.performance.model == TABLE and scenario.allocator not in exact:
            raise ValueError(
                "table performance model requires believed performance values "
                "unless the allocator is in the exact set"
            )
        believed_performance = scenario.performance
    if believed_costs[owner] != scenario.costs[owner]:
        raise ValueError("owner's believed row must equal its true row")
    for agent in exact:
        if agent == scenario.allocator:
            if (
                scenario.performance.model == TABLE
                and believed_performance.values != scenario.performance.values
            ):
                raise ValueError(
                    "allocator in exact set but believed performance differs"
                )
        elif believed_costs[agent] != scenario.costs[agent]:
            raise ValueError(f"agent {agent} in exact set but believed row differs")
    view = replace(scenario, costs=believed_costs, performance=believed_performance)
    return BeliefModel(owner=owner, view=view, exact=frozenset(exact) | {owner})


def exact_belief(scenario: Scenario, owner: int) -> BeliefModel:
    """Noise-free belief: the owner sees every cost exactly."""
    return make_belief_model(
        scenario,
        owner,
        believed_costs=scenario.costs,
        believed_performance=scenario.performance,
        exact=frozenset(scenario.agents),
    )


def believed_cost(belief: BeliefModel, o: Allocation, agent: int) -> float:
    """Cost of ``o`` to ``agent`` as the belief owner perceives it."""
    return agent_cost(belief.view, o, agent)


def belief_cost_view(belief: BeliefModel) -> CostView:
    return CostView(
        fn=lambda o, agent: agent_cost(belief.view, o, agent),
        num_agents=belief.view.num_humans + 1,
        provenance=f"beliefs-of({belief.owner})",
    )


@dataclass(frozen=True)
class Counterfactual:
    """The foil a human would raise, with the imagined negotiation behind it."""

    allocation: Allocation
    chain: NegotiationChain


def counterfactual_candidates(o: Allocation, n: int) -> list[Allocation]:
    """The human's reachable pool: the offer itself plus its single edits."""
    return sorted([o] + hamming_neighbors(o, n))


def optimal_counterfactual(
    scenario: Scenario,
    belief: BeliefModel,
    o: Allocation,
    delta: float | None = None,
) -> Counterfactual | None:
    """The best alternative the belief owner thinks would survive negotiation.

    Replays the bargaining over {o} union its 1-edit neighbors with the
    owner's believed costs, the owner proposing first and the rest following
    round-robin. Returns the equilibrium allocation when it differs from
    ``o`` and genuinely lowers the owner's own (true) cost; None otherwise,
    meaning the owner has no case to make.
    """
    if belief.view.num_humans != scenario.num_humans or belief.view.num_tasks != scenario.num_tasks:
        raise ValueError("belief model does not match scenario shape")
    if delta is None:
        delta = scenario.discount
    owner = belief.owner
    parse_allocation(o, scenario.num_humans, scenario.num_tasks)
    candidates = counterfactual_candidates(o, scenario.num_humans)
    view = belief_cost_view(belief)
    chain = build_chain(view, candidates, first_proposer=owner, delta=delta)
    spe_alloc, _step = solve_spe(chain, view, delta)
    if spe_alloc == o:
        return None
    if agent_cost(scenario, spe_alloc, owner) >= agent_cost(scenario, o, owner):
        return None
    return Counterfactual(allocation=spe_alloc, chain=chain)


@dataclass(frozen=True)
class FoilVerdict:
    """Outcome of checking a counterfactual's defining properties.

    ``violated`` is the number of the first failed property: 1 for
    reachability (must differ from the proposal by exactly one task), 2 for
    strict cost improvement under the questioner's true costs, 3 for
    equilibrium optimality under a supplied belief. None when valid.
    """

    ok: bool
    violated: int | None
    reason: str
    distance: int
    proposal_cost: float
    foil_cost: float

    def __bool__(self) -> bool:
        return self.ok


def validate_counterfactual(
    scenario: Scenario,
    o: Allocation,
    o_prime: Allocation,
    agent: int,
    belief: BeliefModel | None = None,
    delta: float | None = None,
) -> FoilVerdict:
    """Check the foil's properties, stopping at the first violation.

    Property 3 (the foil is what the belief-based replay itself would pick)
    is only checked when a belief model is supplied; a live questioner is
    allowed any property-1/2-valid foil.
    """
    n, m = scenario.num_humans, scenario.num_tasks
    parse_allocation(o, n, m)
    parse_allocation(o_prime, n, m)
    if not 0 <= agent < n:
        raise ValueError(f"questioner must be a human, got {agent}")
    distance = hamming_distance(o, o_prime)
    proposal_cost = agent_cost(scenario, o, agent)
    foil_cost = agent_cost(scenario, o_prime, agent)

    if o_prime == o:
        return FoilVerdict(
            ok=False,
            violated=1,
            reason="counterfactual equals the proposed allocation",
            distance=0,
            proposal_cost=proposal_cost,
            foil_cost=foil_cost,
        )
    if distance != 1:
        return FoilVerdict(
            ok=False,
            violated=1,
            reason=(
                f"counterfactual is {distance} edits away; only single-task "
                f"changes are within reach"
            ),
            distance=distance,
            proposal_cost=proposal_cost,
            foil_cost=foil_cost,
        )
    if foil_cost >= proposal_cost:
        return FoilVerdict(
            ok=False,
            violated=2,
            reason=(
                f"counterfactual does not lower your cost "
                f"({foil_cost:.6g} vs {proposal_cost:.6g})"
            ),
            distance=distance,
            proposal_cost=proposal_cost,
            foil_cost=foil_cost,
        )
    if belief is not None:
        if belief.owner != agent:
            raise ValueError("belief model belongs to a different agent")
        cf = optimal_counterfactual(scenario, belief, o, delta)
        if cf is None or cf.allocation != o_prime:
            return FoilVerdict(
                ok=False,
                violated=3,
                reason=(
                    "counterfactual is not the equilibrium of the believed replay"
                    + (f" (that would be {cf.allocation})" if cf else " (none exists)")
                ),
                distance=distance,
                proposal_cost=proposal_cost,
                foil_cost=foil_cost,
            )
    return FoilVerdict(
        ok=True,
        violated=None,
        reason="valid counterfactual",
        distance=distance,
        proposal_cost=proposal_cost,
        foil_cost=foil_cost,
    )


# -- belief JSON --------------------------------------------------------------
#
# {"owner": 1, "believedCosts": [[...], [...]],
#  "believedPerformance": {"model": ..., "values": [...]},   # optional
#  "exact": [0, 2]}


def belief_from_json(scenario: Scenario, obj: dict) -> BeliefModel:
    try:
        owner = int(obj["owner"])
        rows = tuple(
            tuple(_cost_from_json(v) for v in row) for row in obj["believedCosts"]
        )
    except KeyError as e:
        raise ValueError(f"belief JSON missing field {e.args[0]!r}") from None
    perf = None
    if "believedPerformance" in obj and obj["believedPerformance"] is not None:
        p = obj["believedPerformance"]
        values = p.get("values")
        perf = PerformanceModel(
            model=p.get("model", scenario.performance.model),
            values=tuple(float(v) for v in values) if values is not None else None,
        )
    exact = frozenset(int(a) for a in obj.get("exact", ()))
    return make_belief_model(scenario, owner, rows, perf, exact)


def belief_to_json(belief: BeliefModel) -> dict:
    perf: dict[str, object] = {"model": belief.believed_performance.model}
    if belief.believed_performance.values is not None:
        perf["values"] = list(belief.believed_performance.values)
    return {
        "owner": belief.owner,
        "believedCosts": [
            [_cost_to_json(c) for c in row] for row in belief.believed_costs
        ],
        "believedPerformance": perf,
        "exact": sorted(belief.exact),
    }
