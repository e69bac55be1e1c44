"""Sequential-bargaining chain construction and backward-induction solving.

The negotiation is a chain of offer nodes: at step s the scheduled proposer
puts forward its cheapest not-yet-offered candidate; every other agent then
accepts or rejects. A single rejection advances the game to the next
proposer's node, and each step of delay inflates costs by 1/discount. The
last possible offer is force-accepted (walking away is treated as infinitely
costly), which makes backward induction well-founded.

Solving the chain backward yields the subgame-perfect outcome: the first
offer (from the root) that every responder weakly prefers over what the
remaining negotiation would give them. With the allocator proposing first
over the full allocation space, that outcome is the negotiation-aware fair
allocation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import (
    Allocation,
    DEFAULT_ENUMERATION_CAP,
    Scenario,
    agent_cost,
    discounted_cost,
    enumerate_allocations,
)

TRUE_COSTS = "true-costs"


class CostView:
    """Total evaluator of (allocation, agent) -> cost with a provenance tag.

    One abstraction serves both the allocator's true view and a human's
    believed view; chain construction and solving never look past it.
    Evaluations are memoized (pure function, so this is invisible).
    """

    __slots__ = ("_fn", "num_agents", "provenance", "_memo")

    def __init__(
        self,
        fn: Callable[[Allocation, int], float],
        num_agents: int,
        provenance: str,
    ):
        self._fn = fn
        self.num_agents = num_agents
        self.provenance = provenance
        self._memo: dict[tuple[Allocation, int], float] = {}

    def cost(self, o: Allocation, agent: int) -> float:
        key = (o, agent)
        c = self._memo.get(key)
        if c is None:
            c = self._fn(o, agent)
            if c < 0:
                raise ValueError(f"cost view produced negative cost {c} for {key}")
            self._memo[key] = c
        return c

    @classmethod
    def true_costs(cls, scenario: Scenario) -> "CostView":
        return cls(
            fn=lambda o, agent: agent_cost(scenario, o, agent),
            num_agents=scenario.num_humans + 1,
            provenance=TRUE_COSTS,
        )


@dataclass(frozen=True)
class Decision:
    """One responder's accept/reject call with the two compared costs.

    Costs are discounted: ``offer_cost`` at the node's own step,
    ``continuation_cost`` at the step where the remaining subgame settles
    (infinite on the forced-accept terminal node).
    """

    agent: int
    accepted: bool
    offer_cost: float
    continuation_cost: float


@dataclass
class ChainNode:
    """Offer node: proposer puts ``offer`` on the table at depth ``step``.

    ``decisions`` and ``spe_outcome`` are filled by :func:`solve_spe`;
    ``spe_outcome`` is (allocation, acceptance step) of the subgame rooted
    here.
    """

    step: int
    proposer: int
    offer: Allocation
    terminal: bool = False
    decisions: tuple[Decision, ...] | None = None
    spe_outcome: tuple[Allocation, int] | None = None

    @property
    def rejectors(self) -> tuple[int, ...]:
        if self.decisions is None:
            return ()
        return tuple(d.agent for d in self.decisions if not d.accepted)


@dataclass
class NegotiationChain:
    nodes: list[ChainNode]
    candidates: tuple[Allocation, ...]
    excluded: tuple[Allocation, ...]
    order: tuple[int, ...]
    discount: float
    provenance: str

    @property
    def solved(self) -> bool:
        return bool(self.nodes) and self.nodes[0].spe_outcome is not None

    @property
    def outcome(self) -> tuple[Allocation, int]:
        if not self.solved:
            raise ValueError("chain has not been solved yet")
        assert self.nodes[0].spe_outcome is not None
        return self.nodes[0].spe_outcome


def round_robin_order(first: int, num_agents: int) -> tuple[int, ...]:
    """Cyclic proposer order starting at ``first`` over agents 0..num_agents-1."""
    if not 0 <= first < num_agents:
        raise ValueError(f"first proposer {first} outside [0, {num_agents})")
    return tuple((first + k) % num_agents for k in range(num_agents))


def build_chain(
    view: CostView,
    candidates: Iterable[Allocation],
    first_proposer: int,
    delta: float,
    order: Sequence[int] | None = None,
    root_offer: Allocation | None = None,
    excluded: Iterable[Allocation] = (),
) -> NegotiationChain:
    """Lay out the full offer chain (no decisions yet).

    Node s's offer is the not-yet-offered candidate minimizing the scheduled
    proposer's discounted cost at step s, ties broken by lexicographically
    smallest string; ``root_offer``, when given, pins node 0 instead. The
    chain ends when candidates are exhausted, and the last node is marked
    terminal (forced accept).
    """
    pool = sorted(set(candidates))
    if not pool:
        raise ValueError("candidate set is empty")
    if order is None:
        order = round_robin_order(first_proposer, view.num_agents)
    else:
        order = tuple(order)
        if order[0] != first_proposer:
            raise ValueError("order must start at first_proposer")
        if sorted(order) != list(range(view.num_agents)):
            raise ValueError(
                f"order must cover agents 0..{view.num_agents - 1} exactly once"
            )
    if root_offer is not None and root_offer not in pool:
        raise ValueError(f"root offer {root_offer!r} not in candidate set")

    # Discounting at a fixed step is monotone in cost, so each proposer's
    # greedy choice follows one pre-sorted (cost, allocation) list.
    ranked: dict[int, list[Allocation]] = {}
    cursor: dict[int, int] = {}
    for agent in set(order):
        ranked[agent] = sorted(pool, key=lambda o: (view.cost(o, agent), o))
        cursor[agent] = 0

    nodes: list[ChainNode] = []
    offered: set[Allocation] = set()
    for step in range(len(pool)):
        proposer = order[step % len(order)]
        if step == 0 and root_offer is not None:
            offer = root_offer
        else:
            lst = ranked[proposer]
            i = cursor[proposer]
            while lst[i] in offered:
                i += 1
            cursor[proposer] = i
            offer = lst[i]
        offered.add(offer)
        nodes.append(ChainNode(step=step, proposer=proposer, offer=offer))
    nodes[-1].terminal = True
    return NegotiationChain(
        nodes=nodes,
        candidates=tuple(pool),
        excluded=tuple(sorted(set(excluded))),
        order=order,
        discount=delta,
        provenance=view.provenance,
    )


def solve_spe(
    chain: NegotiationChain, view: CostView, delta: float | None = None
) -> tuple[Allocation, int]:
    """Backward-induce accept/reject decisions and annotate the chain.

    Walks from the terminal node toward the root. A responder accepts an
    offer iff its discounted cost now is <= its discounted cost of the
    subgame outcome after rejection (ties accept); the terminal offer is
    force-accepted. Returns the root's subgame outcome: the equilibrium
    allocation and its acceptance step.
    """
    if delta is None:
        delta = chain.discount
    continuation: tuple[Allocation, int] | None = None
    for node in reversed(chain.nodes):
        decisions = []
        all_accept = True
        for agent in chain.order:
            if agent == node.proposer:
                continue
            offer_cost = discounted_cost(view.cost(node.offer, agent), node.step, delta)
            if continuation is None:
                cont_cost = math.inf  # disagreement is off the table
            else:
                cont_alloc, cont_step = continuation
                cont_cost = discounted_cost(view.cost(cont_alloc, agent), cont_step, delta)
            accepted = offer_cost <= cont_cost
            all_accept = all_accept and accepted
            decisions.append(
                Decision(
                    agent=agent,
                    accepted=accepted,
                    offer_cost=offer_cost,
                    continuation_cost=cont_cost,
                )
            )
        node.decisions = tuple(decisions)
        if all_accept:
            node.spe_outcome = (node.offer, node.step)
        else:
            assert continuation is not None
            node.spe_outcome = continuation
        continuation = node.spe_outcome
    return chain.outcome


def fair_allocation(
    scenario: Scenario, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[Allocation, NegotiationChain]:
    """Negotiation-aware fair allocation over the full allocation space.

    Builds the chain with true costs, the allocator proposing first and
    humans following round-robin, then solves for the subgame-perfect
    outcome. Returns the equilibrium allocation and the annotated chain.
    """
    candidates = enumerate_allocations(scenario.num_humans, scenario.num_tasks, cap)
    view = CostView.true_costs(scenario)
    chain = build_chain(
        view,
        candidates,
        first_proposer=scenario.allocator,
        delta=scenario.discount,
    )
    allocation, _step = solve_spe(chain, view)
    return allocation, chain


@dataclass(frozen=True)
class RejectionWitness:
    """Evidence that an earlier offer could not stand: who rejected it and
    the discounted cost comparison that justified the rejection."""

    step: int
    proposer: int
    offer: Allocation
    agent: int
    offer_cost: float
    continuation_cost: float


@dataclass(frozen=True)
class FairnessVerdict:
    passed: bool
    acceptance_step: int
    witnesses: tuple[RejectionWitness, ...] = ()
    failure: str | None = None
    failure_step: int | None = None
    failure_agent: int | None = None

    def __bool__(self) -> bool:
        return self.passed


def verify_fairness(
    scenario: Scenario,
    o: Allocation,
    chain: NegotiationChain,
    strict: bool = False,
) -> FairnessVerdict:
    """Certify that ``o`` is the chain's equilibrium and deserves the name.

    Recomputes every recorded decision from true costs, then checks the two
    defining properties: the acceptance node is sustained (every responder
    weakly prefers ``o`` there over continuing), and every earlier offer was
    rejected by at least one agent, returned as witnesses. ``strict``
    additionally demands that every later offer is strictly worse than ``o``
    for every single agent, a reading the greedy offer schedule does not
    guarantee; it is off by default.
    """
    if not chain.solved:
        raise ValueError("chain has not been solved")
    m = scenario.num_tasks
    if any(len(node.offer) != m for node in chain.nodes):
        raise ValueError("chain offers do not match scenario task count")
    if len(chain.order) != scenario.num_humans + 1:
        raise ValueError("chain agent universe does not match scenario")

    view = CostView.true_costs(scenario)
    spe_alloc, accept_step = chain.outcome

    if o != spe_alloc:
        for node in chain.nodes:
            if node.offer == o:
                rejectors = node.rejectors
                agent = rejectors[0] if rejectors else None
                return FairnessVerdict(
                    passed=False,
                    acceptance_step=accept_step,
                    failure=(
                        f"{o} is not the equilibrium outcome; offered at step "
                        f"{node.step} and "
                        + (
                            f"rejected by agent {agent}"
                            if agent is not None
                            else "never reached"
                        )
                    ),
                    failure_step=node.step,
                    failure_agent=agent,
                )
        return FairnessVerdict(
            passed=False,
            acceptance_step=accept_step,
            failure=f"{o} was never offered in the chain",
        )

    # Recorded decisions must be reproducible from true costs.
    continuation: tuple[Allocation, int] | None = None
    for node in reversed(chain.nodes):
        assert node.decisions is not None and node.spe_outcome is not None
        for d in node.decisions:
            offer_cost = discounted_cost(view.cost(node.offer, d.agent), node.step, chain.discount)
            if continuation is None:
                cont_cost = math.inf
            else:
                ca, cs = continuation
                cont_cost = discounted_cost(view.cost(ca, d.agent), cs, chain.discount)
            if (
                offer_cost != d.offer_cost
                or cont_cost != d.continuation_cost
                or d.accepted != (offer_cost <= cont_cost)
            ):
                return FairnessVerdict(
                    passed=False,
                    acceptance_step=accept_step,
                    failure=(
                        f"recorded decision of agent {d.agent} at step "
                        f"{node.step} is not reproducible from true costs"
                    ),
                    failure_step=node.step,
                    failure_agent=d.agent,
                )
        continuation = node.spe_outcome

    # Acceptance node sustained: no responder strictly prefers to continue.
    accept_node = chain.nodes[accept_step]
    for d in accept_node.decisions or ():
        if not d.accepted:
            return FairnessVerdict(
                passed=False,
                acceptance_step=accept_step,
                failure=f"agent {d.agent} rejects at the claimed acceptance step",
                failure_step=accept_step,
                failure_agent=d.agent,
            )

    # Every earlier offer was rejected by someone; collect the witnesses.
    witnesses = []
    for node in chain.nodes[:accept_step]:
        rejecting = [d for d in (node.decisions or ()) if not d.accepted]
        if not rejecting:
            return FairnessVerdict(
                passed=False,
                acceptance_step=accept_step,
                failure=f"offer at step {node.step} was accepted by everyone "
                f"yet the equilibrium settles later",
                failure_step=node.step,
            )
        d = rejecting[0]
        witnesses.append(
            RejectionWitness(
                step=node.step,
                proposer=node.proposer,
                offer=node.offer,
                agent=d.agent,
                offer_cost=d.offer_cost,
                continuation_cost=d.continuation_cost,
            )
        )

    if strict:
        for node in chain.nodes[accept_step + 1:]:
            for agent in chain.order:
                later = discounted_cost(view.cost(node.offer, agent), node.step, chain.discount)
                settled = discounted_cost(view.cost(o, agent), accept_step, chain.discount)
                if later <= settled:
                    return FairnessVerdict(
                        passed=False,
                        acceptance_step=accept_step,
                        failure=(
                            f"strict mode: agent {agent} would not pay more for "
                            f"the offer at step {node.step} than for {o}"
                        ),
                        failure_step=node.step,
                        failure_agent=agent,
                    )

    return FairnessVerdict(
        passed=True,
        acceptance_step=accept_step,
        witnesses=tuple(witnesses),
    )


def selfishness_bound(scenario: Scenario, fair: Allocation, agent: int) -> float:
    """How far the equilibrium sits from the agent's private optimum.

    An agent's individually optimal allocation hands every task to others at
    zero cost to itself, so the distance is simply its cost under the fair
    allocation.
    """
    if not 0 <= agent < scenario.num_humans:
        raise ValueError(
            f"selfishness bound is defined for humans 0..{scenario.num_humans - 1}, "
            f"got {agent}"
        )
    return agent_cost(scenario, fair, agent)


# -- chain export ------------------------------------------------------------


def chain_to_json(chain: NegotiationChain) -> dict:
    out: dict = {
        "provenance": chain.provenance,
        "discount": chain.discount,
        "order": list(chain.order),
        "candidates": list(chain.candidates),
        "excluded": list(chain.excluded),
        "nodes": [
            {
                "step": node.step,
                "proposer": node.proposer,
                "offer": node.offer,
                "terminal": node.terminal,
                "decisions": None
                if node.decisions is None
                else [
                    {
                        "agent": d.agent,
                        "accepted": d.accepted,
                        "offerCost": d.offer_cost,
                        "continuationCost": _json_cost(d.continuation_cost),
                    }
                    for d in node.decisions
                ],
                "speOutcome": None
                if node.spe_outcome is None
                else {
                    "allocation": node.spe_outcome[0],
                    "acceptStep": node.spe_outcome[1],
                },
            }
            for node in chain.nodes
        ],
    }
    if chain.solved:
        alloc, step = chain.outcome
        out["spe"] = {"allocation": alloc, "acceptStep": step}
    return out


def _json_cost(c: float) -> float | str:
    return "inf" if math.isinf(c) else c


def chain_to_dot(chain: NegotiationChain) -> str:
    """Graphviz rendering: offers as nodes, rejections as edge labels."""
    lines = ["digraph negotiation {", "  rankdir=TB;", '  node [shape=box, fontname="sans-serif"];']
    accept_step = chain.outcome[1] if chain.solved else None
    for node in chain.nodes:
        style = ""
        if accept_step is not None and node.step == accept_step:
            style = ', style=filled, fillcolor="palegreen"'
        lines.append(
            f'  n{node.step} [label="step {node.step}\\nagent {node.proposer} '
            f'offers {node.offer}"{style}];'
        )
    for node in chain.nodes[:-1]:
        rejectors = node.rejectors
        label = (
            "rejected by " + ", ".join(str(a) for a in rejectors)
            if rejectors
            else "if rejected"
        )
        lines.append(f'  n{node.step} -> n{node.step + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
