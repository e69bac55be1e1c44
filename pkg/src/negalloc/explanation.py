"""Contrastive explanations: refuting a counterfactual with the true-cost replay.

The explanation is the negotiation chain rooted at the questioner's foil
with the originally proposed allocation taken off the table, played with
true costs and no reach restrictions. Its equilibrium shows where the foil
actually leads; the questioner ends up paying at least as much as under the
proposal, which is the whole argument. Only one cost comparison per rejected
offer is ever disclosed.

Two deliberately weaker styles exist for comparison: a vacuous statement
with no evidence, and a verbose dump of every cost for every allocation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .core import (
    Allocation,
    DEFAULT_ENUMERATION_CAP,
    Scenario,
    agent_cost,
    enumerate_allocations,
    performance_cost,
)
from .beliefs import validate_counterfactual
from .negotiation import CostView, build_chain, solve_spe

NEGOTIATION_TREE = "negotiationTree"
VACUOUS = "vacuous"
VERBOSE = "verbose"
STYLES = (NEGOTIATION_TREE, VACUOUS, VERBOSE)


class ModelInconsistencyError(RuntimeError):
    """The replay ended somewhere cheaper than the proposal for the
    questioner, which the fair-allocation construction rules out; reaching
    this means the engine itself is broken."""


@dataclass(frozen=True)
class ExplanationStep:
    """One offer of the replay. Rejected offers carry a single witness:
    the first refusing agent and its two compared discounted costs."""

    step: int
    proposer: int
    offer: Allocation
    accepted: bool
    rejected_by: int | None = None
    rejector_offer_cost: float | None = None
    rejector_continuation_cost: float | None = None


@dataclass(frozen=True)
class VerboseRow:
    allocation: Allocation
    human_costs: tuple[float, ...]
    performance: float


@dataclass(frozen=True)
class Explanation:
    style: str
    questioner: int
    proposal: Allocation
    counterfactual: Allocation
    steps: tuple[ExplanationStep, ...]
    final_allocation: Allocation
    final_cost_to_questioner: float | None
    proposal_cost_to_questioner: float | None
    length: int
    guarantee_holds: bool = True
    statement: str | None = None
    cost_table: tuple[VerboseRow, ...] | None = None


def explain(
    scenario: Scenario,
    o: Allocation,
    o_prime: Allocation,
    agent: int,
    delta: float | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    enforce_guarantee: bool = True,
) -> Explanation:
    """Build the negotiation-tree refutation of foil ``o_prime``.

    The chain starts at (agent, o_prime), excludes ``o``, runs over the full
    remaining allocation space with true costs, and is solved backward. The
    returned explanation is the prefix up to the accepted offer; its length
    counts offer nodes root-to-acceptance inclusive.

    With ``enforce_guarantee`` (the default), an outcome cheaper for the
    questioner than the proposal raises ModelInconsistencyError. The
    experiment sweeps disable enforcement and measure the replay tree as-is;
    ``guarantee_holds`` records whether the refutation succeeded, since the
    greedy replay chain does not refute every foil on every cost structure.
    """
    verdict = validate_counterfactual(scenario, o, o_prime, agent)
    if not verdict.ok:
        raise ValueError(f"invalid counterfactual: {verdict.reason}")
    if delta is None:
        delta = scenario.discount
    n, m = scenario.num_humans, scenario.num_tasks
    candidates = [a for a in enumerate_allocations(n, m, cap) if a != o]
    view = CostView.true_costs(scenario)
    chain = build_chain(
        view,
        candidates,
        first_proposer=agent,
        delta=delta,
        root_offer=o_prime,
        excluded=(o,),
    )
    final_alloc, accept_step = solve_spe(chain, view, delta)

    steps = []
    for node in chain.nodes[: accept_step + 1]:
        assert node.decisions is not None
        if node.step == accept_step:
            steps.append(
                ExplanationStep(
                    step=node.step,
                    proposer=node.proposer,
                    offer=node.offer,
                    accepted=True,
                )
            )
        else:
            refusal = next(d for d in node.decisions if not d.accepted)
            steps.append(
                ExplanationStep(
                    step=node.step,
                    proposer=node.proposer,
                    offer=node.offer,
                    accepted=False,
                    rejected_by=refusal.agent,
                    rejector_offer_cost=refusal.offer_cost,
                    rejector_continuation_cost=refusal.continuation_cost,
                )
            )

    final_cost = agent_cost(scenario, final_alloc, agent)
    proposal_cost = agent_cost(scenario, o, agent)
    guarantee_holds = final_cost >= proposal_cost
    if enforce_guarantee and not guarantee_holds:
        raise ModelInconsistencyError(
            f"replay from {o_prime} settled on {final_alloc} costing agent "
            f"{agent} {final_cost:.6g} < {proposal_cost:.6g} under the "
            f"proposal {o}; the fair allocation should have prevented this"
        )
    return Explanation(
        style=NEGOTIATION_TREE,
        questioner=agent,
        proposal=o,
        counterfactual=o_prime,
        steps=tuple(steps),
        final_allocation=final_alloc,
        final_cost_to_questioner=final_cost,
        proposal_cost_to_questioner=proposal_cost,
        length=accept_step + 1,
        guarantee_holds=guarantee_holds,
    )


def explanation_length(e: Explanation) -> int:
    """Offer nodes from the foil to the accepted offer, inclusive.

    0 for the baseline styles, which carry no replay.
    """
    return e.length


def baseline_explanation(
    scenario: Scenario,
    o: Allocation,
    o_prime: Allocation,
    agent: int,
    style: str,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Explanation:
    """The two control styles: an evidence-free dismissal, or a full dump."""
    verdict = validate_counterfactual(scenario, o, o_prime, agent)
    if not verdict.ok:
        raise ValueError(f"invalid counterfactual: {verdict.reason}")
    if style == VACUOUS:
        return Explanation(
            style=VACUOUS,
            questioner=agent,
            proposal=o,
            counterfactual=o_prime,
            steps=(),
            final_allocation=o,
            final_cost_to_questioner=None,
            proposal_cost_to_questioner=None,
            length=0,
            statement=(
                f"Your alternative {o_prime} would not be accepted by your "
                f"teammates and does not ensure good overall performance; "
                f"the proposed allocation {o} stands."
            ),
        )
    if style == VERBOSE:
        n, m = scenario.num_humans, scenario.num_tasks
        rows = tuple(
            VerboseRow(
                allocation=a,
                human_costs=tuple(agent_cost(scenario, a, i) for i in range(n)),
                performance=performance_cost(scenario, a),
            )
            for a in enumerate_allocations(n, m, cap)
        )
        return Explanation(
            style=VERBOSE,
            questioner=agent,
            proposal=o,
            counterfactual=o_prime,
            steps=(),
            final_allocation=o,
            final_cost_to_questioner=None,
            proposal_cost_to_questioner=None,
            length=0,
            cost_table=rows,
        )
    raise ValueError(f"unknown baseline style {style!r}; expected vacuous or verbose")


# -- rendering ----------------------------------------------------------------


def _fmt(c: float | None) -> str:
    if c is None:
        return "-"
    if math.isinf(c):
        return "inf"
    return f"{c:.6g}"


def render_explanation(e: Explanation, fmt: str = "text") -> str:
    """Render as a dialogue transcript, machine JSON, or a DOT graph.

    All three carry the same information; output is byte-deterministic for
    identical inputs.
    """
    if fmt == "text":
        return _render_text(e)
    if fmt == "json":
        return json.dumps(explanation_to_json(e), indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        return _render_dot(e)
    raise ValueError(f"unknown format {fmt!r}; expected text, json or dot")


def _render_text(e: Explanation) -> str:
    if e.style == VACUOUS:
        assert e.statement is not None
        return e.statement + "\n"
    if e.style == VERBOSE:
        assert e.cost_table is not None
        n = len(e.cost_table[0].human_costs) if e.cost_table else 0
        header = "allocation  " + "  ".join(f"human{i}" for i in range(n)) + "  performance"
        lines = [
            f"Every cost in the problem, for all {len(e.cost_table)} allocations:",
            header,
        ]
        for row in e.cost_table:
            lines.append(
                f"{row.allocation:>10}  "
                + "  ".join(f"{c:>6}" for c in (_fmt(c) for c in row.human_costs))
                + f"  {_fmt(row.performance):>11}"
            )
        return "\n".join(lines) + "\n"

    lines = [
        f"Why not {e.counterfactual}? Replaying the negotiation from your "
        f"alternative with true costs ({e.proposal} is off the table):"
    ]
    for s in e.steps:
        if s.accepted:
            lines.append(
                f"{s.step + 1}. agent {s.proposer} proposes {s.offer} "
                f"-- everyone accepts."
            )
        else:
            lines.append(
                f"{s.step + 1}. agent {s.proposer} proposes {s.offer} "
                f"-- agent {s.rejected_by} rejects: accepting would cost it "
                f"{_fmt(s.rejector_offer_cost)} against "
                f"{_fmt(s.rejector_continuation_cost)} for holding out."
            )
    lines.append(
        f"The negotiation settles on {e.final_allocation}, which costs you "
        f"{_fmt(e.final_cost_to_questioner)}; the proposed {e.proposal} costs "
        f"you {_fmt(e.proposal_cost_to_questioner)}."
        + (
            " Your alternative leaves you no better off."
            if e.guarantee_holds
            else " Your alternative would stand in this replay."
        )
    )
    return "\n".join(lines) + "\n"


def _render_dot(e: Explanation) -> str:
    lines = ["digraph explanation {", "  rankdir=TB;", '  node [shape=box, fontname="sans-serif"];']
    if e.style != NEGOTIATION_TREE:
        label = e.statement or f"{e.style} explanation for {e.counterfactual}"
        lines.append(f'  n0 [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    for s in e.steps:
        style = ', style=filled, fillcolor="palegreen"' if s.accepted else ""
        lines.append(
            f'  n{s.step} [label="step {s.step}\\nagent {s.proposer} '
            f'offers {s.offer}"{style}];'
        )
    for s in e.steps:
        if not s.accepted:
            lines.append(
                f'  n{s.step} -> n{s.step + 1} [label="agent {s.rejected_by} '
                f'rejects ({_fmt(s.rejector_offer_cost)} > '
                f'{_fmt(s.rejector_continuation_cost)})"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- JSON round trip ----------------------------------------------------------


def _num_to_json(c: float | None) -> float | str | None:
    if c is None:
        return None
    return "inf" if math.isinf(c) else c


def _num_from_json(v: float | str | None) -> float | None:
    if v is None:
        return None
    if v == "inf":
        return math.inf
    return float(v)


def explanation_to_json(e: Explanation) -> dict:
    out: dict = {
        "style": e.style,
        "questioner": e.questioner,
        "proposal": e.proposal,
        "counterfactual": e.counterfactual,
        "finalAllocation": e.final_allocation,
        "finalCostToQuestioner": _num_to_json(e.final_cost_to_questioner),
        "proposalCostToQuestioner": _num_to_json(e.proposal_cost_to_questioner),
        "length": e.length,
        "guaranteeHolds": e.guarantee_holds,
        "steps": [
            {
                "step": s.step,
                "proposer": s.proposer,
                "offer": s.offer,
                "accepted": s.accepted,
                "rejectedBy": s.rejected_by,
                "rejectorOfferCost": _num_to_json(s.rejector_offer_cost),
                "rejectorContinuationCost": _num_to_json(s.rejector_continuation_cost),
            }
            for s in e.steps
        ],
    }
    if e.statement is not None:
        out["statement"] = e.statement
    if e.cost_table is not None:
        out["costTable"] = [
            {
                "allocation": r.allocation,
                "humanCosts": [_num_to_json(c) for c in r.human_costs],
                "performance": _num_to_json(r.performance),
            }
            for r in e.cost_table
        ]
    return out


def explanation_from_json(obj: dict) -> Explanation:
    steps = tuple(
        ExplanationStep(
            step=int(s["step"]),
            proposer=int(s["proposer"]),
            offer=s["offer"],
            accepted=bool(s["accepted"]),
            rejected_by=None if s.get("rejectedBy") is None else int(s["rejectedBy"]),
            rejector_offer_cost=_num_from_json(s.get("rejectorOfferCost")),
            rejector_continuation_cost=_num_from_json(s.get("rejectorContinuationCost")),
        )
        for s in obj["steps"]
    )
    cost_table = None
    if "costTable" in obj:
        cost_table = tuple(
            VerboseRow(
                allocation=r["allocation"],
                human_costs=tuple(_num_from_json(c) for c in r["humanCosts"]),
                performance=_num_from_json(r["performance"]),
            )
            for r in obj["costTable"]
        )
    return Explanation(
        style=obj["style"],
        questioner=int(obj["questioner"]),
        proposal=obj["proposal"],
        counterfactual=obj["counterfactual"],
        steps=steps,
        final_allocation=obj["finalAllocation"],
        final_cost_to_questioner=_num_from_json(obj.get("finalCostToQuestioner")),
        proposal_cost_to_questioner=_num_from_json(obj.get("proposalCostToQuestioner")),
        length=int(obj["length"]),
        guarantee_holds=bool(obj.get("guaranteeHolds", True)),
        statement=obj.get("statement"),
        cost_table=cost_table,
    )
