/** Negotiation-tree rendering from the explanation JSON (never from DOT). */

import { agentLabel, fmtCost } from "./format";
import type { ExplanationDoc } from "./types";

export function renderExplanationTree(
  explanation: ExplanationDoc,
  numHumans: number,
): HTMLElement {
  const root = document.createElement("div");
  root.className = "explanation-tree";
  root.dataset.testid = "explanation-tree";

  const list = document.createElement("ol");
  list.className = "tree-nodes";
  for (const step of explanation.steps) {
    const item = document.createElement("li");
    item.className = step.accepted ? "tree-node accepted" : "tree-node rejected";
    item.dataset.offer = step.offer;

    const offer = document.createElement("div");
    offer.className = "offer";
    offer.textContent = `${agentLabel(step.proposer, numHumans)} offers ${step.offer}`;
    item.appendChild(offer);

    const edge = document.createElement("div");
    edge.className = "edge-label";
    if (step.accepted) {
      edge.textContent = "everyone accepts";
    } else {
      edge.textContent =
        `${agentLabel(step.rejectedBy ?? -1, numHumans)} rejects: ` +
        `${fmtCost(step.rejectorOfferCost)} now vs ` +
        `${fmtCost(step.rejectorContinuationCost)} for holding out`;
    }
    item.appendChild(edge);
    list.appendChild(item);
  }
  root.appendChild(list);

  const summary = document.createElement("p");
  summary.className = explanation.guaranteeHolds
    ? "final-cost refuted"
    : "final-cost stands";
  summary.dataset.testid = "final-cost";
  const yourFinal = fmtCost(explanation.finalCostToQuestioner);
  const yourProposal = fmtCost(explanation.proposalCostToQuestioner);
  summary.innerHTML =
    `Replay settles on <strong>${explanation.finalAllocation}</strong>: ` +
    `your cost <strong>${yourFinal}</strong> against ` +
    `<strong>${yourProposal}</strong> under the proposal. ` +
    (explanation.guaranteeHolds
      ? "Your alternative leaves you no better off."
      : "Your alternative would stand in this replay.");
  root.appendChild(summary);
  return root;
}
