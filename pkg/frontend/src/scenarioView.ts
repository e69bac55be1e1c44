/** Cost grid with the fair allocation's task-to-agent coloring and per-agent
 * totals; everything displayed comes straight from the two API responses. */

import { agentColor, fmtCost } from "./format";
import type { FairResponse, ScenarioDoc } from "./types";

export function renderScenarioView(
  scenario: ScenarioDoc,
  fair: FairResponse,
): HTMLElement {
  const root = document.createElement("section");
  root.className = "scenario-view";

  const heading = document.createElement("h2");
  heading.textContent = `Proposed allocation: ${fair.allocation}`;
  heading.dataset.testid = "fair-allocation";
  root.appendChild(heading);

  const sub = document.createElement("p");
  sub.className = "muted";
  sub.textContent =
    `accepted at negotiation step ${fair.acceptStep}; ` +
    `${fair.chain.nodes.length} offers were on the table`;
  root.appendChild(sub);

  const table = document.createElement("table");
  table.className = "cost-grid";
  const head = table.createTHead().insertRow();
  head.appendChild(document.createElement("th")).textContent = "";
  for (const [j, task] of scenario.tasks.entries()) {
    const th = document.createElement("th");
    th.textContent = task;
    const assignee = Number(fair.allocation[j]);
    th.style.borderBottom = `3px solid ${agentColor(assignee)}`;
    head.appendChild(th);
  }
  head.appendChild(document.createElement("th")).textContent = "total";

  const body = table.createTBody();
  for (let i = 0; i < scenario.agents; i++) {
    const row = body.insertRow();
    row.dataset.agent = String(i);
    const label = document.createElement("th");
    label.textContent = `human ${i}`;
    label.style.color = agentColor(i);
    row.appendChild(label);
    for (let j = 0; j < scenario.tasks.length; j++) {
      const cell = row.insertCell();
      cell.textContent = fmtCost(scenario.costs[i][j]);
      if (Number(fair.allocation[j]) === i) {
        cell.classList.add("assigned");
        cell.style.background = `${agentColor(i)}22`;
      }
    }
    const total = row.insertCell();
    total.className = "row-total";
    total.dataset.testid = `row-total-${i}`;
    total.textContent = fmtCost(fair.selfishnessBounds[i]);
  }
  root.appendChild(table);

  const note = document.createElement("p");
  note.className = "muted";
  note.textContent =
    "Each total is that agent's cost under the proposal, which is also its " +
    "distance from the zero-cost outcome it would pick for itself.";
  root.appendChild(note);
  return root;
}
