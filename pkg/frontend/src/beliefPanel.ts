/** Draft noisy beliefs for the chosen seat and preview the counterfactual
 * the engine predicts that seat would raise. The grid shown is always the
 * server's materialized belief, never a client-side computation. */

import { getOptimalCounterfactual, postNoiseBeliefs } from "./api";
import { agentColor, fmtCost } from "./format";
import { draftBeliefs, type UiSession } from "./session";
import type { BeliefDoc } from "./types";

export interface BeliefPanelOptions {
  session: UiSession;
  onSession?: (session: UiSession) => void;
}

export function renderBeliefPanel(options: BeliefPanelOptions): HTMLElement {
  let session = options.session;
  const root = document.createElement("section");
  root.className = "belief-panel";

  const heading = document.createElement("h2");
  heading.textContent = "What do you believe about your teammates?";
  root.appendChild(heading);

  const form = document.createElement("form");
  form.className = "belief-form";
  const mode = document.createElement("select");
  mode.setAttribute("aria-label", "noise mode");
  for (const value of ["PN", "ON", "random"]) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent =
      value === "PN" ? "underestimate (PN)" : value === "ON" ? "overestimate (ON)" : "random";
    mode.appendChild(option);
  }
  const epsilon = document.createElement("input");
  epsilon.type = "number";
  epsilon.min = "0";
  epsilon.step = "0.5";
  epsilon.value = "2";
  epsilon.setAttribute("aria-label", "noise radius");
  const seed = document.createElement("input");
  seed.type = "number";
  seed.value = "7";
  seed.setAttribute("aria-label", "seed");
  const draw = document.createElement("button");
  draw.type = "submit";
  draw.textContent = "draw beliefs";
  form.append("mode ", mode, " radius ", epsilon, " seed ", seed, draw);
  root.appendChild(form);

  const gridBox = document.createElement("div");
  gridBox.dataset.testid = "belief-grid";
  root.appendChild(gridBox);

  const predictBox = document.createElement("div");
  predictBox.dataset.testid = "predicted-foil";
  root.appendChild(predictBox);

  function renderGrid(belief: BeliefDoc): void {
    gridBox.replaceChildren();
    const table = document.createElement("table");
    table.className = "cost-grid";
    const body = table.createTBody();
    for (const [i, row] of belief.believedCosts.entries()) {
      const tr = body.insertRow();
      const label = document.createElement("th");
      label.textContent =
        `human ${i}` + (belief.exact.includes(i) ? " (exact)" : " (believed)");
      label.style.color = agentColor(i);
      tr.appendChild(label);
      for (const value of row) {
        tr.insertCell().textContent = fmtCost(value);
      }
    }
    gridBox.appendChild(table);
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void (async () => {
      try {
        const belief = await postNoiseBeliefs(session.scenarioId, session.chosenRole, {
          mode: mode.value,
          epsilon: Number(epsilon.value),
          seed: Number(seed.value),
        });
        session = draftBeliefs(session, belief);
        renderGrid(belief);
        const predicted = await getOptimalCounterfactual(
          session.scenarioId,
          session.chosenRole,
        );
        predictBox.replaceChildren();
        const line = document.createElement("p");
        line.className = "banner " + (predicted.counterfactual ? "stands" : "refuted");
        line.textContent = predicted.counterfactual
          ? `With these beliefs you would ask for ${predicted.counterfactual}.`
          : "With these beliefs you would settle for the proposal.";
        predictBox.appendChild(line);
        options.onSession?.(session);
      } catch (error) {
        predictBox.replaceChildren();
        const line = document.createElement("p");
        line.className = "banner error";
        line.textContent = error instanceof Error ? error.message : String(error);
        predictBox.appendChild(line);
      }
    })();
  });

  return root;
}
