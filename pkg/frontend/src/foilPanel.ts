/** What-if panel: pick a one-edit foil from the server's candidate set (the
 * picker never offers anything outside it), submit, and render the verdict.
 * Typed foils are allowed and validated server-side. */

import { isInvalidFoil, postCounterfactual } from "./api";
import { fmtCost } from "./format";
import { recordFoil, type UiSession } from "./session";
import { renderExplanationTree } from "./tree";
import type { CounterfactualResponse } from "./types";

export interface FoilPanelOptions {
  session: UiSession;
  neighbors: readonly string[];
  numHumans: number;
  onSession?: (session: UiSession) => void;
}

export function renderFoilPanel(options: FoilPanelOptions): HTMLElement {
  let session = options.session;
  const root = document.createElement("section");
  root.className = "foil-panel";

  const heading = document.createElement("h2");
  heading.textContent = `What would you change, human ${session.chosenRole}?`;
  root.appendChild(heading);

  const picker = document.createElement("div");
  picker.className = "neighbor-picker";
  picker.dataset.testid = "neighbor-picker";
  for (const neighbor of options.neighbors) {
    const button = document.createElement("button");
    button.type = "button";
    button.className = "neighbor";
    button.textContent = neighbor;
    button.addEventListener("click", () => submit(neighbor));
    picker.appendChild(button);
  }
  root.appendChild(picker);

  const form = document.createElement("form");
  form.className = "typed-foil";
  const input = document.createElement("input");
  input.placeholder = "or type an allocation";
  input.setAttribute("aria-label", "typed foil");
  const go = document.createElement("button");
  go.type = "submit";
  go.textContent = "ask";
  form.append(input, go);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (input.value.trim()) void submit(input.value.trim());
  });
  root.appendChild(form);

  const verdictBox = document.createElement("div");
  verdictBox.className = "verdict";
  verdictBox.dataset.testid = "verdict";
  root.appendChild(verdictBox);

  const history = document.createElement("ul");
  history.className = "foil-history";
  history.dataset.testid = "foil-history";
  root.appendChild(history);

  function renderAnswer(foil: string, response: CounterfactualResponse): void {
    verdictBox.replaceChildren();
    const banner = document.createElement("p");
    if (response.outcome === "acceptance") {
      banner.className = "banner acceptance";
      banner.textContent =
        `${foil} does not lower your own cost ` +
        `(${fmtCost(response.verdict.foilCost)} vs ` +
        `${fmtCost(response.verdict.proposalCost)}), so there is nothing to refute.`;
      verdictBox.appendChild(banner);
      return;
    }
    banner.className =
      response.outcome === "refuted" ? "banner refuted" : "banner stands";
    banner.textContent =
      response.outcome === "refuted"
        ? `Replaying the negotiation from ${foil} refutes it:`
        : `The replay does not refute ${foil}; it would stand:`;
    verdictBox.appendChild(banner);
    if (response.explanation) {
      verdictBox.appendChild(
        renderExplanationTree(response.explanation, options.numHumans),
      );
    }
  }

  function renderInvalid(property: number, reason: string): void {
    verdictBox.replaceChildren();
    const banner = document.createElement("p");
    banner.className = "banner invalid";
    banner.dataset.testid = "invalid-foil";
    banner.textContent = `property ${property} violated: ${reason}`;
    verdictBox.appendChild(banner);
  }

  async function submit(foil: string): Promise<void> {
    try {
      const response = await postCounterfactual(
        session.scenarioId,
        session.chosenRole,
        foil,
      );
      session = recordFoil(session, {
        foil,
        outcome: { kind: "answered", response },
      });
      renderAnswer(foil, response);
    } catch (error) {
      if (isInvalidFoil(error)) {
        session = recordFoil(session, {
          foil,
          outcome: { kind: "invalid", response: error.body },
        });
        renderInvalid(error.body.violatedProperty, error.body.verdict.reason);
      } else {
        verdictBox.replaceChildren();
        const banner = document.createElement("p");
        banner.className = "banner error";
        banner.textContent = error instanceof Error ? error.message : String(error);
        verdictBox.appendChild(banner);
        return;
      }
    }
    const item = document.createElement("li");
    item.textContent = foil;
    history.appendChild(item);
    options.onSession?.(session);
  }

  return root;
}
