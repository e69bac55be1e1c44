import { ApiError, getFair, getNeighbors, getScenario } from "./api";
import { errorBanner } from "./banner";
import { renderBeliefPanel } from "./beliefPanel";
import { renderSweepCharts } from "./charts";
import { renderFoilPanel } from "./foilPanel";
import { renderScenarioView } from "./scenarioView";
import { newSession } from "./session";
import "./style.css";

const app = document.getElementById("app")!;

function controls(onLoad: (id: string, role: number) => void): HTMLElement {
  const bar = document.createElement("form");
  bar.className = "controls";
  const idInput = document.createElement("input");
  idInput.placeholder = "scenario id (e.g. s1)";
  idInput.value = new URLSearchParams(location.search).get("scenario") ?? "s1";
  const roleInput = document.createElement("input");
  roleInput.type = "number";
  roleInput.min = "0";
  roleInput.value = new URLSearchParams(location.search).get("role") ?? "0";
  roleInput.setAttribute("aria-label", "your seat (human index)");
  const load = document.createElement("button");
  load.type = "submit";
  load.textContent = "load";
  bar.append("scenario ", idInput, " you are human ", roleInput, load);
  bar.addEventListener("submit", (event) => {
    event.preventDefault();
    onLoad(idInput.value.trim(), Number(roleInput.value));
  });
  return bar;
}

async function loadScenario(id: string, role: number): Promise<void> {
  const main = document.getElementById("main")!;
  main.replaceChildren();
  try {
    const scenario = await getScenario(id);
    const fair = await getFair(id);
    const neighbors = await getNeighbors(id, fair.allocation);
    const session = newSession(id, role, fair.allocation);
    main.appendChild(renderScenarioView(scenario, fair));
    main.appendChild(renderBeliefPanel({ session }));
    main.appendChild(
      renderFoilPanel({
        session,
        neighbors: neighbors.neighbors,
        numHumans: scenario.agents,
      }),
    );
  } catch (error) {
    const message =
      error instanceof ApiError && error.status === 404
        ? `scenario ${id} is not on the server`
        : error instanceof Error
          ? error.message
          : String(error);
    main.appendChild(errorBanner(message));
  }
}

function chartsPanel(): HTMLElement {
  const section = document.createElement("section");
  section.className = "charts-panel";
  const heading = document.createElement("h2");
  heading.textContent = "Sweep results";
  const hint = document.createElement("p");
  hint.className = "muted";
  hint.textContent = "Paste a sweep result (JSON or exported CSV) to chart it.";
  const textarea = document.createElement("textarea");
  textarea.rows = 5;
  textarea.setAttribute("aria-label", "sweep result");
  const draw = document.createElement("button");
  draw.type = "button";
  draw.textContent = "draw";
  const target = document.createElement("div");
  draw.addEventListener("click", () => {
    target.replaceChildren(renderSweepCharts(textarea.value));
  });
  section.append(heading, hint, textarea, draw, target);
  return section;
}

const header = document.createElement("h1");
header.textContent = "negotiation-aware task allocation";
app.appendChild(header);
app.appendChild(
  controls((id, role) => {
    void loadScenario(id, role);
  }),
);
const main = document.createElement("div");
main.id = "main";
app.appendChild(main);
app.appendChild(chartsPanel());
void loadScenario(
  new URLSearchParams(location.search).get("scenario") ?? "s1",
  Number(new URLSearchParams(location.search).get("role") ?? "0"),
);
