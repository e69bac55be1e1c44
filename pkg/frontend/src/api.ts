/** Thin typed client over the service endpoints. The UI never recomputes
 * equilibria; every displayed number comes from one of these calls. */

import type {
  BeliefDoc,
  CounterfactualResponse,
  FairResponse,
  InvalidFoilResponse,
  NeighborsResponse,
  OptimalCounterfactualResponse,
  ScenarioDoc,
  SweepResultDoc,
} from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
    public body: unknown = null,
  ) {
    super(message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    body = null;
  }
  if (!response.ok) {
    const message =
      body && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : `request failed with status ${response.status}`;
    throw new ApiError(response.status, message, body);
  }
  return body as T;
}

export function getScenario(id: string): Promise<ScenarioDoc> {
  return request(`/api/scenarios/${encodeURIComponent(id)}`);
}

export function getFair(id: string): Promise<FairResponse> {
  return request(`/api/scenarios/${encodeURIComponent(id)}/fair`);
}

export function getNeighbors(id: string, base: string): Promise<NeighborsResponse> {
  const params = new URLSearchParams({ base });
  return request(`/api/scenarios/${encodeURIComponent(id)}/neighbors?${params}`);
}

/** 422 responses surface as ApiError with the violated property in `body`. */
export function postCounterfactual(
  id: string,
  agent: number,
  allocation: string,
): Promise<CounterfactualResponse> {
  return request(`/api/scenarios/${encodeURIComponent(id)}/counterfactual`, {
    method: "POST",
    body: JSON.stringify({ agent, allocation }),
  });
}

export function isInvalidFoil(error: unknown): error is ApiError & { body: InvalidFoilResponse } {
  return (
    error instanceof ApiError &&
    error.status === 422 &&
    typeof error.body === "object" &&
    error.body !== null &&
    "violatedProperty" in error.body
  );
}

export function postNoiseBeliefs(
  id: string,
  agent: number,
  noise: { mode: string; epsilon: number; seed: number },
  exact: number[] = [],
): Promise<BeliefDoc> {
  return request(`/api/scenarios/${encodeURIComponent(id)}/beliefs`, {
    method: "POST",
    body: JSON.stringify({ agent, noise, exact }),
  });
}

export function getOptimalCounterfactual(
  id: string,
  agent: number,
): Promise<OptimalCounterfactualResponse> {
  const params = new URLSearchParams({ agent: String(agent) });
  return request(
    `/api/scenarios/${encodeURIComponent(id)}/optimal-counterfactual?${params}`,
  );
}

export function runNoiseExperiment(body: {
  scenarioId: string;
  mode: string;
  epsilons: number[];
  trials: number;
  seed: number;
}): Promise<SweepResultDoc> {
  return request("/api/experiments/noise", {
    method: "POST",
    body: JSON.stringify(body),
  });
}

export function runSubsetExperiment(body: {
  scenarioId: string;
  subsetSizes: number[];
  mus: number[];
  trials: number;
  seed: number;
  normalizer?: number;
}): Promise<SweepResultDoc> {
  return request("/api/experiments/subset", {
    method: "POST",
    body: JSON.stringify(body),
  });
}
