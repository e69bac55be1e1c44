/** Wire types mirroring the service's JSON responses. */

export interface ScenarioDoc {
  id: string;
  agents: number;
  tasks: string[];
  costs: (number | "incapable")[][];
  performance: { model: string; values?: number[] };
  discount: number;
}

export interface ChainDecision {
  agent: number;
  accepted: boolean;
  offerCost: number | "inf";
  continuationCost: number | "inf";
}

export interface ChainNodeDoc {
  step: number;
  proposer: number;
  offer: string;
  terminal: boolean;
  decisions: ChainDecision[] | null;
  speOutcome: { allocation: string; acceptStep: number } | null;
}

export interface ChainDoc {
  provenance: string;
  discount: number;
  order: number[];
  candidates: string[];
  excluded: string[];
  nodes: ChainNodeDoc[];
  spe?: { allocation: string; acceptStep: number };
}

export interface FairResponse {
  allocation: string;
  acceptStep: number;
  selfishnessBounds: number[];
  chain: ChainDoc;
}

export interface NeighborsResponse {
  base: string;
  neighbors: string[];
}

export interface ExplanationStepDoc {
  step: number;
  proposer: number;
  offer: string;
  accepted: boolean;
  rejectedBy: number | null;
  rejectorOfferCost: number | "inf" | null;
  rejectorContinuationCost: number | "inf" | null;
}

export interface ExplanationDoc {
  style: string;
  questioner: number;
  proposal: string;
  counterfactual: string;
  finalAllocation: string;
  finalCostToQuestioner: number | "inf" | null;
  proposalCostToQuestioner: number | "inf" | null;
  length: number;
  guaranteeHolds: boolean;
  steps: ExplanationStepDoc[];
  statement?: string;
}

export interface FoilVerdictDoc {
  ok: boolean;
  violatedProperty: number | null;
  reason: string;
  hammingDistance: number;
  proposalCost: number;
  foilCost: number;
}

export interface CounterfactualResponse {
  verdict: FoilVerdictDoc;
  outcome: "refuted" | "foil-stands" | "acceptance";
  explanation: ExplanationDoc | null;
}

export interface InvalidFoilResponse {
  verdict: FoilVerdictDoc;
  violatedProperty: number;
}

export interface BeliefDoc {
  owner: number;
  believedCosts: (number | "incapable")[][];
  believedPerformance: { model: string; values?: number[] };
  exact: number[];
}

export interface OptimalCounterfactualResponse {
  agent: number;
  proposal: string;
  beliefProvenance: "stored" | "exact-default";
  counterfactual: string | null;
  chain: ChainDoc | null;
}

export interface NoiseRowDoc {
  epsilon: number;
  mode: string;
  trial: number;
  agent: number;
  expl_length: number;
}

export interface NoiseAggregateDoc {
  epsilon: number;
  mean: number;
  stddev: number;
}

export interface SubsetRowDoc {
  subset_k: number;
  mu: number;
  trial: number;
  agent: number;
  expl_length: number;
  rel_length: number;
}

export interface SubsetAggregateDoc {
  subset_k: number;
  mu: number;
  mean: number;
  stddev: number;
}

export interface SweepResultDoc {
  kind: "noise" | "subset";
  normalizer: number | null;
  rows: (NoiseRowDoc | SubsetRowDoc)[];
  aggregates: (NoiseAggregateDoc | SubsetAggregateDoc)[];
}
