/** Per-tab session state: which scenario, which seat, what was asked. */

import type {
  BeliefDoc,
  CounterfactualResponse,
  InvalidFoilResponse,
} from "./types";

export type FoilOutcome =
  | { kind: "answered"; response: CounterfactualResponse }
  | { kind: "invalid"; response: InvalidFoilResponse };

export interface FoilRecord {
  foil: string;
  outcome: FoilOutcome;
}

export interface UiSession {
  scenarioId: string;
  chosenRole: number;
  /** Always the server's fair allocation for the scenario. */
  currentProposal: string;
  foilHistory: readonly FoilRecord[];
  /** Server-materialized believed costs, when the seat has drafted any. */
  beliefDraft: BeliefDoc | null;
}

export function newSession(
  scenarioId: string,
  chosenRole: number,
  currentProposal: string,
): UiSession {
  return {
    scenarioId,
    chosenRole,
    currentProposal,
    foilHistory: [],
    beliefDraft: null,
  };
}

/** History is append-only within a session. */
export function recordFoil(session: UiSession, record: FoilRecord): UiSession {
  return { ...session, foilHistory: [...session.foilHistory, record] };
}

export function draftBeliefs(session: UiSession, draft: BeliefDoc): UiSession {
  return { ...session, beliefDraft: draft };
}

export function switchRole(session: UiSession, role: number): UiSession {
  return { ...session, chosenRole: role, foilHistory: [], beliefDraft: null };
}
