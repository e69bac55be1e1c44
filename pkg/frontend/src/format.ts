export function fmtCost(value: number | "inf" | "incapable" | null | undefined): string {
  if (value === null || value === undefined) return "-";
  if (value === "inf" || value === "incapable") return "∞";
  if (value === Infinity) return "∞";
  return value.toFixed(3).replace(/\.?0+$/, (m) => (m.startsWith(".") ? "" : m));
}

export function agentLabel(agent: number, numHumans: number): string {
  return agent === numHumans ? "allocator" : `human ${agent}`;
}

/** Stable palette for task-to-agent coloring; index = agent. */
export const AGENT_COLORS = [
  "#2563eb",
  "#d97706",
  "#059669",
  "#9333ea",
  "#dc2626",
  "#0891b2",
  "#4d7c0f",
  "#be185d",
  "#7c3aed",
  "#b45309",
];

export function agentColor(agent: number): string {
  return AGENT_COLORS[agent % AGENT_COLORS.length];
}
