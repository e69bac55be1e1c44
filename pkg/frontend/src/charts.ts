/** Sweep-result charts rendered as plain SVG: mean-length lines with a
 * +/- stddev band per noise mode, and subset-size bars grouped by noise
 * magnitude. Accepts the service's result JSON or the exported CSV. */

import type {
  NoiseAggregateDoc,
  SubsetAggregateDoc,
  SweepResultDoc,
} from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 520;
const HEIGHT = 300;
const MARGIN = { left: 48, right: 16, top: 16, bottom: 36 };

export class SweepParseError extends Error {}

export function parseSweep(text: string): SweepResultDoc {
  const trimmed = text.trim();
  if (!trimmed) throw new SweepParseError("empty input");
  if (trimmed.startsWith("{")) {
    let doc: unknown;
    try {
      doc = JSON.parse(trimmed);
    } catch (error) {
      throw new SweepParseError(`not valid JSON: ${error}`);
    }
    const result = doc as SweepResultDoc;
    if (result.kind !== "noise" && result.kind !== "subset") {
      throw new SweepParseError("JSON is not a sweep result (missing kind)");
    }
    if (!Array.isArray(result.aggregates)) {
      throw new SweepParseError("JSON is not a sweep result (missing aggregates)");
    }
    return result;
  }
  return parseCsv(trimmed);
}

function parseCsv(text: string): SweepResultDoc {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  const header = lines[0];
  if (header === "epsilon,mode,trial,agent,expl_length") {
    const aggAt = lines.indexOf("epsilon,mean,stddev");
    if (aggAt < 0) throw new SweepParseError("missing aggregate section");
    const aggregates = lines.slice(aggAt + 1).map((line) => {
      const [epsilon, mean, stddev] = line.split(",").map(Number);
      if ([epsilon, mean, stddev].some(Number.isNaN)) {
        throw new SweepParseError(`bad aggregate row: ${line}`);
      }
      return { epsilon, mean, stddev };
    });
    const rows = lines.slice(1, aggAt).map((line) => {
      const parts = line.split(",");
      return {
        epsilon: Number(parts[0]),
        mode: parts[1],
        trial: Number(parts[2]),
        agent: Number(parts[3]),
        expl_length: Number(parts[4]),
      };
    });
    return { kind: "noise", normalizer: null, rows, aggregates };
  }
  if (header === "subset_k,mu,trial,agent,expl_length,rel_length") {
    const aggAt = lines.indexOf("subset_k,mu,mean,stddev");
    if (aggAt < 0) throw new SweepParseError("missing aggregate section");
    const aggregates = lines.slice(aggAt + 1).map((line) => {
      const [subset_k, mu, mean, stddev] = line.split(",").map(Number);
      if ([subset_k, mu, mean, stddev].some(Number.isNaN)) {
        throw new SweepParseError(`bad aggregate row: ${line}`);
      }
      return { subset_k, mu, mean, stddev };
    });
    const rows = lines.slice(1, aggAt).map((line) => {
      const parts = line.split(",").map(Number);
      return {
        subset_k: parts[0],
        mu: parts[1],
        trial: parts[2],
        agent: parts[3],
        expl_length: parts[4],
        rel_length: parts[5],
      };
    });
    return { kind: "subset", normalizer: null, rows, aggregates };
  }
  throw new SweepParseError(`unrecognized CSV header: ${header}`);
}

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export function renderSweepCharts(input: string | SweepResultDoc): HTMLElement {
  const root = document.createElement("div");
  root.className = "sweep-chart";
  let result: SweepResultDoc;
  try {
    result = typeof input === "string" ? parseSweep(input) : input;
  } catch (error) {
    const panel = document.createElement("p");
    panel.className = "banner error";
    panel.dataset.testid = "parse-error";
    panel.textContent =
      error instanceof Error ? error.message : "could not parse sweep result";
    root.appendChild(panel);
    return root;
  }
  if (result.aggregates.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.dataset.testid = "empty-state";
    empty.textContent = "No sweep data yet.";
    root.appendChild(empty);
    return root;
  }
  root.appendChild(
    result.kind === "noise"
      ? renderNoiseLines(result.aggregates as NoiseAggregateDoc[], modeOf(result))
      : renderSubsetBars(result.aggregates as SubsetAggregateDoc[]),
  );
  return root;
}

function modeOf(result: SweepResultDoc): string {
  const first = result.rows[0];
  return first && "mode" in first ? first.mode : "?";
}

function renderNoiseLines(
  aggregates: NoiseAggregateDoc[],
  mode: string,
): SVGSVGElement {
  const svg = svgElement("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: WIDTH,
    height: HEIGHT,
    role: "img",
  });
  const points = [...aggregates].sort((a, b) => a.epsilon - b.epsilon);
  const xs = points.map((p) => p.epsilon);
  const tops = points.map((p) => p.mean + p.stddev);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs, xMin + 1);
  const yMax = Math.max(...tops, 1);
  const sx = (x: number) =>
    MARGIN.left + ((x - xMin) / (xMax - xMin)) * (WIDTH - MARGIN.left - MARGIN.right);
  const sy = (y: number) =>
    HEIGHT - MARGIN.bottom - (y / yMax) * (HEIGHT - MARGIN.top - MARGIN.bottom);

  const bandPoints = points
    .map((p) => `${sx(p.epsilon)},${sy(p.mean + p.stddev)}`)
    .concat(
      [...points].reverse().map((p) => `${sx(p.epsilon)},${sy(Math.max(0, p.mean - p.stddev))}`),
    )
    .join(" ");
  const band = svgElement("polygon", {
    points: bandPoints,
    class: "stddev-band",
    fill: "#2563eb22",
    stroke: "none",
  });
  svg.appendChild(band);

  const line = svgElement("polyline", {
    points: points.map((p) => `${sx(p.epsilon)},${sy(p.mean)}`).join(" "),
    class: "mean-line",
    fill: "none",
    stroke: "#2563eb",
    "stroke-width": 2,
  });
  svg.appendChild(line);

  for (const p of points) {
    svg.appendChild(
      svgElement("circle", {
        cx: sx(p.epsilon),
        cy: sy(p.mean),
        r: 3.5,
        class: "marker",
        fill: "#2563eb",
      }),
    );
  }

  const xLabel = svgElement("text", {
    x: WIDTH / 2,
    y: HEIGHT - 6,
    "text-anchor": "middle",
    class: "axis-label",
  });
  xLabel.textContent = `noise radius (mode ${mode})`;
  svg.appendChild(xLabel);
  const yLabel = svgElement("text", {
    x: 12,
    y: HEIGHT / 2,
    "text-anchor": "middle",
    transform: `rotate(-90 12 ${HEIGHT / 2})`,
    class: "axis-label",
  });
  yLabel.textContent = "mean explanation length";
  svg.appendChild(yLabel);
  return svg;
}

function renderSubsetBars(aggregates: SubsetAggregateDoc[]): SVGSVGElement {
  const svg = svgElement("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: WIDTH,
    height: HEIGHT,
    role: "img",
  });
  const ks = [...new Set(aggregates.map((a) => a.subset_k))].sort((a, b) => a - b);
  const mus = [...new Set(aggregates.map((a) => a.mu))].sort((a, b) => a - b);
  const yMax = Math.max(...aggregates.map((a) => a.mean), 0.01);
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const groupW = plotW / ks.length;
  const barW = (groupW * 0.7) / mus.length;
  const palette = ["#d97706", "#2563eb", "#059669", "#9333ea"];
  const sy = (y: number) =>
    HEIGHT - MARGIN.bottom - (y / yMax) * (HEIGHT - MARGIN.top - MARGIN.bottom);

  for (const [gi, k] of ks.entries()) {
    const groupX = MARGIN.left + gi * groupW + groupW * 0.15;
    for (const [bi, mu] of mus.entries()) {
      const agg = aggregates.find((a) => a.subset_k === k && a.mu === mu);
      if (!agg) continue;
      const height = HEIGHT - MARGIN.bottom - sy(agg.mean);
      svg.appendChild(
        svgElement("rect", {
          x: groupX + bi * barW,
          y: sy(agg.mean),
          width: barW - 2,
          height: Math.max(height, 0),
          class: `bar mu-${mu}`,
          fill: palette[bi % palette.length],
        }),
      );
    }
    const label = svgElement("text", {
      x: groupX + (mus.length * barW) / 2,
      y: HEIGHT - MARGIN.bottom + 16,
      "text-anchor": "middle",
      class: "axis-label",
    });
    label.textContent = `know ${k}`;
    svg.appendChild(label);
  }
  const yLabel = svgElement("text", {
    x: 12,
    y: HEIGHT / 2,
    "text-anchor": "middle",
    transform: `rotate(-90 12 ${HEIGHT / 2})`,
    class: "axis-label",
  });
  yLabel.textContent = "relative explanation length";
  svg.appendChild(yLabel);
  return svg;
}
