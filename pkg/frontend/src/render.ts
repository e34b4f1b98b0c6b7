// Pure string rendering: SVG for the diagram, HTML for the c-vector table.
// Keeping these DOM-free makes them testable under node.

import { circularLayout } from "./layout.js";
import type { ViewState } from "./state.js";

const SIZE = 320;
const VERTEX_RADIUS = 16;

export function renderDiagramSvg(view: ViewState, flashVertex?: number): string {
  const points = circularLayout(view.n);
  const parts: string[] = [
    `<svg viewBox="0 0 ${SIZE} ${SIZE}" xmlns="http://www.w3.org/2000/svg">`,
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ` +
      `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" fill="#444"/></marker></defs>`,
  ];
  for (const edge of view.edges) {
    const a = points[edge.from - 1];
    const b = points[edge.to - 1];
    // shorten so the arrowhead stops at the vertex circle
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.hypot(dx, dy) || 1;
    const sx = a.x + (dx / len) * VERTEX_RADIUS;
    const sy = a.y + (dy / len) * VERTEX_RADIUS;
    const tx = b.x - (dx / len) * VERTEX_RADIUS;
    const ty = b.y - (dy / len) * VERTEX_RADIUS;
    const dash = edge.positive ? ` stroke-dasharray="6 4"` : "";
    parts.push(
      `<line x1="${sx.toFixed(2)}" y1="${sy.toFixed(2)}" x2="${tx.toFixed(2)}" ` +
        `y2="${ty.toFixed(2)}" stroke="#444" stroke-width="2"${dash} ` +
        `marker-end="url(#arrow)" data-edge="${edge.from}-${edge.to}"/>`,
    );
    const label =
      (edge.weight > 1 ? String(edge.weight) : "") + (edge.positive ? "+" : "");
    if (label) {
      const mx = (a.x + b.x) / 2;
      const my = (a.y + b.y) / 2;
      parts.push(
        `<text x="${mx.toFixed(2)}" y="${(my - 6).toFixed(2)}" ` +
          `font-size="13" fill="#a33" text-anchor="middle">${label}</text>`,
      );
    }
  }
  for (let v = 1; v <= view.n; v++) {
    const p = points[v - 1];
    const flash = v === flashVertex ? " vertex-flash" : "";
    parts.push(
      `<g class="vertex${flash}" data-vertex="${v}" cursor="pointer">` +
        `<circle cx="${p.x}" cy="${p.y}" r="${VERTEX_RADIUS}" ` +
        `fill="#fff" stroke="#226" stroke-width="2"/>` +
        `<text x="${p.x}" y="${p.y + 5}" font-size="14" ` +
        `text-anchor="middle" fill="#226">${v}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderCVectorTable(view: ViewState): string {
  const rows = view.rows
    .map((row) => {
      const cls = row.sign > 0 ? "c-positive" : "c-negative";
      const coords = row.coords
        .map((x) => `<td class="${cls}">${x}</td>`)
        .join("");
      return `<tr><th>c<sub>${row.vertex}</sub></th>${coords}</tr>`;
    })
    .join("");
  return `<table class="cvectors">${rows}</table>`;
}

export function renderBadge(view: ViewState): string {
  const cls = view.admissible ? "badge-ok" : "badge-bad";
  const text = view.admissible ? "admissible" : "not admissible";
  return `<span class="badge ${cls}">${text}</span>`;
}

export function renderWord(view: ViewState): string {
  return view.word.length ? view.word.join(" ") : "(empty)";
}
