/**
 * Front Scatter View
 *
 * Interactive cost-vs-impact scatter of a Pareto front. Extreme and knee
 * solutions carry visible badges; clicking a marker selects that solution.
 * Fetch failures render an error state with a retry control; an empty
 * front renders a friendly empty state.
 */

import { fmtCost, fmtImpact } from "./format.js";
import type { FrontViewModel } from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const WIDTH = 680;
const HEIGHT = 440;
const MARGIN = { top: 28, right: 28, bottom: 56, left: 72 };

export interface FrontViewHandlers {
  onSelect(index: number): void;
  onRetry(): void;
}

export interface FrontView {
  element: HTMLElement;
  showLoading(): void;
  showEmpty(): void;
  showError(message: string): void;
  showFront(vm: FrontViewModel): void;
  updateSelection(selection: number | null): void;
}

function svgElement(tag: string, attrs: Record<string, string | number>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

/** Linear map from a data interval onto a pixel interval. */
function linearScale(
  [d0, d1]: [number, number],
  [p0, p1]: [number, number],
): (value: number) => number {
  const span = d1 - d0 || 1;
  return (value) => p0 + ((value - d0) / span) * (p1 - p0);
}

export function createFrontView(handlers: FrontViewHandlers): FrontView {
  const element = document.createElement("section");
  element.className = "front-view";

  function clear(): void {
    element.replaceChildren();
  }

  function stateMessage(className: string, message: string): HTMLDivElement {
    const box = document.createElement("div");
    box.className = className;
    const text = document.createElement("p");
    text.textContent = message;
    box.appendChild(text);
    return box;
  }

  return {
    element,

    showLoading() {
      clear();
      element.appendChild(stateMessage("loading-state", "Loading front…"));
    },

    showEmpty() {
      clear();
      element.appendChild(
        stateMessage("empty-state", "This run's front has no solutions to display."),
      );
    },

    showError(message: string) {
      clear();
      const box = stateMessage("error-state", message);
      const retry = document.createElement("button");
      retry.className = "retry";
      retry.textContent = "Retry";
      retry.addEventListener("click", () => handlers.onRetry());
      box.appendChild(retry);
      element.appendChild(box);
    },

    showFront(vm: FrontViewModel) {
      if (vm.points.length === 0) {
        this.showEmpty();
        return;
      }
      clear();

      const svg = svgElement("svg", {
        class: "front-scatter",
        viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
        role: "img",
      }) as SVGSVGElement;

      const x = linearScale(vm.extent.totalCost, [MARGIN.left, WIDTH - MARGIN.right]);
      const y = linearScale(vm.extent.environmentalImpact, [HEIGHT - MARGIN.bottom, MARGIN.top]);

      // axes
      const axisY = HEIGHT - MARGIN.bottom;
      svg.appendChild(
        svgElement("line", {
          class: "axis",
          x1: MARGIN.left, y1: axisY, x2: WIDTH - MARGIN.right, y2: axisY,
        }),
      );
      svg.appendChild(
        svgElement("line", {
          class: "axis",
          x1: MARGIN.left, y1: MARGIN.top, x2: MARGIN.left, y2: axisY,
        }),
      );

      const xLabel = svgElement("text", {
        class: "axis-label axis-label-x",
        x: (MARGIN.left + WIDTH - MARGIN.right) / 2,
        y: HEIGHT - 12,
        "text-anchor": "middle",
      });
      xLabel.textContent = "Total Cost (M$)";
      svg.appendChild(xLabel);

      const yLabel = svgElement("text", {
        class: "axis-label axis-label-y",
        x: 18,
        y: (MARGIN.top + axisY) / 2,
        "text-anchor": "middle",
        transform: `rotate(-90 18 ${(MARGIN.top + axisY) / 2})`,
      });
      yLabel.textContent = "Environmental Impact";
      svg.appendChild(yLabel);

      // extent tick labels, straight from the served analytics
      const ticks: Array<[string, Record<string, string | number>]> = [
        [fmtCost(vm.extent.totalCost[0]), { x: x(vm.extent.totalCost[0]), y: axisY + 18, "text-anchor": "middle" }],
        [fmtCost(vm.extent.totalCost[1]), { x: x(vm.extent.totalCost[1]), y: axisY + 18, "text-anchor": "middle" }],
        [fmtImpact(vm.extent.environmentalImpact[0]), { x: MARGIN.left - 8, y: y(vm.extent.environmentalImpact[0]) + 4, "text-anchor": "end" }],
        [fmtImpact(vm.extent.environmentalImpact[1]), { x: MARGIN.left - 8, y: y(vm.extent.environmentalImpact[1]) + 4, "text-anchor": "end" }],
      ];
      for (const [label, attrs] of ticks) {
        const tick = svgElement("text", { class: "tick-label", ...attrs });
        tick.textContent = label;
        svg.appendChild(tick);
      }

      // markers, then badges on top
      const markers = svgElement("g", { class: "markers" });
      for (const point of vm.points) {
        const classes = ["marker"];
        if (point.isExtreme) classes.push("extreme");
        if (point.isKnee) classes.push("knee");
        const circle = svgElement("circle", {
          class: classes.join(" "),
          "data-index": point.index,
          cx: x(point.totalCost),
          cy: y(point.environmentalImpact),
          r: point.isExtreme || point.isKnee ? 5 : 3.5,
        });
        markers.appendChild(circle);
      }
      svg.appendChild(markers);

      for (const point of vm.points) {
        if (!point.isExtreme && !point.isKnee) continue;
        const kind = point.isKnee ? "badge-knee" : "badge-extreme";
        const label = point.isKnee ? "knee" : point.extremeRole!;
        const px = x(point.totalCost);
        const anchor = px > WIDTH / 2 ? "end" : "start";
        const badge = svgElement("g", { class: `badge ${kind}`, "data-index": point.index });
        const text = svgElement("text", {
          x: px + (anchor === "start" ? 8 : -8),
          y: y(point.environmentalImpact) - 8,
          "text-anchor": anchor,
        });
        text.textContent = label;
        badge.appendChild(text);
        svg.appendChild(badge);
      }

      svg.addEventListener("click", (event) => {
        const target = event.target as Element | null;
        if (target && target.getAttribute("class")?.split(" ").includes("marker")) {
          handlers.onSelect(Number(target.getAttribute("data-index")));
        }
      });

      element.appendChild(svg);
    },

    updateSelection(selection: number | null) {
      for (const circle of element.querySelectorAll("circle.marker")) {
        const classes = (circle.getAttribute("class") ?? "")
          .split(" ")
          .filter((name) => name !== "" && name !== "selected");
        if (selection !== null && Number(circle.getAttribute("data-index")) === selection) {
          classes.push("selected");
        }
        circle.setAttribute("class", classes.join(" "));
      }
    },
  };
}
