/**
 * Solution Inspector
 *
 * Detail panel for one selected solution: objectives, trade-off deltas
 * against the knee and both extremes, then variable values — primary-tier
 * variables first, everything else behind a collapsible section. All
 * numbers come from the served front document.
 */

import type { FrontDocument } from "./documents.js";
import {
  fmtCost,
  fmtDeltaCost,
  fmtDeltaImpact,
  fmtImpact,
  fmtValueWithUnit,
} from "./format.js";
import type { FrontViewModel } from "./viewmodel.js";

export interface Inspector {
  element: HTMLElement;
  show(vm: FrontViewModel, doc: FrontDocument, index: number): void;
  clear(): void;
}

interface DeltaRef {
  key: string;
  label: string;
  index: number;
}

export function createInspector(): Inspector {
  const element = document.createElement("aside");
  element.className = "inspector";

  function placeholder(): void {
    element.replaceChildren();
    const hint = document.createElement("p");
    hint.className = "panel-empty";
    hint.textContent = "Select a solution to inspect it.";
    element.appendChild(hint);
  }

  function variableItem(
    vm: FrontViewModel,
    doc: FrontDocument,
    rowIndex: number,
    position: number,
  ): HTMLLIElement {
    const meta = vm.variables[position];
    const value = doc.rows[rowIndex]?.variables[position];
    const item = document.createElement("li");
    item.setAttribute("data-variable-index", String(position + 1));
    if (meta === undefined || value === undefined) {
      item.textContent = "—";
      return item;
    }
    const name = document.createElement("span");
    name.className = "variable-name";
    name.textContent = meta.name;
    const rendered = document.createElement("span");
    rendered.className = "variable-value";
    rendered.textContent = fmtValueWithUnit(value, meta.unit);
    item.append(name, ": ", rendered);
    return item;
  }

  placeholder();

  return {
    element,

    show(vm: FrontViewModel, doc: FrontDocument, index: number) {
      const point = vm.points[index];
      const row = doc.rows[index];
      if (point === undefined || row === undefined) {
        placeholder();
        return;
      }
      element.replaceChildren();

      const title = document.createElement("h3");
      title.textContent = `Solution ${index + 1}`;
      element.appendChild(title);

      const objectives = document.createElement("p");
      objectives.className = "objectives";
      objectives.textContent =
        `total cost ${fmtCost(point.totalCost)} M$ · ` +
        `environmental impact ${fmtImpact(point.environmentalImpact)}`;
      element.appendChild(objectives);

      // trade-off deltas: selected minus reference
      const refs: DeltaRef[] = [];
      if (vm.kneeIndex !== null) {
        refs.push({ key: "knee", label: "knee", index: vm.kneeIndex });
      }
      refs.push(
        { key: "lowest-cost", label: "lowest cost", index: vm.extremeIndices.minCost },
        { key: "lowest-impact", label: "lowest impact", index: vm.extremeIndices.minImpact },
      );
      const deltas = document.createElement("section");
      deltas.className = "deltas";
      for (const ref of refs) {
        const other = vm.points[ref.index];
        if (other === undefined) continue;
        const line = document.createElement("p");
        line.className = "delta-row";
        line.setAttribute("data-ref", ref.key);
        line.textContent =
          `vs ${ref.label} (Solution ${ref.index + 1}): ` +
          `cost ${fmtDeltaCost(point.totalCost - other.totalCost)} M$ · ` +
          `impact ${fmtDeltaImpact(point.environmentalImpact - other.environmentalImpact)}`;
        deltas.appendChild(line);
      }
      element.appendChild(deltas);

      // variables: primary tier first, the rest collapsible
      const allPositions = vm.variables.map((_, position) => position);
      const primaryPositions =
        vm.tiers === null
          ? allPositions
          : vm.tiers.primary.map((serverIndex) => serverIndex - 1);
      const primarySet = new Set(primaryPositions);

      const primaryList = document.createElement("ul");
      primaryList.className = "primary-variables";
      for (const position of primaryPositions) {
        primaryList.appendChild(variableItem(vm, doc, index, position));
      }
      element.appendChild(primaryList);

      const otherPositions = allPositions.filter((position) => !primarySet.has(position));
      if (otherPositions.length > 0) {
        const details = document.createElement("details");
        details.className = "other-variables";
        const summary = document.createElement("summary");
        summary.textContent = `All other variables (${otherPositions.length})`;
        details.appendChild(summary);
        const otherList = document.createElement("ul");
        for (const position of otherPositions) {
          otherList.appendChild(variableItem(vm, doc, index, position));
        }
        details.appendChild(otherList);
        element.appendChild(details);
      }
    },

    clear() {
      placeholder();
    },
  };
}
