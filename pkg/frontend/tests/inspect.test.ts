/**
 * Inspector tests: values render exactly as served (names, units, display
 * rounding), primary-tier variables lead, the rest collapse, and deltas
 * compare the selection against the knee and both extremes.
 */

import { beforeEach, describe, expect, it } from "vitest";

import type { FrontDocument } from "../src/documents.js";
import { createInspector, type Inspector } from "../src/inspect.js";
import { buildFrontViewModel } from "../src/viewmodel.js";
import { fixtureJson } from "./helpers.js";

const excerpt = () => fixtureJson<FrontDocument>("front_excerpt.json");
const full = () => fixtureJson<FrontDocument>("front_criterion3.json");

function mount(): Inspector {
  const inspector = createInspector();
  document.body.appendChild(inspector.element);
  return inspector;
}

function itemTexts(inspector: Inspector, selector: string): string[] {
  return [...inspector.element.querySelectorAll(`${selector} li`)].map(
    (li) => li.textContent ?? "",
  );
}

beforeEach(() => {
  document.body.replaceChildren();
});

describe("solution detail", () => {
  it("starts with a placeholder until a solution is selected", () => {
    const inspector = mount();
    expect(inspector.element.querySelector(".panel-empty")?.textContent).toContain(
      "Select a solution",
    );
  });

  it("shows objectives and served variable values with their units", () => {
    const doc = excerpt();
    const inspector = mount();
    inspector.show(buildFrontViewModel(doc), doc, 1);

    expect(inspector.element.querySelector("h3")?.textContent).toBe("Solution 2");
    const objectives = inspector.element.querySelector(".objectives")?.textContent ?? "";
    expect(objectives).toContain("202.00");
    expect(objectives).toContain("0.910");

    const rendered = itemTexts(inspector, ".primary-variables").join("\n");
    expect(rendered).toContain("Cost Efficiency: 49 Units/$");
    expect(rendered).toContain("Durability: 27 Years");
    expect(rendered).toContain("Renewable Energy Usage: 18%");
  });

  it("lists every variable in schema order when tiers are not served", () => {
    const doc = excerpt();
    const inspector = mount();
    inspector.show(buildFrontViewModel(doc), doc, 1);
    expect(itemTexts(inspector, ".primary-variables")).toHaveLength(50);
    expect(inspector.element.querySelector(".other-variables")).toBeNull();
  });

  it("leads with primary-tier variables and collapses the rest", () => {
    const doc = full();
    const inspector = mount();
    inspector.show(buildFrontViewModel(doc), doc, 50);

    const primary = itemTexts(inspector, ".primary-variables");
    expect(primary).toHaveLength(4);
    expect(primary[0]).toBe("Cost Efficiency: 50 Units/$");
    expect(primary[1]).toBe("Durability: 25.0209 Years");
    expect(primary[2]).toBe("Renewable Energy Usage: 18.759%");
    expect(primary[3]).toContain("Carbon Footprint: ");
    expect(primary[3]).toContain(" kt CO2e/yr");

    const details = inspector.element.querySelector("details.other-variables");
    expect(details).not.toBeNull();
    expect(details?.querySelector("summary")?.textContent).toBe("All other variables (46)");
    expect(itemTexts(inspector, ".other-variables")).toHaveLength(46);
  });

  it("renders trade-off deltas against the knee and both extremes", () => {
    const doc = excerpt();
    const inspector = mount();
    inspector.show(buildFrontViewModel(doc), doc, 1);

    const byRef = (ref: string) =>
      inspector.element.querySelector(`.delta-row[data-ref="${ref}"]`)?.textContent ?? "";
    // selected (202.0, 0.910) vs knee (204.0, 0.807), lowest cost (200.0, 1.004),
    // lowest impact (219.98, 0.328) — all straight from the served objectives
    expect(byRef("knee")).toContain("cost -2.00 M$");
    expect(byRef("knee")).toContain("impact +0.103");
    expect(byRef("lowest-cost")).toContain("cost +2.00 M$");
    expect(byRef("lowest-cost")).toContain("impact -0.094");
    expect(byRef("lowest-impact")).toContain("cost -17.98 M$");
    expect(byRef("lowest-impact")).toContain("impact +0.582");
  });

  it("shows all-zero deltas when the knee itself is selected", () => {
    const doc = excerpt();
    const inspector = mount();
    inspector.show(buildFrontViewModel(doc), doc, 2);
    const knee = inspector.element.querySelector('.delta-row[data-ref="knee"]')?.textContent;
    expect(knee).toContain("cost +0.00 M$");
    expect(knee).toContain("impact +0.000");
  });

  it("clear() returns to the placeholder", () => {
    const doc = excerpt();
    const inspector = mount();
    inspector.show(buildFrontViewModel(doc), doc, 1);
    inspector.clear();
    expect(inspector.element.querySelector("h3")).toBeNull();
    expect(inspector.element.querySelector(".panel-empty")).not.toBeNull();
  });
});
