/**
 * Test Helpers
 *
 * Fixture loading plus a recording stub transport. Fixtures are byte
 * captures of real API responses, so tests exercise the client against
 * exactly what the server sends — with no network anywhere.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixtureText(name: string): string {
  return readFileSync(join(FIXTURES, name), "utf8");
}

export function fixtureJson<T = unknown>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}

export interface StubRoute {
  status: number;
  body: string;
}

export interface RecordedRequest {
  method: string;
  path: string;
  body?: string;
}

export interface StubTransport {
  fetchImpl: FetchLike;
  requests: RecordedRequest[];
}

/** Serve canned responses keyed by "METHOD /path"; record every request. */
export function stubTransport(routes: Record<string, StubRoute>): StubTransport {
  const requests: RecordedRequest[] = [];
  const fetchImpl: FetchLike = (input, init) => {
    const method = init?.method ?? "GET";
    const path = new URL(input).pathname;
    const recorded: RecordedRequest = { method, path };
    if (init?.body !== undefined) recorded.body = init.body;
    requests.push(recorded);
    const route = routes[`${method} ${path}`];
    if (route === undefined) {
      return Promise.resolve({
        status: 404,
        text: () =>
          Promise.resolve(
            JSON.stringify({
              error: { code: "not_found", message: `no route for ${method} ${path}` },
            }),
          ),
      });
    }
    return Promise.resolve({ status: route.status, text: () => Promise.resolve(route.body) });
  };
  return { fetchImpl, requests };
}

// Identity of the captured run, read from the captures themselves so a
// fixture regeneration can never desynchronize the route table.
export const RUN_ID = fixtureJson<{ run_id: string }>("front_criterion3.json").run_id;
export const REPORT_HASH = fixtureJson<{ prompt_hash: string }>(
  "report_categorize.json",
).prompt_hash;

/** Route table replaying the captured full-scale run end to end. */
export function capturedRunRoutes(): Record<string, StubRoute> {
  const descriptor = fixtureText("run_descriptor.json");
  return {
    "GET /runs": {
      status: 200,
      body: JSON.stringify({
        format: "emoadvisor.run-list/1",
        runs: [JSON.parse(descriptor)],
      }),
    },
    [`GET /runs/${RUN_ID}`]: { status: 200, body: descriptor },
    [`GET /runs/${RUN_ID}/front`]: { status: 200, body: fixtureText("front_criterion3.json") },
    [`GET /runs/${RUN_ID}/analytics`]: {
      status: 200,
      body: fixtureText("analytics_criterion3.json"),
    },
    [`POST /runs/${RUN_ID}/inference`]: {
      status: 200,
      body: fixtureText("inference_categorize.json"),
    },
    [`GET /reports/${REPORT_HASH}`]: { status: 200, body: fixtureText("report_categorize.json") },
    "GET /runs/ffffffffffff": { status: 404, body: fixtureText("error_envelope.json") },
    "GET /runs/ffffffffffff/front": { status: 404, body: fixtureText("error_envelope.json") },
  };
}
