/**
 * Browser Entry Point
 *
 * Mounts the application and loads the newest completed run. The only
 * configuration is the API base URL, taken from the `?api=` query
 * parameter and defaulting to the page's own origin.
 */

import { createApiClient } from "./api.js";
import { createApp } from "./app.js";

function apiBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return fromQuery ?? window.location.origin;
}

async function start(): Promise<void> {
  const baseUrl = apiBaseUrl();
  const app = createApp({ baseUrl });
  (document.getElementById("root") ?? document.body).appendChild(app.element);

  const runs = await createApiClient(baseUrl).listRuns();
  if (!runs.ok) return;
  const done = runs.value.runs.filter((run) => run.status === "done");
  const newest = done[done.length - 1];
  if (newest !== undefined) {
    await app.loadRun(newest.run_id);
  }
}

void start();
