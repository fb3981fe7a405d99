/**
 * Application Shell
 *
 * Wires the front view, the solution inspector, and the advisor chat over
 * one API client. Configuration is the API base URL and nothing else.
 * Every user action funnels through a single serialized queue, so state
 * transitions happen one at a time and at most one inference request is in
 * flight at any moment.
 */

import { createApiClient, type ApiClient, type ApiFailure, type FetchLike } from "./api.js";
import { createChatPanel, type AskPayload, type ChatPanel } from "./chat.js";
import type { FrontDocument, PersonaDocument } from "./documents.js";
import { createFrontView, type FrontView } from "./front-view.js";
import { createInspector, type Inspector } from "./inspect.js";
import { DEFAULT_PERSONA } from "./persona.js";
import {
  appendErrorTurn,
  appendReportTurn,
  buildFrontViewModel,
  createThread,
  withPersona,
  withSelection,
  type ChatThread,
  type FrontViewModel,
} from "./viewmodel.js";

export interface AppConfig {
  /** Base URL of the decision-support API, e.g. "http://127.0.0.1:8787". */
  baseUrl: string;
  /** Transport override for tests; defaults to the browser's fetch. */
  fetchImpl?: FetchLike;
}

export interface App {
  element: HTMLElement;
  /** Fetch a run's front and render it; resolves when the view settled. */
  loadRun(runId: string): Promise<void>;
  /** Current state, exposed for assertions and debugging. */
  state(): AppState;
}

export interface AppState {
  runId: string | null;
  doc: FrontDocument | null;
  vm: FrontViewModel | null;
  thread: ChatThread;
  busy: boolean;
}

function failureText(failure: ApiFailure): string {
  return `${failure.code}: ${failure.message}`;
}

export function createApp(config: AppConfig): App {
  const api: ApiClient = createApiClient(config.baseUrl, config.fetchImpl);

  let runId: string | null = null;
  let doc: FrontDocument | null = null;
  let vm: FrontViewModel | null = null;
  let thread: ChatThread = createThread(DEFAULT_PERSONA);
  let busy = false;

  // One queue for everything the user can trigger: each action runs only
  // after the previous one fully settled, so renders never interleave.
  let queue: Promise<void> = Promise.resolve();
  function enqueue(action: () => Promise<void> | void): Promise<void> {
    queue = queue.then(action, action);
    return queue;
  }

  const frontView: FrontView = createFrontView({
    onSelect: (index) => void enqueue(() => selectSolution(index)),
    onRetry: () => void enqueue(() => reload()),
  });
  const inspector: Inspector = createInspector();
  const chat: ChatPanel = createChatPanel({
    onAsk: (payload) => void enqueue(() => ask(payload)),
    onPersonaChange: (persona) => void enqueue(() => changePersona(persona)),
  });

  const element = document.createElement("main");
  element.className = "app";
  element.append(frontView.element, inspector.element, chat.element);

  function selectSolution(index: number): void {
    if (vm === null || doc === null) return;
    vm = withSelection(vm, index);
    frontView.updateSelection(vm.selection);
    if (vm.selection === null) {
      inspector.clear();
    } else {
      inspector.show(vm, doc, vm.selection);
    }
  }

  function changePersona(persona: PersonaDocument): void {
    thread = withPersona(thread, persona);
    chat.renderThread(thread);
  }

  async function ask(payload: AskPayload): Promise<void> {
    if (runId === null || vm === null || busy) return;
    busy = true;
    chat.setBusy(true);
    const persona = thread.persona;
    const question = payload.template ?? payload.question ?? "";
    const request = {
      ...payload,
      selection: vm.selection === null ? [] : [vm.selection],
      persona,
    };
    try {
      const result = await api.postInference(runId, request);
      thread = result.ok
        ? appendReportTurn(thread, question, persona, result.value)
        : appendErrorTurn(thread, question, persona, failureText(result.failure));
    } finally {
      busy = false;
      chat.setBusy(false);
    }
    chat.renderThread(thread);
  }

  async function fetchFront(nextRunId: string): Promise<void> {
    runId = nextRunId;
    frontView.showLoading();
    const result = await api.getFront(nextRunId);
    if (!result.ok) {
      doc = null;
      vm = null;
      inspector.clear();
      frontView.showError(failureText(result.failure));
      return;
    }
    doc = result.value;
    vm = buildFrontViewModel(doc);
    // A fresh front invalidates any previous selection outright.
    inspector.clear();
    frontView.showFront(vm);
  }

  async function reload(): Promise<void> {
    if (runId !== null) await fetchFront(runId);
  }

  return {
    element,

    loadRun(nextRunId: string) {
      return enqueue(() => fetchFront(nextRunId));
    },

    state() {
      return { runId, doc, vm, thread, busy };
    },
  };
}
