/**
 * View Models
 *
 * FrontViewModel projects a served front document into render-ready points
 * with extreme/knee flags, enforcing the badge invariants. ChatThread is an
 * append-only record of question/report turns; every mutation returns a new
 * frozen value, so prior turns can never be edited or removed.
 */

import type {
  FrontDocument,
  PersonaDocument,
  ReportDocument,
  TiersDocument,
  VariableMeta,
} from "./documents.js";

export class ViewModelError extends Error {}

export type ExtremeRole = "lowest cost" | "lowest impact";

export interface FrontPoint {
  /** Run-local row index (solution number minus one). */
  index: number;
  totalCost: number;
  environmentalImpact: number;
  isExtreme: boolean;
  extremeRole: ExtremeRole | null;
  isKnee: boolean;
}

export interface FrontViewModel {
  runId: string;
  instanceRef: string;
  points: readonly FrontPoint[];
  selection: number | null;
  /** Served importance tiers, or null when the front is too small to rank. */
  tiers: TiersDocument | null;
  variables: readonly VariableMeta[];
  extent: { totalCost: [number, number]; environmentalImpact: [number, number] };
  extremeIndices: { minCost: number; minImpact: number };
  kneeIndex: number | null;
}

/**
 * Build the view model from a served front document.
 *
 * Throws ViewModelError when the document violates the badge invariants:
 * exactly two distinct extreme rows and at most one knee, all in range.
 */
export function buildFrontViewModel(doc: FrontDocument): FrontViewModel {
  const { analytics } = doc;
  const minCost = analytics.extremes.min_cost.index;
  const minImpact = analytics.extremes.min_impact.index;
  const knee = analytics.knee === null ? null : analytics.knee.index;

  const inRange = (index: number) => index >= 0 && index < doc.rows.length;
  if (!inRange(minCost) || !inRange(minImpact)) {
    throw new ViewModelError("extreme index outside the served front");
  }
  if (minCost === minImpact) {
    throw new ViewModelError("extremes must flag two distinct solutions");
  }
  if (knee !== null && !inRange(knee)) {
    throw new ViewModelError("knee index outside the served front");
  }

  const points = doc.rows.map((row, index): FrontPoint => {
    const extremeRole: ExtremeRole | null =
      index === minCost ? "lowest cost" : index === minImpact ? "lowest impact" : null;
    return Object.freeze({
      index,
      totalCost: row.objectives[0],
      environmentalImpact: row.objectives[1],
      isExtreme: extremeRole !== null,
      extremeRole,
      isKnee: index === knee,
    });
  });

  return Object.freeze({
    runId: doc.run_id,
    instanceRef: doc.instance_ref,
    points: Object.freeze(points),
    selection: null,
    tiers: analytics.tiers,
    variables: Object.freeze(doc.schema.variables.slice()),
    extent: {
      totalCost: analytics.extent.total_cost,
      environmentalImpact: analytics.extent.environmental_impact,
    },
    extremeIndices: { minCost, minImpact },
    kneeIndex: knee,
  });
}

/** The same view with a different (validated) selection. */
export function withSelection(vm: FrontViewModel, index: number | null): FrontViewModel {
  if (index !== null && (!Number.isInteger(index) || index < 0 || index >= vm.points.length)) {
    throw new ViewModelError(`selection index ${index} out of range`);
  }
  return Object.freeze({ ...vm, selection: index });
}

// -- chat thread ------------------------------------------------------------

export interface ReportTurn {
  kind: "report";
  question: string;
  persona: PersonaDocument;
  report: ReportDocument;
}

export interface ErrorTurn {
  kind: "error";
  question: string;
  persona: PersonaDocument;
  message: string;
}

export type ChatTurn = ReportTurn | ErrorTurn;

export interface ChatThread {
  readonly turns: readonly ChatTurn[];
  readonly persona: PersonaDocument;
}

export function createThread(persona: PersonaDocument): ChatThread {
  return Object.freeze({ turns: Object.freeze([]), persona });
}

function append(thread: ChatThread, turn: ChatTurn): ChatThread {
  return Object.freeze({
    turns: Object.freeze([...thread.turns, Object.freeze(turn)]),
    persona: thread.persona,
  });
}

/** A completed ask: the turn references the persisted report verbatim. */
export function appendReportTurn(
  thread: ChatThread,
  question: string,
  persona: PersonaDocument,
  report: ReportDocument,
): ChatThread {
  return append(thread, { kind: "report", question, persona, report });
}

/** A failed ask: the error joins the thread inline; prior turns are untouched. */
export function appendErrorTurn(
  thread: ChatThread,
  question: string,
  persona: PersonaDocument,
  message: string,
): ChatThread {
  return append(thread, { kind: "error", question, persona, message });
}

/** Switch persona for future turns; the transcript is preserved as-is. */
export function withPersona(thread: ChatThread, persona: PersonaDocument): ChatThread {
  return Object.freeze({ turns: thread.turns, persona });
}
