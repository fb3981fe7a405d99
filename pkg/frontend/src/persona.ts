/**
 * Persona Handling
 *
 * The persona travels verbatim in inference requests; the preamble builder
 * here mirrors the backend's system-preamble construction character for
 * character so the prompt preview shows exactly what the backend will put
 * in front of the model. Golden-file tests pin the two in sync.
 */

import type { PersonaDocument } from "./documents.js";

export type Expertise = PersonaDocument["expertise"];
export type Goal = PersonaDocument["goal"];
export type LanguageRegister = PersonaDocument["language_register"];

/** The broadest audience: non-technical decision-maker, plain language. */
export const DEFAULT_PERSONA: PersonaDocument = {
  expertise: "executive",
  goal: "none",
  language_register: "plain",
};

export const EXPERTISE_OPTIONS: readonly Expertise[] = [
  "executive",
  "mid_technical",
  "domain_expert",
];

export const GOAL_OPTIONS: readonly Goal[] = [
  "none",
  "environmental",
  "investor",
  "community",
  "regulatory",
  "socioeconomic",
];

export const REGISTER_OPTIONS: readonly LanguageRegister[] = [
  "plain",
  "technical",
];

const PREAMBLES: Record<Expertise, string> = {
  domain_expert:
    "You are advising a domain expert in infrastructure planning and " +
    "multi-objective optimization. Be quantitative and precise: cite " +
    "solution numbers, exact objective values, and variable values with " +
    "their units. Do not simplify terminology.",
  mid_technical:
    "You are advising mid-level technical staff. Be precise but " +
    "concise: prefer concrete numbers with units, and briefly explain " +
    "any specialist term on first use.",
  executive:
    "You are advising a non-technical decision-maker. Use plain " +
    "language, avoid jargon, and summarize the takeaway in at most " +
    "three bullet points.",
};

const PLAIN_REGISTER_NOTE = "Prefer plain language over technical shorthand.";

const GOAL_FRAMINGS: Partial<Record<Goal, string>> = {
  environmental:
    "The reader represents environmental stakeholders: frame outcomes " +
    "around environmental impact, renewable energy usage, emissions, " +
    "and long-term ecological risk.",
  investor:
    "The reader represents investors: frame outcomes around total " +
    "cost, cost efficiency, durability, and value for money.",
  community:
    "The reader represents the local community: frame outcomes around " +
    "community impact, employment, safety, and quality of life.",
  regulatory:
    "The reader is a regulator: frame outcomes around compliance, " +
    "measurable limits, and audit-ready reasoning.",
  socioeconomic:
    "The reader cares about socioeconomic balance: frame outcomes " +
    "around employment, affordability, and fair distribution of costs " +
    "and benefits.",
};

/**
 * The system preamble the backend derives from a persona — mirrored here
 * for the pre-send prompt preview.
 */
export function personaPreamble(persona: PersonaDocument): string {
  const parts = [PREAMBLES[persona.expertise]];
  if (persona.language_register === "plain" && persona.expertise !== "executive") {
    parts.push(PLAIN_REGISTER_NOTE);
  }
  const framing = GOAL_FRAMINGS[persona.goal];
  if (framing) {
    parts.push(framing);
  }
  return parts.join(" ");
}

/** Short label used to tag chat turns, e.g. "executive · plain". */
export function personaLabel(persona: PersonaDocument): string {
  const goal = persona.goal === "none" ? "" : ` · ${persona.goal}`;
  return `${persona.expertise} · ${persona.language_register}${goal}`;
}

export function personasEqual(a: PersonaDocument, b: PersonaDocument): boolean {
  return (
    a.expertise === b.expertise &&
    a.goal === b.goal &&
    a.language_register === b.language_register
  );
}
