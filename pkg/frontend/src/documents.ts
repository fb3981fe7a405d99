/**
 * API Document Schemas
 *
 * Runtime validators (zod) and inferred types for every document the
 * gateway serves. The UI renders only values carried by these documents;
 * nothing here recomputes objectives or analytics client-side.
 */

import { z } from "zod";

/** Closed error-code enumeration used by every error response. */
export const errorCodeSchema = z.enum([
  "validation",
  "not_found",
  "conflict",
  "backend",
  "internal",
]);
export type ErrorCode = z.infer<typeof errorCodeSchema>;

export const errorEnvelopeSchema = z.object({
  error: z.object({
    code: errorCodeSchema,
    message: z.string(),
    detail: z.unknown().optional(),
  }),
});
export type ErrorEnvelope = z.infer<typeof errorEnvelopeSchema>;

/** One objective-space point with its run-local row index. */
export const frontPointRefSchema = z.object({
  index: z.number().int().nonnegative(),
  total_cost: z.number(),
  environmental_impact: z.number(),
});
export type FrontPointRef = z.infer<typeof frontPointRefSchema>;

export const tiersSchema = z.object({
  primary: z.array(z.number().int()),
  secondary: z.array(z.number().int()),
  additional: z.array(z.number().int()),
  scores: z.array(z.number()),
  names: z.array(z.string()),
});
export type TiersDocument = z.infer<typeof tiersSchema>;

export const analyticsSchema = z.object({
  format: z.literal("emoadvisor.analytics/1"),
  instance_ref: z.string(),
  front_size: z.number().int().nonnegative(),
  extent: z.object({
    total_cost: z.tuple([z.number(), z.number()]),
    environmental_impact: z.tuple([z.number(), z.number()]),
  }),
  extremes: z.object({
    min_cost: frontPointRefSchema,
    min_impact: frontPointRefSchema,
  }),
  knee: frontPointRefSchema.nullable(),
  tiers: tiersSchema.nullable(),
  thresholds: z.object({ primary: z.number(), secondary: z.number() }),
});
export type AnalyticsDocument = z.infer<typeof analyticsSchema>;

/** Response body of GET /runs/{id}/analytics: the document plus its run. */
export const analyticsResponseSchema = z.object({
  run_id: z.string(),
  analytics: analyticsSchema,
});
export type AnalyticsResponse = z.infer<typeof analyticsResponseSchema>;

export const variableMetaSchema = z.object({
  index: z.number().int().positive(),
  name: z.string(),
  unit: z.string(),
});
export type VariableMeta = z.infer<typeof variableMetaSchema>;

export const frontRowSchema = z.object({
  objectives: z.tuple([z.number(), z.number()]),
  variables: z.array(z.number()),
});
export type FrontRow = z.infer<typeof frontRowSchema>;

export const frontDocumentSchema = z.object({
  format: z.literal("emoadvisor.front/1"),
  run_id: z.string(),
  instance_ref: z.string(),
  schema: z.object({ variables: z.array(variableMetaSchema) }),
  rows: z.array(frontRowSchema),
  analytics: analyticsSchema,
});
export type FrontDocument = z.infer<typeof frontDocumentSchema>;

export const runStatusSchema = z.enum(["pending", "running", "done", "failed"]);
export type RunStatus = z.infer<typeof runStatusSchema>;

export const runDescriptorSchema = z.object({
  format: z.literal("emoadvisor.run-descriptor/1"),
  run_id: z.string(),
  status: runStatusSchema,
  params: z.object({
    population_size: z.number().int(),
    generations: z.number().int(),
    crossover_probability: z.number(),
    sbx_eta: z.number(),
    mutation_probability: z.number().nullable(),
    pm_eta: z.number(),
    seed: z.number().int(),
  }),
  instance_seed: z.number().int(),
  instance_ref: z.string(),
  created_at: z.string(),
  artifact_paths: z.record(z.string(), z.string()),
  error: z.string().nullable(),
});
export type RunDescriptor = z.infer<typeof runDescriptorSchema>;

export const runListSchema = z.object({
  format: z.literal("emoadvisor.run-list/1"),
  runs: z.array(runDescriptorSchema),
});
export type RunList = z.infer<typeof runListSchema>;

export const personaDocumentSchema = z.object({
  expertise: z.enum(["domain_expert", "mid_technical", "executive"]),
  goal: z.enum([
    "environmental",
    "investor",
    "community",
    "regulatory",
    "socioeconomic",
    "none",
  ]),
  language_register: z.enum(["technical", "plain"]),
});
export type PersonaDocument = z.infer<typeof personaDocumentSchema>;
export type Expertise = PersonaDocument["expertise"];
export type Goal = PersonaDocument["goal"];
export type LanguageRegister = PersonaDocument["language_register"];

export const citedRowSchema = z.object({
  index: z.number().int().nonnegative(),
  number: z.number().int().positive(),
  total_cost: z.number(),
  environmental_impact: z.number(),
});
export type CitedRow = z.infer<typeof citedRowSchema>;

export const reportDocumentSchema = z.object({
  format: z.literal("emoadvisor.report/1"),
  mode: z.enum(["offline", "live"]),
  persona: personaDocumentSchema,
  prompt_text: z.string(),
  prompt_hash: z.string().length(64),
  response_text: z.string(),
  cited_rows: z.array(citedRowSchema),
  solution_refs: z.array(z.number().int()),
  backend_id: z.string(),
  created_at: z.string(),
});
export type ReportDocument = z.infer<typeof reportDocumentSchema>;

/** Request body for POST /runs/{id}/inference. */
export interface InferenceRequest {
  template?: string;
  question?: string;
  selection: number[];
  persona: PersonaDocument;
  backend_mode?: "offline" | "live";
}

/** Request body for POST /runs. */
export interface CreateRunRequest {
  params?: Partial<{
    population_size: number;
    generations: number;
    seed: number;
  }>;
  instance_seed?: number;
}
