/**
 * Gateway API Client
 *
 * Thin typed wrapper over fetch. Every method resolves to a discriminated
 * result instead of throwing, so callers render error states without
 * try/catch plumbing. The fetch implementation is injectable for tests.
 */

import { z } from "zod";
import {
  errorEnvelopeSchema,
  frontDocumentSchema,
  reportDocumentSchema,
  runDescriptorSchema,
  runListSchema,
  analyticsResponseSchema,
  type AnalyticsResponse,
  type CreateRunRequest,
  type ErrorCode,
  type FrontDocument,
  type InferenceRequest,
  type ReportDocument,
  type RunDescriptor,
  type RunList,
} from "./documents.js";

/** API error codes plus the two failure modes the server never sees. */
export type FailureCode = ErrorCode | "network" | "malformed";

export interface ApiFailure {
  code: FailureCode;
  message: string;
  status?: number;
  detail?: unknown;
}

export type ApiResult<T> =
  | { ok: true; value: T }
  | { ok: false; failure: ApiFailure };

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; text(): Promise<string> }>;

export interface ApiClient {
  listRuns(): Promise<ApiResult<RunList>>;
  getRun(runId: string): Promise<ApiResult<RunDescriptor>>;
  createRun(request: CreateRunRequest): Promise<ApiResult<RunDescriptor>>;
  getFront(runId: string): Promise<ApiResult<FrontDocument>>;
  getAnalytics(runId: string): Promise<ApiResult<AnalyticsResponse>>;
  postInference(runId: string, request: InferenceRequest): Promise<ApiResult<ReportDocument>>;
  getReport(promptHash: string): Promise<ApiResult<ReportDocument>>;
}

function failure(code: FailureCode, message: string, status?: number, detail?: unknown): ApiFailure {
  return { code, message, status, detail };
}

export function createApiClient(baseUrl: string, fetchImpl?: FetchLike): ApiClient {
  const base = baseUrl.replace(/\/+$/, "");
  const doFetch: FetchLike = fetchImpl ?? ((input, init) => fetch(input, init));

  async function request<T>(
    method: string,
    path: string,
    schema: z.ZodType<T>,
    body?: unknown,
  ): Promise<ApiResult<T>> {
    let status: number;
    let text: string;
    try {
      const response = await doFetch(`${base}${path}`, {
        method,
        headers: body === undefined ? undefined : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
      status = response.status;
      text = await response.text();
    } catch (error) {
      const message = error instanceof Error ? error.message : String(error);
      return { ok: false, failure: failure("network", message) };
    }

    let parsed: unknown;
    try {
      parsed = JSON.parse(text);
    } catch {
      return {
        ok: false,
        failure: failure("malformed", `response is not JSON (status ${status})`, status),
      };
    }

    if (status >= 400) {
      const envelope = errorEnvelopeSchema.safeParse(parsed);
      if (!envelope.success) {
        return {
          ok: false,
          failure: failure("malformed", `unrecognized error body (status ${status})`, status),
        };
      }
      const { code, message, detail } = envelope.data.error;
      return { ok: false, failure: failure(code, message, status, detail) };
    }

    const document = schema.safeParse(parsed);
    if (!document.success) {
      return {
        ok: false,
        failure: failure("malformed", `unexpected document shape: ${document.error.message}`, status),
      };
    }
    return { ok: true, value: document.data };
  }

  return {
    listRuns: () => request("GET", "/runs", runListSchema),
    getRun: (runId) => request("GET", `/runs/${runId}`, runDescriptorSchema),
    createRun: (body) => request("POST", "/runs", runDescriptorSchema, body),
    getFront: (runId) => request("GET", `/runs/${runId}/front`, frontDocumentSchema),
    getAnalytics: (runId) => request("GET", `/runs/${runId}/analytics`, analyticsResponseSchema),
    postInference: (runId, body) =>
      request("POST", `/runs/${runId}/inference`, reportDocumentSchema, body),
    getReport: (promptHash) => request("GET", `/reports/${promptHash}`, reportDocumentSchema),
  };
}
