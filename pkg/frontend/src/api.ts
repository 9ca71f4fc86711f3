// Thin typed client for the maintenance service's /api endpoints.

export interface AnalysisJson {
  lexical_form: string;
  pos: string;
  root: string;
  attrs: string[];
}

export interface LookupResponse {
  word: string;
  analyses: AnalysisJson[];
}

export interface EntryJson {
  lexical: string;
  class: string;
  parse: string;
}

export interface EntriesPage {
  entries: EntryJson[];
  page: number;
  page_size: number;
  total: number;
}

export interface SurfaceAnalyses {
  surface: string;
  analyses: AnalysisJson[];
}

export interface MutationResponse {
  entry: EntryJson;
  surfaces: SurfaceAnalyses[];
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = typeof body.detail === "string"
      ? body.detail
      : `request failed with status ${response.status}`;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export function lookup(word: string): Promise<LookupResponse> {
  return request(`/api/lookup?word=${encodeURIComponent(word)}`);
}

export function listEntries(
  prefix = "", pos?: string, page = 1,
): Promise<EntriesPage> {
  const params = new URLSearchParams({ prefix, page: String(page) });
  if (pos) params.set("pos", pos);
  return request(`/api/entries?${params}`);
}

const jsonHeaders = { "Content-Type": "application/json" };

export function addEntry(entry: EntryJson): Promise<MutationResponse> {
  return request("/api/entries", {
    method: "POST",
    headers: jsonHeaders,
    body: JSON.stringify(entry),
  });
}

export function deleteEntry(entry: EntryJson): Promise<{ deleted: EntryJson }> {
  return request("/api/entries", {
    method: "DELETE",
    headers: jsonHeaders,
    body: JSON.stringify(entry),
  });
}
