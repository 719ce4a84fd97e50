/** Typed client for the breakfastbot HTTP service.
 *
 * The UI performs no rule logic of its own: every fact it displays comes
 * straight out of these response bodies.
 */

export type ObjectClassName = "food" | "utensil";

export interface CatalogObject {
  id: number;
  name: string;
  class: ObjectClassName;
  graspable: boolean;
}

export interface BreakfastEntry {
  id: number;
  name: string;
  objects: string[];
  taught_on_day: number;
}

export interface PlanObject {
  name: string;
  graspable: boolean;
}

export interface ServePlan {
  source: "episodic" | "created";
  entry_id: number | null;
  entry_name: string | null;
  objects: PlanObject[];
  robot_fetches: string[];
  user_fetches: string[];
  day: number;
}

export type ServeMode = "by_name" | "least_eaten" | "surprise";

export interface HistoryRow {
  day: number;
  served: string;
  objects: string[];
}

export interface RuleCombos {
  none_ok: boolean;
  combos: string[][];
}

export interface FoodRule {
  food: string;
  utensils: RuleCombos;
  foods: RuleCombos;
}

export interface RulesResponse {
  built_from: number;
  foods: FoodRule[];
  dump: string;
}

export interface BatchReport {
  requested: number;
  same_as_memory: number;
  invalid_before_fix: number;
  duplicate_new: number;
  distinct_new: number;
  outputs: string[][];
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
    public readonly fields?: string[],
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class BreakfastApi {
  private readonly fetchFn: FetchLike;

  constructor(
    public readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      const err = (payload as { error?: { code?: string; message?: string; fields?: string[] } })?.error;
      throw new ApiError(
        response.status,
        err?.code ?? "HttpError",
        err?.message ?? `request failed with status ${response.status}`,
        err?.fields,
      );
    }
    return payload as T;
  }

  getCatalog(): Promise<CatalogObject[]> {
    return this.request("GET", "/catalog");
  }

  addObject(name: string, cls: ObjectClassName, graspable: boolean): Promise<{ id: number }> {
    return this.request("POST", "/catalog/objects", { name, class: cls, graspable });
  }

  listBreakfasts(): Promise<BreakfastEntry[]> {
    return this.request("GET", "/breakfasts");
  }

  teach(name: string, objects: string[]): Promise<BreakfastEntry> {
    return this.request("POST", "/breakfasts", { name, objects });
  }

  serve(mode: ServeMode, name?: string): Promise<ServePlan> {
    return this.request("POST", "/serve", name === undefined ? { mode } : { mode, name });
  }

  saveSurprise(name: string, objects: string[]): Promise<BreakfastEntry> {
    return this.request("POST", "/surprise/save", { name, objects });
  }

  advanceDay(): Promise<{ day: number }> {
    return this.request("POST", "/day/advance");
  }

  getHistory(): Promise<HistoryRow[]> {
    return this.request("GET", "/history");
  }

  getRules(): Promise<RulesResponse> {
    return this.request("GET", "/rules");
  }

  simulate(n: number): Promise<BatchReport> {
    return this.request("POST", "/simulate", { n });
  }
}

/** Base URL resolution: ?api= query parameter, else the conventional port. */
export function resolveBaseUrl(locationSearch: string): string {
  const fromQuery = new URLSearchParams(locationSearch).get("api");
  return (fromQuery ?? "http://localhost:7420").replace(/\/+$/, "");
}
