// @vitest-environment jsdom
import { describe, expect, it } from "vitest";

import { ApiError, BreakfastApi, BreakfastEntry, CatalogObject } from "../src/api.js";
import { renderTeachScreen } from "../src/views/teach.js";
import { texts, until } from "./helpers.js";

const CATALOG: CatalogObject[] = [
  { id: 0, name: "milk", class: "food", graspable: true },
  { id: 1, name: "cup", class: "utensil", graspable: true },
  { id: 2, name: "banana", class: "food", graspable: false },
];

function fakeApi(overrides: Partial<Record<string, unknown>> = {}): {
  api: BreakfastApi;
  taught: { name: string; objects: string[] }[];
  entries: BreakfastEntry[];
} {
  const taught: { name: string; objects: string[] }[] = [];
  const entries: BreakfastEntry[] = [];
  const api = {
    getCatalog: async () => CATALOG,
    listBreakfasts: async () => entries.slice(),
    teach: async (name: string, objects: string[]) => {
      taught.push({ name, objects });
      const entry = { id: entries.length, name, objects, taught_on_day: 0 };
      entries.push(entry);
      return entry;
    },
    addObject: async () => ({ id: 99 }),
    ...overrides,
  } as unknown as BreakfastApi;
  return { api, taught, entries };
}

function pick(root: HTMLElement, objectName: string): void {
  const box = root.querySelector<HTMLInputElement>(`input[value="${objectName}"]`);
  if (!box) throw new Error(`no checkbox for ${objectName}`);
  box.checked = true;
}

describe("teach screen", () => {
  it("submits the picked objects and refreshes the listing", async () => {
    const { api, taught } = fakeApi();
    const root = document.createElement("div");
    await renderTeachScreen(root, api);

    root.querySelector<HTMLInputElement>('[data-testid="setup-name"]')!.value = "milk snack";
    pick(root, "milk");
    pick(root, "cup");
    root.querySelector<HTMLButtonElement>('[data-testid="teach-submit"]')!.click();

    await until(() => taught.length === 1);
    expect(taught[0]).toEqual({ name: "milk snack", objects: ["milk", "cup"] });
    await until(() => texts(root, '[data-testid="breakfast-list"] li').length === 1);
    expect(texts(root, '[data-testid="breakfast-list"] li')[0]).toContain("milk snack");
  });

  it("groups the pickers by class in service order", async () => {
    const { api } = fakeApi();
    const root = document.createElement("div");
    await renderTeachScreen(root, api);
    expect(texts(root, '[data-testid="food-picker"] label')).toEqual([" milk", " banana"]);
    expect(texts(root, '[data-testid="utensil-picker"] label')).toEqual([" cup"]);
  });

  it("surfaces service errors inline", async () => {
    const { api } = fakeApi({
      teach: async () => {
        throw new ApiError(422, "NoFoodItem", "a breakfast must contain at least one food item");
      },
    });
    const root = document.createElement("div");
    await renderTeachScreen(root, api);
    root.querySelector<HTMLButtonElement>('[data-testid="teach-submit"]')!.click();
    await until(() => !root.querySelector(".error-banner")!.hasAttribute("hidden"));
    expect(root.querySelector(".error-banner")!.textContent).toContain("NoFoodItem");
  });
});
