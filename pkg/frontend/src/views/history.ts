/** History screen: the in-window servings, with the advance-day control. */

import { BreakfastApi } from "../api.js";
import { clear, describeError, el, errorBanner } from "../dom.js";

export async function renderHistoryScreen(root: HTMLElement, api: BreakfastApi): Promise<void> {
  clear(root);
  const banner = errorBanner();
  root.append(el("h2", {}, "Recent days"), banner.node);

  const advance = el("button", { "data-testid": "advance-day" }, "Advance day");
  const table = el("table", { "data-testid": "history-table" });

  advance.addEventListener("click", async () => {
    banner.hide();
    try {
      await api.advanceDay();
      await refresh();
    } catch (err) {
      banner.show(describeError(err));
    }
  });

  async function refresh(): Promise<void> {
    const rows = await api.getHistory();
    clear(table);
    table.append(
      el("tr", {}, el("th", {}, "Day"), el("th", {}, "Served"), el("th", {}, "Objects")),
    );
    for (const row of rows) {
      table.append(
        el("tr", { class: "history-row" },
          el("td", {}, String(row.day)),
          el("td", {}, row.served),
          el("td", {}, row.objects.join(", "))),
      );
    }
  }

  root.append(el("section", { class: "card" }, advance), el("section", { class: "card" }, table));
  await refresh();
}
