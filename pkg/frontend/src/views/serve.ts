/** Serve screen: a named option, the least-eaten pick, or a surprise.
 *
 * The plan panel splits objects into what the robot fetches and what the
 * user fetches, exactly as the service reports them. Created plans offer a
 * "save as new option" action.
 */

import { BreakfastApi, ServePlan } from "../api.js";
import { clear, describeError, el, errorBanner } from "../dom.js";

export async function renderServeScreen(root: HTMLElement, api: BreakfastApi): Promise<void> {
  clear(root);
  const banner = errorBanner();
  root.append(el("h2", {}, "Serve a breakfast"), banner.node);

  const entries = await api.listBreakfasts();
  const nameSelect = el("select", { "data-testid": "serve-name" });
  for (const entry of entries) {
    nameSelect.append(el("option", { value: entry.name }, entry.name));
  }
  const byName = el("button", { "data-testid": "serve-by-name" }, "Serve this");
  const leastEaten = el("button", { "data-testid": "serve-least-eaten" }, "Let it decide");
  const surprise = el("button", { "data-testid": "serve-surprise" }, "Surprise me");
  const planPanel = el("div", { "data-testid": "plan-panel" });

  async function serveWith(mode: "by_name" | "least_eaten" | "surprise"): Promise<void> {
    banner.hide();
    try {
      const plan = await api.serve(mode, mode === "by_name" ? nameSelect.value : undefined);
      showPlan(plan);
    } catch (err) {
      banner.show(describeError(err));
    }
  }

  byName.addEventListener("click", () => void serveWith("by_name"));
  leastEaten.addEventListener("click", () => void serveWith("least_eaten"));
  surprise.addEventListener("click", () => void serveWith("surprise"));

  function showPlan(plan: ServePlan): void {
    clear(planPanel);
    const title =
      plan.source === "episodic" ? `Serving: ${plan.entry_name}` : "Serving: a brand-new option";
    planPanel.append(
      el("h3", {}, title),
      el("p", {}, `Day ${plan.day}`),
      el("h4", {}, "Robot fetches"),
      el("ul", { "data-testid": "robot-fetches" },
        ...plan.robot_fetches.map((name) => el("li", {}, name))),
      el("h4", {}, "You fetch"),
      el("ul", { "data-testid": "user-fetches" },
        ...plan.user_fetches.map((name) => el("li", {}, name))),
    );
    if (plan.source === "created") {
      const saveName = el("input", { placeholder: "name this surprise", "data-testid": "save-name" });
      const saveButton = el("button", { "data-testid": "save-surprise" }, "Save as new option");
      saveButton.addEventListener("click", async () => {
        banner.hide();
        try {
          await api.saveSurprise(saveName.value, plan.objects.map((o) => o.name));
          saveButton.replaceWith(el("span", { "data-testid": "save-confirmation" }, "saved"));
        } catch (err) {
          banner.show(describeError(err));
        }
      });
      planPanel.append(el("div", { class: "row" }, saveName, saveButton));
    }
  }

  root.append(
    el("section", { class: "card" },
      el("div", { class: "row" }, nameSelect, byName),
      el("div", { class: "row" }, leastEaten, surprise),
    ),
    el("section", { class: "card" }, planPanel),
  );
}
