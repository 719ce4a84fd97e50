/** Rules screen: the per-food requirement listing, straight from the service. */

import { BreakfastApi, RuleCombos } from "../api.js";
import { clear, el } from "../dom.js";

function comboList(label: string, combos: RuleCombos): HTMLElement {
  const section = el("div", { class: "rule-part" });
  const suffix = combos.none_ok ? " (optional)" : "";
  section.append(el("h4", {}, label + suffix));
  if (combos.combos.length === 0) {
    section.append(el("p", { class: "muted" }, "no combinations recorded"));
    return section;
  }
  section.append(
    el("ul", {}, ...combos.combos.map((combo) => el("li", {}, combo.join(" + ")))),
  );
  return section;
}

export async function renderRulesScreen(root: HTMLElement, api: BreakfastApi): Promise<void> {
  clear(root);
  root.append(el("h2", {}, "What goes with what"));
  const rules = await api.getRules();
  root.append(
    el("p", { class: "muted" }, `learned from ${rules.built_from} taught setups`),
  );
  for (const food of rules.foods) {
    root.append(
      el("section", { class: "card rule-card", "data-food": food.food },
        el("h3", {}, food.food),
        comboList("needs utensils: one of", food.utensils),
        comboList("needs foods: one of", food.foods),
      ),
    );
  }
}
