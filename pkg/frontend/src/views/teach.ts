/** Teach screen: pick catalog objects, name the setup, submit.
 *
 * Also hosts a small catalog form so a fresh household can be set up from
 * the browser. Errors from the service (DuplicateName, NoFoodItem, ...)
 * surface inline.
 */

import { BreakfastApi } from "../api.js";
import { clear, describeError, el, errorBanner } from "../dom.js";

export async function renderTeachScreen(root: HTMLElement, api: BreakfastApi): Promise<void> {
  clear(root);
  const banner = errorBanner();
  root.append(el("h2", {}, "Teach a breakfast"), banner.node);

  const catalog = await api.getCatalog();

  // catalog form
  const objectName = el("input", { placeholder: "object name", "data-testid": "object-name" });
  const objectClass = el("select", { "data-testid": "object-class" });
  objectClass.append(el("option", { value: "food" }, "food"), el("option", { value: "utensil" }, "utensil"));
  const graspable = el("input", { type: "checkbox", "data-testid": "object-graspable", checked: "" });
  const addButton = el("button", { "data-testid": "add-object" }, "Add object");
  addButton.addEventListener("click", async () => {
    banner.hide();
    try {
      await api.addObject(objectName.value, objectClass.value as "food" | "utensil", graspable.checked);
      await renderTeachScreen(root, api);
    } catch (err) {
      banner.show(describeError(err));
    }
  });
  root.append(
    el("section", { class: "card" },
      el("h3", {}, "Catalog"),
      el("div", { class: "row" }, objectName, objectClass, el("label", {}, graspable, " robot can grasp"), addButton),
    ),
  );

  // teach form: one checkbox per catalog object, in service order
  const checkboxes: { box: HTMLInputElement; name: string }[] = [];
  const foodList = el("div", { class: "picker", "data-testid": "food-picker" });
  const utensilList = el("div", { class: "picker", "data-testid": "utensil-picker" });
  for (const object of catalog) {
    const box = el("input", { type: "checkbox", value: object.name });
    checkboxes.push({ box, name: object.name });
    const target = object.class === "food" ? foodList : utensilList;
    target.append(el("label", { class: "pick" }, box, ` ${object.name}`));
  }

  const setupName = el("input", { placeholder: "breakfast name", "data-testid": "setup-name" });
  const submit = el("button", { "data-testid": "teach-submit" }, "Teach");
  const entryList = el("ul", { "data-testid": "breakfast-list" });

  submit.addEventListener("click", async () => {
    banner.hide();
    const picked = checkboxes.filter((c) => c.box.checked).map((c) => c.name);
    try {
      await api.teach(setupName.value, picked);
      setupName.value = "";
      for (const c of checkboxes) c.box.checked = false;
      await refreshEntries();
    } catch (err) {
      banner.show(describeError(err));
    }
  });

  async function refreshEntries(): Promise<void> {
    const entries = await api.listBreakfasts();
    clear(entryList);
    for (const entry of entries) {
      // object lists render exactly in service response order
      entryList.append(
        el("li", { "data-entry-id": String(entry.id) },
          el("strong", {}, entry.name),
          ` — ${entry.objects.join(", ")} (day ${entry.taught_on_day})`),
      );
    }
  }

  root.append(
    el("section", { class: "card" },
      el("h3", {}, "New setup"),
      el("h4", {}, "Foods"), foodList,
      el("h4", {}, "Utensils"), utensilList,
      el("div", { class: "row" }, setupName, submit),
    ),
    el("section", { class: "card" }, el("h3", {}, "Taught breakfasts"), entryList),
  );
  await refreshEntries();
}
