/** Screen navigation and wiring. */

import { BreakfastApi, resolveBaseUrl } from "./api.js";
import { clear, el } from "./dom.js";
import { renderHistoryScreen } from "./views/history.js";
import { renderRulesScreen } from "./views/rules.js";
import { renderServeScreen } from "./views/serve.js";
import { renderTeachScreen } from "./views/teach.js";

type ScreenName = "teach" | "serve" | "history" | "rules";

const SCREENS: Record<ScreenName, (root: HTMLElement, api: BreakfastApi) => Promise<void>> = {
  teach: renderTeachScreen,
  serve: renderServeScreen,
  history: renderHistoryScreen,
  rules: renderRulesScreen,
};

export function startApp(root: HTMLElement, api: BreakfastApi): void {
  const nav = el("nav", {});
  const screenRoot = el("main", {});
  let active: ScreenName = "teach";

  const buttons = new Map<ScreenName, HTMLButtonElement>();
  for (const name of Object.keys(SCREENS) as ScreenName[]) {
    const button = el("button", { "data-screen": name }, name);
    button.addEventListener("click", () => void show(name));
    buttons.set(name, button);
    nav.append(button);
  }

  async function show(name: ScreenName): Promise<void> {
    active = name;
    for (const [screen, button] of buttons) {
      button.classList.toggle("active", screen === active);
    }
    try {
      await SCREENS[name](screenRoot, api);
    } catch (err) {
      clear(screenRoot);
      screenRoot.append(
        el("div", { class: "error-banner" }, `failed to load ${name}: ${String(err)}`),
      );
    }
  }

  clear(root);
  root.append(el("h1", {}, "breakfastbot"), nav, screenRoot);
  void show(active);
}

declare global {
  interface Window {
    API_BASE?: string;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const base = window.API_BASE ?? resolveBaseUrl(window.location.search);
  startApp(document.getElementById("app") as HTMLElement, new BreakfastApi(base));
}
