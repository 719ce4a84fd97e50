/** Tiny DOM construction helpers; no framework, no virtual DOM. */

type Child = Node | string;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) {
    node.removeChild(node.firstChild);
  }
}

/** One shared error banner per screen; hidden until a message arrives. */
export function errorBanner(): {
  node: HTMLElement;
  show: (message: string) => void;
  hide: () => void;
} {
  const node = el("div", { class: "error-banner", hidden: "" });
  return {
    node,
    show(message: string) {
      node.textContent = message;
      node.removeAttribute("hidden");
    },
    hide() {
      node.setAttribute("hidden", "");
    },
  };
}

export function describeError(err: unknown): string {
  if (err && typeof err === "object" && "code" in err && "message" in err) {
    return `${(err as { code: string }).code}: ${(err as { message: string }).message}`;
  }
  return String(err);
}
