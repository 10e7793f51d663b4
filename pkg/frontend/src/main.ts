/**
 * Browser entry point: wires the pure pieces (renderer, keymap,
 * palette) to the DOM and the HTTP client. Serve the built bundle next
 * to index.html with the API running on the same origin or set
 * `data-api` on the <body>.
 */
import { EditorClient } from "./client.js";
import { keyToAction } from "./keymap.js";
import { paletteGroups } from "./palette.js";
import { htmlOf, renderTyp, renderZExp } from "./render.js";
import type { Action, WireState } from "./wire.js";

function mustGet(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el;
}

async function start(): Promise<void> {
  const base = document.body.dataset.api ?? "";
  const client = new EditorClient(base);
  const editorEl = mustGet("editor");
  const typeEl = mustGet("type");
  const paletteEl = mustGet("palette");
  const statusEl = mustGet("status");

  function show(state: WireState): void {
    editorEl.innerHTML = htmlOf(renderZExp(state.zexp));
    typeEl.innerHTML = htmlOf(renderTyp(state.typ));
    paletteEl.replaceChildren();
    for (const group of paletteGroups(state.enabled)) {
      const box = document.createElement("div");
      box.className = "palette-group";
      const h = document.createElement("h3");
      h.textContent = group.title;
      box.appendChild(h);
      for (const entry of group.entries) {
        const btn = document.createElement("button");
        btn.textContent = entry.text;
        btn.disabled = !entry.enabled;
        btn.addEventListener("click", () => {
          void apply(JSON.parse(JSON.stringify(entry.action)) as Action);
        });
        box.appendChild(btn);
      }
      paletteEl.appendChild(box);
    }
  }

  async function apply(action: Action): Promise<void> {
    const result = await client.dispatch(action);
    if (result === null) return; // a request is already in flight
    if (result.ok) {
      statusEl.textContent = "";
      show(result.state);
    } else {
      statusEl.textContent = `rejected: ${result.rejection.error}`;
    }
  }

  document.addEventListener("keydown", (ev) => {
    if (ev.key === "z" && (ev.ctrlKey || ev.metaKey)) {
      ev.preventDefault();
      void client.undo().then((r) => {
        if (r?.ok) show(r.state);
      });
      return;
    }
    const action = keyToAction(ev, (label) => window.prompt(label));
    if (action) {
      ev.preventDefault();
      void apply(action);
    }
  });

  show(await client.createSession());
}

void start();
