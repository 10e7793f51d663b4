/**
 * Action palette: group and order the server's enabled-action list for
 * display. The server already decides which actions apply in the
 * current state; the client only arranges them.
 */
import type { PaletteEntry } from "./wire.js";

export interface PaletteGroup {
  title: string;
  entries: PaletteEntry[];
}

function groupOf(text: string): string {
  if (text.startsWith("move ")) return "Move";
  if (text.startsWith("construct ")) return "Construct";
  return "Edit";
}

const GROUP_ORDER = ["Move", "Edit", "Construct"];

export function paletteGroups(entries: PaletteEntry[]): PaletteGroup[] {
  const byGroup = new Map<string, PaletteEntry[]>();
  for (const e of entries) {
    const g = groupOf(e.text);
    const bucket = byGroup.get(g);
    if (bucket) bucket.push(e);
    else byGroup.set(g, [e]);
  }
  return GROUP_ORDER.filter((t) => byGroup.has(t)).map((t) => ({
    title: t,
    entries: byGroup.get(t)!,
  }));
}

/** Entries the user can actually click right now. */
export function enabledCount(entries: PaletteEntry[]): number {
  return entries.filter((e) => e.enabled).length;
}
