/**
 * Playground shell: connect to the bridge, render every snapshot, forward
 * every gesture, and keep ticking at 50 ms while a slide is in flight.
 */

import { BridgeClient } from "./bridge.js";
import { renderView, type MenuLeaf } from "./dom.js";
import { animationTick, pointerNearPanel, windowResize } from "./gestures.js";
import type { Snapshot, TraceEvent } from "./protocol.js";
import { GestureQueue } from "./queue.js";
import { renderSnapshot } from "./viewmodel.js";

const PANEL_WIDTH = 200;
const TICK_MS = 50;

const DEMO_MENU: MenuLeaf[] = [
  { path: ["Format", "Font", "Bold"], action: "format.bold" },
  { path: ["Format", "Font", "Italic"], action: "format.italic" },
  { path: ["File", "Export", "PDF"], action: "file.export.pdf" },
  { path: ["Tools", "Spelling"], action: "tools.spelling" },
];

function main(): void {
  const root = document.getElementById("app");
  const banner = document.getElementById("banner");
  if (!root || !banner) throw new Error("missing #app or #banner");

  const bridge = new BridgeClient();
  const queue = new GestureQueue((event) => bridge.sendEvent(event));
  let tickTimer: number | null = null;

  bridge.onConnectionChange = (connected) => {
    banner.hidden = connected;
  };

  function draw(snapshot: Snapshot): void {
    const vm = renderSnapshot(snapshot, PANEL_WIDTH);
    renderView(root!, vm, {
      onGesture: forward,
      menu: DEMO_MENU,
      contexts: availableContexts(snapshot),
    });
    scheduleTicks(snapshot);
  }

  function availableContexts(snapshot: Snapshot): string[] {
    const set = new Set<string>();
    if (snapshot.palettes) set.add(snapshot.palettes.current_context);
    if (snapshot.chain) set.add(snapshot.chain.context);
    // palette registries are static per defs file; offer what the demo ships
    for (const context of ["draw", "text", "report", "mail"]) set.add(context);
    return Array.from(set);
  }

  function forward(event: TraceEvent): void {
    if (!bridge.connected) return; // dropped, not queued
    queue.submit(event).then(draw, () => undefined);
  }

  function scheduleTicks(snapshot: Snapshot): void {
    const progress = Number.parseFloat(snapshot.slide_panel.progress);
    const target = snapshot.slide_panel.target;
    const inFlight = progress !== target;
    if (inFlight && tickTimer === null) {
      tickTimer = window.setTimeout(() => {
        tickTimer = null;
        forward(animationTick(TICK_MS));
      }, TICK_MS);
    }
  }

  window.addEventListener("resize", () => {
    forward(windowResize(root!.clientWidth || window.innerWidth));
  });

  document.addEventListener("mousemove", (event) => {
    // distance from the left screen edge, where the slide tray lives
    forward(pointerNearPanel(event.clientX));
  });

  banner.addEventListener("click", () => {
    bridge.reconnect().then(draw, () => undefined);
  });

  bridge.initialSnapshot().then(draw, (err) => {
    banner.hidden = false;
    banner.textContent = `engine unreachable: ${err}`;
  });
}

main();
