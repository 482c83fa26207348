/**
 * Gesture-to-event mapping: every user interaction becomes exactly one
 * trace event on the wire. No gesture mutates local state directly.
 */

import type { DragSourceDoc, TraceEvent } from "./protocol.js";

export function clickButton(controlId: string): TraceEvent {
  return { t: "activate", control: controlId };
}

export function pickOverflow(controlId: string): TraceEvent {
  return { t: "activate", control: controlId };
}

export function windowResize(width: number): TraceEvent {
  return { t: "resize", width: Math.max(0, Math.round(width)) };
}

export function pointerNearPanel(distance: number): TraceEvent {
  return { t: "pointer_move", distance: Math.max(0, Math.round(distance)) };
}

export function animationTick(ms: number): TraceEvent {
  return { t: "tick", ms: Math.max(0, Math.round(ms)) };
}

export function dropMenuItem(
  path: string[],
  action: string,
  position: number,
  toolbar?: string,
): TraceEvent {
  const source: DragSourceDoc = { kind: "menu_item", path, action };
  return toolbar !== undefined
    ? { t: "drag_add", source, position, toolbar }
    : { t: "drag_add", source, position };
}

export function qcCheckbox(controlId: string): TraceEvent {
  return { t: "qc_toggle", id: controlId };
}

export function removeButton(controlId: string): TraceEvent {
  return { t: "remove_control", id: controlId };
}

export function tabClick(toolbarId: string): TraceEvent {
  return { t: "stack_select", toolbar: toolbarId };
}

export function handleDrag(boundary: number, delta: number): TraceEvent {
  return { t: "drag_boundary", boundary, delta: Math.round(delta) };
}

export function dropdownPick(position: number, option: string): TraceEvent {
  return { t: "chain_set", position, option };
}

export function clearAllClick(): TraceEvent {
  return { t: "chain_clear_all" };
}

export function highlightToggle(): TraceEvent {
  return { t: "toggle_highlight" };
}

export function userSwitch(user: string): TraceEvent {
  return { t: "switch_user", user };
}

export function paletteContextPick(module: string): TraceEvent {
  return { t: "set_context", module };
}

/** Slot index for a drop at pixel offset x: count buttons entirely left of x. */
export function dropSlot(buttonsAt: { x: number; width: number }[], x: number): number {
  let slot = 0;
  for (const button of buttonsAt) {
    if (button.x + button.width / 2 <= x) slot += 1;
  }
  return slot;
}
