/**
 * Pure projection of a snapshot into everything the DOM layer renders.
 *
 * Button intervals are copied from the snapshot untouched (the engine owns
 * layout); the slide panel offset is progress times the panel's pixel width;
 * the overflow dropdown lists exactly the well ids in order.
 */

import type { Snapshot } from "./protocol.js";

export interface ButtonVM {
  id: string;
  label: string;
  x: number;
  width: number;
  enabled: boolean;
  showLabel: boolean;
  hint: string | null;
}

export interface OverflowEntryVM {
  id: string;
  label: string;
}

export interface QcEntryVM {
  id: string;
  label: string;
  selected: boolean;
}

export interface ToolbarVM {
  id: string;
  availableWidth: number;
  buttons: ButtonVM[];
  overflow: OverflowEntryVM[];
  qc: QcEntryVM[];
  sectionIndex: number | null;
}

export interface ChainDropdownVM {
  position: number;
  options: string[];
  value: string | null;
  enabled: boolean;
}

export interface ViewModel {
  user: string;
  toolbars: ToolbarVM[];
  stackTabs: { id: string; selected: boolean }[];
  slide: { progress: number; offset: number; panelWidth: number; out: boolean };
  sections: { widths: number[] } | null;
  chain: {
    context: string;
    dropdowns: ChainDropdownVM[];
    highlight: boolean;
  } | null;
  palettes: { static: string[]; dynamic: string[]; context: string } | null;
  metrics: Snapshot["metrics"];
  errors: Snapshot["errors"];
}

export function renderSnapshot(snapshot: Snapshot, panelWidth = 200): ViewModel {
  const toolbars: ToolbarVM[] = snapshot.toolbar_order.map((toolbarId) => {
    const doc = snapshot.toolbars[toolbarId];
    if (!doc) throw new Error(`snapshot missing toolbar ${toolbarId}`);
    const labels = new Map(doc.controls.map((c) => [c.id, c.label]));
    const enabled = new Map(doc.controls.map((c) => [c.id, c.enabled]));
    const iconOnly = doc.config.display_mode === "icon_only";
    const hidden = new Set(doc.layout.user_hidden);
    const sectionIndex =
      snapshot.sections?.toolbars?.indexOf(toolbarId) ?? -1;
    return {
      id: toolbarId,
      availableWidth: doc.layout.available_width,
      buttons: doc.layout.displayed.map((placed) => ({
        id: placed.id,
        label: labels.get(placed.id) ?? placed.id,
        x: placed.x,
        width: placed.width,
        enabled: enabled.get(placed.id) ?? true,
        showLabel: !iconOnly,
        hint: iconOnly ? labels.get(placed.id) ?? placed.id : null,
      })),
      overflow: doc.layout.well.map((id) => ({
        id,
        label: labels.get(id) ?? id,
      })),
      qc: doc.controls.map((c) => ({
        id: c.id,
        label: c.label,
        selected: !hidden.has(c.id),
      })),
      sectionIndex: sectionIndex >= 0 ? sectionIndex : null,
    };
  });

  const progress = Number.parseFloat(snapshot.slide_panel.progress);
  const chain = snapshot.chain
    ? {
        context: snapshot.chain.context,
        highlight: snapshot.chain.highlight,
        dropdowns: snapshot.chain.options.map((options, position) => ({
          position,
          options,
          value: snapshot.chain!.values[position] ?? null,
          enabled: options.length > 0,
        })),
      }
    : null;

  return {
    user: snapshot.profile.user,
    toolbars,
    stackTabs: (snapshot.stack?.members ?? []).map((id) => ({
      id,
      selected: snapshot.stack?.selected === id,
    })),
    slide: {
      progress,
      offset: progress * panelWidth,
      panelWidth,
      out: progress > 0,
    },
    sections: snapshot.sections ? { widths: snapshot.sections.widths } : null,
    chain,
    palettes: snapshot.palettes
      ? {
          static: snapshot.palettes.static,
          dynamic: snapshot.palettes.dynamic,
          context: snapshot.palettes.current_context,
        }
      : null,
    metrics: snapshot.metrics,
    errors: snapshot.errors,
  };
}
