/**
 * Wire types for the engine's NDJSON protocol.
 *
 * Each outbound line is one trace event; each reply line is a full session
 * snapshot. The UI never invents state of its own: everything rendered is a
 * projection of the last snapshot received.
 */

export interface PlacedControl {
  id: string;
  x: number;
  width: number;
}

export interface ToolbarLayout {
  available_width: number;
  displayed: PlacedControl[];
  well: string[];
  user_hidden: string[];
}

export interface ControlDoc {
  id: string;
  action: string;
  label: string;
  icon_width: number;
  label_width: number;
  base_weight: string;
  enabled: boolean;
  definition_index: number;
}

export interface ToolbarDoc {
  config: {
    available_width: number;
    spacing: number;
    display_mode: "icon_only" | "icon_label_right";
    placement_policy: "stable" | "priority";
    alpha: string;
    default_icon_width: number;
    default_label_width: number;
  };
  controls: ControlDoc[];
  layout: ToolbarLayout;
  forced: string | null;
}

export interface Snapshot {
  toolbar_order: string[];
  toolbars: Record<string, ToolbarDoc>;
  stack: { members: string[]; selected: string | null } | null;
  slide_panel: {
    progress: string;
    target: 0 | 1;
    proximity_radius: number;
    duration_ms: number;
  };
  sections: { widths: number[]; toolbars: string[] | null } | null;
  chain: {
    context: string;
    values: (string | null)[];
    options: string[][];
    highlight: boolean;
  } | null;
  palettes: {
    static: string[];
    dynamic: string[];
    current_context: string;
  } | null;
  profile: { user: string; digest: string };
  metrics: {
    churn: number;
    bar_activations: number;
    well_activations: number;
    disabled_activations: number;
    clicks_saved: number;
  };
  errors: { seq: number; event: string; error: string; detail: string }[];
}

export type DragSourceDoc =
  | { kind: "menu_item"; path: string[]; action: string }
  | { kind: "object_operation"; action: string; label: string };

export type TraceEvent =
  | { t: "activate"; control: string }
  | { t: "pointer_move"; distance: number }
  | { t: "tick"; ms: number }
  | { t: "resize"; width: number }
  | { t: "set_context"; module: string }
  | { t: "drag_add"; source: DragSourceDoc; position: number; toolbar?: string }
  | { t: "remove_control"; id: string }
  | { t: "qc_toggle"; id: string }
  | { t: "stack_select"; toolbar: string }
  | { t: "drag_boundary"; boundary: number; delta: number }
  | { t: "chain_set"; position: number; option: string }
  | { t: "chain_clear_all" }
  | { t: "toggle_highlight" }
  | { t: "switch_user"; user: string };

/** Shallow structural check before trusting a parsed reply line. */
export function isSnapshot(value: unknown): value is Snapshot {
  if (typeof value !== "object" || value === null) return false;
  const doc = value as Record<string, unknown>;
  return (
    Array.isArray(doc.toolbar_order) &&
    typeof doc.toolbars === "object" &&
    doc.toolbars !== null &&
    typeof doc.metrics === "object" &&
    doc.metrics !== null &&
    typeof doc.slide_panel === "object" &&
    doc.slide_panel !== null &&
    Array.isArray(doc.errors)
  );
}
