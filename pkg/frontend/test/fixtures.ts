/** Snapshot fixtures mirroring the engine's wire format. */

import type { Snapshot } from "../src/protocol.js";

export function snapshotFixture(overrides: Partial<Snapshot> = {}): Snapshot {
  const base: Snapshot = {
    toolbar_order: ["main"],
    toolbars: {
      main: {
        config: {
          available_width: 100,
          spacing: 0,
          display_mode: "icon_only",
          placement_policy: "stable",
          alpha: "1",
          default_icon_width: 16,
          default_label_width: 32,
        },
        controls: [
          {
            id: "A",
            action: "act.a",
            label: "Alpha",
            icon_width: 40,
            label_width: 0,
            base_weight: "1",
            enabled: true,
            definition_index: 0,
          },
          {
            id: "B",
            action: "act.b",
            label: "Beta",
            icon_width: 40,
            label_width: 0,
            base_weight: "1",
            enabled: true,
            definition_index: 1,
          },
          {
            id: "C",
            action: "act.c",
            label: "Gamma",
            icon_width: 40,
            label_width: 0,
            base_weight: "1",
            enabled: true,
            definition_index: 2,
          },
        ],
        layout: {
          available_width: 100,
          displayed: [
            { id: "A", x: 0, width: 40 },
            { id: "B", x: 40, width: 40 },
          ],
          well: ["C"],
          user_hidden: [],
        },
        forced: null,
      },
    },
    stack: null,
    slide_panel: {
      progress: "0",
      target: 0,
      proximity_radius: 24,
      duration_ms: 150,
    },
    sections: null,
    chain: null,
    palettes: null,
    profile: { user: "default", digest: "0".repeat(64) },
    metrics: {
      churn: 0,
      bar_activations: 0,
      well_activations: 0,
      disabled_activations: 0,
      clicks_saved: 0,
    },
    errors: [],
  };
  return { ...base, ...overrides };
}
