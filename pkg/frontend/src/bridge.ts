/**
 * Client side of the thin local bridge in front of the engine process.
 *
 * POST /event relays one NDJSON line to the engine and returns its snapshot
 * reply; GET /snapshot returns the most recent snapshot (the bootstrap one
 * right after startup). A failed request flips the connection state so the
 * shell can show a reconnect banner; gestures made while disconnected are
 * dropped, not queued.
 */

import type { Snapshot, TraceEvent } from "./protocol.js";
import { isSnapshot } from "./protocol.js";

export class BridgeClient {
  connected = true;
  onConnectionChange: ((connected: boolean) => void) | null = null;

  constructor(private readonly baseUrl = "") {}

  private setConnected(connected: boolean): void {
    if (this.connected !== connected) {
      this.connected = connected;
      this.onConnectionChange?.(connected);
    }
  }

  async initialSnapshot(): Promise<Snapshot> {
    const response = await fetch(`${this.baseUrl}/snapshot`);
    if (!response.ok) throw new Error(`snapshot fetch failed: ${response.status}`);
    const doc: unknown = await response.json();
    if (!isSnapshot(doc)) throw new Error("malformed snapshot from bridge");
    return doc;
  }

  async sendEvent(event: TraceEvent): Promise<Snapshot> {
    if (!this.connected) throw new Error("bridge disconnected; gesture dropped");
    try {
      const response = await fetch(`${this.baseUrl}/event`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(event),
      });
      if (!response.ok) throw new Error(`bridge error: ${response.status}`);
      const doc: unknown = await response.json();
      if (!isSnapshot(doc)) throw new Error("malformed snapshot from bridge");
      this.setConnected(true);
      return doc;
    } catch (err) {
      this.setConnected(false);
      throw err;
    }
  }

  async reconnect(): Promise<Snapshot> {
    const snapshot = await this.initialSnapshot();
    this.setConnected(true);
    return snapshot;
  }
}
