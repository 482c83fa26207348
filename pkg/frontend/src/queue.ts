/**
 * Gesture serialization: one request in flight at a time, with a pending
 * slot where continuous gestures (pointer_move, tick) coalesce latest-wins.
 * Discrete gestures (clicks, drops, toggles) are never dropped; they queue
 * behind the in-flight request in order.
 */

import type { Snapshot, TraceEvent } from "./protocol.js";

export type SendFn = (event: TraceEvent) => Promise<Snapshot>;

const COALESCE: ReadonlySet<string> = new Set(["pointer_move", "tick"]);

interface Pending {
  event: TraceEvent;
  resolvers: {
    resolve: (snapshot: Snapshot) => void;
    reject: (err: unknown) => void;
  }[];
}

export class GestureQueue {
  private inFlight = false;
  private pending: Pending[] = [];

  constructor(private readonly send: SendFn) {}

  /** Number of queued (not yet sent) gestures. */
  get depth(): number {
    return this.pending.length;
  }

  submit(event: TraceEvent): Promise<Snapshot> {
    return new Promise<Snapshot>((resolve, reject) => {
      const last = this.pending[this.pending.length - 1];
      if (last && COALESCE.has(last.event.t) && last.event.t === event.t) {
        // stale continuous gesture: replace it, resolve both with the reply
        last.event = event;
        last.resolvers.push({ resolve, reject });
      } else {
        this.pending.push({ event, resolvers: [{ resolve, reject }] });
      }
      void this.pump();
    });
  }

  private async pump(): Promise<void> {
    if (this.inFlight) return;
    const next = this.pending.shift();
    if (!next) return;
    this.inFlight = true;
    try {
      const snapshot = await this.send(next.event);
      for (const r of next.resolvers) r.resolve(snapshot);
    } catch (err) {
      for (const r of next.resolvers) r.reject(err);
    } finally {
      this.inFlight = false;
      void this.pump();
    }
  }
}
