"""Session reporting: per-event metric rows, CSV output, and figures.

``adaptabar report`` replays a trace while sampling metrics and bar
occupancy after every event, then writes ``events.csv``, the final
``snapshot.json``, and two rendered figures next to each other in the
output directory.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .session import Engine, SessionSnapshot, TraceEvent

CSV_COLUMNS = (
    "seq",
    "event",
    "error",
    "user",
    "churn",
    "bar_activations",
    "well_activations",
    "disabled_activations",
    "clicks_saved",
    "displayed_total",
    "well_total",
    "used_width",
    "available_width",
)


@dataclass(frozen=True)
class EventRow:
    """Metrics and occupancy sampled right after one event was applied."""

    seq: int
    event: str
    error: str
    user: str
    churn: int
    bar_activations: int
    well_activations: int
    disabled_activations: int
    clicks_saved: int
    displayed_total: int
    well_total: int
    used_width: int
    available_width: int


def _sample(engine: Engine, event: TraceEvent, errors_before: int) -> EventRow:
    error = ""
    if len(engine.errors) > errors_before:
        error = engine.errors[-1]["error"]
    displayed_total = 0
    well_total = 0
    for state in engine.toolbars.values():
        assert state.layout is not None
        displayed_total += len(state.layout.displayed)
        well_total += len(state.layout.well)
    first = engine.toolbars[engine.toolbar_order[0]]
    assert first.layout is not None
    used = first.layout.displayed[-1].end if first.layout.displayed else 0
    metrics = engine.metrics
    return EventRow(
        seq=event.seq,
        event=event.kind,
        error=error,
        user=engine.current_user,
        churn=metrics.churn,
        bar_activations=metrics.bar_activations,
        well_activations=metrics.well_activations,
        disabled_activations=metrics.disabled_activations,
        clicks_saved=metrics.clicks_saved,
        displayed_total=displayed_total,
        well_total=well_total,
        used_width=used,
        available_width=first.layout.available_width,
    )


def collect_rows(engine: Engine, trace: Sequence[TraceEvent]) -> list[EventRow]:
    """Replay the trace on the engine, sampling one row per event."""
    rows: list[EventRow] = []
    for event in trace:
        errors_before = len(engine.errors)
        engine.apply_event(event)
        rows.append(_sample(engine, event, errors_before))
    return rows


def write_csv(rows: Sequence[EventRow], path: Path) -> None:
    with open(path, "w", newline="", encoding="ascii") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([getattr(row, column) for column in CSV_COLUMNS])


def render_figures(rows: Sequence[EventRow], out_dir: Path) -> list[Path]:
    """Render the metrics and occupancy figures; returns the written paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    seqs = [row.seq for row in rows]
    written: list[Path] = []

    fig, ax = plt.subplots(figsize=(8, 4.5))
    series = (
        ("churn", "churn"),
        ("bar_activations", "bar activations"),
        ("well_activations", "well activations"),
        ("disabled_activations", "disabled activations"),
        ("clicks_saved", "clicks saved"),
    )
    for attr, label in series:
        ax.step(seqs, [getattr(row, attr) for row in rows], where="post", label=label)
    ax.set_xlabel("event seq")
    ax.set_ylabel("cumulative count")
    ax.set_title("Session metrics")
    ax.legend(loc="upper left", fontsize="small")
    fig.tight_layout()
    metrics_path = out_dir / "metrics.png"
    fig.savefig(metrics_path, dpi=120)
    plt.close(fig)
    written.append(metrics_path)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.step(
        seqs,
        [row.used_width for row in rows],
        where="post",
        label="used width (first toolbar)",
    )
    ax.step(
        seqs,
        [row.available_width for row in rows],
        where="post",
        linestyle="--",
        label="available width",
    )
    ax.set_xlabel("event seq")
    ax.set_ylabel("layout units")
    twin = ax.twinx()
    twin.step(
        seqs,
        [row.displayed_total for row in rows],
        where="post",
        color="tab:green",
        alpha=0.6,
        label="displayed controls (all toolbars)",
    )
    twin.set_ylabel("controls on bars")
    lines, labels = ax.get_legend_handles_labels()
    lines2, labels2 = twin.get_legend_handles_labels()
    ax.legend(lines + lines2, labels + labels2, loc="upper left", fontsize="small")
    ax.set_title("Bar occupancy")
    fig.tight_layout()
    occupancy_path = out_dir / "occupancy.png"
    fig.savefig(occupancy_path, dpi=120)
    plt.close(fig)
    written.append(occupancy_path)
    return written


def write_report(
    engine: Engine, trace: Sequence[TraceEvent], out_dir: Path | str
) -> SessionSnapshot:
    """Replay and write events.csv, snapshot.json and both figures."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = collect_rows(engine, trace)
    write_csv(rows, out_dir / "events.csv")
    snapshot = engine.snapshot()
    (out_dir / "snapshot.json").write_bytes(snapshot.canonical_bytes())
    render_figures(rows, out_dir)
    return snapshot
