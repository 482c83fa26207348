"""Command line entry points.

``adaptabar replay`` folds a trace file into a final snapshot, ``adaptabar
serve --stdio`` answers NDJSON events line by line (the playground's wire
protocol), and ``adaptabar report`` renders per-event metrics as CSV plus
figures. Exit codes: 0 success, 2 malformed input (trace, defs, or
profile), 3 I/O failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import DefsParseError, ProfileParseError, TraceParseError
from .profiles import save_profile
from .session import Engine, parse_trace_event, read_defs, read_trace

EXIT_PARSE = 2
EXIT_IO = 3


def _fail(code: int, message: str) -> None:
    click.echo(f"adaptabar: {message}", err=True)
    sys.exit(code)


def _load_inputs(trace_path: str, defs_path: str):
    try:
        defs = read_defs(defs_path)
        trace = read_trace(trace_path)
    except (TraceParseError, DefsParseError) as exc:
        _fail(EXIT_PARSE, str(exc))
    except OSError as exc:
        _fail(EXIT_IO, str(exc))
    return defs, trace


def _build_engine(defs, profiles_dir: str | None, user: str, width: int | None) -> Engine:
    try:
        return Engine(defs, user=user, width=width, store_dir=profiles_dir)
    except ProfileParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    except OSError as exc:
        _fail(EXIT_IO, str(exc))
    raise AssertionError("unreachable")


def _persist_profiles(engine: Engine) -> None:
    if engine.store_dir is None:
        return
    try:
        for profile in engine.profiles.values():
            save_profile(engine.store_dir, profile)
    except OSError as exc:
        _fail(EXIT_IO, str(exc))


profiles_option = click.option(
    "--profiles",
    "profiles_dir",
    envvar="ADAPTABAR_PROFILES",
    type=click.Path(file_okay=False),
    default=None,
    help="Profile store directory (env: ADAPTABAR_PROFILES).",
)


@click.group()
def main() -> None:
    """Deterministic adaptive-toolbar engine."""


@main.command()
@click.option("--trace", "trace_path", required=True, type=click.Path(dir_okay=False))
@click.option("--defs", "defs_path", required=True, type=click.Path(dir_okay=False))
@profiles_option
@click.option("--user", default="default", show_default=True)
@click.option("--width", type=int, default=None, help="Override toolbar available width.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
@click.option(
    "--save-profiles",
    is_flag=True,
    help="Write updated profiles back to the store after the replay.",
)
def replay(trace_path, defs_path, profiles_dir, user, width, out_path, save_profiles):
    """Replay a JSONL trace and emit the final canonical snapshot."""
    defs, trace = _load_inputs(trace_path, defs_path)
    engine = _build_engine(defs, profiles_dir, user, width)
    try:
        for event in trace:
            engine.apply_event(event)
    except TraceParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    payload = engine.snapshot().canonical_bytes()
    if out_path is None:
        sys.stdout.buffer.write(payload)
    else:
        try:
            Path(out_path).write_bytes(payload)
        except OSError as exc:
            _fail(EXIT_IO, str(exc))
    if save_profiles:
        _persist_profiles(engine)


@main.command()
@click.option("--stdio", is_flag=True, required=True, help="Speak NDJSON on stdin/stdout.")
@click.option("--defs", "defs_path", required=True, type=click.Path(dir_okay=False))
@profiles_option
@click.option("--user", default="default", show_default=True)
@click.option("--width", type=int, default=None)
@click.option("--no-save", is_flag=True, help="Do not persist profiles on shutdown.")
def serve(stdio, defs_path, profiles_dir, user, width, no_save):
    """Answer each inbound trace-event line with a full snapshot line.

    One snapshot line is emitted immediately on startup so a client can
    render the initial state before sending its first gesture. Profiles are
    saved on clean shutdown (EOF) unless --no-save is given.
    """
    try:
        defs = read_defs(defs_path)
    except DefsParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    except OSError as exc:
        _fail(EXIT_IO, str(exc))
    engine = _build_engine(defs, profiles_dir, user, width)

    out = sys.stdout
    out.write(engine.snapshot().canonical_json() + "\n")
    out.flush()
    next_seq = 0
    try:
        for line_no, line in enumerate(sys.stdin, start=1):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
                event = parse_trace_event(doc, line_no, default_seq=next_seq)
                engine.apply_event(event)
            except (ValueError, TraceParseError) as exc:
                _fail(EXIT_PARSE, f"line {line_no}: {exc}")
            next_seq = event.seq + 1
            out.write(engine.snapshot().canonical_json() + "\n")
            out.flush()
    except BrokenPipeError:
        pass
    if not no_save:
        _persist_profiles(engine)


@main.command()
@click.option("--trace", "trace_path", required=True, type=click.Path(dir_okay=False))
@click.option("--defs", "defs_path", required=True, type=click.Path(dir_okay=False))
@profiles_option
@click.option("--user", default="default", show_default=True)
@click.option("--width", type=int, default=None)
@click.option(
    "--out-dir",
    "out_dir",
    required=True,
    type=click.Path(file_okay=False),
    help="Directory receiving events.csv, snapshot.json and figures.",
)
@click.option("--save-profiles", is_flag=True)
def report(trace_path, defs_path, profiles_dir, user, width, out_dir, save_profiles):
    """Replay a trace and render metric curves and bar occupancy to files."""
    from .report import write_report

    defs, trace = _load_inputs(trace_path, defs_path)
    engine = _build_engine(defs, profiles_dir, user, width)
    try:
        write_report(engine, trace, out_dir)
    except TraceParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    except OSError as exc:
        _fail(EXIT_IO, str(exc))
    if save_profiles:
        _persist_profiles(engine)
    click.echo(f"report written to {out_dir}")


if __name__ == "__main__":
    main()
