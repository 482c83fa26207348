"""Trace replay, the engine that folds events into state, and snapshots.

A trace is JSON Lines, one event per line with its kind under ``t``. The
engine folds events through the module operations in order; per-event
failures (unknown ids, invalid options, ...) are appended to the snapshot's
error log without aborting, so fuzzed traces can exercise invariants end to
end. Only malformed input itself aborts. Replaying the same trace against
the same definitions and starting profiles is a pure function: two runs
produce byte-identical snapshots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .canonical import canonical_bytes, canonical_json
from .chain import (
    ChainState,
    chain_clear_all,
    chain_set_context,
    chain_set_value,
    chain_toggle_highlight,
    new_chain,
    providers_from_table,
)
from .core import (
    ControlSpec,
    DisplayMode,
    PlacementPolicy,
    ToolbarConfig,
    ToolbarDef,
    register_control,
)
from .customize import (
    DragSource,
    MenuItem,
    ObjectOperation,
    PaletteSet,
    drag_add,
    menu_depth,
    qc_toggle,
    remove_control,
    set_context,
)
from .errors import (
    BadBoundaryError,
    BadPositionError,
    DefsParseError,
    EngineError,
    TraceParseError,
    UnknownContextError,
    UnknownControlError,
)
from .fitting import (
    DisplayedSetChanged,
    LayoutEvent,
    ToolbarState,
    apply_resize,
    make_toolbar_state,
    refit,
)
from .machines import (
    PointerAt,
    SectionRow,
    SlidePanel,
    TickMs,
    ToolbarStack,
    drag_section_boundary,
    slide_step,
    stack_select,
)
from .priority import UsageProfile, record_activation
from .profiles import check_user_id, load_profile, profile_digest
from .rational import to_fraction

# --- trace events ----------------------------------------------------------

EVENT_KINDS = (
    "activate",
    "pointer_move",
    "tick",
    "resize",
    "set_context",
    "drag_add",
    "remove_control",
    "qc_toggle",
    "stack_select",
    "drag_boundary",
    "chain_set",
    "chain_clear_all",
    "toggle_highlight",
    "switch_user",
)


@dataclass(frozen=True)
class TraceEvent:
    """One replayable stimulus: a kind plus its validated payload."""

    seq: int
    kind: str
    args: Mapping[str, object] = field(default_factory=dict)

    def arg(self, name: str) -> object:
        return self.args[name]


def _need(doc: Mapping, key: str, line_no: int) -> object:
    if key not in doc:
        raise TraceParseError(f"line {line_no}: event {doc.get('t')!r} missing {key!r}")
    return doc[key]


def _need_str(doc: Mapping, key: str, line_no: int) -> str:
    value = _need(doc, key, line_no)
    if not isinstance(value, str) or not value:
        raise TraceParseError(f"line {line_no}: {key!r} must be a non-empty string")
    return value


def _need_int(doc: Mapping, key: str, line_no: int, *, minimum: int | None = None) -> int:
    value = _need(doc, key, line_no)
    if isinstance(value, bool) or not isinstance(value, int):
        raise TraceParseError(f"line {line_no}: {key!r} must be an integer")
    if minimum is not None and value < minimum:
        raise TraceParseError(f"line {line_no}: {key!r} must be >= {minimum}")
    return value


def _parse_drag_source(doc: Mapping, line_no: int) -> DragSource:
    source = _need(doc, "source", line_no)
    if not isinstance(source, dict):
        raise TraceParseError(f"line {line_no}: source must be an object")
    kind = source.get("kind")
    if kind == "menu_item":
        path = source.get("path")
        if (
            not isinstance(path, list)
            or not path
            or not all(isinstance(p, str) and p for p in path)
        ):
            raise TraceParseError(f"line {line_no}: menu path must be non-empty strings")
        return MenuItem(path=tuple(path), action=_need_str(source, "action", line_no))
    if kind == "object_operation":
        return ObjectOperation(
            action=_need_str(source, "action", line_no),
            label=_need_str(source, "label", line_no),
        )
    raise TraceParseError(f"line {line_no}: unknown drag source kind {kind!r}")


def parse_trace_event(doc: object, line_no: int, default_seq: int) -> TraceEvent:
    """Validate one decoded trace line into a TraceEvent."""
    if not isinstance(doc, dict):
        raise TraceParseError(f"line {line_no}: event must be a JSON object")
    kind = doc.get("t")
    if kind not in EVENT_KINDS:
        raise TraceParseError(f"line {line_no}: unknown event kind {kind!r}")
    seq = doc.get("seq", default_seq)
    if isinstance(seq, bool) or not isinstance(seq, int):
        raise TraceParseError(f"line {line_no}: seq must be an integer")

    args: dict[str, object] = {}
    if kind == "activate":
        args["control"] = _need_str(doc, "control", line_no)
    elif kind == "pointer_move":
        args["distance"] = _need_int(doc, "distance", line_no, minimum=0)
    elif kind == "tick":
        args["ms"] = _need_int(doc, "ms", line_no, minimum=0)
    elif kind == "resize":
        args["width"] = _need_int(doc, "width", line_no, minimum=0)
    elif kind == "set_context":
        args["module"] = _need_str(doc, "module", line_no)
    elif kind == "drag_add":
        args["source"] = _parse_drag_source(doc, line_no)
        args["position"] = _need_int(doc, "position", line_no, minimum=0)
        if "toolbar" in doc:
            args["toolbar"] = _need_str(doc, "toolbar", line_no)
    elif kind == "remove_control":
        args["id"] = _need_str(doc, "id", line_no)
    elif kind == "qc_toggle":
        args["id"] = _need_str(doc, "id", line_no)
    elif kind == "stack_select":
        args["toolbar"] = _need_str(doc, "toolbar", line_no)
    elif kind == "drag_boundary":
        args["boundary"] = _need_int(doc, "boundary", line_no, minimum=0)
        args["delta"] = _need_int(doc, "delta", line_no)
    elif kind == "chain_set":
        args["position"] = _need_int(doc, "position", line_no, minimum=0)
        args["option"] = _need_str(doc, "option", line_no)
    elif kind == "switch_user":
        user = _need_str(doc, "user", line_no)
        try:
            check_user_id(user)
        except EngineError as exc:
            raise TraceParseError(f"line {line_no}: {exc}") from exc
        args["user"] = user
    return TraceEvent(seq=seq, kind=kind, args=args)


def parse_trace(lines: Iterable[str]) -> list[TraceEvent]:
    """Parse JSON Lines trace text; malformed input aborts with TraceParse."""
    events: list[TraceEvent] = []
    last_seq: int | None = None
    for line_no, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            doc = json.loads(text)
        except ValueError as exc:
            raise TraceParseError(f"line {line_no}: {exc}") from exc
        event = parse_trace_event(doc, line_no, default_seq=len(events))
        if last_seq is not None and event.seq <= last_seq:
            raise TraceParseError(
                f"line {line_no}: seq {event.seq} not greater than {last_seq}"
            )
        last_seq = event.seq
        events.append(event)
    return events


def read_trace(path: Path | str) -> list[TraceEvent]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_trace(handle)


# --- definitions document ---------------------------------------------------


@dataclass(frozen=True)
class EngineDefs:
    """Parsed toolbar/stack/panel/section/chain/palette definitions."""

    toolbars: tuple[ToolbarDef, ...]
    stack: ToolbarStack | None = None
    panel: SlidePanel = SlidePanel()
    sections: SectionRow | None = None
    section_toolbars: tuple[str, ...] | None = None
    chain_context: str | None = None
    chain_table: Mapping[str, Mapping[str, Sequence[str]]] | None = None
    chain_positions: int = 0
    palettes: PaletteSet | None = None


def _defs_int(doc: Mapping, key: str, default: int | None = None, *, minimum: int = 0) -> int:
    if key not in doc:
        if default is None:
            raise DefsParseError(f"missing required field {key!r}")
        return default
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DefsParseError(f"{key!r} must be an integer")
    if value < minimum:
        raise DefsParseError(f"{key!r} must be >= {minimum}")
    return value


def _parse_control(doc: object, config: ToolbarConfig) -> ControlSpec:
    if not isinstance(doc, dict):
        raise DefsParseError("control entries must be objects")
    if "id" not in doc or not isinstance(doc["id"], str) or not doc["id"]:
        raise DefsParseError("control id must be a non-empty string")
    control_id = doc["id"]
    try:
        return ControlSpec(
            id=control_id,
            action=doc.get("action", control_id),
            label=doc.get("label", control_id),
            icon_width=_defs_int(doc, "icon_width", config.default_icon_width),
            label_width=_defs_int(doc, "label_width", config.default_label_width),
            base_weight=to_fraction(doc.get("base_weight", 0), name="base_weight"),
            enabled=bool(doc.get("enabled", True)),
        )
    except (TypeError, ValueError) as exc:
        raise DefsParseError(f"control {control_id!r}: {exc}") from exc


def _parse_config(doc: object) -> ToolbarConfig:
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise DefsParseError("config must be an object")
    mode_name = doc.get("display_mode", DisplayMode.ICON_ONLY.value)
    try:
        mode = DisplayMode(mode_name)
    except ValueError:
        raise DefsParseError(f"unknown display_mode {mode_name!r}") from None
    policy_name = doc.get("placement_policy", PlacementPolicy.STABLE_ORDER.value)
    try:
        policy = PlacementPolicy(policy_name)
    except ValueError:
        raise DefsParseError(f"unknown placement_policy {policy_name!r}") from None
    try:
        return ToolbarConfig(
            available_width=_defs_int(doc, "available_width"),
            spacing=_defs_int(doc, "spacing", 4),
            display_mode=mode,
            placement_policy=policy,
            alpha=to_fraction(doc.get("alpha", 1), name="alpha"),
            default_icon_width=_defs_int(doc, "default_icon_width", 16),
            default_label_width=_defs_int(doc, "default_label_width", 32),
        )
    except (TypeError, ValueError) as exc:
        raise DefsParseError(str(exc)) from exc


def parse_defs(doc: object) -> EngineDefs:
    """Validate a decoded definitions document."""
    if not isinstance(doc, dict):
        raise DefsParseError("definitions document must be a JSON object")
    toolbars_doc = doc.get("toolbars")
    if not isinstance(toolbars_doc, list) or not toolbars_doc:
        raise DefsParseError("definitions need a non-empty 'toolbars' list")

    toolbars: list[ToolbarDef] = []
    for entry in toolbars_doc:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise DefsParseError("each toolbar needs a string 'id'")
        config = _parse_config(entry.get("config"))
        defn = ToolbarDef(toolbar_id=entry["id"], config=config)
        for control_doc in entry.get("controls", []):
            try:
                defn = register_control(defn, _parse_control(control_doc, config))
            except EngineError as exc:
                raise DefsParseError(f"toolbar {entry['id']!r}: {exc}") from exc
        toolbars.append(defn)
    toolbar_ids = [t.toolbar_id for t in toolbars]
    if len(set(toolbar_ids)) != len(toolbar_ids):
        raise DefsParseError("toolbar ids must be unique")

    stack = None
    if "stack" in doc and doc["stack"] is not None:
        stack_doc = doc["stack"]
        if not isinstance(stack_doc, dict) or not isinstance(stack_doc.get("members"), list):
            raise DefsParseError("stack needs a 'members' list")
        members = stack_doc["members"]
        for member in members:
            if member not in toolbar_ids:
                raise DefsParseError(f"stack member {member!r} is not a defined toolbar")
        try:
            stack = ToolbarStack(members=tuple(members), selected=stack_doc.get("selected"))
        except ValueError as exc:
            raise DefsParseError(str(exc)) from exc

    panel = SlidePanel()
    if "slide_panel" in doc and doc["slide_panel"] is not None:
        panel_doc = doc["slide_panel"]
        if not isinstance(panel_doc, dict):
            raise DefsParseError("slide_panel must be an object")
        try:
            panel = SlidePanel(
                proximity_radius=_defs_int(panel_doc, "proximity_radius", 24),
                duration_ms=_defs_int(panel_doc, "duration_ms", 150, minimum=1),
            )
        except ValueError as exc:
            raise DefsParseError(str(exc)) from exc

    sections = None
    section_toolbars = None
    if "sections" in doc and doc["sections"] is not None:
        sections_doc = doc["sections"]
        if not isinstance(sections_doc, dict) or not isinstance(sections_doc.get("widths"), list):
            raise DefsParseError("sections need a 'widths' list")
        widths = sections_doc["widths"]
        for width in widths:
            if isinstance(width, bool) or not isinstance(width, int) or width < 0:
                raise DefsParseError("section widths must be non-negative integers")
        sections = SectionRow(widths=tuple(widths))
        if sections_doc.get("toolbars") is not None:
            mapped = sections_doc["toolbars"]
            if not isinstance(mapped, list) or len(mapped) != len(widths):
                raise DefsParseError("sections 'toolbars' must match 'widths' in length")
            for toolbar_id in mapped:
                if toolbar_id not in toolbar_ids:
                    raise DefsParseError(f"section toolbar {toolbar_id!r} is not defined")
            if len(set(mapped)) != len(mapped):
                raise DefsParseError("section toolbars must be distinct")
            section_toolbars = tuple(mapped)

    chain_context = None
    chain_table = None
    chain_positions = 0
    if "chain" in doc and doc["chain"] is not None:
        chain_doc = doc["chain"]
        if not isinstance(chain_doc, dict):
            raise DefsParseError("chain must be an object")
        chain_context = chain_doc.get("context")
        if not isinstance(chain_context, str) or not chain_context:
            raise DefsParseError("chain needs a non-empty 'context'")
        chain_positions = _defs_int(chain_doc, "positions", 0)
        table = chain_doc.get("options", {})
        if not isinstance(table, dict):
            raise DefsParseError("chain 'options' must map context -> option -> children")
        for context, mapping in table.items():
            if not isinstance(mapping, dict):
                raise DefsParseError(f"chain options for {context!r} must be an object")
            for option, children in mapping.items():
                if not isinstance(children, list) or not all(
                    isinstance(c, str) for c in children
                ):
                    raise DefsParseError(
                        f"chain options {context!r}/{option!r} must be a string list"
                    )
        chain_table = table

    palettes = None
    if "palettes" in doc and doc["palettes"] is not None:
        palette_doc = doc["palettes"]
        if not isinstance(palette_doc, dict):
            raise DefsParseError("palettes must be an object")
        contexts = palette_doc.get("contexts")
        current = palette_doc.get("current")
        if not isinstance(contexts, dict) or not contexts:
            raise DefsParseError("palettes need a non-empty 'contexts' map")
        try:
            palettes = PaletteSet(
                static_palette=frozenset(palette_doc.get("static", [])),
                context_registry={
                    module: frozenset(ids) for module, ids in contexts.items()
                },
                current_context=current,
            )
        except (TypeError, EngineError) as exc:
            raise DefsParseError(str(exc)) from exc

    return EngineDefs(
        toolbars=tuple(toolbars),
        stack=stack,
        panel=panel,
        sections=sections,
        section_toolbars=section_toolbars,
        chain_context=chain_context,
        chain_table=chain_table,
        chain_positions=chain_positions,
        palettes=palettes,
    )


def read_defs(path: Path | str) -> EngineDefs:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except ValueError as exc:
            raise DefsParseError(f"{path}: {exc}") from exc
    return parse_defs(doc)


# --- metrics ----------------------------------------------------------------


@dataclass
class Metrics:
    """Counters describing how well the bar served the session.

    ``churn`` counts refits whose displayed set changed (the cost of things
    shifting around); ``clicks_saved`` sums menu depth minus one over bar
    activations of controls that originated from menu paths.
    """

    churn: int = 0
    bar_activations: int = 0
    well_activations: int = 0
    disabled_activations: int = 0
    clicks_saved: int = 0

    def as_doc(self) -> dict:
        return {
            "churn": self.churn,
            "bar_activations": self.bar_activations,
            "well_activations": self.well_activations,
            "disabled_activations": self.disabled_activations,
            "clicks_saved": self.clicks_saved,
        }


# --- snapshot ----------------------------------------------------------------


@dataclass(frozen=True)
class SessionSnapshot:
    """Canonical, serializable engine state plus metrics and the error log."""

    data: Mapping[str, object]

    def canonical_bytes(self) -> bytes:
        return canonical_bytes(self.data)

    def canonical_json(self) -> str:
        return canonical_json(self.data)


# --- engine -------------------------------------------------------------------


class Engine:
    """Folds trace events through the toolbar, machine, chain and palette ops.

    One engine instance is operated by a single caller at a time; distinct
    sessions can run in parallel because nothing here is shared.
    """

    def __init__(
        self,
        defs: EngineDefs,
        *,
        user: str = "default",
        width: int | None = None,
        store_dir: Path | str | None = None,
        profiles: Mapping[str, UsageProfile] | None = None,
    ) -> None:
        check_user_id(user)
        self.defs = defs
        self.store_dir = Path(store_dir) if store_dir is not None else None
        self.profiles: dict[str, UsageProfile] = dict(profiles or {})
        self.current_user = user
        self._ensure_profile(user)

        self.toolbar_order: list[str] = [t.toolbar_id for t in defs.toolbars]
        self.sections = defs.sections
        self.section_toolbars = defs.section_toolbars
        self.toolbars: dict[str, ToolbarState] = {}
        profile = self.profile
        for defn in defs.toolbars:
            initial_width = self._initial_width(defn.toolbar_id, defn, width)
            if initial_width != defn.config.available_width:
                defn = replace(
                    defn, config=replace(defn.config, available_width=initial_width)
                )
            self.toolbars[defn.toolbar_id] = make_toolbar_state(defn, profile)

        self.stack = defs.stack
        self.panel = defs.panel
        self.palettes = defs.palettes
        self.chain: ChainState | None = None
        if defs.chain_context is not None:
            providers = providers_from_table(
                defs.chain_table or {}, defs.chain_positions
            )
            self.chain = new_chain(defs.chain_context, providers)

        self.metrics = Metrics()
        self.errors: list[dict] = []
        self._menu_depths: dict[tuple[str, str], int] = {}
        self._last_seq: int | None = None

    # -- profile bookkeeping --

    @property
    def profile(self) -> UsageProfile:
        return self.profiles[self.current_user]

    def _ensure_profile(self, user: str) -> None:
        if user in self.profiles:
            return
        if self.store_dir is not None:
            self.profiles[user] = load_profile(self.store_dir, user)
        else:
            self.profiles[user] = UsageProfile(user_id=user)

    # -- layout plumbing --

    def _initial_width(
        self, toolbar_id: str, defn: ToolbarDef, override: int | None
    ) -> int:
        if self.sections is not None and self.section_toolbars is not None:
            if toolbar_id in self.section_toolbars:
                index = self.section_toolbars.index(toolbar_id)
                return self.sections.widths[index]
        if override is not None:
            return override
        return defn.config.available_width

    def _section_governed(self, toolbar_id: str) -> bool:
        return self.section_toolbars is not None and toolbar_id in self.section_toolbars

    def _count_churn(self, event: LayoutEvent) -> None:
        if isinstance(event, DisplayedSetChanged):
            self.metrics.churn += 1

    def _find_toolbar(self, control_id: str) -> ToolbarState | None:
        for toolbar_id in self.toolbar_order:
            state = self.toolbars[toolbar_id]
            if state.definition.find(control_id) is not None:
                return state
        return None

    # -- event dispatch --

    def apply_event(self, event: TraceEvent) -> None:
        """Apply one event; engine errors are logged, malformed input raises."""
        if self._last_seq is not None and event.seq <= self._last_seq:
            raise TraceParseError(
                f"event seq {event.seq} not greater than {self._last_seq}"
            )
        self._last_seq = event.seq
        handler = getattr(self, f"_on_{event.kind}", None)
        if handler is None:
            raise TraceParseError(f"unknown event kind {event.kind!r}")
        try:
            handler(event)
        except TraceParseError:
            raise
        except EngineError as exc:
            self.errors.append(
                {
                    "seq": event.seq,
                    "event": event.kind,
                    "error": exc.code,
                    "detail": str(exc),
                }
            )

    def _on_activate(self, event: TraceEvent) -> None:
        control_id = event.arg("control")
        state = self._find_toolbar(control_id)
        if state is None:
            raise UnknownControlError(f"no toolbar registers control {control_id!r}")
        spec = state.definition.find(control_id)
        assert spec is not None
        if not spec.enabled:
            self.metrics.disabled_activations += 1
            return
        self.profiles[self.current_user] = record_activation(self.profile, control_id)
        assert state.layout is not None
        if control_id in state.layout.displayed_set():
            self.metrics.bar_activations += 1
            depth = self._menu_depths.get((state.definition.toolbar_id, control_id), 1)
            self.metrics.clicks_saved += depth - 1
        else:
            self.metrics.well_activations += 1
        if control_id not in state.user_hidden:
            state.forced = control_id

    def _on_pointer_move(self, event: TraceEvent) -> None:
        self.panel, _ = slide_step(self.panel, PointerAt(distance=event.arg("distance")))

    def _on_tick(self, event: TraceEvent) -> None:
        self.panel, _ = slide_step(self.panel, TickMs(dt_ms=event.arg("ms")))

    def _on_resize(self, event: TraceEvent) -> None:
        width = event.arg("width")
        profile = self.profile
        for toolbar_id in self.toolbar_order:
            if self._section_governed(toolbar_id):
                continue
            _, layout_change = apply_resize(self.toolbars[toolbar_id], profile, width)
            self._count_churn(layout_change)

    def _on_set_context(self, event: TraceEvent) -> None:
        module = event.arg("module")
        known_palette = (
            self.palettes is not None and module in self.palettes.context_registry
        )
        known_chain = (
            self.chain is not None
            and self.defs.chain_table is not None
            and module in self.defs.chain_table
        )
        if not known_palette and not known_chain:
            raise UnknownContextError(f"context {module!r} not registered")
        if known_palette:
            assert self.palettes is not None
            self.palettes = set_context(self.palettes, module)
        if self.chain is not None:
            self.chain = chain_set_context(self.chain, module)

    def _on_drag_add(self, event: TraceEvent) -> None:
        state = self._target_toolbar(event)
        source: DragSource = event.arg("source")
        state.definition = drag_add(state.definition, source, event.arg("position"))
        new_spec = next(
            c for c in state.definition.controls if c.action == source.action
        )
        depth = menu_depth(source)
        if depth > 1:
            key = (state.definition.toolbar_id, new_spec.id)
            self._menu_depths[key] = depth
        self._count_churn(refit(state, self.profile))

    def _target_toolbar(self, event: TraceEvent) -> ToolbarState:
        if "toolbar" in event.args:
            toolbar_id = event.arg("toolbar")
            if toolbar_id not in self.toolbars:
                raise UnknownControlError(f"no toolbar {toolbar_id!r}")
            return self.toolbars[toolbar_id]
        if self.stack is not None and self.stack.selected is not None:
            return self.toolbars[self.stack.selected]
        return self.toolbars[self.toolbar_order[0]]

    def _on_remove_control(self, event: TraceEvent) -> None:
        control_id = event.arg("id")
        state = self._find_toolbar(control_id)
        if state is None:
            raise UnknownControlError(f"no toolbar registers control {control_id!r}")
        state.definition = remove_control(state.definition, control_id)
        state.user_hidden.discard(control_id)
        if state.forced == control_id:
            state.forced = None
        self._menu_depths.pop((state.definition.toolbar_id, control_id), None)
        self._count_churn(refit(state, self.profile))

    def _on_qc_toggle(self, event: TraceEvent) -> None:
        control_id = event.arg("id")
        state = self._find_toolbar(control_id)
        if state is None:
            raise UnknownControlError(f"no toolbar registers control {control_id!r}")
        _, layout_change = qc_toggle(state, self.profile, control_id)
        self._count_churn(layout_change)

    def _on_stack_select(self, event: TraceEvent) -> None:
        stack = self.stack if self.stack is not None else ToolbarStack()
        self.stack, _ = stack_select(stack, event.arg("toolbar"))

    def _on_drag_boundary(self, event: TraceEvent) -> None:
        if self.sections is None:
            raise BadBoundaryError("no section row configured")
        self.sections = drag_section_boundary(
            self.sections, event.arg("boundary"), event.arg("delta")
        )
        if self.section_toolbars is not None:
            profile = self.profile
            for index, toolbar_id in enumerate(self.section_toolbars):
                state = self.toolbars[toolbar_id]
                new_width = self.sections.widths[index]
                if state.definition.config.available_width != new_width:
                    _, layout_change = apply_resize(state, profile, new_width)
                    self._count_churn(layout_change)

    def _on_chain_set(self, event: TraceEvent) -> None:
        chain = self._require_chain()
        self.chain = chain_set_value(chain, event.arg("position"), event.arg("option"))

    def _on_chain_clear_all(self, event: TraceEvent) -> None:
        if self.chain is not None:
            self.chain = chain_clear_all(self.chain)

    def _on_toggle_highlight(self, event: TraceEvent) -> None:
        if self.chain is not None:
            self.chain = chain_toggle_highlight(self.chain)

    def _require_chain(self) -> ChainState:
        if self.chain is None:
            raise BadPositionError("no selection chain configured")
        return self.chain

    def _on_switch_user(self, event: TraceEvent) -> None:
        user = event.arg("user")
        if user == self.current_user:
            return
        self._ensure_profile(user)
        self.current_user = user
        profile = self.profile
        for toolbar_id in self.toolbar_order:
            state = self.toolbars[toolbar_id]
            state.forced = None
            self._count_churn(refit(state, profile))

    # -- snapshot --

    def snapshot(self) -> SessionSnapshot:
        toolbars_doc = {}
        for toolbar_id in self.toolbar_order:
            state = self.toolbars[toolbar_id]
            config = state.definition.config
            layout = state.layout
            assert layout is not None
            toolbars_doc[toolbar_id] = {
                "config": {
                    "available_width": config.available_width,
                    "spacing": config.spacing,
                    "display_mode": config.display_mode.value,
                    "placement_policy": config.placement_policy.value,
                    "alpha": config.alpha,
                    "default_icon_width": config.default_icon_width,
                    "default_label_width": config.default_label_width,
                },
                "controls": [
                    {
                        "id": c.id,
                        "action": c.action,
                        "label": c.label,
                        "icon_width": c.icon_width,
                        "label_width": c.label_width,
                        "base_weight": c.base_weight,
                        "enabled": c.enabled,
                        "definition_index": c.definition_index,
                    }
                    for c in state.definition.controls
                ],
                "layout": {
                    "available_width": layout.available_width,
                    "displayed": [
                        {"id": p.id, "x": p.x, "width": p.width}
                        for p in layout.displayed
                    ],
                    "well": list(layout.well),
                    "user_hidden": sorted(layout.user_hidden),
                },
                "forced": state.forced,
            }
        data = {
            "toolbar_order": list(self.toolbar_order),
            "toolbars": toolbars_doc,
            "stack": (
                {"members": list(self.stack.members), "selected": self.stack.selected}
                if self.stack is not None
                else None
            ),
            "slide_panel": {
                "progress": self.panel.progress,
                "target": self.panel.target,
                "proximity_radius": self.panel.proximity_radius,
                "duration_ms": self.panel.duration_ms,
            },
            "sections": (
                {
                    "widths": list(self.sections.widths),
                    "toolbars": (
                        list(self.section_toolbars)
                        if self.section_toolbars is not None
                        else None
                    ),
                }
                if self.sections is not None
                else None
            ),
            "chain": (
                {
                    "context": self.chain.context,
                    "values": list(self.chain.values),
                    "options": [list(options) for options in self.chain.options],
                    "highlight": self.chain.highlight,
                }
                if self.chain is not None
                else None
            ),
            "palettes": (
                {
                    "static": sorted(self.palettes.static_palette),
                    "dynamic": sorted(self.palettes.dynamic_palette),
                    "current_context": self.palettes.current_context,
                }
                if self.palettes is not None
                else None
            ),
            "profile": {
                "user": self.current_user,
                "digest": profile_digest(self.profile),
            },
            "metrics": self.metrics.as_doc(),
            "errors": list(self.errors),
        }
        return SessionSnapshot(data=data)


def replay_trace(
    trace: Iterable[TraceEvent],
    defs: EngineDefs,
    *,
    user: str = "default",
    width: int | None = None,
    store_dir: Path | str | None = None,
    profiles: Mapping[str, UsageProfile] | None = None,
) -> SessionSnapshot:
    """Fold a whole trace and return the final snapshot.

    Pure in its inputs: identical trace, definitions and starting profiles
    always produce byte-identical snapshots.
    """
    engine = Engine(
        defs, user=user, width=width, store_dir=store_dir, profiles=profiles
    )
    for event in trace:
        engine.apply_event(event)
    return engine.snapshot()
