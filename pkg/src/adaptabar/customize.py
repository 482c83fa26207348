"""User-driven toolbar reconfiguration.

Covers drag-and-drop creation of buttons from menu items or object
operations, removal, the quick-customize (QC) show/hide menu, and the
static-plus-dynamic palette pair that swaps its dynamic half on context
switches.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping

from .core import ControlSpec, ToolbarDef
from .errors import (
    DuplicateActionError,
    UnknownContextError,
    UnknownControlError,
)
from .fitting import LayoutEvent, ToolbarState, refit
from .priority import UsageProfile


@dataclass(frozen=True)
class MenuItem:
    """A menu leaf dragged onto the bar, identified by its full path."""

    path: tuple[str, ...]
    action: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "path", tuple(self.path))
        if not self.path:
            raise ValueError("menu path must be non-empty")


@dataclass(frozen=True)
class ObjectOperation:
    """An object's operation dragged onto the bar."""

    action: str
    label: str


DragSource = MenuItem | ObjectOperation


def source_label(source: DragSource) -> str:
    if isinstance(source, MenuItem):
        return source.path[-1]
    return source.label


def menu_depth(source: DragSource) -> int:
    """How many clicks the source cost before it became a button."""
    if isinstance(source, MenuItem):
        return len(source.path)
    return 1


def _new_control_id(defn: ToolbarDef, action: str) -> str:
    # The action doubles as the control id; suffix on the rare collision with
    # an unrelated existing id.
    if defn.find(action) is None:
        return action
    n = 2
    while defn.find(f"{action}-{n}") is not None:
        n += 1
    return f"{action}-{n}"


def drag_add(defn: ToolbarDef, source: DragSource, position: int) -> ToolbarDef:
    """Create a control from a drag source and insert it at ``position``.

    The new control is bound to the source's action, labeled from the menu
    leaf or operation label, sized from the toolbar's default widths, and
    weighted with the toolbar's mean base weight so it neither dominates nor
    vanishes. Definition indices are reassigned in the new order. An action
    already bound on this toolbar is rejected so usage attribution stays
    unambiguous.
    """
    for existing in defn.controls:
        if existing.action == source.action:
            raise DuplicateActionError(
                f"action {source.action!r} already bound to control {existing.id!r}"
            )
    config = defn.config
    weights = [c.base_weight for c in defn.controls]
    mean_weight = sum(weights, Fraction(0)) / len(weights) if weights else Fraction(0)
    spec = ControlSpec(
        id=_new_control_id(defn, source.action),
        action=source.action,
        label=source_label(source),
        icon_width=config.default_icon_width,
        label_width=config.default_label_width,
        base_weight=mean_weight,
    )
    slot = max(0, min(position, len(defn.controls)))
    controls = list(defn.controls)
    controls.insert(slot, spec)
    controls = [replace(c, definition_index=i) for i, c in enumerate(controls)]
    return replace(defn, controls=tuple(controls))


def remove_control(defn: ToolbarDef, control_id: str) -> ToolbarDef:
    """Drop a control from the toolbar. Usage-profile entries are untouched."""
    if defn.find(control_id) is None:
        raise UnknownControlError(f"no control {control_id!r} on toolbar {defn.toolbar_id!r}")
    controls = tuple(c for c in defn.controls if c.id != control_id)
    return replace(defn, controls=controls)


@dataclass(frozen=True)
class QcEntry:
    """One QC-menu row: a control and whether it is selected for display."""

    control: str
    label: str
    selected: bool


def qc_entries(state: ToolbarState) -> tuple[QcEntry, ...]:
    """QC rows for every registered control, in definition order."""
    return tuple(
        QcEntry(control=c.id, label=c.label, selected=c.id not in state.user_hidden)
        for c in state.definition.controls
    )


def qc_toggle(
    state: ToolbarState, profile: UsageProfile, control_id: str
) -> tuple[tuple[QcEntry, ...], LayoutEvent]:
    """Flip a control between shown and user-hidden, then refit.

    Hiding removes the control from both the bar and the well; hidden
    controls keep their registration and usage history, so toggling back
    restores them with their priority intact.
    """
    if state.definition.find(control_id) is None:
        raise UnknownControlError(
            f"no control {control_id!r} on toolbar {state.definition.toolbar_id!r}"
        )
    if control_id in state.user_hidden:
        state.user_hidden.discard(control_id)
    else:
        state.user_hidden.add(control_id)
        if state.forced == control_id:
            state.forced = None
    event = refit(state, profile)
    return qc_entries(state), event


@dataclass(frozen=True)
class PaletteSet:
    """A fixed static palette alongside a context-recomputed dynamic palette."""

    static_palette: frozenset[str]
    context_registry: Mapping[str, frozenset[str]]
    current_context: str
    dynamic_palette: frozenset[str] = field(default=frozenset())

    def __post_init__(self) -> None:
        registry = {
            module: frozenset(ids) for module, ids in self.context_registry.items()
        }
        object.__setattr__(self, "static_palette", frozenset(self.static_palette))
        object.__setattr__(self, "context_registry", registry)
        if self.current_context not in registry:
            raise UnknownContextError(f"context {self.current_context!r} not registered")
        object.__setattr__(self, "dynamic_palette", registry[self.current_context])


def set_context(palettes: PaletteSet, module: str) -> PaletteSet:
    """Switch the dynamic palette to a registered module's tool set.

    The static palette is carried over untouched, so always-present tools
    never shift while the dynamic half tracks the context.
    """
    if module not in palettes.context_registry:
        raise UnknownContextError(f"context {module!r} not registered")
    return replace(palettes, current_context=module)
