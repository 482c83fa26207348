"""Width-constrained selection of bar controls versus the overflow well.

The fitter is greedy with skip: controls are considered in rank order and a
control that does not fit is sent to the well without blocking smaller,
lower-ranked controls behind it. A single "forced" id (the most recently
activated control) may be admitted ahead of the scan, which is how a control
picked from the well gets promoted onto the bar at the next refit.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .core import (
    ControlSpec,
    DisplayMode,
    PlacementPolicy,
    ToolbarDef,
    effective_width,
)
from .errors import MissingWidthError
from .priority import UsageProfile, rank


@dataclass(frozen=True)
class PlacedControl:
    """One displayed control: id plus its horizontal interval."""

    id: str
    x: int
    width: int

    @property
    def end(self) -> int:
        return self.x + self.width


@dataclass(frozen=True)
class ToolbarLayout:
    """Result of a fit.

    ``displayed``, ``well`` and ``user_hidden`` partition the toolbar's
    registered controls: winners on the bar with concrete intervals, overflow
    in rank order, and controls the user switched off entirely.
    """

    displayed: tuple[PlacedControl, ...]
    well: tuple[str, ...]
    user_hidden: frozenset[str]
    available_width: int

    def __post_init__(self) -> None:
        cursor = 0
        for placed in self.displayed:
            if placed.x < cursor:
                raise ValueError("displayed intervals overlap or run backwards")
            cursor = placed.end
        if cursor > self.available_width:
            raise ValueError("displayed controls exceed available width")

    def displayed_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.displayed)

    def displayed_set(self) -> frozenset[str]:
        return frozenset(p.id for p in self.displayed)


@dataclass(frozen=True)
class DisplayedSetChanged:
    added: frozenset[str]
    removed: frozenset[str]


@dataclass(frozen=True)
class NoChange:
    pass


LayoutEvent = DisplayedSetChanged | NoChange


def layout_event(before: ToolbarLayout | None, after: ToolbarLayout) -> LayoutEvent:
    """Describe how the displayed set changed between two layouts."""
    old = before.displayed_set() if before is not None else frozenset()
    new = after.displayed_set()
    added, removed = new - old, old - new
    if added or removed:
        return DisplayedSetChanged(added=added, removed=removed)
    return NoChange()


def fit(
    ranked: Sequence[str],
    widths: Mapping[str, int],
    available_width: int,
    spacing: int,
    forced: str | None = None,
    *,
    placement: PlacementPolicy = PlacementPolicy.STABLE_ORDER,
    definition_order: Sequence[str] | None = None,
    user_hidden: Iterable[str] = (),
) -> ToolbarLayout:
    """Greedily admit ranked controls until the width budget runs out.

    Admission charges each control its width plus one ``spacing`` gap when it
    is not the first on the bar, so n displayed controls consume
    ``sum(widths) + (n - 1) * spacing``. If ``forced`` fits on its own it is
    admitted before anything else. Controls that do not fit are skipped, not
    blocking; everything unadmitted lands in the well in rank order.

    The admitted set is rendered in definition order under STABLE_ORDER
    (``definition_order`` is required then) and in rank order under
    PRIORITY_ORDER.
    """
    ranked = list(ranked)
    for control_id in ranked:
        if control_id not in widths:
            raise MissingWidthError(f"no width for ranked control {control_id!r}")
    if forced is not None and forced not in set(ranked):
        raise ValueError(f"forced control {forced!r} not among ranked candidates")

    admitted: set[str] = set()
    used = 0
    if forced is not None and widths[forced] <= available_width:
        admitted.add(forced)
        used = widths[forced]
    for control_id in ranked:
        if control_id in admitted:
            continue
        needed = widths[control_id] + (spacing if admitted else 0)
        if used + needed <= available_width:
            admitted.add(control_id)
            used += needed

    if placement is PlacementPolicy.STABLE_ORDER:
        if definition_order is None:
            raise ValueError("STABLE_ORDER placement requires definition_order")
        shown = [c for c in definition_order if c in admitted]
    else:
        shown = [c for c in ranked if c in admitted]
    if len(shown) != len(admitted):
        raise ValueError("definition_order does not cover every admitted control")

    displayed = []
    x = 0
    for control_id in shown:
        displayed.append(PlacedControl(id=control_id, x=x, width=widths[control_id]))
        x += widths[control_id] + spacing
    well = tuple(c for c in ranked if c not in admitted)
    return ToolbarLayout(
        displayed=tuple(displayed),
        well=well,
        user_hidden=frozenset(user_hidden),
        available_width=available_width,
    )


def hover_hint(
    layout: ToolbarLayout,
    mode: DisplayMode,
    x: int,
    labels: Mapping[str, str],
) -> str | None:
    """Label of the displayed control under ``x``, when labels are not already visible.

    Hints exist to stand in for removed labels, so in ICON_LABEL_RIGHT mode
    this always returns None.
    """
    if mode is DisplayMode.ICON_LABEL_RIGHT:
        return None
    for placed in layout.displayed:
        if placed.x <= x < placed.end:
            return labels.get(placed.id)
    return None


@dataclass
class ToolbarState:
    """Mutable engine-side state of one toolbar.

    ``forced`` remembers the most recently activated control so the next
    refit promotes it; it is cleared when that control is removed, hidden,
    or the active user changes.
    """

    definition: ToolbarDef
    user_hidden: set[str] = field(default_factory=set)
    forced: str | None = None
    layout: ToolbarLayout | None = None


def refit(state: ToolbarState, profile: UsageProfile) -> LayoutEvent:
    """Re-rank and re-fit a toolbar in place, reporting displayed-set churn."""
    config = state.definition.config
    candidates = [c for c in state.definition.controls if c.id not in state.user_hidden]
    ranked = rank(profile, candidates, config.alpha)
    widths = {c.id: effective_width(c, config.display_mode) for c in candidates}
    forced = state.forced if state.forced in widths else None
    new_layout = fit(
        ranked,
        widths,
        config.available_width,
        config.spacing,
        forced,
        placement=config.placement_policy,
        definition_order=[c.id for c in candidates],
        user_hidden=state.user_hidden,
    )
    event = layout_event(state.layout, new_layout)
    state.layout = new_layout
    return event


def make_toolbar_state(defn: ToolbarDef, profile: UsageProfile) -> ToolbarState:
    """Build a toolbar's initial state and first layout."""
    state = ToolbarState(definition=defn)
    refit(state, profile)
    return state


def init_toolbar(defn: ToolbarDef, profile: UsageProfile) -> ToolbarLayout:
    """First layout of a toolbar for the given profile.

    With a fresh profile the ranking reduces to base weights with
    definition-order tie-breaks, so the initial bar follows the predefined
    order.
    """
    layout = make_toolbar_state(defn, profile).layout
    assert layout is not None
    return layout


def apply_resize(
    state: ToolbarState, profile: UsageProfile, new_width: int
) -> tuple[ToolbarLayout, LayoutEvent]:
    """Refit a toolbar at a new available width."""
    if new_width < 0:
        raise ValueError(f"width must be >= 0, got {new_width}")
    config = replace(state.definition.config, available_width=new_width)
    state.definition = replace(state.definition, config=config)
    event = refit(state, profile)
    assert state.layout is not None
    return state.layout, event
