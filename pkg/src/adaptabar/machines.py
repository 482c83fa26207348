"""Deterministic interaction state machines.

Three small machines live here: a proximity slide-out panel, a stack of
mutually covering toolbars, and a row of width-sharing toolbar sections
resized by direct manipulation. Time only enters through explicit tick
events and sound/animation exist purely as emitted records, so every
machine is replayable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .errors import BadBoundaryError, UnknownToolbarError

# --- sliding panel ---------------------------------------------------------


@dataclass(frozen=True)
class SlidePanel:
    """Proximity-triggered slide-out panel.

    ``progress`` runs from 0 (hidden) to 1 (fully out); ``target`` is where
    the panel is heading. Pointer proximity flips the target immediately,
    with no dwell delay.
    """

    progress: Fraction = Fraction(0)
    target: int = 0
    proximity_radius: int = 24
    duration_ms: int = 150

    def __post_init__(self) -> None:
        if not 0 <= self.progress <= 1:
            raise ValueError(f"progress must be in [0, 1], got {self.progress}")
        if self.target not in (0, 1):
            raise ValueError(f"target must be 0 or 1, got {self.target}")
        if self.duration_ms <= 0:
            raise ValueError(f"duration_ms must be positive, got {self.duration_ms}")
        if self.proximity_radius < 0:
            raise ValueError(f"proximity_radius must be >= 0, got {self.proximity_radius}")


@dataclass(frozen=True)
class PointerAt:
    """Pointer observed at ``distance`` layout units from the panel's target image."""

    distance: int


@dataclass(frozen=True)
class TickMs:
    """``dt_ms`` milliseconds of injected time."""

    dt_ms: int


class PanelEvent(Enum):
    BECAME_VISIBLE = "became_visible"
    BECAME_HIDDEN = "became_hidden"


def slide_step(
    panel: SlidePanel, event: PointerAt | TickMs
) -> tuple[SlidePanel, tuple[PanelEvent, ...]]:
    """Advance the panel by one input.

    Pointer events only steer: inside the proximity radius the target becomes
    1, outside it 0, progress untouched. Ticks move progress toward the
    target by ``dt / duration`` exactly, clamped to [0, 1], emitting
    BECAME_VISIBLE / BECAME_HIDDEN when an endpoint is reached from strictly
    inside.
    """
    if isinstance(event, PointerAt):
        if event.distance < 0:
            raise ValueError(f"distance must be >= 0, got {event.distance}")
        target = 1 if event.distance <= panel.proximity_radius else 0
        return replace(panel, target=target), ()

    if event.dt_ms < 0:
        raise ValueError(f"dt_ms must be >= 0, got {event.dt_ms}")
    step = Fraction(event.dt_ms, panel.duration_ms)
    if panel.target == 1:
        progress = min(panel.progress + step, Fraction(1))
    else:
        progress = max(panel.progress - step, Fraction(0))
    events: tuple[PanelEvent, ...] = ()
    if progress == 1 and panel.progress < 1:
        events = (PanelEvent.BECAME_VISIBLE,)
    elif progress == 0 and panel.progress > 0:
        events = (PanelEvent.BECAME_HIDDEN,)
    return replace(panel, progress=progress), events


# --- toolbar stack ---------------------------------------------------------


class SlideMotion(Enum):
    OPEN = "open"
    CLOSE = "close"


@dataclass(frozen=True)
class AnimateSlide:
    toolbar: str
    motion: SlideMotion


@dataclass(frozen=True)
class Sound:
    motion: SlideMotion


StackEvent = AnimateSlide | Sound


@dataclass(frozen=True)
class ToolbarStack:
    """Toolbars sharing one screen area; the selected member covers the rest."""

    members: tuple[str, ...] = ()
    selected: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        if self.selected is not None and self.selected not in self.members:
            raise ValueError(f"selected {self.selected!r} not a stack member")


def stack_select(
    stack: ToolbarStack, toolbar_id: str
) -> tuple[ToolbarStack, tuple[StackEvent, ...]]:
    """Select a stacked toolbar, emitting slide and sound records.

    A previously selected toolbar emits its close pair first; re-selecting
    the current toolbar is a silent no-op.
    """
    if toolbar_id not in stack.members:
        raise UnknownToolbarError(f"{toolbar_id!r} is not in the stack")
    if stack.selected == toolbar_id:
        return stack, ()
    events: list[StackEvent] = []
    if stack.selected is not None:
        events.append(AnimateSlide(toolbar=stack.selected, motion=SlideMotion.CLOSE))
        events.append(Sound(motion=SlideMotion.CLOSE))
    events.append(AnimateSlide(toolbar=toolbar_id, motion=SlideMotion.OPEN))
    events.append(Sound(motion=SlideMotion.OPEN))
    return replace(stack, selected=toolbar_id), tuple(events)


# --- composite sections ----------------------------------------------------


@dataclass(frozen=True)
class SectionRow:
    """Width-sharing toolbar sections; expanding one overlaps its neighbor."""

    widths: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "widths", tuple(self.widths))
        for width in self.widths:
            if width < 0:
                raise ValueError(f"section widths must be >= 0, got {width}")

    @property
    def total_width(self) -> int:
        return sum(self.widths)


def drag_section_boundary(row: SectionRow, boundary: int, delta: int) -> SectionRow:
    """Move the boundary between sections ``boundary`` and ``boundary + 1``.

    The delta is clamped so neither neighbor goes negative; total width is
    conserved by construction.
    """
    if not 0 <= boundary < len(row.widths) - 1:
        raise BadBoundaryError(f"boundary {boundary} out of range")
    left, right = row.widths[boundary], row.widths[boundary + 1]
    clamped = max(-left, min(delta, right))
    widths = list(row.widths)
    widths[boundary] = left + clamped
    widths[boundary + 1] = right - clamped
    return SectionRow(widths=tuple(widths))
