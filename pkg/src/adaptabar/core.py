"""Toolbar domain model: controls, display modes, and per-toolbar configuration.

Everything in this module is immutable value data. Layout units are abstract
non-negative integers ("pixels") with no device metrics attached, which keeps
the whole engine headless and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .errors import DuplicateControlIdError
from .rational import to_fraction


class DisplayMode(Enum):
    """How controls are rendered: just the icon, or icon with its label to the right."""

    ICON_ONLY = "icon_only"
    ICON_LABEL_RIGHT = "icon_label_right"


class PlacementPolicy(Enum):
    """Ordering of the controls that won a spot on the bar.

    STABLE_ORDER renders winners in definition order so familiar controls do
    not shift around; PRIORITY_ORDER renders them in rank order.
    """

    STABLE_ORDER = "stable"
    PRIORITY_ORDER = "priority"


def _units(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return value


@dataclass(frozen=True)
class ControlSpec:
    """One actionable toolbar element bound to an action identifier.

    ``base_weight`` is the pre-assigned priority weight; usage counts are
    layered on top of it by the priority engine. Disabled controls stay
    registered, rankable and displayable, but activating one is a no-op that
    is only recorded in metrics.
    """

    id: str
    action: str
    label: str
    icon_width: int
    label_width: int
    base_weight: Fraction = Fraction(0)
    enabled: bool = True
    definition_index: int = 0

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("control id must be non-empty")
        _units("icon_width", self.icon_width)
        _units("label_width", self.label_width)
        weight = to_fraction(self.base_weight, name="base_weight")
        if weight < 0:
            raise ValueError(f"base_weight must be >= 0, got {weight}")
        object.__setattr__(self, "base_weight", weight)


@dataclass(frozen=True)
class ToolbarConfig:
    """Per-toolbar layout knobs.

    ``alpha`` scales how strongly usage counts pull a control's priority above
    its base weight. ``default_icon_width`` / ``default_label_width`` size
    controls created by drag-and-drop, which arrive without geometry.
    """

    available_width: int
    spacing: int = 4
    display_mode: DisplayMode = DisplayMode.ICON_ONLY
    placement_policy: PlacementPolicy = PlacementPolicy.STABLE_ORDER
    alpha: Fraction = Fraction(1)
    default_icon_width: int = 16
    default_label_width: int = 32

    def __post_init__(self) -> None:
        _units("available_width", self.available_width)
        _units("spacing", self.spacing)
        _units("default_icon_width", self.default_icon_width)
        _units("default_label_width", self.default_label_width)
        alpha = to_fraction(self.alpha, name="alpha")
        if alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {alpha}")
        object.__setattr__(self, "alpha", alpha)


@dataclass(frozen=True)
class ToolbarDef:
    """A toolbar: an ordered sequence of controls plus its configuration."""

    toolbar_id: str
    config: ToolbarConfig
    controls: tuple[ControlSpec, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "controls", tuple(self.controls))
        ids = [c.id for c in self.controls]
        if len(ids) != len(set(ids)):
            raise DuplicateControlIdError(f"duplicate control ids in {self.toolbar_id!r}")

    def control_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.controls)

    def find(self, control_id: str) -> ControlSpec | None:
        for spec in self.controls:
            if spec.id == control_id:
                return spec
        return None


def register_control(defn: ToolbarDef, spec: ControlSpec) -> ToolbarDef:
    """Append ``spec`` with the next definition index.

    Indices keep strictly increasing across removals, so the next index is one
    past the current maximum rather than the current length.
    """
    if defn.find(spec.id) is not None:
        raise DuplicateControlIdError(
            f"control {spec.id!r} already registered on toolbar {defn.toolbar_id!r}"
        )
    next_index = max((c.definition_index for c in defn.controls), default=-1) + 1
    spec = replace(spec, definition_index=next_index)
    return replace(defn, controls=defn.controls + (spec,))


def effective_width(spec: ControlSpec, mode: DisplayMode) -> int:
    """Width a control occupies on the bar under the given display mode."""
    if mode is DisplayMode.ICON_ONLY:
        return spec.icon_width
    return spec.icon_width + spec.label_width
