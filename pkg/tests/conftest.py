"""Shared fixtures and builders for the test suite."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from adaptabar import (
    ControlSpec,
    DisplayMode,
    ToolbarConfig,
    ToolbarDef,
    UsageProfile,
    register_control,
)


def make_spec(
    control_id: str,
    *,
    icon: int = 16,
    label_width: int = 30,
    weight=0,
    enabled: bool = True,
    index: int = 0,
    action: str | None = None,
    label: str | None = None,
) -> ControlSpec:
    return ControlSpec(
        id=control_id,
        action=action or f"act.{control_id}",
        label=label or control_id.title(),
        icon_width=icon,
        label_width=label_width,
        base_weight=Fraction(weight),
        enabled=enabled,
        definition_index=index,
    )


def make_toolbar(
    *specs: ControlSpec,
    toolbar_id: str = "main",
    width: int = 200,
    spacing: int = 0,
    mode: DisplayMode = DisplayMode.ICON_ONLY,
    alpha=1,
) -> ToolbarDef:
    defn = ToolbarDef(
        toolbar_id=toolbar_id,
        config=ToolbarConfig(
            available_width=width, spacing=spacing, display_mode=mode, alpha=alpha
        ),
    )
    for spec in specs:
        defn = register_control(defn, spec)
    return defn


def activate_n(profile: UsageProfile, control_id: str, n: int) -> UsageProfile:
    from adaptabar import record_activation

    for _ in range(n):
        profile = record_activation(profile, control_id)
    return profile


@pytest.fixture
def fresh_profile() -> UsageProfile:
    return UsageProfile(user_id="tester")


def defs_doc(**overrides) -> dict:
    """A small but fully featured definitions document."""
    doc = {
        "toolbars": [
            {
                "id": "main",
                "config": {"available_width": 100, "spacing": 0, "alpha": 1},
                "controls": [
                    {"id": "save", "icon_width": 40, "base_weight": 1},
                    {"id": "print", "icon_width": 40, "base_weight": 1},
                    {"id": "cut", "icon_width": 40, "base_weight": 1},
                    {"id": "paste", "icon_width": 40, "base_weight": 1},
                ],
            },
            {
                "id": "format",
                "config": {"available_width": 80, "spacing": 0},
                "controls": [
                    {"id": "bold", "icon_width": 30},
                    {"id": "italic", "icon_width": 30},
                ],
            },
        ],
        "stack": {"members": ["main", "format"], "selected": "main"},
        "slide_panel": {"proximity_radius": 24, "duration_ms": 150},
        "sections": {"widths": [120, 80], "toolbars": None},
        "chain": {
            "context": "report",
            "positions": 3,
            "options": {
                "report": {
                    "": ["daily", "weekly"],
                    "daily": ["summary", "detail", "chart"],
                    "weekly": ["summary", "trend"],
                    "summary": ["png", "pdf"],
                    "detail": ["csv"],
                    "chart": ["png"],
                    "trend": ["png", "csv"],
                },
                "mail": {
                    "": ["inbox", "sent"],
                    "inbox": ["unread", "flagged"],
                    "sent": ["recent"],
                },
            },
        },
        "palettes": {
            "static": ["open", "save"],
            "contexts": {"draw": ["pen", "fill"], "text": ["bold", "font"]},
            "current": "draw",
        },
    }
    doc.update(overrides)
    return doc


def write_defs(tmp_path, doc=None, name="defs.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc if doc is not None else defs_doc()))
    return path


def write_trace(tmp_path, events, name="trace.jsonl"):
    path = tmp_path / name
    path.write_text("\n".join(json.dumps(e) for e in events) + "\n")
    return path
