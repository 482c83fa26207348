"""Greedy fitting, resize refits, hover hints, and layout bookkeeping."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adaptabar import (
    DisplayedSetChanged,
    DisplayMode,
    MissingWidthError,
    NoChange,
    PlacedControl,
    PlacementPolicy,
    ToolbarLayout,
    UsageProfile,
    apply_resize,
    fit,
    hover_hint,
    layout_event,
    make_toolbar_state,
    record_activation,
    refit,
)
from .conftest import make_spec, make_toolbar


def simple_fit(ranked, widths, avail, spacing=0, forced=None, **kwargs):
    kwargs.setdefault("definition_order", list(widths))
    return fit(ranked, widths, avail, spacing, forced, **kwargs)


class TestFit:
    def test_greedy_admits_until_budget_runs_out(self):
        layout = simple_fit(["A", "B", "C"], {"A": 40, "B": 40, "C": 40}, 100)
        assert layout.displayed_ids() == ("A", "B")
        assert layout.well == ("C",)

    def test_oversized_control_skipped_without_blocking(self):
        layout = simple_fit(["A", "B", "C"], {"A": 80, "B": 30, "C": 30}, 70)
        assert layout.displayed_ids() == ("B", "C")
        assert layout.well == ("A",)

    def test_empty_input(self):
        layout = simple_fit([], {}, 50)
        assert layout.displayed == ()
        assert layout.well == ()

    def test_spacing_charged_between_controls_only(self):
        layout = simple_fit(["A", "B"], {"A": 30, "B": 30}, 70, spacing=10)
        assert layout.displayed_ids() == ("A", "B")
        assert [p.x for p in layout.displayed] == [0, 40]

    def test_spacing_can_evict(self):
        layout = simple_fit(["A", "B"], {"A": 30, "B": 30}, 69, spacing=10)
        assert layout.displayed_ids() == ("A",)
        assert layout.well == ("B",)

    def test_forced_admitted_ahead_of_scan(self):
        # C alone would lose under pure rank order at this width.
        layout = simple_fit(["A", "B", "C"], {"A": 50, "B": 40, "C": 60}, 100, forced="C")
        assert "C" in layout.displayed_ids()

    def test_forced_too_wide_falls_back_to_well(self):
        layout = simple_fit(["A", "B"], {"A": 30, "B": 120}, 100, forced="B")
        assert layout.displayed_ids() == ("A",)
        assert layout.well == ("B",)

    def test_missing_width_raises(self):
        with pytest.raises(MissingWidthError):
            fit(["A"], {}, 100, 0, definition_order=["A"])

    def test_forced_must_be_ranked(self):
        with pytest.raises(ValueError):
            fit(["A"], {"A": 10, "Z": 10}, 100, 0, forced="Z", definition_order=["A", "Z"])

    def test_stable_order_renders_definition_order(self):
        layout = fit(
            ["C", "A"],
            {"A": 10, "C": 10},
            100,
            0,
            placement=PlacementPolicy.STABLE_ORDER,
            definition_order=["A", "B", "C"],
        )
        assert layout.displayed_ids() == ("A", "C")

    def test_priority_order_renders_rank_order(self):
        layout = fit(
            ["C", "A"],
            {"A": 10, "C": 10},
            100,
            0,
            placement=PlacementPolicy.PRIORITY_ORDER,
        )
        assert layout.displayed_ids() == ("C", "A")

    def test_offsets_accumulate_left_to_right(self):
        layout = simple_fit(["A", "B", "C"], {"A": 10, "B": 20, "C": 5}, 100, spacing=4)
        assert [(p.id, p.x, p.width) for p in layout.displayed] == [
            ("A", 0, 10),
            ("B", 14, 20),
            ("C", 38, 5),
        ]

    def test_hidden_ids_recorded_in_partition(self):
        layout = simple_fit(["A"], {"A": 10}, 100, user_hidden={"H"})
        assert layout.user_hidden == frozenset({"H"})


class TestLayoutEvent:
    def test_no_change(self):
        a = simple_fit(["A"], {"A": 10}, 100)
        b = simple_fit(["A"], {"A": 10}, 100)
        assert layout_event(a, b) == NoChange()

    def test_added_and_removed_disjoint(self):
        before = simple_fit(["A", "B"], {"A": 60, "B": 60}, 100)
        after = simple_fit(["B", "A"], {"A": 60, "B": 60}, 100)
        event = layout_event(before, after)
        assert isinstance(event, DisplayedSetChanged)
        assert event.added == {"B"} and event.removed == {"A"}
        assert not event.added & event.removed


class TestApplyResize:
    def make_state(self):
        defn = make_toolbar(
            make_spec("a", icon=40), make_spec("b", icon=40), make_spec("c", icon=20),
            width=90,
        )
        profile = UsageProfile()
        return make_toolbar_state(defn, profile), profile

    def test_growth_promotes_pending_well_item(self):
        state, profile = self.make_state()
        assert state.layout.displayed_ids() == ("a", "b")
        layout, event = apply_resize(state, profile, 120)
        assert layout.displayed_ids() == ("a", "b", "c")
        assert event == DisplayedSetChanged(added=frozenset({"c"}), removed=frozenset())

    def test_same_width_is_no_change(self):
        state, profile = self.make_state()
        _, event = apply_resize(state, profile, 90)
        assert event == NoChange()

    def test_zero_width_empties_bar(self):
        state, profile = self.make_state()
        layout, event = apply_resize(state, profile, 0)
        assert layout.displayed == ()
        assert set(layout.well) == {"a", "b", "c"}
        assert isinstance(event, DisplayedSetChanged)
        assert event.removed == {"a", "b"}


class TestHoverHint:
    layout = ToolbarLayout(
        displayed=(
            PlacedControl(id="A", x=0, width=40),
            PlacedControl(id="B", x=44, width=30),
        ),
        well=(),
        user_hidden=frozenset(),
        available_width=100,
    )
    labels = {"A": "Alpha", "B": "Beta"}

    def test_icon_only_returns_label_under_pointer(self):
        assert hover_hint(self.layout, DisplayMode.ICON_ONLY, 10, self.labels) == "Alpha"
        assert hover_hint(self.layout, DisplayMode.ICON_ONLY, 44, self.labels) == "Beta"

    def test_miss_beyond_last_interval(self):
        assert hover_hint(self.layout, DisplayMode.ICON_ONLY, 99, self.labels) is None
        assert hover_hint(self.layout, DisplayMode.ICON_ONLY, 41, self.labels) is None

    def test_visible_labels_suppress_hints(self):
        assert hover_hint(self.layout, DisplayMode.ICON_LABEL_RIGHT, 10, self.labels) is None

    def test_interval_end_exclusive(self):
        assert hover_hint(self.layout, DisplayMode.ICON_ONLY, 40, self.labels) is None


class TestMruForcing:
    def test_activating_well_control_promotes_it_on_next_refit(self):
        defn = make_toolbar(
            make_spec("a", icon=40, weight=5),
            make_spec("b", icon=40, weight=4),
            make_spec("c", icon=40, weight=1),
            width=80,
        )
        profile = UsageProfile()
        state = make_toolbar_state(defn, profile)
        assert state.layout.displayed_ids() == ("a", "b")
        assert state.layout.well == ("c",)
        profile = record_activation(profile, "c")
        state.forced = "c"
        refit(state, profile)
        assert "c" in state.layout.displayed_set()

    def test_activating_displayed_control_never_evicts_it(self):
        defn = make_toolbar(
            make_spec("a", icon=30, weight=3),
            make_spec("b", icon=30, weight=2),
            make_spec("c", icon=30, weight=1),
            width=60,
        )
        profile = UsageProfile()
        state = make_toolbar_state(defn, profile)
        displayed = state.layout.displayed_set()
        target = sorted(displayed)[0]
        profile = record_activation(profile, target)
        state.forced = target
        refit(state, profile)
        assert target in state.layout.displayed_set()


@st.composite
def fit_instances(draw):
    n = draw(st.integers(0, 10))
    ids = [f"c{i}" for i in range(n)]
    widths = {c: draw(st.integers(0, 30)) for c in ids}
    ranked = draw(st.permutations(ids))
    avail = draw(st.integers(0, 120))
    spacing = draw(st.integers(0, 6))
    forced = draw(st.sampled_from([None] + ids)) if ids else None
    return ranked, widths, avail, spacing, forced, ids


class TestFitProperties:
    @given(instance=fit_instances())
    @settings(max_examples=300)
    def test_width_bound_and_partition(self, instance):
        ranked, widths, avail, spacing, forced, ids = instance
        layout = fit(ranked, widths, avail, spacing, forced, definition_order=ids)
        shown = layout.displayed_ids()
        total = sum(widths[c] for c in shown) + max(0, len(shown) - 1) * spacing
        assert total <= avail
        assert sorted(list(shown) + list(layout.well)) == sorted(ids)
        assert not set(shown) & set(layout.well)
