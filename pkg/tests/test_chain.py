"""Procedural chain: cascades, retention, clearing, and the highlight flag."""

from __future__ import annotations

import pytest

from adaptabar import (
    BadPositionError,
    InvalidOptionError,
    chain_clear_all,
    chain_options,
    chain_set_context,
    chain_set_value,
    chain_toggle_highlight,
    new_chain,
    providers_from_table,
)

TABLE = {
    "report": {
        "": ["daily", "weekly"],
        "daily": ["summary", "detail", "chart"],
        "weekly": ["summary", "trend"],
        "summary": ["png", "pdf"],
        "detail": ["csv"],
        "chart": ["png"],
        "trend": ["png", "csv"],
    },
    # same roots, but "weekly" offers nothing that "daily" offers
    "digest": {
        "": ["daily", "weekly"],
        "daily": ["summary"],
        "weekly": ["trend"],
        "trend": ["csv"],
    },
}


def chain_of(context="report", positions=3):
    return new_chain(context, providers_from_table(TABLE, positions))


class TestNewChain:
    def test_position_zero_offers_roots(self):
        chain = chain_of()
        assert chain_options(chain, 0) == ("daily", "weekly")

    def test_downstream_empty_until_upstream_set(self):
        chain = chain_of()
        assert chain_options(chain, 1) == ()
        assert chain_options(chain, 2) == ()

    def test_bad_position(self):
        chain = chain_of()
        with pytest.raises(BadPositionError):
            chain_options(chain, 3)
        with pytest.raises(BadPositionError):
            chain_set_value(chain, -1, "daily")


class TestSetValue:
    def test_setting_upstream_populates_next_options(self):
        chain = chain_set_value(chain_of(), 0, "daily")
        assert chain.values == ("daily", None, None)
        assert chain_options(chain, 1) == ("summary", "detail", "chart")

    def test_downstream_value_retained_when_still_offered(self):
        chain = chain_set_value(chain_of(), 0, "daily")
        chain = chain_set_value(chain, 1, "summary")
        chain = chain_set_value(chain, 0, "weekly")
        # "summary" is offered under "weekly" too, so it survives
        assert chain.values == ("weekly", "summary", None)
        assert chain_options(chain, 2) == ("png", "pdf")

    def test_downstream_value_cleared_when_no_longer_offered(self):
        chain = new_chain("digest", providers_from_table(TABLE, 3))
        chain = chain_set_value(chain, 0, "daily")
        chain = chain_set_value(chain, 1, "summary")
        chain = chain_set_value(chain, 0, "weekly")
        assert chain.values == ("weekly", None, None)
        assert chain_options(chain, 1) == ("trend",)
        assert chain_options(chain, 2) == ()

    def test_invalid_option_rejected(self):
        with pytest.raises(InvalidOptionError):
            chain_set_value(chain_of(), 0, "yearly")
        with pytest.raises(InvalidOptionError):
            # nothing is offered downstream of an unset upstream
            chain_set_value(chain_of(), 1, "summary")

    def test_earlier_positions_never_modified(self):
        chain = chain_set_value(chain_of(), 0, "daily")
        chain = chain_set_value(chain, 1, "detail")
        chain = chain_set_value(chain, 2, "csv")
        chain2 = chain_set_value(chain, 1, "summary")
        assert chain2.values[0] == "daily"
        assert chain2.options[0] == chain.options[0]

    def test_reentry_after_downstream_set(self):
        chain = chain_set_value(chain_of(), 0, "daily")
        chain = chain_set_value(chain, 1, "chart")
        chain = chain_set_value(chain, 2, "png")
        chain = chain_set_value(chain, 0, "weekly")
        assert chain.values == ("weekly", None, None)


class TestClearAll:
    def test_clears_every_value(self):
        chain = chain_set_value(chain_of(), 0, "daily")
        chain = chain_set_value(chain, 1, "summary")
        cleared = chain_clear_all(chain)
        assert cleared.values == (None, None, None)
        assert chain_options(cleared, 0) == ("daily", "weekly")
        assert chain_options(cleared, 1) == ()

    def test_idempotent(self):
        chain = chain_of()
        assert chain_clear_all(chain) == chain

    def test_highlight_unchanged(self):
        chain = chain_toggle_highlight(chain_of())
        assert chain_clear_all(chain).highlight is True


class TestHighlight:
    def test_toggle_flips(self):
        chain = chain_of()
        assert chain.highlight is False
        assert chain_toggle_highlight(chain).highlight is True

    def test_double_toggle_restores(self):
        chain = chain_of()
        assert chain_toggle_highlight(chain_toggle_highlight(chain)) == chain


class TestSetContext:
    def test_context_switch_recascades_with_retention(self):
        chain = chain_set_value(chain_of(), 0, "daily")
        chain = chain_set_value(chain, 1, "summary")
        switched = chain_set_context(chain, "digest")
        # "daily" is a root in both contexts and "summary" is still its child
        assert switched.context == "digest"
        assert switched.values == ("daily", "summary", None)
        assert chain_options(switched, 2) == ()

    def test_unknown_context_empties_options(self):
        chain = chain_set_value(chain_of(), 0, "daily")
        switched = chain_set_context(chain, "nowhere")
        assert switched.values == (None, None, None)
        assert chain_options(switched, 0) == ()


def check_invariants(chain):
    """The three structural chain invariants."""
    for i in range(chain.length):
        if chain.values[i] is not None:
            assert chain.values[i] in chain.options[i]
    for i in range(1, chain.length):
        upstream = chain.values[i - 1]
        if upstream is None:
            assert chain.options[i] == ()
            assert chain.values[i] is None
        else:
            assert chain.options[i] == chain.providers[i](chain.context, upstream)
    if chain.length:
        assert chain.options[0] == chain.providers[0](chain.context, None)


class TestChainFuzz:
    def test_random_walk_preserves_invariants(self):
        import random

        rng = random.Random(8421)
        contexts = list(TABLE)
        for _ in range(200):
            chain = chain_of(rng.choice(contexts), positions=rng.randint(1, 4))
            for _ in range(rng.randint(1, 12)):
                move = rng.random()
                if move < 0.6:
                    position = rng.randrange(chain.length)
                    options = chain.options[position]
                    if options:
                        chain = chain_set_value(chain, position, rng.choice(options))
                elif move < 0.8:
                    chain = chain_clear_all(chain)
                else:
                    chain = chain_set_context(chain, rng.choice(contexts))
                check_invariants(chain)
