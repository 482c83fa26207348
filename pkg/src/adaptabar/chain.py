"""Procedural selection chain: dropdowns whose options nest left to right.

Each position's option list is produced by an injected provider from the
chain context and the value chosen immediately to its left. Unlike a wizard,
any position can be re-entered at any time; downstream values are then
retained when still valid and cleared otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Mapping, Sequence

from .errors import BadPositionError, InvalidOptionError

# (context, upstream value or None) -> ordered option ids
OptionProvider = Callable[[str, str | None], Sequence[str]]

# Key under which a fixture table stores the options offered when there is no
# upstream value (position 0).
ROOT_KEY = ""


@dataclass(frozen=True)
class ChainState:
    """Selection chain contents: per-position values, cached options, highlight flag."""

    context: str
    providers: tuple[OptionProvider, ...]
    values: tuple[str | None, ...]
    options: tuple[tuple[str, ...], ...]
    highlight: bool = False

    def __post_init__(self) -> None:
        if not (len(self.providers) == len(self.values) == len(self.options)):
            raise ValueError("providers, values and options must have equal length")

    @property
    def length(self) -> int:
        return len(self.providers)


def _settle(
    context: str,
    providers: tuple[OptionProvider, ...],
    desired: Sequence[str | None],
) -> tuple[tuple[str | None, ...], tuple[tuple[str, ...], ...]]:
    """Recompute the cascade, keeping each desired value only while it stays valid.

    Positions after an unset value get empty options without consulting their
    provider, which guarantees the upstream-absent rule regardless of provider
    behavior.
    """
    values: list[str | None] = []
    options: list[tuple[str, ...]] = []
    upstream: str | None = None
    for position, provider in enumerate(providers):
        if position == 0:
            opts = tuple(provider(context, None))
        elif upstream is not None:
            opts = tuple(provider(context, upstream))
        else:
            opts = ()
        value = desired[position] if desired[position] in opts else None
        values.append(value)
        options.append(opts)
        upstream = value
    return tuple(values), tuple(options)


def new_chain(
    context: str,
    providers: Sequence[OptionProvider],
    *,
    highlight: bool = False,
) -> ChainState:
    """Empty chain over the given providers, with position 0's options populated."""
    providers = tuple(providers)
    values, options = _settle(context, providers, [None] * len(providers))
    return ChainState(
        context=context,
        providers=providers,
        values=values,
        options=options,
        highlight=highlight,
    )


def _check_position(chain: ChainState, position: int) -> None:
    if not 0 <= position < chain.length:
        raise BadPositionError(f"position {position} out of range for chain of {chain.length}")


def chain_set_value(chain: ChainState, position: int, value: str) -> ChainState:
    """Set one position's value and cascade downstream.

    Downstream options are recomputed position by position; existing values
    survive when still offered and are cleared when not. Positions before
    ``position`` are never modified.
    """
    _check_position(chain, position)
    if value not in chain.options[position]:
        raise InvalidOptionError(
            f"{value!r} is not currently offered at position {position}"
        )
    desired = list(chain.values)
    desired[position] = value
    values, options = _settle(chain.context, chain.providers, desired)
    return replace(chain, values=values, options=options)


def chain_options(chain: ChainState, position: int) -> tuple[str, ...]:
    """The cached option list at a position."""
    _check_position(chain, position)
    return chain.options[position]


def chain_clear_all(chain: ChainState) -> ChainState:
    """Clear every value; only position 0 offers options afterwards."""
    values, options = _settle(chain.context, chain.providers, [None] * chain.length)
    return replace(chain, values=values, options=options)


def chain_set_context(chain: ChainState, context: str) -> ChainState:
    """Switch context and re-run the cascade from position 0, retaining valid values."""
    values, options = _settle(context, chain.providers, chain.values)
    return replace(chain, context=context, values=values, options=options)


def chain_toggle_highlight(chain: ChainState) -> ChainState:
    return replace(chain, highlight=not chain.highlight)


def providers_from_table(
    table: Mapping[str, Mapping[str, Sequence[str]]],
    positions: int,
) -> tuple[OptionProvider, ...]:
    """Build fixture providers from a declarative nested-options table.

    The table maps context -> option id -> child options; the empty-string
    key holds the root options offered when there is no upstream value.
    Every position shares the same lookup.
    """
    frozen = {
        context: {option: tuple(children) for option, children in mapping.items()}
        for context, mapping in table.items()
    }

    def provider(context: str, upstream: str | None) -> tuple[str, ...]:
        key = ROOT_KEY if upstream is None else upstream
        return frozen.get(context, {}).get(key, ())

    return tuple([provider] * positions)
