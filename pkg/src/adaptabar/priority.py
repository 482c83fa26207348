"""Per-user usage tracking and the composite priority score that drives fitting.

A control's score is ``base_weight + alpha * activation_count``: the
pre-assigned weight decides the initial ordering, and usage gradually pulls
frequently activated controls up. There is deliberately no decay of counts;
that keeps ranking monotone under further activations.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Sequence

from .core import ControlSpec
from .rational import to_fraction


@dataclass(frozen=True)
class UsageProfile:
    """Activation statistics for one user.

    ``counts`` holds activation totals, ``last_used`` the sequence number of
    each control's most recent activation, and ``next_seq`` the monotone
    counter those sequence numbers are drawn from. Profiles outlive toolbar
    edits: entries for removed controls are retained and simply ignored by
    ranking.
    """

    user_id: str = "default"
    counts: Mapping[str, int] = field(default_factory=dict)
    last_used: Mapping[str, int] = field(default_factory=dict)
    next_seq: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", dict(self.counts))
        object.__setattr__(self, "last_used", dict(self.last_used))
        for control, count in self.counts.items():
            if count < 1:
                raise ValueError(f"count for {control!r} must be >= 1, got {count}")
        for control, seq in self.last_used.items():
            if control not in self.counts:
                raise ValueError(f"last_used entry {control!r} missing from counts")
            if seq >= self.next_seq:
                raise ValueError(f"sequence {seq} for {control!r} not below next_seq")

    def count(self, control_id: str) -> int:
        return self.counts.get(control_id, 0)


def record_activation(profile: UsageProfile, control_id: str) -> UsageProfile:
    """Return a profile with one more activation of ``control_id``.

    Unknown ids are created on first use; nothing else in the profile changes.
    """
    counts = dict(profile.counts)
    last_used = dict(profile.last_used)
    counts[control_id] = counts.get(control_id, 0) + 1
    last_used[control_id] = profile.next_seq
    return replace(
        profile, counts=counts, last_used=last_used, next_seq=profile.next_seq + 1
    )


@total_ordering
@dataclass(frozen=True)
class PriorityScore:
    """Composite priority with its tie-break key.

    Scores order descending; equal scores fall back to ascending definition
    index, so fresh toolbars come up in their predefined order. ``a < b``
    means "a ranks before b", which makes ``sorted`` produce rank order.
    """

    score: Fraction
    definition_index: int

    def __lt__(self, other: "PriorityScore") -> bool:
        if self.score != other.score:
            return self.score > other.score
        return self.definition_index < other.definition_index


def score(profile: UsageProfile, spec: ControlSpec, alpha: Fraction | int | float) -> PriorityScore:
    """Composite priority of one control: weight plus alpha times usage count."""
    alpha = to_fraction(alpha, name="alpha")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    value = spec.base_weight + alpha * profile.count(spec.id)
    return PriorityScore(score=value, definition_index=spec.definition_index)


def rank(
    profile: UsageProfile,
    specs: Sequence[ControlSpec] | Iterable[ControlSpec],
    alpha: Fraction | int | float,
) -> list[str]:
    """Control ids sorted by priority, best first. Always a permutation of the input."""
    scored = [(score(profile, spec, alpha), spec.id) for spec in specs]
    scored.sort(key=lambda pair: pair[0])
    return [control_id for _, control_id in scored]
