"""Exact rational arithmetic helpers.

Weights, usage coefficients and slide progress are exact ``Fraction``
values so that replays are bit-for-bit reproducible: accumulating
``dt / duration`` ticks must reach exactly 1, which float arithmetic does
not guarantee.
"""

from __future__ import annotations

from fractions import Fraction


def to_fraction(value: object, *, name: str = "value") -> Fraction:
    """Coerce a config knob (int, float, decimal string, or Fraction) to Fraction."""
    if isinstance(value, bool):
        raise TypeError(f"{name} must be a number, got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{name} is not a valid rational: {value!r}") from exc
    raise TypeError(f"{name} must be a number, got {value!r}")


def rational_str(value: Fraction, digits: int = 12) -> str:
    """Canonical decimal rendering of a rational.

    Rounds half-to-even to ``digits`` fractional places and strips trailing
    zeros, so equal fractions always produce identical strings ("0.5", "1",
    "0.333333333333").
    """
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    whole, frac = text[:-digits], text[-digits:]
    frac = frac.rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"
