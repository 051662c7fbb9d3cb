"""Exact rational arithmetic helpers.

All payoffs, probabilities, and solver pivots in this package are
``fractions.Fraction`` values: arbitrary precision, always in lowest terms
with a positive denominator, so every equality check in the package is
bit-exact.  This module adds the strict text format used by the JSON
interfaces ("n/d" with d > 0, or a plain integer) and the seeded samplers
for bounded-denominator random weights.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction

from .errors import FormatError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/(\d+))?$")

#: Default bound for integer weights when sampling random mixtures.
DEFAULT_WEIGHT_BOUND = 64


def parse_rational(value: int | str) -> Fraction:
    """Parse a JSON payoff entry: an integer or a string ``"n/d"`` with d > 0.

    Anything else (floats, exponents, negative or zero denominators) is
    rejected with :class:`FormatError` so that file round-trips stay exact.
    """
    if isinstance(value, bool):
        raise FormatError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise FormatError(f"not a rational literal: {value!r}")
        if m.group(1) is not None and int(m.group(1)) == 0:
            raise FormatError(f"zero denominator: {value!r}")
        return Fraction(value)
    raise FormatError(f"not a rational literal: {value!r}")


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``"n/d"``; the denominator is always written."""
    return f"{q.numerator}/{q.denominator}"


def random_weight(rng: random.Random, max_den: int = DEFAULT_WEIGHT_BOUND) -> Fraction:
    """A random dyadic rational in [0, 1] with denominator at most ``max_den``."""
    den = 1 << rng.randint(0, max_den.bit_length() - 1)
    return Fraction(rng.randint(0, den), den)


def random_open_weight(
    rng: random.Random, max_den: int = DEFAULT_WEIGHT_BOUND
) -> Fraction:
    """A random dyadic rational strictly inside (0, 1)."""
    den = 1 << rng.randint(1, max_den.bit_length() - 1)
    return Fraction(rng.randint(1, den - 1), den)


def random_simplex_point(
    rng: random.Random, n: int, max_weight: int = DEFAULT_WEIGHT_BOUND
) -> tuple[Fraction, ...]:
    """Exact probabilities from integer weights in [0, max_weight].

    Weights are redrawn if they are all zero, so the result always sums to
    exactly 1 without a separate normalization pass.
    """
    while True:
        weights = [rng.randint(0, max_weight) for _ in range(n)]
        total = sum(weights)
        if total > 0:
            return tuple(Fraction(w, total) for w in weights)
