"""Shared test data and hypothesis strategies."""

from __future__ import annotations

import math

from hypothesis import strategies as st

from pdneg import Distribution

# The five-component distribution used throughout the worked examples.
EXAMPLE_PD = (0.0, 0.1, 0.2, 0.3, 0.4)


def normalize(draws) -> Distribution:
    total = math.fsum(draws)
    return Distribution(tuple(d / total for d in draws))


def simplexes(min_n: int = 2, max_n: int = 10):
    """Strategy drawing random points of the probability simplex."""
    return st.lists(
        st.floats(min_value=1e-3, max_value=1.0),
        min_size=min_n,
        max_size=max_n,
    ).map(normalize)
