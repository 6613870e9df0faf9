"""Shared sweep caches and hypothesis strategies."""

from functools import lru_cache

from hypothesis import strategies as st

from diaghooks.beta import BetaSet
from diaghooks.partitions import Partition, enumerate_partitions


@lru_cache(maxsize=None)
def partitions_up_to(n_max: int) -> tuple[Partition, ...]:
    return tuple(la for n in range(n_max + 1) for la in enumerate_partitions(n))


@lru_cache(maxsize=None)
def symmetric_up_to(n_max: int) -> tuple[Partition, ...]:
    return tuple(la for n in range(n_max + 1) for la in enumerate_partitions(n, symmetric_only=True))


@st.composite
def partitions(draw, max_part: int = 10, max_rows: int = 8) -> Partition:
    rows = draw(st.integers(0, max_rows))
    parts = []
    ceiling = max_part
    for _ in range(rows):
        nxt = draw(st.integers(1, ceiling))
        parts.append(nxt)
        ceiling = nxt
    return Partition(tuple(parts))


@st.composite
def bead_sets(draw, max_pos: int = 24, max_beads: int = 9) -> BetaSet:
    beads = draw(st.sets(st.integers(0, max_pos), max_size=max_beads))
    return BetaSet(tuple(beads))
