"""Shared strategies and small-case helpers for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from ars import BinaryMatrix, Partition, iter_partitions

MAX_DIM = 4
MAX_WEIGHT = 8


@st.composite
def partitions(draw, max_parts=5, max_part=5):
    parts = draw(st.lists(st.integers(1, max_part), min_size=1, max_size=max_parts))
    return Partition(sorted(parts, reverse=True))


@st.composite
def matrices(draw, max_m=5, max_n=5, min_m=1, min_n=1):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, 1), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
    return BinaryMatrix(rows)


def equal_weight_pairs(max_dim=MAX_DIM, max_weight=MAX_WEIGHT):
    """Every ordered pair of partitions with at most max_dim parts and a
    shared weight up to max_weight."""
    pairs = []
    for w in range(1, max_weight + 1):
        ps = list(iter_partitions(max_dim, w))
        pairs.extend((r, s) for r in ps for s in ps)
    return pairs


def cover_profile(a: BinaryMatrix) -> tuple[int, ...]:
    """profile[e] = least f such that the first e rows and first f columns
    cover every 1 of a.  Prefix coverage is then f >= profile[e]."""
    last_one = [max((j + 1 for j, v in enumerate(row) if v), default=0) for row in a.rows]
    profile = []
    for e in range(a.m + 1):
        profile.append(max(last_one[e:], default=0))
    return tuple(profile)
