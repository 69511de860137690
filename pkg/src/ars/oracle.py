"""Brute-force ground truth: exhaustive class enumeration and exhaustive
t-term ranks, independent of the flow and table machinery."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from . import flow, structure
from .binmat import BinaryMatrix
from .errors import EmptyClass
from .partition import Partition, is_nonempty, margins_realizable


def enumerate_class(
    r: Partition, s: Partition, budget: int | None = None
) -> Iterator[BinaryMatrix]:
    """Yield every matrix with row sums r and column sums s.

    Backtracks column by column, choosing the rows of each column among
    those with remaining capacity, pruning branches whose residual
    margins fail the Gale-Ryser test.  Matrices come out in lexicographic
    order of their column row-sets.  With a budget, stops after that many
    matrices.
    """
    m, n = len(r), len(s)
    if budget is not None and budget <= 0:
        return
    if not is_nonempty(r, s):
        return
    rr = list(r.parts)
    chosen: list[tuple[int, ...]] = []
    yielded = 0

    def rec(j: int) -> Iterator[BinaryMatrix]:
        nonlocal yielded
        if j == n:
            grid = [[0] * n for _ in range(m)]
            for jj, rows in enumerate(chosen):
                for i in rows:
                    grid[i][jj] = 1
            yielded += 1
            yield BinaryMatrix(grid)
            return
        rest = s.parts[j + 1:]
        candidates = [i for i in range(m) if rr[i] > 0]
        for combo in itertools.combinations(candidates, s[j]):
            for i in combo:
                rr[i] -= 1
            if margins_realizable(rr, rest):
                chosen.append(combo)
                yield from rec(j + 1)
                chosen.pop()
            for i in combo:
                rr[i] += 1
            if budget is not None and yielded >= budget:
                return

    yield from rec(0)


def brute_t_term_rank(a: BinaryMatrix, t: int) -> int:
    """t-term rank by exhaustive assignment: each column is either left
    unselected or assigned to one of its 1-rows, respecting the per-row
    quota t.  Memoized on (column, per-row usage); no flow machinery."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    col_rows = [tuple(i for i in range(a.m) if a.rows[i][j]) for j in range(a.n)]
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def best(j: int, used: tuple[int, ...]) -> int:
        if j == a.n:
            return 0
        key = (j, used)
        cached = memo.get(key)
        if cached is not None:
            return cached
        value = best(j + 1, used)
        for i in col_rows[j]:
            if used[i] < t:
                bumped = used[:i] + (used[i] + 1,) + used[i + 1:]
                value = max(value, 1 + best(j + 1, bumped))
        memo[key] = value
        return value

    return best(0, (0,) * a.m)


def brute_min_t_term_rank(r: Partition, s: Partition, t: int) -> int:
    """Minimum t-term rank over the class, by full enumeration."""
    if not is_nonempty(r, s):
        raise EmptyClass(f"no matrix has row sums {r.parts} and column sums {s.parts}")
    return min(brute_t_term_rank(a, t) for a in enumerate_class(r, s))


@dataclass(frozen=True)
class SearchOutcome:
    """Result of an enumeration search.

    matrix is None when no witness was found; complete tells whether the
    whole class was scanned (False means the budget ran out, so absence
    is undetermined rather than proved).
    """

    matrix: BinaryMatrix | None
    complete: bool
    scanned: int


def find_uniform_minimizer(
    r: Partition, s: Partition, t_max: int | None = None, budget: int | None = 1_000_000
) -> SearchOutcome:
    """Scan the class for a matrix whose k-term rank meets the class
    minimum for every k = 1..t_max.

    Ranks stabilize once k reaches the largest row sum, so the default
    t_max of R_1 certifies all k >= 1.
    """
    if not is_nonempty(r, s):
        raise EmptyClass(f"no matrix has row sums {r.parts} and column sums {s.parts}")
    if t_max is None:
        t_max = r.parts[0] if r.parts else 1
    if t_max < 1:
        raise ValueError("t_max must be a positive integer")
    targets = [structure.min_t_term_rank(r, s, k)[0] for k in range(1, t_max + 1)]
    scanned = 0
    for a in enumerate_class(r, s):
        if budget is not None and scanned >= budget:
            return SearchOutcome(matrix=None, complete=False, scanned=scanned)
        scanned += 1
        if all(flow.t_term_rank(a, k + 1) == targets[k] for k in range(t_max)):
            return SearchOutcome(matrix=a, complete=True, scanned=scanned)
    return SearchOutcome(matrix=None, complete=True, scanned=scanned)
