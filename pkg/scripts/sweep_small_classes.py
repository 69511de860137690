#!/usr/bin/env python3
"""Desk-scale cross-validation sweep.

Enumerates every class with at most max_dim rows/columns and weight up to
max_weight, then checks each closed-form criterion against brute force:
the nonemptiness tests, the rank equalities (flow / exhaustive / cover
duality), the phi cover certificate, and the psi two-cover criterion.
Prints a summary; exits nonzero on any discrepancy."""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from dataclasses import dataclass

from ars import (
    brute_t_term_rank,
    cover_exists,
    is_nonempty,
    iter_partitions,
    min_cover_value,
    min_t_term_rank,
    nonempty_by_structure,
    structure_matrix,
    t_term_rank,
    two_cover_exists,
)
from ars.oracle import enumerate_class


@dataclass(frozen=True)
class SweepConfig:
    max_dim: int = 4
    max_weight: int = 8
    t_max: int = 4


def cover_profile(a):
    last_one = [max((j + 1 for j, v in enumerate(row) if v), default=0) for row in a.rows]
    return tuple(max(last_one[e:], default=0) for e in range(a.m + 1))


def run_sweep(config: SweepConfig) -> int:
    started = time.perf_counter()
    failures = 0
    pairs = classes = matrices = 0

    for w in range(1, config.max_weight + 1):
        ps = list(iter_partitions(config.max_dim, w))
        for r, s in itertools.product(ps, ps):
            pairs += 1
            gale = is_nonempty(r, s)
            if gale != nonempty_by_structure(structure_matrix(r, s)):
                print(f"FAIL nonemptiness criteria disagree on {r.parts} / {s.parts}")
                failures += 1
            mats = tuple(enumerate_class(r, s))
            if gale != bool(mats):
                print(f"FAIL enumeration disagrees with gale-ryser on {r.parts} / {s.parts}")
                failures += 1
            if not mats:
                continue
            classes += 1
            matrices += len(mats)

            profiles = [cover_profile(a) for a in mats]
            m, n = len(r), len(s)

            for t in range(1, config.t_max + 1):
                ranks = []
                for a in mats:
                    value = t_term_rank(a, t)
                    if value != brute_t_term_rank(a, t) or value != min_cover_value(a, t)[0]:
                        print(f"FAIL rank equalities on {a.rows} t={t}")
                        failures += 1
                    ranks.append(value)
                if min(ranks) != min_t_term_rank(r, s, t)[0]:
                    print(f"FAIL minimum rank formula on {r.parts} / {s.parts} t={t}")
                    failures += 1

            for e in range(m + 1):
                least_f = min(p[e] for p in profiles)
                for f in range(n + 1):
                    if cover_exists(r, s, e, f) != (f >= least_f):
                        print(f"FAIL cover certificate on {r.parts} / {s.parts} ({e},{f})")
                        failures += 1

            for e1, e2 in itertools.combinations(range(m + 1), 2):
                for f2, f1 in itertools.combinations(range(n + 1), 2):
                    witnessed = any(p[e1] <= f1 and p[e2] <= f2 for p in profiles)
                    if two_cover_exists(r, s, e1, e2, f2, f1) != witnessed:
                        print(
                            f"FAIL two-cover criterion on {r.parts} / {s.parts} "
                            f"({e1},{f1}) + ({e2},{f2})"
                        )
                        failures += 1

    elapsed = time.perf_counter() - started
    print(
        f"swept {pairs} pairs ({classes} nonempty, {matrices} matrices) "
        f"in {elapsed:.1f}s: {failures} failures"
    )
    return 1 if failures else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-dim", type=int, default=SweepConfig.max_dim)
    parser.add_argument("--max-weight", type=int, default=SweepConfig.max_weight)
    parser.add_argument("--t-max", type=int, default=SweepConfig.t_max)
    args = parser.parse_args()
    return run_sweep(SweepConfig(args.max_dim, args.max_weight, args.t_max))


if __name__ == "__main__":
    sys.exit(main())
