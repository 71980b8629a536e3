#!/usr/bin/env python3
"""Randomized verification sweep over the matroid machinery.

Draws random set families and checks, exhaustively over each family's power
set: the rank axioms, the closure axioms, the independence axioms, agreement
between the direct closure and the hyperplane-intersection closure, and
consistency of the four covering characterizations.  Prints a summary and
exits nonzero on any violation.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from latmat import (  # noqa: E402
    GroundSet,
    SetFamily,
    TransversalMatroid,
    check_covering_equivalences,
    is_covering,
)


def random_family(rng, max_elements, max_blocks):
    n = rng.randint(1, max_elements)
    m = rng.randint(1, max_blocks)
    elements = tuple(range(1, n + 1))
    blocks = tuple(
        frozenset(rng.sample(elements, rng.randint(1, n))) for _ in range(m)
    )
    return SetFamily(GroundSet(elements), blocks)


def sweep_family(family) -> int:
    """Return the number of axiom checks performed; assert on violation."""
    matroid = TransversalMatroid(family, memoize=True)
    n = len(family.ground)
    checks = 0
    rank = {mask: matroid.rank_mask(mask) for mask in range(1 << n)}
    closure = {mask: matroid.closure_mask(mask) for mask in range(1 << n)}

    for mask in range(1 << n):
        assert 0 <= rank[mask] <= mask.bit_count()
        assert mask & ~closure[mask] == 0
        assert closure[closure[mask]] == closure[mask]
        assert matroid.closure_via_hyperplanes_mask(mask) == closure[mask]
        checks += 4
        for i in range(n):
            assert rank[mask] <= rank[mask | (1 << i)] <= rank[mask] + 1
            assert closure[mask] & ~closure[mask | (1 << i)] == 0
            checks += 2
    for x in range(1 << n):
        for y in range(1 << n):
            assert rank[x | y] + rank[x & y] <= rank[x] + rank[y]
            checks += 1
    for mask in range(1 << n):
        for xi in range(n):
            news = closure[mask | (1 << xi)] & ~closure[mask]
            for yi in range(n):
                if news & (1 << yi):
                    assert closure[mask | (1 << yi)] & (1 << xi)
                    checks += 1

    independent = {m for m in range(1 << n) if rank[m] == m.bit_count()}
    assert 0 in independent
    for mask in independent:
        for i in range(n):
            if mask & (1 << i):
                assert (mask ^ (1 << i)) in independent
                checks += 1
    for small in independent:
        for big in independent:
            if small.bit_count() < big.bit_count():
                assert any(
                    (small | (1 << i)) in independent
                    for i in range(n)
                    if big & (1 << i) and not small & (1 << i)
                )
                checks += 1

    report = check_covering_equivalences(family)
    assert report.consistent
    assert report.covering == is_covering(family)
    checks += 2
    return checks


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--families", type=int, default=300)
    parser.add_argument("--max-elements", type=int, default=7)
    parser.add_argument("--max-blocks", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.perf_counter()
    total_checks = 0
    coverings = 0
    for _ in range(args.families):
        family = random_family(rng, args.max_elements, args.max_blocks)
        total_checks += sweep_family(family)
        coverings += is_covering(family)
    elapsed = time.perf_counter() - start
    print(
        f"families={args.families} (coverings={coverings})"
        f" checks={total_checks} violations=0 elapsed={elapsed:.2f}s"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
