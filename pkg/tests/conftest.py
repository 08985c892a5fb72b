"""Shared independent oracles for the test suite.

Everything here recomputes results straight from Young-diagram box pictures
(materialized 0/1 grids), deliberately avoiding the bead-set routes the
package uses, so the two can check each other.
"""

import random

import pytest


def oracle_grid(parts):
    """The diagram as a list of filled-cell flag rows."""
    return [[True] * p for p in parts]


def oracle_hook_length(parts, i, j):
    """Hook length of (i, j) by walking boxes right and down in the grid."""
    grid = oracle_grid(parts)
    arm = sum(1 for jj in range(j + 1, len(grid[i])) if grid[i][jj])
    leg = sum(1 for ii in range(i + 1, len(grid)) if j < len(grid[ii]) and grid[ii][j])
    return arm + leg + 1


def oracle_first_column_hooks(parts):
    """First-column hook lengths by per-cell box counting."""
    return frozenset(oracle_hook_length(parts, i, 0) for i in range(len(parts)))


def oracle_is_t_core(parts, t):
    """Direct scan: no cell may have hook length t."""
    return all(
        oracle_hook_length(parts, i, j) != t
        for i, p in enumerate(parts)
        for j in range(p)
    )


def gen_partitions(n, max_part=None):
    """All partitions of n, descending tuples (independent recursive generator)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in gen_partitions(n - first, first):
            yield (first,) + rest


def random_parts(rng: random.Random, max_size: int) -> tuple:
    """A seeded random partition of some size <= max_size, descending tuple."""
    n = rng.randint(0, max_size)
    parts, prev = [], n
    while n > 0:
        p = rng.randint(1, min(prev, n))
        parts.append(p)
        n -= p
        prev = p
    return tuple(parts)


@pytest.fixture
def rng():
    return random.Random(20240817)
