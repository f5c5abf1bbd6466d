"""Independent oracles used by the test suite.

Everything here is deliberately implemented from first principles, separate
from the package code paths it checks: partition counting via the pentagonal
recurrence, character degrees via hook lengths, free-tree counts via Prüfer
dedup and via the rooted-tree divisor recurrence with Otter's correction, and
path matching counts via the transfer recurrence.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1
    return total


def hook_length_dimension(parts: tuple[int, ...]) -> int:
    """Number of standard tableaux of the shape, n! over the hook products."""
    n = sum(parts)
    conj = [0] * (parts[0] if parts else 0)
    for p in parts:
        for j in range(p):
            conj[j] += 1
    dim = factorial(n)
    for i, row in enumerate(parts):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            dim //= hook
    return dim


def prufer_to_edges(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    """Decode a Prufer sequence over {0..n-1} into a labeled tree edge list."""
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for u in range(n):
            if degree[u] == 1:
                edges.append((u, v))
                degree[u] -= 1
                degree[v] -= 1
                break
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return edges


def all_labeled_trees_via_prufer(n: int):
    """Yield the edge lists of all n^(n-2) labeled trees."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_edges(seq)


@lru_cache(maxsize=None)
def rooted_tree_count(n: int) -> int:
    """Number of rooted unlabeled trees, by the divisor-sum recurrence."""
    if n <= 1:
        return n
    total = 0
    for j in range(1, n):
        s = sum(d * rooted_tree_count(d) for d in range(1, j + 1) if j % d == 0)
        total += s * rooted_tree_count(n - j)
    return total // (n - 1)


def free_tree_count(n: int) -> int:
    """Number of free unlabeled trees, by Otter's formula from rooted counts."""
    if n <= 1:
        return n
    r = rooted_tree_count
    pair_sum = sum(r(i) * r(n - i) for i in range(1, n))
    t = Fraction(r(n)) - Fraction(pair_sum, 2)
    if n % 2 == 0:
        t += Fraction(r(n // 2), 2)
    assert t.denominator == 1
    return int(t)


def path_matching_count(n: int) -> int:
    """Matchings of the n-vertex path, by the transfer recurrence."""
    a, b = 1, 1  # counts for 0 and 1 vertices
    for _ in range(n - 1):
        a, b = b, a + b
    return b
