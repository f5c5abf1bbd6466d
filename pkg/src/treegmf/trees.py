"""Labeled trees, canonical forms for unlabeled trees, exhaustive free-tree
enumeration, matchings, and q-Laplacian entries.

Vertices are 0-indexed internally; every external format (edge-list text,
JSON, CLI output) uses 1..n.

The q-Laplacian of a graph is I + q^2 (D - I) - q A: diagonal entries
1 + q^2 (deg - 1), entries -q on edges, 0 elsewhere.  At q = 1 it reduces to
the combinatorial Laplacian D - A.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .qpoly import QPolynomial, QP_ZERO


class LabeledTree:
    """Tree on vertex set {0..n-1}, validated at construction."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        edges = [tuple(sorted(e)) for e in edges]
        if n < 1:
            raise ValueError("need at least one vertex")
        if len(edges) != n - 1:
            raise ValueError(f"a tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            nbrs[u].append(v)
            nbrs[v].append(u)
        # connectivity: n-1 distinct edges + connected <=> tree
        stack, visited = [0], {0}
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in visited:
                    visited.add(w)
                    stack.append(w)
        if len(visited) != n:
            raise ValueError("edge set is not connected")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)

    @classmethod
    def path(cls, n: int) -> "LabeledTree":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, n: int) -> "LabeledTree":
        return cls(n, [(0, i) for i in range(1, n)])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def relabel(self, perm: list[int]) -> "LabeledTree":
        """Relabel vertices: vertex v becomes perm[v]."""
        return LabeledTree(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"LabeledTree(n={self.n}, edges={self.edges()!r})"


@dataclass(frozen=True)
class CanonicalTree:
    """Isomorphism class of a tree: canonical code plus one representative."""

    code: str
    n: int
    representative: LabeledTree = field(compare=False)


def rooted_code(tree: LabeledTree, root: int) -> str:
    """Canonical code of the tree rooted at root: children codes sorted and
    wrapped in parentheses.  Equal codes <=> rooted isomorphism."""

    def code(v: int, parent: int) -> str:
        subs = sorted(code(c, v) for c in tree.adj[v] if c != parent)
        return "(" + "".join(subs) + ")"

    return code(root, -1)


def centroids(tree: LabeledTree) -> list[int]:
    """The one or two vertices minimizing the largest component left after
    their removal."""
    n = tree.n
    if n == 1:
        return [0]
    order: list[int] = []
    parent = [-1] * n
    stack = [0]
    seen = {0}
    while stack:
        v = stack.pop()
        order.append(v)
        for w in tree.adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best = n + 1
    out: list[int] = []
    for v in range(n):
        heaviest = n - size[v]
        for w in tree.adj[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return sorted(out)


def ahu_canonical(tree: LabeledTree) -> CanonicalTree:
    """Canonical form of the underlying unlabeled tree: the lexicographically
    smallest rooted code over the (at most two) centroids."""
    code = min(rooted_code(tree, c) for c in centroids(tree))
    return CanonicalTree(code=code, n=tree.n, representative=tree)


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical level sequences of rooted trees on n vertices, generated
    by the successor rule on level sequences (root level 1)."""
    if n == 1:
        yield [1]
        return
    levels = list(range(1, n + 1))
    while True:
        yield levels[:]
        p = max((i for i in range(n) if levels[i] > 2), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        out = levels[:p]
        block = levels[q:p]
        while len(out) < n:
            out.extend(block[: n - len(out)])
        levels = out


def _tree_from_levels(levels: list[int]) -> LabeledTree:
    n = len(levels)
    edges = []
    for i in range(1, n):
        parent = max(j for j in range(i) if levels[j] == levels[i] - 1)
        edges.append((parent, i))
    return LabeledTree(n, edges)


@lru_cache(maxsize=None)
def _free_trees_cached(n: int) -> tuple[CanonicalTree, ...]:
    found: dict[str, CanonicalTree] = {}
    for levels in _rooted_level_sequences(n):
        cand = ahu_canonical(_tree_from_levels(levels))
        if cand.code not in found:
            found[cand.code] = cand
    return tuple(found[c] for c in sorted(found))


def enumerate_free_trees(n: int) -> list[CanonicalTree]:
    """Every isomorphism class of trees on n vertices exactly once, in
    canonical-code order.  Exhausts all rooted level sequences and dedupes by
    centroid canonical code."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return list(_free_trees_cached(n))


@dataclass(frozen=True)
class Matching:
    """Set of pairwise vertex-disjoint edges of a host tree."""

    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def matchings(tree: LabeledTree) -> list[Matching]:
    """All matchings of the tree, including the empty one, sorted by size
    then edge list."""
    edges = tree.edges()
    out: list[Matching] = []
    used: set[int] = set()
    chosen: list[tuple[int, int]] = []

    def rec(idx: int) -> None:
        if idx == len(edges):
            out.append(Matching(frozenset(chosen)))
            return
        rec(idx + 1)
        u, v = edges[idx]
        if u not in used and v not in used:
            used.update((u, v))
            chosen.append((u, v))
            rec(idx + 1)
            chosen.pop()
            used.difference_update((u, v))

    rec(0)
    out.sort(key=lambda m: (m.size, m.sorted_edges()))
    return out


def matching_counts(tree: LabeledTree) -> dict[int, int]:
    """Number of matchings per size, the empty matching included."""
    counts: dict[int, int] = {}
    for m in matchings(tree):
        counts[m.size] = counts.get(m.size, 0) + 1
    return counts


def q_laplacian_entry(tree: LabeledTree, i: int, j: int) -> QPolynomial:
    """Entry (i, j) of I + q^2 (D - I) - q A."""
    if not (0 <= i < tree.n and 0 <= j < tree.n):
        raise ValueError(f"vertex out of range: ({i},{j})")
    if i == j:
        return QPolynomial([1, 0, tree.degree(i) - 1])
    if j in tree.adj[i]:
        return QPolynomial([0, -1])
    return QP_ZERO


def q_laplacian(tree: LabeledTree) -> list[list[QPolynomial]]:
    return [[q_laplacian_entry(tree, i, j) for j in range(tree.n)] for i in range(tree.n)]


# ---------------------------------------------------------------------------
# external formats (1-indexed)
# ---------------------------------------------------------------------------


def tree_from_edge_text(text: str) -> LabeledTree:
    """Parse "n" on the first line then n-1 lines "u v" (1-indexed)."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty tree description")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u) - 1, int(v) - 1))
    return LabeledTree(n, edges)


def tree_from_json_obj(obj: dict) -> LabeledTree:
    return LabeledTree(int(obj["n"]), [(int(u) - 1, int(v) - 1) for u, v in obj["edges"]])


def parse_tree(text: str) -> LabeledTree:
    """Accept either the edge-list text format or {"n", "edges"} JSON."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return tree_from_json_obj(json.loads(text))
    return tree_from_edge_text(text)


def tree_to_json_obj(tree: LabeledTree) -> dict:
    return {"n": tree.n, "edges": [[u + 1, v + 1] for u, v in tree.edges()]}


def tree_to_edge_text(tree: LabeledTree) -> str:
    lines = [str(tree.n)] + [f"{u + 1} {v + 1}" for u, v in tree.edges()]
    return "\n".join(lines) + "\n"


def ascii_sketch(tree: LabeledTree) -> str:
    """Small text drawing of the unlabeled tree, rooted at a centroid."""
    cents = centroids(tree)
    root = min(cents, key=lambda c: (rooted_code(tree, c), c))

    def subcode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(subcode(c, v) for c in tree.adj[v] if c != parent)) + ")"

    lines: list[str] = ["o"]

    def walk(v: int, parent: int, prefix: str) -> None:
        kids = sorted((c for c in tree.adj[v] if c != parent),
                      key=lambda c: subcode(c, v))
        for k, c in enumerate(kids):
            last = k == len(kids) - 1
            lines.append(prefix + ("`-o" if last else "|-o"))
            walk(c, v, prefix + ("  " if last else "| "))

    walk(root, -1, "")
    return "\n".join(lines)
