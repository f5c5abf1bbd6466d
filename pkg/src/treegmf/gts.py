"""The generalized tree shift and the proper-shift relation on isomorphism
classes of trees.

A shift is admissible for an ordered vertex pair (x, y) when every interior
vertex of the unique x-y path has degree exactly 2.  Applying it moves every
neighbor of y that is off the path over to x.  The shift is *proper* when
both x and y have at least one off-path neighbor; a proper shift strictly
increases the number of leaves, so the relation it generates on isomorphism
classes is acyclic, with the path as the unique source and the star as the
unique sink.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .trees import CanonicalTree, LabeledTree, ahu_canonical, ascii_sketch, enumerate_free_trees


def tree_path(tree: LabeledTree, x: int, y: int) -> tuple[int, ...]:
    """The unique path from x to y, inclusive."""
    if x == y:
        raise ValueError("path endpoints must be distinct")
    parent = {x: -1}
    stack = [x]
    while stack:
        v = stack.pop()
        if v == y:
            break
        for w in tree.adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def gts_shift(tree: LabeledTree, x: int, y: int) -> LabeledTree:
    """Move every off-path neighbor of y to x along the x-y path.

    Raises ValueError if an interior path vertex has degree != 2.
    """
    path = tree_path(tree, x, y)
    for v in path[1:-1]:
        if tree.degree(v) != 2:
            raise ValueError(
                f"interior path vertex {v} has degree {tree.degree(v)}, shift needs 2"
            )
    on_path = set(path)
    edges = []
    for u, v in tree.edges():
        if u == y and v not in on_path:
            edges.append((x, v))
        elif v == y and u not in on_path:
            edges.append((x, u))
        else:
            edges.append((u, v))
    return LabeledTree(tree.n, edges)


def shift_is_admissible(tree: LabeledTree, x: int, y: int) -> bool:
    path = tree_path(tree, x, y)
    return all(tree.degree(v) == 2 for v in path[1:-1])


def shift_is_proper(tree: LabeledTree, x: int, y: int) -> bool:
    """Admissible, and both endpoints keep at least one off-path neighbor."""
    path = tree_path(tree, x, y)
    if any(tree.degree(v) != 2 for v in path[1:-1]):
        return False
    on_path = set(path)
    x_off = any(w not in on_path for w in tree.adj[x])
    y_off = any(w not in on_path for w in tree.adj[y])
    return x_off and y_off


@dataclass(frozen=True)
class GtsPair:
    """Ordered pair of isomorphism classes related by one proper shift.

    The witness is the (x, y) pair and path on the lower tree's canonical
    representative; applying the shift there yields a tree isomorphic to the
    upper class.
    """

    lower: CanonicalTree
    upper: CanonicalTree
    witness_x: int
    witness_y: int
    witness_path: tuple[int, ...]

    def witness_tree(self) -> LabeledTree:
        return self.lower.representative


@lru_cache(maxsize=None)
def _proper_pairs_cached(n: int) -> tuple[GtsPair, ...]:
    pairs: dict[tuple[str, str], GtsPair] = {}
    for lower in enumerate_free_trees(n):
        rep = lower.representative
        for x in range(n):
            for y in range(n):
                if x == y or not shift_is_proper(rep, x, y):
                    continue
                shifted = gts_shift(rep, x, y)
                upper = ahu_canonical(shifted)
                if upper.code == lower.code:
                    continue
                key = (lower.code, upper.code)
                if key not in pairs:
                    pairs[key] = GtsPair(
                        lower=lower,
                        upper=upper,
                        witness_x=x,
                        witness_y=y,
                        witness_path=tree_path(rep, x, y),
                    )
    return tuple(pairs[k] for k in sorted(pairs))


def proper_gts_pairs(n: int) -> list[GtsPair]:
    """All ordered pairs (lower, upper) of distinct isomorphism classes such
    that some proper shift on a representative of lower yields upper.  One
    witness per pair, the first in (x, y) lexicographic order on the
    canonical representative."""
    if not 2 <= n:
        raise ValueError(f"n must be >= 2, got {n}")
    return list(_proper_pairs_cached(n))


def pairs_to_json_obj(n: int, pairs: list[GtsPair]) -> dict:
    return {
        "n": n,
        "pairs": [
            {
                "lower": p.lower.code,
                "upper": p.upper.code,
                "witness": {
                    "x": p.witness_x + 1,
                    "y": p.witness_y + 1,
                    "path": [v + 1 for v in p.witness_path],
                    "tree": {
                        "n": n,
                        "edges": [[u + 1, v + 1] for u, v in p.lower.representative.edges()],
                    },
                },
            }
            for p in pairs
        ],
    }


def poset_to_dot(n: int, pairs: list[GtsPair]) -> str:
    """DOT digraph of the proper-shift relation; node labels carry the
    canonical code and a small sketch."""
    trees = enumerate_free_trees(n)
    lines = [f"digraph shift_poset_{n} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for t in trees:
        sketch = ascii_sketch(t.representative).replace("\n", "\\l")
        lines.append(f'  "{t.code}" [label="{t.code}\\l{sketch}\\l"];')
    for p in pairs:
        lines.append(f'  "{p.lower.code}" -> "{p.upper.code}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
