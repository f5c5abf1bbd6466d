"""Integer partitions, centralizer orders, and symmetric-group characters.

Partitions are stored weakly decreasing.  The global enumeration order used
everywhere (tables, JSON output, transition matrices) is reverse
lexicographic: (n) first, (1,...,1) last.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator


class Partition:
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = sorted((int(p) for p in parts), reverse=True)
        if ps and ps[-1] <= 0:
            raise ValueError(f"partition parts must be positive, got {ps}")
        self.parts: tuple[int, ...] = tuple(ps)

    @classmethod
    def involution_shape(cls, n: int, j: int) -> "Partition":
        """The shape with j parts equal to 2 and n-2j parts equal to 1."""
        if j < 0 or 2 * j > n:
            raise ValueError(f"need 0 <= 2j <= n, got n={n}, j={j}")
        return cls((2,) * j + (1,) * (n - 2 * j))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def exponential_form(self) -> dict[int, int]:
        """Map part value -> multiplicity."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def multiplicity(self, v: int) -> int:
        return self.parts.count(v)

    def transpositions_if_involution_shape(self) -> int | None:
        """If the shape is 2^j,1^(n-2j), return j; otherwise None."""
        if any(p > 2 for p in self.parts):
            return None
        return self.parts.count(2)

    def to_exp_string(self) -> str:
        """Exponential notation, e.g. "2^3,1^4" (exponent omitted when 1)."""
        if not self.parts:
            return "()"
        items = []
        for v in sorted(set(self.parts), reverse=True):
            m = self.multiplicity(v)
            items.append(f"{v}^{m}" if m > 1 else f"{v}")
        return ",".join(items)


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [Partition(t) for t in _partition_tuples(n)]


def z_order(mu: Partition) -> int:
    """Centralizer order of the conjugacy class with cycle type mu:
    product over part values v of v^m * m! with m the multiplicity of v."""
    z = 1
    for v, m in mu.exponential_form().items():
        z *= v**m * math.factorial(m)
    return z


def _border_strip_removals(parts: tuple[int, ...], k: int):
    """Yield (smaller shape, sign) for each border strip of size k removable
    from the shape, using the first-column hook encoding of the shape."""
    l = len(parts)
    beta = [parts[i] + (l - 1 - i) for i in range(l)]
    bset = set(beta)
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for b2 in beta if nb < b2 < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.insert(0, nb)
        newbeta.sort(reverse=True)
        newparts = tuple(
            p for i, x in enumerate(newbeta) if (p := x - (l - 1 - i)) > 0
        )
        yield newparts, (-1) ** height


@lru_cache(maxsize=None)
def _chi(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    total = 0
    for newparts, sign in _border_strip_removals(lam, k):
        total += sign * _chi(newparts, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric-group character indexed by lam, evaluated at any
    permutation of cycle type mu.  Computed by iterated border-strip removal."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: |lam|={lam.n}, |mu|={mu.n}")
    return _chi(lam.parts, mu.parts)
