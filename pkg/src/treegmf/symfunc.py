"""Symmetric-function expansions, class functions on cycle types, brick
tabloids, and the involution-class binomial transform.

Everything is exact over Q.  A symmetric function of degree n is represented
by its coordinates in the power-sum basis (PowerExpansion).  Its inverse
Frobenius image is the class function with value z_mu * coord(mu) at cycle
type mu (ClassFunctionValue).

Basis tags, in the fixed order used by tables and the CLI:

  m   monomial
  e   elementary (products of e_k = sum over mu of sign(mu) p_mu / z_mu)
  h   homogeneous (products of h_k = sum over mu of p_mu / z_mu)
  p   power sum
  s   Schur (via irreducible characters)
  f   sign-scaled monomial: f_lam = (-1)^(n - len(lam)) * m_lam.  This is the
      convention under which the brick-tabloid rule below carries the sign
      (-1)^(n - l(mu)) and the binomial transform is supported on the single
      shape 2^i,1^(n-2i) with value (-2)^i.

Brick tabloids: a filling of the rows of a shape mu by bricks whose multiset
of lengths is lam, each brick inside a single row; the weight of a filling is
the product over rows of the length of the row's last brick.  Signed weighted
counts give the m- and f-class-function values directly, an independent route
cross-checked against the power-sum route in the test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Union

from .partitions import Partition, _partition_tuples, enumerate_partitions, mn_character, z_order
from .qpoly import rational_to_json

Rational = Union[Fraction, int]

BASES = ("m", "e", "h", "p", "s", "f")


def _frac(v: Rational) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class PowerExpansion:
    """Coordinates of a degree-n symmetric function in the power-sum basis.

    Absent keys mean coefficient zero; stored coefficients are nonzero.
    Treat instances as immutable values.
    """

    n: int
    coords: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {p: _frac(c) for p, c in self.coords.items() if c != 0}
        for p in clean:
            if p.n != self.n:
                raise ValueError(f"key {p!r} is not a partition of {self.n}")
        object.__setattr__(self, "coords", clean)

    @classmethod
    def zero(cls, n: int) -> "PowerExpansion":
        return cls(n, {})

    @classmethod
    def unit(cls, lam: Partition) -> "PowerExpansion":
        return cls(lam.n, {lam: Fraction(1)})

    def coefficient(self, lam: Partition) -> Fraction:
        return self.coords.get(lam, Fraction(0))

    def __add__(self, other: "PowerExpansion") -> "PowerExpansion":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = dict(self.coords)
        for p, c in other.coords.items():
            out[p] = out.get(p, Fraction(0)) + c
        return PowerExpansion(self.n, out)

    def __neg__(self) -> "PowerExpansion":
        return PowerExpansion(self.n, {p: -c for p, c in self.coords.items()})

    def __sub__(self, other: "PowerExpansion") -> "PowerExpansion":
        return self + (-other)

    def __mul__(self, other: "PowerExpansion | Rational") -> "PowerExpansion":
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return PowerExpansion(self.n, {p: c * v for p, v in self.coords.items()})
        # p_mu * p_nu = p_(mu union nu), combining parts as multisets
        out: dict[Partition, Fraction] = {}
        for pa, ca in self.coords.items():
            for pb, cb in other.coords.items():
                key = Partition(pa.parts + pb.parts)
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return PowerExpansion(self.n + other.n, out)

    __rmul__ = __mul__

    def to_json_obj(self) -> dict:
        items = sorted(self.coords.items(), key=lambda kv: kv[0].parts, reverse=True)
        return {
            "n": self.n,
            "coords": [
                {"partition": list(p.parts), "coeff": rational_to_json(c)} for p, c in items
            ],
        }


@dataclass(frozen=True)
class ClassFunctionValue:
    """Value of a class function at each cycle type of degree n."""

    n: int
    values: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for p in self.values:
            if p.n != self.n:
                raise ValueError(f"key {p!r} is not a partition of {self.n}")

    def at(self, mu: Partition) -> Fraction:
        return self.values.get(mu, Fraction(0))

    def at_involution(self, j: int) -> Fraction:
        """Value at the cycle type 2^j,1^(n-2j)."""
        return self.at(Partition.involution_shape(self.n, j))

    def to_json_obj(self) -> dict:
        items = sorted(self.values.items(), key=lambda kv: kv[0].parts, reverse=True)
        return {
            "n": self.n,
            "values": [
                {"partition": list(p.parts), "value": rational_to_json(c)} for p, c in items
            ],
        }


# ---------------------------------------------------------------------------
# power-sum expansions of the six bases
# ---------------------------------------------------------------------------


def _m_times_pk(coords: dict[tuple[int, ...], Fraction], k: int) -> dict[tuple[int, ...], Fraction]:
    """Multiply a monomial-coordinate expansion by the degree-k power sum.

    Adding k to a part of value v (or adjoining a new part k, the v = 0 case)
    produces the shape with one part v+k more; the multiplicity of v+k in the
    result counts the monomial collisions.
    """
    out: dict[tuple[int, ...], Fraction] = {}
    for parts, c in coords.items():
        seen: set[int] = set()
        for idx, v in enumerate(parts):
            if v in seen:
                continue
            seen.add(v)
            grown = tuple(sorted(parts[:idx] + parts[idx + 1:] + (v + k,), reverse=True))
            mult = grown.count(v + k)
            out[grown] = out.get(grown, Fraction(0)) + c * mult
        appended = tuple(sorted(parts + (k,), reverse=True))
        out[appended] = out.get(appended, Fraction(0)) + c * appended.count(k)
    return {p: c for p, c in out.items() if c != 0}


@lru_cache(maxsize=None)
def _p_in_m_rows(n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """Monomial coordinates of every degree-n power-sum basis element."""
    rows = {}
    for mu in _partition_tuples(n):
        coords: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
        for k in mu:
            coords = _m_times_pk(coords, k)
        rows[mu] = coords
    return rows


@lru_cache(maxsize=None)
def _m_in_p_rows(n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """Power-sum coordinates of every degree-n monomial basis element.

    The p-in-m transition matrix is triangular in reverse-lexicographic order
    (a power sum only hits coarsenings of its index), so each row of the
    inverse is obtained by one back-substitution pass.
    """
    parts_list = _partition_tuples(n)
    index = {p: i for i, p in enumerate(parts_list)}
    diag: dict[int, Fraction] = {}
    cols: dict[int, list[tuple[int, Fraction]]] = {j: [] for j in range(len(parts_list))}
    for mu, row in _p_in_m_rows(n).items():
        i = index[mu]
        for nu, val in row.items():
            j = index[nu]
            if j == i:
                diag[i] = val
            else:
                cols[j].append((i, val))
    out = {}
    for i in range(len(parts_list)):
        x = [Fraction(0)] * (i + 1)
        x[i] = 1 / diag[i]
        for j in range(i - 1, -1, -1):
            s = Fraction(0)
            for k, val in cols[j]:
                if k <= i and x[k]:
                    s += x[k] * val
            if s:
                x[j] = -s / diag[j]
        out[parts_list[i]] = {parts_list[j]: x[j] for j in range(i + 1) if x[j]}
    return out


@lru_cache(maxsize=None)
def _hk_expansion(k: int) -> PowerExpansion:
    coords = {Partition(mu): Fraction(1, z_order(Partition(mu))) for mu in _partition_tuples(k)}
    return PowerExpansion(k, coords)


@lru_cache(maxsize=None)
def _ek_expansion(k: int) -> PowerExpansion:
    coords = {}
    for mu in _partition_tuples(k):
        p = Partition(mu)
        coords[p] = Fraction((-1) ** (k - len(p)), z_order(p))
    return PowerExpansion(k, coords)


@lru_cache(maxsize=None)
def _power_expansion_cached(basis: str, parts: tuple[int, ...]) -> PowerExpansion:
    lam = Partition(parts)
    n = lam.n
    if basis == "p":
        return PowerExpansion.unit(lam)
    if basis == "h":
        acc = PowerExpansion(0, {Partition(()): Fraction(1)})
        for k in lam.parts:
            acc = acc * _hk_expansion(k)
        return acc
    if basis == "e":
        acc = PowerExpansion(0, {Partition(()): Fraction(1)})
        for k in lam.parts:
            acc = acc * _ek_expansion(k)
        return acc
    if basis == "s":
        coords = {}
        for mu in enumerate_partitions(n):
            coords[mu] = Fraction(mn_character(lam, mu), z_order(mu))
        return PowerExpansion(n, coords)
    if basis == "m":
        row = _m_in_p_rows(n)[lam.parts]
        return PowerExpansion(n, {Partition(mu): c for mu, c in row.items()})
    if basis == "f":
        sign = (-1) ** (n - len(lam))
        return _power_expansion_cached("m", parts) * sign
    raise ValueError(f"unknown basis {basis!r}, expected one of {BASES}")


def power_expansion(basis: str, lam: Partition) -> PowerExpansion:
    """Exact power-sum coordinates of the basis element indexed by lam."""
    return _power_expansion_cached(basis, lam.parts)


def inverse_frobenius(gamma: PowerExpansion) -> ClassFunctionValue:
    """Class function with value z_mu * coord(mu) at every cycle type mu."""
    values = {}
    for mu in enumerate_partitions(gamma.n):
        c = gamma.coefficient(mu)
        if c:
            values[mu] = z_order(mu) * c
    return ClassFunctionValue(gamma.n, values)


def involution_class_values(gamma: PowerExpansion) -> tuple[Fraction, ...]:
    """Values of the inverse Frobenius image at the cycle types 2^j,1^(n-2j)
    for j = 0..floor(n/2), without touching any other class."""
    n = gamma.n
    out = []
    for j in range(n // 2 + 1):
        mu = Partition.involution_shape(n, j)
        out.append(z_order(mu) * gamma.coefficient(mu))
    return tuple(out)


# ---------------------------------------------------------------------------
# brick tabloids
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BrickTabloid:
    """One filling: for each row of the shape, the ordered brick lengths."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def weight(self) -> int:
        w = 1
        for row in self.rows:
            w *= row[-1]
        return w


def brick_tabloids(lam: Partition, mu: Partition) -> tuple[list[BrickTabloid], int]:
    """All fillings of the rows of mu by bricks with length multiset lam,
    together with the total weight.  Empty (weight 0) unless lam refines mu."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: |lam|={lam.n}, |mu|={mu.n}")
    results: list[BrickTabloid] = []
    bricks = Counter(lam.parts)
    rows = mu.parts

    def fill_row(row_idx: int, acc: list[tuple[int, ...]]) -> None:
        if row_idx == len(rows):
            results.append(BrickTabloid(shape=mu, rows=tuple(acc)))
            return
        target = rows[row_idx]

        def compose(remaining: int, cur: list[int]) -> None:
            if remaining == 0:
                acc.append(tuple(cur))
                fill_row(row_idx + 1, acc)
                acc.pop()
                return
            for v in sorted(v for v, cnt in bricks.items() if cnt > 0 and v <= remaining):
                bricks[v] -= 1
                cur.append(v)
                compose(remaining - v, cur)
                cur.pop()
                bricks[v] += 1

        compose(target, [])

    fill_row(0, [])
    return results, sum(t.weight for t in results)


@lru_cache(maxsize=None)
def _brick_weight_sum(bricks: tuple[tuple[int, int], ...], rows: tuple[int, ...]) -> int:
    """Total weight over fillings of the given rows from the given brick
    multiset (encoded as sorted (value, count) pairs)."""
    if not rows:
        return 1 if not bricks else 0
    target = rows[0]
    rest = rows[1:]
    total = 0

    def compose(remaining: int, avail: dict[int, int], last: int) -> None:
        nonlocal total
        if remaining == 0:
            key = tuple(sorted((v, c) for v, c in avail.items() if c > 0))
            total += last * _brick_weight_sum(key, rest)
            return
        for v in sorted(v for v, cnt in avail.items() if cnt > 0 and v <= remaining):
            avail[v] -= 1
            compose(remaining - v, avail, v)
            avail[v] += 1

    compose(target, dict(bricks), 0)
    return total


def _brick_weight(lam: Partition, mu: Partition) -> int:
    key = tuple(sorted(Counter(lam.parts).items()))
    return _brick_weight_sum(key, mu.parts)


def m_inverse_value(lam: Partition, mu: Partition) -> int:
    """Monomial class-function value at cycle type mu via the signed weighted
    brick-tabloid count: (-1)^(l(lam)-l(mu)) times the total weight."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: |lam|={lam.n}, |mu|={mu.n}")
    return (-1) ** (len(lam) - len(mu)) * _brick_weight(lam, mu)


def f_inverse_value(lam: Partition, mu: Partition) -> int:
    """Sign-scaled-monomial class-function value at cycle type mu:
    (-1)^(n-l(mu)) times the total brick-tabloid weight."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: |lam|={lam.n}, |mu|={mu.n}")
    return (-1) ** (lam.n - len(mu)) * _brick_weight(lam, mu)


# ---------------------------------------------------------------------------
# binomial transform over involution classes
# ---------------------------------------------------------------------------


def alpha(gamma: PowerExpansion, i: int) -> Fraction:
    """Binomial transform sum_{j=0..i} C(i,j) * Gamma(j), where Gamma(j) is
    the inverse Frobenius image of gamma at cycle type 2^j,1^(n-2j)."""
    n = gamma.n
    if not 0 <= i <= n // 2:
        raise ValueError(f"need 0 <= i <= {n // 2}, got {i}")
    vals = involution_class_values(gamma)
    return sum((comb(i, j) * vals[j] for j in range(i + 1)), Fraction(0))


def alpha_table(n: int, basis: str) -> list[tuple[Partition, list[Fraction]]]:
    """Rows (lam, [alpha_0 .. alpha_halfn]) for all lam of n, reverse-lex order."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    rows = []
    for lam in enumerate_partitions(n):
        gamma = power_expansion(basis, lam)
        vals = involution_class_values(gamma)
        rows.append(
            (lam, [sum((comb(i, j) * vals[j] for j in range(i + 1)), Fraction(0))
                   for i in range(n // 2 + 1)])
        )
    return rows
