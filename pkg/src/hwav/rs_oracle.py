"""Robinson-Schensted recomputation of the orbit index, independent of widths."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .diagram import (
    IntegralityClass,
    WeightInput,
    check_k_dominant,
    classify_integrality,
    resolve_weight,
)
from .root_data import Family, HermitianType, Root, build_root_data


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p <= 0 for p in self.parts) or any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"not a partition: {self.parts}")

    def part(self, i: int) -> int:
        """1-based part, 0 past the end."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class EvOddCounts:
    ev: tuple[int, ...]
    odd: tuple[int, ...]


def rs_shape(x: Sequence[Fraction]) -> Partition:
    """Shape of the RS insertion tableau (rows weakly increasing)."""
    rows: list[list] = []
    for value in x:
        for row in rows:
            pos = bisect_right(row, value)
            if pos == len(row):
                row.append(value)
                break
            row[pos], value = value, row[pos]
        else:
            rows.append([value])
    return Partition(tuple(len(r) for r in rows))


def dual_partition(p: Partition) -> Partition:
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in p.parts if x > j) for j in range(p.parts[0])))


def lambda_minus(t: Sequence[Fraction]) -> tuple[Fraction, ...]:
    t = tuple(Fraction(x) for x in t)
    return t + tuple(-x for x in reversed(t))


def ev_odd(q: Partition) -> EvOddCounts:
    ev, odd = [], []
    for i, p in enumerate(q.parts, start=1):
        e = (p + 1) // 2 if i % 2 else p // 2
        ev.append(e)
        odd.append(p - e)
    return EvOddCounts(tuple(ev), tuple(odd))


def row_ev_odd(p: int, i: int) -> tuple[int, int]:
    """(ev, odd) for a single part p sitting in row i (1-based)."""
    e = (p + 1) // 2 if i % 2 else p // 2
    return e, p - e


def minimax_k(t: Sequence[Fraction], s: Sequence[Fraction]) -> int:
    """Largest k with t_{n-k+i} <= s_i for i = 1..k."""
    for seq in (t, s):
        if any(a <= b for a, b in zip(seq, seq[1:])):
            raise ValueError("t and s must be strictly decreasing")
    n = len(t)
    best = 0
    for k in range(1, min(n, len(s)) + 1):
        if all(t[n - k + i] <= s[i] for i in range(k)):
            best = k
    return best


def _half(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, 2) for x in v)


# Literal root sets used for the exceptional families, in epsilon coordinates.
_E6_SETS = (
    (_half((1, -1, -1, -1, -1, -1, -1, 1)),),
    (
        _half((1, 1, 1, -1, -1, -1, -1, 1)),
        _half((-1, -1, -1, 1, -1, -1, -1, 1)),
    ),
)
_E7_SETS = (
    ((0, 0, 0, 0, -1, 1, 0, 0),),
    ((1, 0, 0, 0, 0, 1, 0, 0), (-1, 0, 0, 0, 0, 1, 0, 0)),
    (
        _half((1, -1, -1, 1, -1, 1, -1, 1)),
        _half((-1, 1, 1, -1, -1, 1, -1, 1)),
        (0, 0, 0, 0, 1, 1, 0, 0),
    ),
)


@lru_cache(maxsize=None)
def exceptional_sets(htype: HermitianType) -> tuple[tuple[Root, ...], ...]:
    """The literal sets A_1..A_r, checked to be noncompact roots of the built system."""
    literal = {Family.E6: _E6_SETS, Family.E7: _E7_SETS}.get(htype.family)
    if literal is None:
        raise ValueError(f"{htype} is not exceptional")
    rs = build_root_data(htype)
    by_eps2 = {r.eps2: r for r in rs.noncompact_positive}
    out = []
    for block in literal:
        roots = []
        for v in block:
            key = tuple(int(2 * Fraction(x)) for x in v)
            if key not in by_eps2:
                raise ArithmeticError(f"{v} is not a noncompact positive root of {htype}")
            roots.append(by_eps2[key])
        out.append(tuple(roots))
    return tuple(out)


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def _is_half_odd(x: Fraction) -> bool:
    return x.denominator == 2


def k_prime(htype: HermitianType, weight: WeightInput | Sequence[Fraction]) -> int:
    """Orbit index read off from RS shapes or root-set intersections.

    Requires λ+ρ to be strictly dominant for the compact roots.
    """
    rs = build_root_data(htype)
    if isinstance(weight, WeightInput):
        t = resolve_weight(weight, rs)
    else:
        t = tuple(Fraction(x) for x in weight)
    check_k_dominant(t, rs, strict=True)
    cls = classify_integrality(t, rs)
    fam, n, r = htype.family, htype.n, htype.real_rank

    if fam is Family.SU:
        if cls is not IntegralityClass.INTEGRAL:
            return r
        return dual_partition(rs_shape(t)).part(2)

    if fam is Family.SP:
        lam1 = t[0] - n
        q2 = dual_partition(rs_shape(lambda_minus(t))).part(2)
        ev, odd = row_ev_odd(q2, 2)
        if _is_int(lam1):
            k = 2 * odd
        elif _is_half_odd(lam1):
            k = 2 * ev + 1
        else:
            return n
        return min(k, r)

    if fam is Family.SOSTAR:
        if (2 * (t[0] - (n - 1))).denominator != 1:
            return r
        q2 = dual_partition(rs_shape(lambda_minus(t))).part(2)
        return row_ev_odd(q2, 2)[0]

    if fam is Family.SO_ODD:
        d = t[0] - t[1]
        if _is_int(d) and t[0] > t[1]:
            return 0
        if _is_half_odd(d) and t[0] > 0:
            return 1
        return 2

    if fam is Family.SO_EVEN:
        d = t[0] - t[1]
        if _is_int(d) and t[0] > t[1]:
            return 0
        if _is_int(d) and -abs(t[-1]) < t[0] <= t[1]:
            return 1
        return 2

    if cls is not IntegralityClass.INTEGRAL:
        return r
    positive = {root.eps2 for root, c in zip(rs.positive_roots, rs.pairings(t)) if c > 0}
    for k, block in enumerate(exceptional_sets(htype)):
        if any(root.eps2 in positive for root in block):
            return k
    return r
