"""Orbit index k(λ), orbit data and Gelfand-Kirillov dimension."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .diagram import (
    IntegralityClass,
    WeightInput,
    check_k_dominant,
    compute_diagram,
    integral_subsystem,
    resolve_weight,
)
from .poset import width
from .root_data import Family, HermitianType, build_root_data


class ConsistencyError(ArithmeticError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class AVResult:
    htype: HermitianType
    lambda_rho: tuple[Fraction, ...]
    integrality: IntegralityClass
    y_size: int
    width_m: int
    witness: tuple[int, ...]
    k: int
    real_rank: int
    orbit_dim: int
    orbit_label: str
    gk_dim: int
    delta: int


@dataclass(frozen=True)
class SpringerRow:
    k: int
    orbit_dim: int
    complex_label: str
    special: bool
    springer_dim: int


def k_of_lambda(htype: HermitianType, integrality: IntegralityClass, m: int) -> int:
    r = htype.real_rank
    if not 0 <= m <= r:
        raise ConsistencyError(f"width {m} outside 0..{r} for {htype}")
    if integrality is IntegralityClass.INTEGRAL:
        if htype.simply_laced:
            return m
        if 2 * m < r + 1:
            return 2 * m
        if 2 * m == r + 1:
            return r
        raise ConsistencyError(f"integral width {m} exceeds (r+1)/2 for {htype}")
    if integrality is IntegralityClass.HALF_INTEGRAL and not htype.simply_laced:
        if 2 * m < r:
            return 2 * m + 1
        if 2 * m == r:
            return r
        raise ConsistencyError(f"half-integral width {m} exceeds r/2 for {htype}")
    return r


def _check_k(htype: HermitianType, k: int) -> None:
    if not 0 <= k <= htype.real_rank:
        raise ValueError(f"orbit index {k} outside 0..{htype.real_rank} for {htype}")


def orbit_dimension(htype: HermitianType, k: int) -> int:
    _check_k(htype, k)
    fam, n = htype.family, htype.n
    if fam is Family.SU:
        return k * (n - k)
    if fam is Family.SP:
        return k * (2 * n - k + 1) // 2
    if fam is Family.SOSTAR:
        return k * (2 * n - 2 * k - 1)
    if fam is Family.SO_ODD:
        return (0, 2 * n - 2, 2 * n - 1)[k]
    if fam is Family.SO_EVEN:
        return (0, 2 * n - 3, 2 * n - 2)[k]
    if fam is Family.E6:
        return (0, 11, 16)[k]
    return (0, 17, 26, 27)[k]


def format_partition(parts: Sequence[tuple[int, int]]) -> str:
    """``[(2, 3), (1, 1)]`` -> ``[2^3,1]``; zero multiplicities are dropped."""
    shown = [str(p) if e == 1 else f"{p}^{e}" for p, e in parts if e > 0]
    return "[" + ",".join(shown) + "]"


def orbit_label(htype: HermitianType, k: int) -> str:
    _check_k(htype, k)
    fam, n = htype.family, htype.n
    if fam is Family.SU:
        return format_partition([(2, k), (1, n - 2 * k)])
    if fam is Family.SP:
        return format_partition([(2, k), (1, 2 * n - 2 * k)])
    if fam is Family.SOSTAR:
        return format_partition([(2, 2 * k), (1, 2 * n - 4 * k)])
    if fam is Family.SO_ODD:
        return ("0", format_partition([(2, 2), (1, 2 * n - 3)]), format_partition([(3, 1), (1, 2 * n - 2)]))[k]
    if fam is Family.SO_EVEN:
        return ("0", format_partition([(2, 2), (1, 2 * n - 4)]), format_partition([(3, 1), (1, 2 * n - 3)]))[k]
    if fam is Family.E6:
        return ("0", "A_1", "2A_1")[k]
    return ("0", "A_1", "2A_1", "(3A_1)''")[k]


def springer_entry(htype: HermitianType, k: int) -> tuple[bool, int]:
    """(special?, dimension of the Springer representation) for orbit k."""
    fam, n = htype.family, htype.n
    if fam is Family.SU:
        return True, comb(n, k) - (comb(n, k - 1) if k else 0)
    if fam is Family.SP:
        if k % 2 == 0:
            return True, comb(n, k // 2)
        if k < n:
            return False, comb(n, (k - 1) // 2)
        return True, comb(n, (n - 1) // 2)
    if fam is Family.SOSTAR:
        if 2 * k == n:
            return True, comb(n, k) // 2
        return True, comb(n, k)
    if fam is Family.SO_ODD:
        return (True, False, True)[k], (1, n - 1, n)[k]
    if fam is Family.SO_EVEN:
        return True, (1, n, n - 1)[k]
    if fam is Family.E6:
        return True, (1, 6, 20)[k]
    return True, (1, 7, 27, 21)[k]


def springer_table(htype: HermitianType) -> list[SpringerRow]:
    rows = []
    for k in range(htype.real_rank + 1):
        special, dim = springer_entry(htype, k)
        rows.append(SpringerRow(k, orbit_dimension(htype, k), orbit_label(htype, k), special, dim))
    return rows


def gk_dimension(
    htype: HermitianType,
    integrality: IntegralityClass,
    m: int,
    k: int,
    delta: int = 0,
    noncompact_count: int | None = None,
) -> int:
    """GK dimension from the diagram data, cross-checked against dim 𝒪_k."""
    fam, n = htype.family, htype.n
    if integrality is IntegralityClass.INTEGRAL:
        gk = orbit_dimension(htype, k)
    elif integrality is IntegralityClass.HALF_INTEGRAL and fam is Family.SP:
        # the integral subsystem is of type D_n; its orbit of index m has dim m(2n-2m-1)
        if delta != n:
            raise ConsistencyError(f"expected δ = {n} for half-integral {htype}, got {delta}")
        gk = delta + m * (2 * n - 2 * m - 1)
    elif integrality is IntegralityClass.HALF_INTEGRAL and fam is Family.SO_ODD:
        if delta != 2 * n - 2:
            raise ConsistencyError(f"expected δ = {2 * n - 2} for half-integral {htype}, got {delta}")
        gk = delta + m
    else:
        if noncompact_count is None:
            noncompact_count = len(build_root_data(htype).noncompact_positive)
        gk = noncompact_count
    expected = orbit_dimension(htype, k)
    if gk != expected:
        raise ConsistencyError(f"GK dimension {gk} differs from dim of orbit {k} = {expected} for {htype}")
    return gk


def associated_variety(htype: HermitianType, weight: WeightInput | Sequence[Fraction]) -> AVResult:
    rs = build_root_data(htype)
    if isinstance(weight, WeightInput):
        lr = resolve_weight(weight, rs)
    else:
        lr = tuple(Fraction(x) for x in weight)
    check_k_dominant(lr, rs)
    diag = compute_diagram(lr, rs)
    m, witness = width(diag.poset, diag.y)
    k = k_of_lambda(htype, diag.integrality, m)
    sub = integral_subsystem(lr, rs)
    delta = sub.delta if diag.integrality is not IntegralityClass.INTEGRAL else 0
    if diag.integrality is IntegralityClass.INTEGRAL and sub.delta:
        raise ConsistencyError("integral weight with nonintegral roots")
    gk = gk_dimension(htype, diag.integrality, m, k, delta, len(rs.noncompact_positive))
    return AVResult(
        htype=htype,
        lambda_rho=lr,
        integrality=diag.integrality,
        y_size=diag.size,
        width_m=m,
        witness=tuple(witness),
        k=k,
        real_rank=htype.real_rank,
        orbit_dim=orbit_dimension(htype, k),
        orbit_label=orbit_label(htype, k),
        gk_dim=gk,
        delta=delta,
    )
