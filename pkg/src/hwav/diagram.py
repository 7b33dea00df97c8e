"""Weights, integrality classes, the diagram Y_λ and the canonical Weyl element."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .poset import NoncompactPoset, build_poset, members
from .rational import format_rational, scale_to_integers
from .root_data import Root, RootSystemData, build_root_data, weight_from_coroot_labels, HermitianType


class WeightMode(enum.Enum):
    RHO_SHIFTED = "rho-shifted"
    HIGHEST_WEIGHT = "highest-weight"


class CoordKind(enum.Enum):
    EPSILON = "epsilon"
    COROOT_LABELS = "coroot-labels"


@dataclass(frozen=True)
class WeightInput:
    """A weight as entered by a user.

    ``values`` are epsilon coordinates or simple coroot labels depending on
    ``kind``; ``mode`` says whether they describe λ+ρ or λ.
    """

    values: tuple[Fraction, ...]
    mode: WeightMode = WeightMode.RHO_SHIFTED
    kind: CoordKind = CoordKind.EPSILON


class IntegralityClass(enum.Enum):
    INTEGRAL = "Integral"
    HALF_INTEGRAL = "HalfIntegral"
    OTHER = "Other"


class DominanceError(ValueError):
    def __init__(self, root: Root, value: Fraction, strict: bool = False):
        self.root = root
        self.value = value
        need = "a positive integer" if strict else "a nonnegative integer"
        super().__init__(
            f"not dominant for the compact roots: <λ+ρ, ({root})^∨> = {format_rational(value)}, expected {need}"
        )


class NonIntegralError(ValueError):
    pass


def resolve_weight(inp: WeightInput, rs: RootSystemData) -> tuple[Fraction, ...]:
    """Return λ+ρ in epsilon coordinates."""
    if inp.kind is CoordKind.COROOT_LABELS:
        labels = list(inp.values)
        if inp.mode is WeightMode.HIGHEST_WEIGHT:
            labels = [x + 1 for x in labels]
        return weight_from_coroot_labels(rs, labels)
    dim = rs.htype.ambient_dim
    if len(inp.values) != dim:
        raise ValueError(f"{rs.htype} needs {dim} epsilon coordinates, got {len(inp.values)}")
    if inp.mode is WeightMode.HIGHEST_WEIGHT:
        return tuple(Fraction(x) + r for x, r in zip(inp.values, rs.rho))
    return tuple(Fraction(x) for x in inp.values)


def check_k_dominant(lr: Sequence[Fraction], rs: RootSystemData, strict: bool = False) -> None:
    """Raise DominanceError unless every compact coroot pairing is in ℤ≥0 (ℤ>0 if strict)."""
    num, den = rs.pairing_fractions(lr)
    nc = rs.noncompact_mask
    for i, root in enumerate(rs.positive_roots):
        if nc[i]:
            continue
        a, b = int(num[i]), int(den[i])
        if a % b or a < 0 or (strict and a == 0):
            raise DominanceError(root, Fraction(a, b), strict)


def _integrality(num, den, rs: RootSystemData) -> IntegralityClass:
    if not (num % den).any():
        return IntegralityClass.INTEGRAL
    if not rs.htype.simply_laced and not ((2 * num) % den).any():
        return IntegralityClass.HALF_INTEGRAL
    return IntegralityClass.OTHER


def classify_integrality(lr: Sequence[Fraction], rs: RootSystemData) -> IntegralityClass:
    num, den = rs.pairing_fractions(lr)
    return _integrality(num, den, rs)


@dataclass(frozen=True)
class Diagram:
    poset: NoncompactPoset
    y: int
    lambda_rho: tuple[Fraction, ...]
    integrality: IntegralityClass

    @property
    def size(self) -> int:
        return bin(self.y).count("1")

    @property
    def indices(self) -> list[int]:
        return members(self.y)

    @property
    def roots(self) -> list[Root]:
        return [self.poset.roots[i] for i in members(self.y)]


def _noncompact_mask(num, den, rs: RootSystemData, keep) -> int:
    mask, k = 0, 0
    for i, is_nc in enumerate(rs.noncompact_mask):
        if is_nc:
            if keep(int(num[i]), int(den[i])):
                mask |= 1 << k
            k += 1
    return mask


def compute_diagram(lr: Sequence[Fraction], rs: RootSystemData) -> Diagram:
    num, den = rs.pairing_fractions(lr)
    y = _noncompact_mask(num, den, rs, lambda a, b: a % b == 0 and a <= 0)
    return Diagram(build_poset(rs.htype), y, tuple(lr), _integrality(num, den, rs))


@dataclass(frozen=True)
class IntegralSubsystem:
    delta_lambda_pos: tuple[Root, ...]
    noncompact_part: int  # bitset over the noncompact poset
    delta: int

    @property
    def noncompact_size(self) -> int:
        return bin(self.noncompact_part).count("1")


def integral_subsystem(lr: Sequence[Fraction], rs: RootSystemData) -> IntegralSubsystem:
    num, den = rs.pairing_fractions(lr)
    integral = [i for i in range(len(rs.positive_roots)) if int(num[i]) % int(den[i]) == 0]
    nc_part = _noncompact_mask(num, den, rs, lambda a, b: a % b == 0)
    return IntegralSubsystem(
        tuple(rs.positive_roots[i] for i in integral),
        nc_part,
        len(rs.positive_roots) - len(integral),
    )


def canonical_w(lr: Sequence[Fraction], rs: RootSystemData) -> list[int]:
    """1-based reduced word for the minimal w with w⁻¹(λ+ρ) antidominant."""
    num, den = rs.pairing_fractions(lr)
    if _integrality(num, den, rs) is not IntegralityClass.INTEGRAL:
        raise NonIntegralError("canonical_w needs an integral weight")
    V, D = scale_to_integers(lr)
    V = list(V)
    simple = [(s.eps2, sum(y * y for y in s.eps2)) for s in rs.simple_roots]
    half = D // 2
    word: list[int] = []
    while True:
        for i, (a, norm) in enumerate(simple):
            # <v, α^vee> = 4 V·a / (D |a|^2), an integer here
            top = 4 * sum(x * y for x, y in zip(V, a))
            if top > 0:
                c = top // (D * norm)
                V = [x - c * half * y for x, y in zip(V, a)]
                word.append(i + 1)
                break
        else:
            return word


def apply_word(word: Sequence[int], v: Sequence[Fraction], rs: RootSystemData) -> tuple[Fraction, ...]:
    """Return s_{i1} s_{i2} ... s_{iL} v."""
    V, D = scale_to_integers(v, even=False)
    V = list(V)
    for i in reversed(word):
        a = rs.simple_roots[i - 1].eps2
        top, bottom = 2 * sum(x * y for x, y in zip(V, a)), sum(y * y for y in a)
        g = gcd(top, bottom)
        top, bottom = top // g, bottom // g
        if bottom != 1:
            V = [x * bottom for x in V]
            D *= bottom
        V = [x - top * y for x, y in zip(V, a)]
    return tuple(Fraction(x, D) for x in V)


def minus_w_rho(word: Sequence[int], rs: RootSystemData) -> tuple[Fraction, ...]:
    return tuple(-x for x in apply_word(word, rs.rho, rs))


def diagram_for(htype: HermitianType, lr: Sequence[Fraction]) -> Diagram:
    return compute_diagram(lr, build_root_data(htype))
