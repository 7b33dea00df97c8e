"""Exhaustive checks: width census, Springer identities, the Weyl bijection,
Hasse and antichain data and the oracle sweep."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb
from typing import Iterator, Sequence

from .avcore import springer_entry, associated_variety, orbit_dimension
from .diagram import (
    DominanceError,
    IntegralityClass,
    canonical_w,
    check_k_dominant,
    compute_diagram,
    minus_w_rho,
)
from .poset import (
    build_poset,
    distinguished_antichains,
    downset_generated,
    enumerate_downsets,
    is_antichain,
    is_downset,
    width_value,
)
from .root_data import Family, HermitianType, build_root_data, weight_from_coroot_labels
from .rs_oracle import k_prime


class InfeasibleCensusError(ValueError):
    pass


_CENSUS_BOUNDS = {
    Family.SU: ("p+q", 16),
    Family.SP: ("n", 20),
    Family.SOSTAR: ("n", 21),
    Family.SO_ODD: ("n", 64),
    Family.SO_EVEN: ("n", 64),
}


def _check_feasible(htype: HermitianType) -> None:
    bound = _CENSUS_BOUNDS.get(htype.family)
    if bound is not None and htype.n > bound[1]:
        raise InfeasibleCensusError(
            f"census of {htype} refused: needs {bound[0]} <= {bound[1]}, got {htype.n}"
        )


def expected_counts(htype: HermitianType) -> tuple[int, ...]:
    """Closed-form number of downsets of each width 0..r."""
    fam, n, r = htype.family, htype.n, htype.real_rank
    if fam is Family.SU:
        return tuple(comb(n, m) - (comb(n, m - 1) if m else 0) for m in range(r + 1))
    if fam is Family.SP:
        out = []
        for m in range(r + 1):
            if 2 * m < n + 1:
                out.append(comb(n + 1, m))
            elif 2 * m == n + 1:
                out.append(comb(n + 1, m) // 2)
            else:
                out.append(0)
        return tuple(out)
    if fam is Family.SOSTAR:
        return tuple(comb(n, m) // 2 if 2 * m == n else comb(n, m) for m in range(r + 1))
    if fam is Family.SO_ODD:
        return (1, 2 * n - 1, 0)
    if fam is Family.SO_EVEN:
        return (1, n, n - 1)
    if fam is Family.E6:
        return (1, 6, 20)
    return (1, 7, 27, 21)


def expected_total(htype: HermitianType) -> int:
    fam, n = htype.family, htype.n
    if fam is Family.SU:
        return comb(n, htype.params[0])
    if fam is Family.SP:
        return 2**n
    if fam is Family.SOSTAR:
        return 2 ** (n - 1)
    if fam in (Family.SO_ODD, Family.SO_EVEN):
        return 2 * n
    return 27 if fam is Family.E6 else 56


@dataclass
class CensusReport:
    htype: HermitianType
    counts: tuple[int, ...]
    expected: tuple[int, ...]
    total: int
    passed: bool
    mismatches: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "type": str(self.htype),
            "counts": list(self.counts),
            "expected": list(self.expected),
            "total": self.total,
            "pass": self.passed,
            "mismatches": self.mismatches,
        }


def width_census(htype: HermitianType) -> CensusReport:
    _check_feasible(htype)
    poset = build_poset(htype)
    r = htype.real_rank
    buckets = Counter(width_value(poset, d) for d in enumerate_downsets(poset))
    if any(m > r for m in buckets):
        raise ArithmeticError(f"downset of width > {r} in {htype}")
    counts = tuple(buckets.get(m, 0) for m in range(r + 1))
    expected = expected_counts(htype)
    total = sum(counts)
    mismatches = [
        {"width": m, "count": c, "expected": e} for m, (c, e) in enumerate(zip(counts, expected)) if c != e
    ]
    if total != expected_total(htype):
        mismatches.append({"width": "total", "count": total, "expected": expected_total(htype)})
    return CensusReport(htype, counts, expected, total, not mismatches, mismatches)


@dataclass
class CheckReport:
    name: str
    htype: HermitianType
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def to_json(self) -> dict:
        return {"check": self.name, "type": str(self.htype), "checks": self.checks, "pass": self.passed,
                "failures": self.failures}


def verify_springer_identities(htype: HermitianType, census: CensusReport | None = None) -> CheckReport:
    census = census or width_census(htype)
    counts = census.counts
    rep = CheckReport("springer", htype)
    fam, n, r = htype.family, htype.n, htype.real_rank

    def sdim(k: int) -> int:
        return springer_entry(htype, k)[1] if 0 <= k <= r else 0

    if htype.simply_laced:
        for k in range(r + 1):
            rep.check(counts[k] == sdim(k), f"width {k}: {counts[k]} != springer {sdim(k)}")
    elif fam is Family.SP:
        for k in range(len(counts)):
            if 2 * k <= n:
                want = sdim(2 * k) + sdim(2 * k - 1)
            elif 2 * k == n + 1:
                want = sdim(n)
            else:
                want = 0
            rep.check(counts[k] == want, f"width {k}: {counts[k]} != {want}")
    else:
        want = (sdim(0), sdim(1) + sdim(2), 0)
        for k in range(3):
            rep.check(counts[k] == want[k], f"width {k}: {counts[k]} != {want[k]}")
    top = orbit_dimension(htype, r)
    size = len(build_root_data(htype).noncompact_positive)
    rep.check(top == size, f"dim of top orbit {top} != |Δ(𝔭⁺)| = {size}")
    return rep


def _weyl_group(htype: HermitianType) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Elements as (perm, signs): w(ε_i) = signs[i] ε_{perm[i]}."""
    fam, n = htype.family, htype.n
    for perm in permutations(range(n)):
        if fam is Family.SU:
            yield perm, (1,) * n
            continue
        for signs in product((1, -1), repeat=n):
            if fam in (Family.SOSTAR, Family.SO_EVEN) and signs.count(-1) % 2:
                continue
            yield perm, signs


def _act(perm, signs, v):
    out = [0] * len(v)
    for i, (j, s) in enumerate(zip(perm, signs)):
        out[j] = s * v[i]
    return out


def _act_inverse(perm, signs, v):
    return [s * v[j] for j, s in zip(perm, signs)]


def verify_bijection_classical(htype: HermitianType) -> CheckReport:
    if htype.family in (Family.E6, Family.E7):
        raise ValueError("Weyl enumeration is only done for classical families")
    if htype.rank > 6:
        raise ValueError(f"rank {htype.rank} of {htype} exceeds the enumeration bound 6")
    rs = build_root_data(htype)
    poset = build_poset(htype)
    positive = {r.eps2 for r in rs.positive_roots}
    rep = CheckReport("bijection", htype)
    images = []
    for perm, signs in _weyl_group(htype):
        mwr = [-x for x in _act(perm, signs, rs.rho)]
        try:
            check_k_dominant(mwr, rs)
        except DominanceError:
            continue
        y = compute_diagram(mwr, rs).y
        direct = sum(
            1 << i for i, root in enumerate(poset.roots) if tuple(_act_inverse(perm, signs, root.eps2)) in positive
        )
        rep.check(y == direct, f"w={perm},{signs}: diagram differs from the inversion set")
        images.append(y)
    downsets = set(enumerate_downsets(poset))
    rep.check(len(images) == expected_total(htype), f"|𝒲| = {len(images)}, expected {expected_total(htype)}")
    rep.check(len(set(images)) == len(images), "map is not injective")
    rep.check(set(images) == downsets, "image differs from the set of downsets")
    return rep


HASSE_NODE_COUNTS = {
    HermitianType.su(4, 3): 12,
    HermitianType.sostar(6): 15,
    HermitianType.so_even(6): 10,
    HermitianType.e6(): 16,
    HermitianType.e7(): 27,
}

E7_GAMMA3 = (0, 0, 0, 0, 1, 1, 0, 0)


def antichain_checks(htype: HermitianType) -> CheckReport:
    rep = CheckReport("antichains", htype)
    poset = build_poset(htype)
    if htype in HASSE_NODE_COUNTS:
        want = HASSE_NODE_COUNTS[htype]
        rep.check(poset.size == want, f"Hasse diagram has {poset.size} nodes, expected {want}")
    antichains = distinguished_antichains(htype)
    rep.check(len(antichains) == htype.real_rank, "wrong number of distinguished antichains")
    census = width_census(htype)
    for k, block in enumerate(antichains, start=1):
        idx = [poset.index(r) for r in block]
        rep.check(len(block) == k, f"|A_{k}| = {len(block)}")
        rep.check(is_antichain(poset, idx), f"A_{k} is not an antichain")
        gen = downset_generated(poset, idx)
        rep.check(width_value(poset, gen) == k, f"downset generated by A_{k} does not have width {k}")
    for k in range(htype.real_rank + 1):
        rep.check(census.counts[k] > 0, f"no downset of width {k}")
    if htype.family is Family.E7:
        gamma3 = tuple(2 * x for x in E7_GAMMA3)
        rep.check(any(r.eps2 == gamma3 for r in antichains[2]), "γ₃ missing from A_3")
    return rep


# ---------------------------------------------------------------- sweeps

_OFFSETS = (Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))


def _decreasing(window: Sequence[Fraction], size: int) -> Iterator[tuple[Fraction, ...]]:
    for combo in combinations(sorted(window, reverse=True), size):
        yield combo


def _window(lo: int, hi: int, offset: Fraction) -> list[Fraction]:
    return [Fraction(x) + offset for x in range(lo, hi + 1)]


def sweep_grid(htype: HermitianType) -> Iterator[tuple[Fraction, ...]]:
    """λ+ρ vectors, strictly dominant for the compact roots, over a bounded window."""
    fam, n = htype.family, htype.n
    if fam is Family.SU:
        p, q = htype.params
        for a in _decreasing(_window(-3, 3, Fraction(0)), p):
            for off in _OFFSETS[:3]:
                for b in _decreasing(_window(-3, 3, off), q):
                    yield a + b
    elif fam in (Family.SP, Family.SOSTAR):
        for off in _OFFSETS:
            yield from _decreasing(_window(-4, 4, off), n)
    elif fam in (Family.SO_ODD, Family.SO_EVEN):
        for base in (Fraction(0), Fraction(1, 2)):
            window = _window(-3, 3, base)
            if fam is Family.SO_ODD:
                tails = [c for c in _decreasing(window, n - 1) if c[-1] > 0]
            else:
                tails = [c for c in _decreasing(window, n - 1) if c[-2] > abs(c[-1])]
            for tail in tails:
                for off in _OFFSETS:
                    for t1 in _window(-5, 5, off):
                        yield (t1,) + tail
    else:
        rs = build_root_data(htype)
        nc = rs.noncompact_simple_index
        marks = rs.positive_roots[-1].simple
        low = -2 * (sum(marks) - marks[nc]) - 1
        for compact in product((1, 2), repeat=htype.rank - 1):
            for off in _OFFSETS[:3]:
                for c in range(low, 3):
                    labels = list(compact)
                    labels.insert(nc, Fraction(c) + off)
                    yield weight_from_coroot_labels(rs, labels)


@dataclass
class SweepReport:
    htype: HermitianType
    total: int = 0
    by_class: Counter = field(default_factory=Counter)
    by_k: Counter = field(default_factory=Counter)
    mismatches: list[str] = field(default_factory=list)
    downset_failures: list[str] = field(default_factory=list)
    canonical_failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.mismatches or self.downset_failures or self.canonical_failures)

    def to_json(self) -> dict:
        return {
            "type": str(self.htype),
            "total": self.total,
            "by_class": {c.value: self.by_class[c] for c in IntegralityClass if self.by_class[c]},
            "by_k": {str(k): self.by_k[k] for k in sorted(self.by_k)},
            "pass": self.passed,
            "mismatches": self.mismatches,
            "downset_failures": self.downset_failures,
            "canonical_failures": self.canonical_failures,
        }


def oracle_sweep(htype: HermitianType, grid: Sequence[Sequence[Fraction]] | None = None) -> SweepReport:
    rs = build_root_data(htype)
    rep = SweepReport(htype)
    for lr in grid if grid is not None else sweep_grid(htype):
        lr = tuple(lr)
        av = associated_variety(htype, lr)
        kp = k_prime(htype, lr)
        rep.total += 1
        rep.by_class[av.integrality] += 1
        rep.by_k[av.k] += 1
        shown = ",".join(str(x) for x in lr)
        if av.k != kp:
            rep.mismatches.append(f"({shown}): k={av.k}, oracle={kp}")
        if av.integrality is IntegralityClass.INTEGRAL:
            diag = compute_diagram(lr, rs)
            if not is_downset(diag.poset, diag.y):
                rep.downset_failures.append(f"({shown})")
            word = canonical_w(lr, rs)
            if compute_diagram(minus_w_rho(word, rs), rs).y != diag.y:
                rep.canonical_failures.append(f"({shown}): w={word}")
    return rep


SWEEP_TYPES = (
    [HermitianType.su(p, q) for p in range(1, 4) for q in range(1, 4)]
    + [HermitianType.sp(n) for n in range(2, 5)]
    + [HermitianType.sostar(n) for n in (4, 5)]
    + [HermitianType.so_odd(n) for n in (3, 4)]
    + [HermitianType.so_even(4)]
    + [HermitianType.e6(), HermitianType.e7()]
)
