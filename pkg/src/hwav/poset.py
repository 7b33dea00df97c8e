"""The poset of positive noncompact roots and the combinatorics on it.

Subsets of the poset are passed around as Python ints used as bitsets over
the element indices; most functions also accept any iterable of indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .root_data import HermitianType, Root, RootSystemData, build_root_data, format_eps


class UnsupportedTypeError(ValueError):
    pass


@dataclass(frozen=True)
class NoncompactPoset:
    """Δ(𝔭⁺) ordered by α ≤ β iff β − α is a nonnegative sum of simple roots."""

    rs: RootSystemData
    roots: tuple[Root, ...]
    down: tuple[int, ...]  # down[i]: bitset of j with j <= i (reflexive)
    up: tuple[int, ...]
    hasse: tuple[tuple[int, int, int], ...]  # (lower, upper, 1-based simple index)

    @property
    def size(self) -> int:
        return len(self.roots)

    @property
    def full(self) -> int:
        return (1 << len(self.roots)) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def index(self, root: Root) -> int:
        return self.roots.index(root)

    def minimum(self) -> int:
        return next(i for i in range(self.size) if self.down[i] == 1 << i)

    def maximum(self) -> int:
        return next(i for i in range(self.size) if self.up[i] == 1 << i)


def _covers_by_simple_difference(roots: Sequence[Root], simple: Sequence[Root]) -> list[tuple[int, int, int]]:
    where = {r.eps2: i for i, r in enumerate(roots)}
    edges = []
    for i, a in enumerate(roots):
        for k, s in enumerate(simple):
            j = where.get(tuple(x + y for x, y in zip(a.eps2, s.eps2)))
            if j is not None:
                edges.append((i, j, k + 1))
    return edges


def covering_pairs(down: Sequence[int]) -> list[tuple[int, int]]:
    """Transitive reduction computed from the order alone."""
    strict = [d & ~(1 << i) for i, d in enumerate(down)]
    pairs = []
    for j, below in enumerate(strict):
        deep = 0
        for k in _bits(below):
            deep |= strict[k]
        pairs.extend((i, j) for i in _bits(below & ~deep))
    return pairs


@lru_cache(maxsize=None)
def build_poset(htype: HermitianType) -> NoncompactPoset:
    rs = build_root_data(htype)
    roots = rs.noncompact_positive
    n = len(roots)
    down = []
    for j in range(n):
        mask = 0
        for i in range(n):
            if all(b >= a for a, b in zip(roots[i].simple, roots[j].simple)):
                mask |= 1 << i
        down.append(mask)
    up = [sum(1 << j for j in range(n) if down[j] >> i & 1) for i in range(n)]
    edges = _covers_by_simple_difference(roots, rs.simple_roots)
    if sorted((a, b) for a, b, _ in edges) != sorted(covering_pairs(down)):
        raise ArithmeticError(f"covering relation of {htype} is not given by simple roots")
    edges.sort()
    return NoncompactPoset(rs, roots, tuple(down), tuple(up), tuple(edges))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(subset: int | Iterable[int]) -> int:
    if isinstance(subset, int):
        return subset
    mask = 0
    for i in subset:
        mask |= 1 << i
    return mask


def members(mask: int) -> list[int]:
    return list(_bits(mask))


def is_downset(poset: NoncompactPoset, subset: int | Iterable[int]) -> bool:
    mask = as_mask(subset)
    return all(poset.down[i] & ~mask == 0 for i in _bits(mask))


def is_antichain(poset: NoncompactPoset, subset: int | Iterable[int]) -> bool:
    idx = members(as_mask(subset))
    return all(not poset.comparable(a, b) for k, a in enumerate(idx) for b in idx[k + 1 :])


def downset_generated(poset: NoncompactPoset, subset: int | Iterable[int]) -> int:
    mask = 0
    for i in _bits(as_mask(subset)):
        mask |= poset.down[i]
    return mask


def _matching(poset: NoncompactPoset, mask: int) -> dict[int, int]:
    """Maximum matching of the strict-order bipartite graph on ``mask``.

    Returns right -> left. Kuhn's augmenting paths over bitsets, seeded
    greedily with the lowest-index free successor.
    """
    succ = {u: poset.up[u] & mask & ~(1 << u) for u in _bits(mask)}
    match_r: dict[int, int] = {}
    taken = 0
    free = []
    for u, s in succ.items():
        avail = s & ~taken
        if avail:
            low = avail & -avail
            taken |= low
            match_r[low.bit_length() - 1] = u
        else:
            free.append(u)

    visited = 0

    def augment(u: int) -> bool:
        nonlocal visited
        cand = succ[u] & ~visited
        while cand:
            low = cand & -cand
            visited |= low
            v = low.bit_length() - 1
            if v not in match_r or augment(match_r[v]):
                match_r[v] = u
                return True
            cand = succ[u] & ~visited
        return False

    for u in free:
        if succ[u]:
            visited = 0
            augment(u)
    return match_r


def width_value(poset: NoncompactPoset, subset: int | Iterable[int]) -> int:
    mask = as_mask(subset)
    return bin(mask).count("1") - len(_matching(poset, mask))


def chain_partition(poset: NoncompactPoset, subset: int | Iterable[int]) -> list[list[int]]:
    """A minimum chain cover of the subset, each chain listed bottom-up."""
    mask = as_mask(subset)
    match_r = _matching(poset, mask)
    nxt = {u: v for v, u in match_r.items()}
    chains = []
    for start in _bits(mask):
        if start in match_r:
            continue
        chain = [start]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(chain)
    return chains


def width(poset: NoncompactPoset, subset: int | Iterable[int]) -> tuple[int, list[int]]:
    """Width of the induced subposet and the lexicographically smallest maximum antichain."""
    mask = as_mask(subset)
    m = width_value(poset, mask)
    witness: list[int] = []
    allowed = mask
    for i in _bits(mask):
        if not allowed >> i & 1:
            continue
        rest = allowed & ~(poset.down[i] | poset.up[i])
        if len(witness) + 1 + width_value(poset, rest) == m:
            witness.append(i)
            allowed = rest
            if len(witness) == m:
                break
    return m, witness


def width_fast_sp(t: Sequence[Fraction]) -> int:
    """Greedy linear scan for nested pairs with t_i + t_j <= 0."""
    t = [Fraction(x) for x in t]
    if any(a <= b for a, b in zip(t, t[1:])):
        raise ValueError("t must be strictly decreasing")
    twice = {(2 * x).denominator for x in t} | {1}
    if twice != {1} or len({x.denominator for x in t}) > 1:
        raise ValueError("entries of t must be all integers or all half-integers")
    i, j, m = 0, len(t) - 1, 0
    while True:
        while i < j and t[i] + t[j] > 0:
            i += 1
        if i >= j:
            return m
        m += 1
        i += 1
        j -= 1


def enumerate_downsets(poset: NoncompactPoset) -> Iterator[int]:
    """Every lower-order ideal exactly once, ordered by size then bitset."""
    strict_down = [d & ~(1 << i) for i, d in enumerate(poset.down)]
    level = [0]
    n = poset.size
    while level:
        yield from level
        nxt = set()
        for mask in level:
            for i in range(n):
                if not mask >> i & 1 and strict_down[i] & ~mask == 0:
                    nxt.add(mask | 1 << i)
        level = sorted(nxt)


def distinguished_antichains(htype: HermitianType) -> list[tuple[Root, ...]]:
    c = htype.appendix_c
    if c is None:
        raise UnsupportedTypeError(f"{htype} has no distinguished antichains (not simply laced)")
    roots = build_root_data(htype).noncompact_positive
    return [
        tuple(r for r in roots if r.height == (k - 1) * c + 1) for k in range(1, htype.real_rank + 1)
    ]


def root_label(root: Root) -> str:
    return format_eps(root.eps)


def emit_hasse_dot(poset: NoncompactPoset) -> str:
    name = str(poset.rs.htype)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, r in enumerate(poset.roots):
        lines.append(f'  n{i} [label="{root_label(r)}"];')
    for a, b, k in poset.hasse:
        lines.append(f'  n{a} -> n{b} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
