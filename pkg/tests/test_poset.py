from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwav.diagram import compute_diagram
from hwav.poset import (
    UnsupportedTypeError,
    build_poset,
    chain_partition,
    distinguished_antichains,
    downset_generated,
    emit_hasse_dot,
    enumerate_downsets,
    is_antichain,
    is_downset,
    members,
    width,
    width_fast_sp,
    width_value,
)
from hwav.root_data import HermitianType, build_root_data

F = Fraction

SMALL = [
    HermitianType.su(3, 3),
    HermitianType.su(4, 3),
    HermitianType.sp(4),
    HermitianType.sostar(5),
    HermitianType.so_odd(4),
    HermitianType.so_even(5),
    HermitianType.e6(),
    HermitianType.e7(),
]


def brute_antichains(poset, mask, size):
    for combo in combinations(members(mask), size):
        if all(not poset.comparable(a, b) for a, b in combinations(combo, 2)):
            yield combo


def brute_width(poset, mask):
    m = 0
    while next(brute_antichains(poset, mask, m + 1), None) is not None:
        m += 1
    return m


def su43_example_mask():
    poset = build_poset(HermitianType.su(4, 3))
    pairs = [(1, 5), (2, 5), (3, 5), (4, 5), (3, 6), (4, 6)]
    mask = 0
    for i, j in pairs:
        v = [0] * 7
        v[i - 1], v[j - 1] = 2, -2
        mask |= 1 << next(k for k, r in enumerate(poset.roots) if r.eps2 == tuple(v))
    return poset, mask


def test_full_su43_width_is_rank():
    poset = build_poset(HermitianType.su(4, 3))
    assert width(poset, poset.full)[0] == 3


def test_su43_six_element_ideal_has_width_two():
    poset, mask = su43_example_mask()
    assert is_downset(poset, mask)
    assert brute_width(poset, mask) == 2
    assert width(poset, mask)[0] == 2


def test_empty_subset():
    poset = build_poset(HermitianType.e6())
    assert width(poset, 0) == (0, [])
    assert chain_partition(poset, 0) == []


@pytest.mark.parametrize("h", SMALL, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_width_matches_brute_force_on_random_subsets(h, data):
    poset = build_poset(h)
    mask = data.draw(st.integers(min_value=0, max_value=poset.full))
    m, witness = width(poset, mask)
    assert m == brute_width(poset, mask)
    # the witness is the lexicographically first maximum antichain
    assert tuple(witness) == next(brute_antichains(poset, mask, m), ())
    chains = chain_partition(poset, mask)
    assert len(chains) == m
    assert sorted(i for c in chains for i in c) == members(mask)
    for c in chains:
        assert all(poset.leq(a, b) and a != b for a, b in zip(c, c[1:]))


@pytest.mark.parametrize("h", SMALL, ids=str)
def test_downsets_width_bound_monotone_and_strongly_orthogonal(h):
    poset = build_poset(h)
    rs = poset.rs
    r = h.real_rank
    seen = set()
    for d in enumerate_downsets(poset):
        assert d not in seen and is_downset(poset, d)
        seen.add(d)
        m, witness = width(poset, d)
        assert m <= r
        assert is_antichain(poset, witness) and len(witness) == m
        for a, b in combinations(witness, 2):
            x, y = poset.roots[a].eps2, poset.roots[b].eps2
            assert not rs.is_root(tuple(p + q for p, q in zip(x, y)))
            assert not rs.is_root(tuple(p - q for p, q in zip(x, y)))
        for i in range(poset.size):
            if not d >> i & 1 and is_downset(poset, d | 1 << i):
                assert width_value(poset, d | 1 << i) >= m


@pytest.mark.parametrize(
    "h,count",
    [(HermitianType.e6(), 27), (HermitianType.e7(), 56), (HermitianType.su(4, 3), 35), (HermitianType.sp(5), 32)],
    ids=str,
)
def test_downset_counts(h, count):
    downsets = list(enumerate_downsets(build_poset(h)))
    assert len(downsets) == len(set(downsets)) == count
    sizes = [bin(d).count("1") for d in downsets]
    assert sizes == sorted(sizes)


def brute_covers(poset):
    n = poset.size
    lt = [[poset.leq(i, j) and i != j for j in range(n)] for i in range(n)]
    return {(i, j) for i in range(n) for j in range(n) if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n))}


@pytest.mark.parametrize("h", SMALL + [HermitianType.sostar(6), HermitianType.so_even(6)], ids=str)
def test_hasse_edges_and_poset_shape(h):
    poset = build_poset(h)
    assert {(a, b) for a, b, _ in poset.hasse} == brute_covers(poset)
    rs = poset.rs
    for a, b, k in poset.hasse:
        diff = tuple(y - x for x, y in zip(poset.roots[a].eps2, poset.roots[b].eps2))
        assert diff == rs.simple_roots[k - 1].eps2
    for i in range(poset.size):
        assert sum(1 for a, b, _ in poset.hasse if b == i) <= 2
        assert sum(1 for a, b, _ in poset.hasse if a == i) <= 2
    assert poset.roots[poset.minimum()] == rs.noncompact_simple
    assert poset.roots[poset.maximum()] == rs.positive_roots[-1]


def test_e6_hasse_edge_count():
    poset = build_poset(HermitianType.e6())
    assert len(poset.hasse) == len(brute_covers(poset)) == 20


@pytest.mark.parametrize(
    "h,nodes,edges",
    [(HermitianType.e6(), 16, 20), (HermitianType.so_even(6), 10, 10), (HermitianType.su(1, 1), 1, 0)],
    ids=str,
)
def test_dot_output(h, nodes, edges):
    dot = emit_hasse_dot(build_poset(h))
    assert dot == emit_hasse_dot(build_poset(h))
    assert dot.startswith("digraph")
    assert sum(1 for line in dot.splitlines() if "[label=" in line and "->" not in line) == nodes
    assert sum(1 for line in dot.splitlines() if "->" in line) == edges


def test_dot_labels_use_epsilon_notation():
    dot = emit_hasse_dot(build_poset(HermitianType.sp(2)))
    assert 'label="2ε1"' in dot and 'label="ε1+ε2"' in dot
    e6 = emit_hasse_dot(build_poset(HermitianType.e6()))
    assert "1/2(ε1-ε2-ε3-ε4-ε5-ε6-ε7+ε8)" in e6


def test_distinguished_antichains():
    assert [len(a) for a in distinguished_antichains(HermitianType.su(4, 3))] == [1, 2, 3]
    assert len(distinguished_antichains(HermitianType.e6())[1]) == 2
    a3 = distinguished_antichains(HermitianType.e7())[2]
    assert (0, 0, 0, 0, 2, 2, 0, 0) in [r.eps2 for r in a3]
    for h in [HermitianType.su(4, 3), HermitianType.sostar(7), HermitianType.so_even(6), HermitianType.e6(), HermitianType.e7()]:
        poset = build_poset(h)
        for k, block in enumerate(distinguished_antichains(h), start=1):
            idx = [poset.index(r) for r in block]
            assert len(block) == k and is_antichain(poset, idx)
            assert width_value(poset, downset_generated(poset, idx)) == k
    for h in (HermitianType.sp(3), HermitianType.so_odd(3)):
        with pytest.raises(UnsupportedTypeError):
            distinguished_antichains(h)


def test_width_fast_sp_examples():
    t = [F(x, 2) for x in (25, 23, 19, 15, 13, 11, 9, -3, -7, -9, -17)]
    assert width_fast_sp(t) == 3
    assert width_fast_sp([F(5, 2), F(3, 2), F(1, 2)]) == 0
    assert width_fast_sp([F(1, 2), F(-1, 2)]) == 1
    # the single pair ε1+ε2 is the whole type D part of SP(2)
    rs = build_root_data(HermitianType.sp(2))
    d = compute_diagram([F(1, 2), F(-1, 2)], rs)
    assert width_value(d.poset, d.y) == 1


@pytest.mark.parametrize("bad", [[F(1, 2), F(3, 2)], [F(1, 2), F(1, 2)], [F(1), F(-1, 2)], [F(1, 3), F(-2, 3)]])
def test_width_fast_sp_rejects(bad):
    with pytest.raises(ValueError):
        width_fast_sp(bad)


@settings(max_examples=200, deadline=None)
@given(st.sets(st.integers(-15, 14), min_size=1, max_size=12))
def test_width_fast_sp_matches_dilworth(values):
    t = [F(2 * x + 1, 2) for x in sorted(values, reverse=True)]
    if len(t) < 2:
        return
    rs = build_root_data(HermitianType.sp(len(t)))
    d = compute_diagram(t, rs)
    assert width_fast_sp(t) == width_value(d.poset, d.y)
