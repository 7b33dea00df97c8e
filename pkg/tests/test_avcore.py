from fractions import Fraction
from math import comb

import pytest

from hwav.avcore import (
    ConsistencyError,
    associated_variety,
    gk_dimension,
    k_of_lambda,
    orbit_dimension,
    orbit_label,
    springer_table,
)
from hwav.diagram import DominanceError, IntegralityClass
from hwav.root_data import HermitianType, build_root_data

F = Fraction
I, H, O = IntegralityClass.INTEGRAL, IntegralityClass.HALF_INTEGRAL, IntegralityClass.OTHER
SP11_T = tuple(F(x, 2) for x in (25, 23, 19, 15, 13, 11, 9, -3, -7, -9, -17))

TYPES = (
    [HermitianType.su(p, q) for p in range(1, 5) for q in range(1, 5)]
    + [HermitianType.sp(n) for n in range(2, 9)]
    + [HermitianType.sostar(n) for n in range(4, 10)]
    + [HermitianType.so_odd(n) for n in range(3, 7)]
    + [HermitianType.so_even(n) for n in range(4, 8)]
    + [HermitianType.e6(), HermitianType.e7()]
)


def test_k_of_lambda_examples():
    assert k_of_lambda(HermitianType.sp(11), H, 3) == 7
    assert k_of_lambda(HermitianType.e6(), I, 2) == 2
    assert k_of_lambda(HermitianType.sp(3), I, 2) == 3
    assert k_of_lambda(HermitianType.sp(4), I, 2) == 4
    assert k_of_lambda(HermitianType.sp(4), H, 2) == 4
    assert k_of_lambda(HermitianType.so_odd(5), H, 0) == 1
    assert k_of_lambda(HermitianType.su(3, 3), O, 0) == 3


def test_k_of_lambda_rejects_out_of_range():
    with pytest.raises(ConsistencyError):
        k_of_lambda(HermitianType.su(2, 2), I, 3)
    with pytest.raises(ConsistencyError):
        k_of_lambda(HermitianType.sp(4), I, 3)
    with pytest.raises(ConsistencyError):
        k_of_lambda(HermitianType.sp(4), H, 3)


@pytest.mark.parametrize("h", TYPES, ids=str)
def test_k_is_monotone_in_m(h):
    for cls in (I, H, O):
        ks = []
        for m in range(h.real_rank + 1):
            try:
                ks.append(k_of_lambda(h, cls, m))
            except ConsistencyError:
                break
        assert ks == sorted(ks)
        assert all(0 <= k <= h.real_rank for k in ks)


@pytest.mark.parametrize("h", TYPES, ids=str)
def test_orbit_chain(h):
    dims = [orbit_dimension(h, k) for k in range(h.real_rank + 1)]
    assert dims[0] == 0
    assert all(a < b for a, b in zip(dims, dims[1:]))
    assert dims[-1] == len(build_root_data(h).noncompact_positive)
    rows = springer_table(h)
    assert [r.k for r in rows] == list(range(h.real_rank + 1))
    assert [r.orbit_dim for r in rows] == dims


def test_orbit_examples():
    assert orbit_dimension(HermitianType.su(4, 3), 2) == 10
    assert orbit_label(HermitianType.su(4, 3), 2) == "[2^2,1^3]"
    assert orbit_dimension(HermitianType.sp(11), 7) == 56
    assert orbit_label(HermitianType.sp(11), 7) == "[2^7,1^8]"
    assert (orbit_dimension(HermitianType.e7(), 3), orbit_label(HermitianType.e7(), 3)) == (27, "(3A_1)''")
    assert orbit_label(HermitianType.su(2, 2), 2) == "[2^2]"
    assert orbit_label(HermitianType.su(2, 1), 1) == "[2,1]"
    assert orbit_label(HermitianType.sostar(4), 2) == "[2^4]"
    assert orbit_label(HermitianType.so_odd(3), 2) == "[3,1^4]"
    assert orbit_label(HermitianType.so_even(4), 1) == "[2^2,1^4]"
    assert [orbit_label(HermitianType.e6(), k) for k in range(3)] == ["0", "A_1", "2A_1"]
    with pytest.raises(ValueError):
        orbit_dimension(HermitianType.e6(), 3)


def test_springer_examples():
    assert [r.springer_dim for r in springer_table(HermitianType.e6())] == [1, 6, 20]
    sp = springer_table(HermitianType.sp(7))
    assert [r.special for r in sp] == [True, False, True, False, True, False, True, True]
    assert springer_table(HermitianType.sostar(6))[3].springer_dim == 10
    assert springer_table(HermitianType.sp(3))[3].springer_dim == 3
    su = springer_table(HermitianType.su(4, 3))
    assert [r.springer_dim for r in su] == [comb(7, k) - (comb(7, k - 1) if k else 0) for k in range(4)]
    assert [r.special for r in springer_table(HermitianType.so_odd(5))] == [True, False, True]


def test_gk_examples():
    assert gk_dimension(HermitianType.sp(11), H, 3, 7, delta=11) == 56 == (11 - 3) * (2 * 3 + 1)
    assert gk_dimension(HermitianType.so_odd(3), H, 0, 1, delta=4) == 4
    for h in TYPES:
        assert gk_dimension(h, I, 0, 0) == 0
        assert gk_dimension(h, O, 0, h.real_rank) == len(build_root_data(h).noncompact_positive)


def test_gk_cross_check_is_live():
    with pytest.raises(ConsistencyError):
        gk_dimension(HermitianType.sp(11), H, 3, 6, delta=11)
    with pytest.raises(ConsistencyError):
        gk_dimension(HermitianType.sp(11), H, 3, 7, delta=10)


@pytest.mark.parametrize("n", range(2, 12))
def test_half_integral_sp_consistency(n):
    h = HermitianType.sp(n)
    for m in range(n // 2 + 1):
        k = k_of_lambda(h, H, m)
        assert n + m * (2 * n - 2 * m - 1) == orbit_dimension(h, k) == gk_dimension(h, H, m, k, delta=n)


def test_associated_variety_examples():
    res = associated_variety(HermitianType.sp(11), SP11_T)
    assert (res.integrality, res.width_m, res.k, res.orbit_dim, res.gk_dim) == (H, 3, 7, 56, 56)
    assert res.delta == 11
    res = associated_variety(HermitianType.su(4, 3), (2, 1, -1, -2, 3, 0, -3))
    assert (res.integrality, res.width_m, res.k, res.orbit_dim, res.orbit_label) == (I, 2, 2, 10, "[2^2,1^3]")
    for h in TYPES:
        res = associated_variety(h, build_root_data(h).rho)
        assert (res.integrality, res.width_m, res.k, res.orbit_dim, res.gk_dim, res.y_size) == (I, 0, 0, 0, 0, 0)


def test_other_keeps_width_but_forces_rank():
    res = associated_variety(HermitianType.su(2, 1), (F(4, 3), F(1, 3), F(0)))
    assert (res.integrality, res.width_m, res.k, res.gk_dim) == (O, 0, 1, 2)


def test_associated_variety_requires_dominance():
    with pytest.raises(DominanceError):
        associated_variety(HermitianType.su(2, 1), (0, 1, 0))
