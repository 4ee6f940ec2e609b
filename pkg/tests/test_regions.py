import pytest

from gaussphi.gaussian import GaussInt, mul, orbit, two_adic_val
from gaussphi.phi import phi, w
from gaussphi.regions import (
    CapExceeded,
    Kind,
    RegionQuery,
    decompose,
    enumerate_region,
    enumerate_region_scan,
    in_region,
    preimage,
    preimage_by_conditions,
)


def Q(kind, n):
    return RegionQuery(Kind(kind), n)


def region(kind, n):
    return enumerate_region(Q(kind, n)).elements


def test_in_region_examples():
    assert in_region(Q("B", 2), GaussInt(4, 1))
    assert not in_region(Q("S", 2), GaussInt(0, 0))
    assert in_region(Q("B", 4), GaussInt(4, 0))
    assert not in_region(Q("B", 3), GaussInt(4, 0))
    assert in_region(Q("Oct", 2), GaussInt(4, 1))
    assert in_region(Q("B", 0), GaussInt(0, 0))


def test_query_validation():
    assert RegionQuery("oct", 1).kind is Kind.OCT
    with pytest.raises(ValueError):
        RegionQuery(Kind.B, -1)
    with pytest.raises(ValueError):
        Kind.parse("Q")


def test_enumerate_examples():
    assert region("S", 0) == {GaussInt(1, 0), GaussInt(-1, 0), GaussInt(0, 1), GaussInt(0, -1)}
    assert len(region("B", 2)) == 49
    assert len(region("S", 2)) == 44


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        enumerate_region(Q("B", 31))
    with pytest.raises(CapExceeded):
        enumerate_region(Q("B", 5), cap=4)


@pytest.mark.parametrize("kind", ["Oct", "S", "D", "B"])
@pytest.mark.parametrize("n", range(9))
def test_octant_enumeration_matches_full_scan(kind, n):
    assert enumerate_region(Q(kind, n)).elements == enumerate_region_scan(Q(kind, n)).elements


def test_decompose_examples(digit_sets):
    assert decompose(GaussInt(4, 0), 4) == (2, GaussInt(1, 0))
    assert decompose(GaussInt(4, 1), 2) == (0, GaussInt(4, 1))
    # 3+3i needs more than two digits: check against the raw digit enumeration.
    assert GaussInt(3, 3) not in digit_sets[2]
    assert decompose(GaussInt(3, 3), 1) is None
    with pytest.raises(ValueError):
        decompose(GaussInt(0, 0), 3)


def test_b_matches_digit_enumeration(digit_sets):
    for length, values in digit_sets.items():
        if length:
            assert region("B", length - 1) == values


def test_preimage_examples():
    units_plus = {GaussInt(a, b) for a in (1, -1) for b in (1, -1)}
    units_plus |= {GaussInt(2 * a, b) for a in (1, -1) for b in (1, -1)}
    units_plus |= {GaussInt(a, 2 * b) for a in (1, -1) for b in (1, -1)}
    assert preimage(1) == units_plus
    assert len(preimage(8)) == 3364
    assert len(preimage(9)) == 6852
    assert preimage(0) == region("B", 0)


@pytest.mark.parametrize("n", range(0, 13))
def test_preimage_two_constructions_agree(n):
    assert preimage(n) == preimage_by_conditions(n)


@pytest.mark.parametrize("kind", ["Oct", "S", "D", "B"])
def test_nesting_and_symmetry(kind):
    prev = set()
    for n in range(11):
        cur = region(kind, n)
        assert prev <= cur
        for x in cur:
            assert orbit(x) <= cur
        prev = cur


def test_containment_chain():
    for n in range(13):
        d, s, b, o = region("D", n), region("S", n), region("B", n), region("Oct", n)
        assert d <= s <= b <= o


def test_s_is_d_union_shifted_d():
    for n in range(1, 13):
        shifted = {mul(GaussInt(1, 1), x) for x in region("D", n - 1)}
        assert region("S", n) == region("D", n) | shifted


def test_disjoint_union_of_scaled_s():
    for n in range(13):
        pieces = [{GaussInt(x.re << j, x.im << j) for x in region("S", n - 2 * j)} for j in range(n // 2 + 1)]
        union = set()
        for p in pieces:
            assert union.isdisjoint(p)
            union |= p
        assert union == region("B", n) - {GaussInt(0, 0)}


def test_phi_is_first_b_level():
    for a in range(-128, 129, 3):
        for b in range(-128, 129):
            if a == 0 and b == 0:
                continue
            x = GaussInt(a, b)
            p = phi(x)
            assert in_region(Q("B", p), x)
            assert p == 0 or not in_region(Q("B", p - 1), x)


def test_max_power_bound():
    for n in range(13):
        for x in region("Oct", n):
            if x:
                assert two_adic_val(x) <= n // 2 + 1


def test_oct_bounds_level_2():
    pts = region("Oct", 2)
    assert max(abs(x.re) for x in pts) == w(2) - 2 == 4
    assert max(abs(x.re) + abs(x.im) for x in pts) == w(3) - 3 == 5
    columns = [sum(1 for x in pts if x.re == c) for c in range(-4, 5)]
    assert columns == [3, 5, 7, 9, 9, 9, 7, 5, 3]
