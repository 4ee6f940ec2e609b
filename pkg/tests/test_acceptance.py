"""Exit criteria: one test per criterion, each with its time limit.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_RESULTS, TABLE_1
from gaussphi.cli import main
from gaussphi.counting import b_size, parse_table_csv, preimage_size, s_size
from gaussphi.expansion import evaluate, expand_min
from gaussphi.gaussian import UNITS, GaussInt, conj, mul, norm
from gaussphi.motzkin import build_levels, canonical_residue, coset_domain, surjects, surjects_via_triangle
from gaussphi.phi import check_weight_identities, phi
from gaussphi.regions import Kind, RegionQuery, enumerate_region, in_region, preimage


@contextmanager
def criterion(number, title, limit_s):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit_s
        status = "PASS" if ok and within else "FAIL"
        ACCEPTANCE_RESULTS.append(f"{status} criterion {number}: {title} ({elapsed:.2f}s, limit {limit_s}s)")
    assert within, f"criterion {number} took {elapsed:.2f}s, limit {limit_s}s"


def test_1_table_reproduction(capsys):
    with criterion(1, "table 25 equals the appendix table", 1):
        assert main(["table", "25"]) == 0
        rows = parse_table_csv(capsys.readouterr().out)
        assert [(r.n, r.s_size, r.b_size, r.preimage_size) for r in rows] == TABLE_1
        assert rows[25].preimage_size == 469680132


def test_2_samuel_values():
    with criterion(2, "pre-image sizes for n = 0..8", 1):
        assert [preimage_size(n) for n in range(9)] == [5, 12, 32, 76, 172, 372, 788, 1636, 3364]


def test_3_lenstra_oracle():
    with criterion(3, "Motzkin sets A_0..A_8 equal B_0..B_8", 300):
        levels = build_levels(8)
        for lvl in levels:
            assert lvl.elements == enumerate_region(RegionQuery(Kind.B, lvl.level)).elements
        assert len(levels[8]) == 6457


def test_4_enumeration_vs_formula():
    with criterion(4, "enumerated |S_n|, |B_n|, |phi^-1(n)| equal closed forms for n <= 12", 30):
        for n in range(13):
            assert len(enumerate_region(RegionQuery(Kind.S, n))) == s_size(n)
            assert len(enumerate_region(RegionQuery(Kind.B, n))) == b_size(n)
            assert len(preimage(n)) == preimage_size(n)
        assert b_size(12) == 111689


def _first_b_level(x):
    n = 0
    while not in_region(RegionQuery(Kind.B, n), x):
        n += 1
    return n


def test_5_phi_consistency():
    with criterion(5, "phi equals first B level, symmetric, shifts by one under (1+i)", 10):
        one_plus_i = GaussInt(1, 1)
        for a in range(-128, 129):
            for b in range(-128, 129):
                if a == 0 and b == 0:
                    continue
                x = GaussInt(a, b)
                p = phi(x)
                assert p == _first_b_level(x), x
                assert phi(conj(x)) == p
                for u in UNITS[1:]:
                    assert phi(mul(u, x)) == p
                assert phi(mul(one_plus_i, x)) == p + 1


def test_6_expansions(digit_sets):
    with criterion(6, "expansions of B_10 round-trip with phi+1 digits; none shorter for phi <= 6", 120):
        pts = enumerate_region(RegionQuery(Kind.B, 10)).elements - {GaussInt(0, 0)}
        assert len(pts) == 27200
        for x in pts:
            e = expand_min(x)
            assert evaluate(e) == x
            assert len(e) == phi(x) + 1
        small = [x for x in pts if phi(x) <= 6]
        assert len(small) == b_size(6) - 1
        for x in small:
            assert x in digit_sets[phi(x) + 1]
            assert x not in digit_sets[phi(x)]


def test_7_fundamental_domains(motzkin_levels):
    with criterion(7, "50 coset domains are fundamental; triangle test agrees with full test", 30):
        moduli = [GaussInt(a, b) for a in range(1, 23) for b in range(a) if a * a + b * b <= 500]
        chosen = random.Random(20261018).sample(moduli, 50)
        for m in chosen:
            dom = coset_domain(m)
            assert len(dom.points) == norm(m)
            assert len({canonical_residue(p, m) for p in dom.points}) == norm(m)
            if (m.re + m.im) % 2:
                for lvl in motzkin_levels[:5]:
                    assert surjects_via_triangle(lvl.elements, m) == surjects(lvl.elements, m)


def test_8_weight_identities():
    with criterion(8, "weight identities hold for n <= 60", 1):
        assert check_weight_identities(60) == []


def test_9_benchmark(capsys):
    with criterion(9, "bench 8: strategies agree, naive search space 2605/842/1763", 60):
        assert main(["bench", "8"]) == 0
        captured = capsys.readouterr()
        rows = [line.split(",") for line in captured.out.splitlines()[1:]]
        by_level = {}
        for n, strategy, _, result in rows:
            by_level.setdefault(int(n), {})[strategy] = int(result)
        assert sorted(by_level) == list(range(9))
        for n, results in by_level.items():
            assert set(results) == {"naive", "recursive", "formula"}
            assert set(results.values()) == {preimage_size(n)}
        assert "2605 octant points with norm <= 6457" in captured.err
        assert "842 already known" in captured.err
        assert "1763 to check" in captured.err
