import itertools

import pytest

from gaussphi.gaussian import GaussInt
from gaussphi.motzkin import build_levels

# Appendix table: n, |S_n|, |B_n|, |phi^-1(n)|
TABLE_1 = [
    (0, 4, 5, 5),
    (1, 16, 17, 12),
    (2, 44, 49, 32),
    (3, 108, 125, 76),
    (4, 248, 297, 172),
    (5, 544, 669, 372),
    (6, 1160, 1457, 788),
    (7, 2424, 3093, 1636),
    (8, 5000, 6457, 3364),
    (9, 10216, 13309, 6852),
    (10, 20744, 27201, 13892),
    (11, 41928, 55237, 28036),
    (12, 84488, 111689, 56452),
    (13, 169864, 225101, 113412),
    (14, 341000, 452689, 227588),
    (15, 683784, 908885, 456196),
    (16, 1370120, 1822809, 913924),
    (17, 2743816, 3652701, 1829892),
    (18, 5492744, 7315553, 3662852),
    (19, 10992648, 14645349, 7329796),
    (20, 21995528, 29311081, 14665732),
    (21, 44005384, 58650733, 29339652),
    (22, 88031240, 117342321, 58691588),
    (23, 176091144, 234741877, 117399556),
    (24, 352223240, 469565561, 234823684),
    (25, 704503816, 939245693, 469680132),
]

DIGIT_VALUES = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]


def _brute_digit_sets(max_len):
    """values[L] = every sum of L digits times powers of (1+i), by plain enumeration."""
    powers = [(1, 0)]
    for _ in range(max_len):
        a, b = powers[-1]
        powers.append((a - b, a + b))
    values = {0: {GaussInt(0, 0)}}
    for length in range(1, max_len + 1):
        seen = set()
        for digits in itertools.product(DIGIT_VALUES, repeat=length):
            re = im = 0
            for (c, d), (p, q) in zip(digits, powers):
                re += c * p - d * q
                im += c * q + d * p
            seen.add(GaussInt(re, im))
        values[length] = seen
    return values


@pytest.fixture(scope="session")
def digit_sets():
    return _brute_digit_sets(7)


@pytest.fixture(scope="session")
def motzkin_levels():
    return build_levels(8)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
