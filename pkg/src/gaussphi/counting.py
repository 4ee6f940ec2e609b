"""Closed-form sizes of ``S_n``, ``B_n`` and the pre-images of ``phi``."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .phi import w


def s_size_quadratic(n: int) -> int:
    """``|S_n|`` as a quadratic in ``w(n)`` and ``w(n) - w(n-1)`` (``n >= 1``)."""
    if n < 1:
        raise ValueError("quadratic form needs n >= 1")
    r = w(n) - 2
    d = w(n) - w(n - 1)
    return 3 * r * r + 2 * r - 6 * d * (d - 1)


def s_size_parity(n: int) -> int:
    if n < 1:
        raise ValueError("parity form needs n >= 1")
    k, odd = divmod(n, 2)
    if odd:
        return 42 * 4**k - 34 * 2**k + 8
    return 21 * 4**k - 24 * 2**k + 8


def s_size(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 4
    q, p = s_size_quadratic(n), s_size_parity(n)
    if q != p:
        raise AssertionError(f"|S_{n}| forms disagree: {q} != {p}")
    return p


def b_size(n: int) -> int:
    """``|B_n|``, equal to the size of the Motzkin set ``A_n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k, odd = divmod(n, 2)
    if odd:
        return 14 * 4 ** (k + 1) - 34 * 2 ** (k + 1) + 8 * k + 29
    if k == 0:
        return 5
    return 28 * 4**k - 48 * 2**k + 8 * k + 25


def b_size_from_s(n: int) -> int:
    return 1 + sum(s_size(n - 2 * j) for j in range(n // 2 + 1))


def preimage_size(n: int) -> int:
    """Number of ``x`` with ``phi(x) == n``; counts 0 as well at ``n == 0``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 5
    if n == 1:
        return 12
    k, odd = divmod(n, 2)
    if odd:
        return 28 * 4**k - 20 * 2**k + 4
    return 14 * 4**k - 14 * 2**k + 4


@dataclass(frozen=True)
class CountRow:
    n: int
    s_size: int
    b_size: int
    preimage_size: int


def table(n_max: int) -> list[CountRow]:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return [CountRow(n, s_size(n), b_size(n), preimage_size(n)) for n in range(n_max + 1)]


CSV_HEADER = ("n", "s_size", "b_size", "preimage_size")


def table_csv(rows: list[CountRow]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(CSV_HEADER)
    for r in rows:
        out.writerow((r.n, r.s_size, r.b_size, r.preimage_size))
    return buf.getvalue()


def parse_table_csv(text: str) -> list[CountRow]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return [CountRow(*(int(r[c]) for c in CSV_HEADER)) for r in rows]
