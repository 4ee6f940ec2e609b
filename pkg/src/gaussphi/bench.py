"""Three ways to count ``|phi^-1(n)|``, timed side by side.

* ``naive``: grow the Motzkin sets by brute-force surjection checks.
* ``recursive``: ``B_n = B_{n-1} + {u (1+i)^n}`` over all units ``u``.
* ``formula``: the closed form.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

import numpy as np

from .counting import preimage_size
from .gaussian import ONE_PLUS_I, UNITS
from .motzkin import LEVEL_ZERO, CandidateSpace, candidate_space, next_level

CAPS = {"naive": 8, "recursive": 20, "formula": None}
STRATEGIES = tuple(CAPS)

# Packs a point into one int64; coordinates stay far below 2**20 up to the caps.
_OFFSET = 1 << 20
_STRIDE = 1 << 21


def _encode(a, b):
    return (a + _OFFSET) * _STRIDE + (b + _OFFSET)


@dataclass(frozen=True)
class BenchRow:
    n: int
    strategy: str
    wall_time: float
    result: int


def _naive(n_max: int):
    level = LEVEL_ZERO
    t = time.perf_counter()
    yield 0, time.perf_counter() - t, len(level), level
    for n in range(1, n_max + 1):
        t = time.perf_counter()
        nxt = next_level(level, n).elements
        yield n, time.perf_counter() - t, len(nxt) - len(level), nxt
        level = nxt


def _recursive(n_max: int):
    t = time.perf_counter()
    codes = np.unique(np.array([_encode(a, b) for a, b in LEVEL_ZERO], dtype=np.int64))
    yield 0, time.perf_counter() - t, codes.size
    power = ONE_PLUS_I
    for n in range(1, n_max + 1):
        t = time.perf_counter()
        shifts = [_encode(*(u * power)) - _encode(0, 0) for u in UNITS]
        nxt = np.unique(np.concatenate([codes] + [codes + s for s in shifts]))
        yield n, time.perf_counter() - t, nxt.size - codes.size
        codes = nxt
        power = power * ONE_PLUS_I


def run(n_max: int, strategies=STRATEGIES, caps=None) -> tuple[list[BenchRow], CandidateSpace | None]:
    """Run every requested strategy for levels ``0..n_max`` within its cap.

    Also returns the naive search space for level ``n_max + 1`` when the
    naive strategy ran all the way to ``n_max``.
    """
    caps = {**CAPS, **(caps or {})}
    rows = []
    space = None
    if "naive" in strategies:
        top = min(n_max, caps["naive"])
        last = None
        for n, dt, count, level in _naive(top):
            rows.append(BenchRow(n, "naive", dt, count))
            last = level
        if top == n_max:
            space = candidate_space(last)
    if "recursive" in strategies:
        top = min(n_max, caps["recursive"])
        rows.extend(BenchRow(n, "recursive", dt, c) for n, dt, c in _recursive(top))
    if "formula" in strategies:
        top = n_max if caps["formula"] is None else min(n_max, caps["formula"])
        for n in range(top + 1):
            t = time.perf_counter()
            c = preimage_size(n)
            rows.append(BenchRow(n, "formula", time.perf_counter() - t, c))
    rows.sort(key=lambda r: (r.n, STRATEGIES.index(r.strategy)))
    return rows, space


def disagreements(rows: list[BenchRow]) -> list[int]:
    """Levels at which two strategies reported different counts."""
    seen: dict[int, set[int]] = {}
    for r in rows:
        seen.setdefault(r.n, set()).add(r.result)
    return sorted(n for n, vals in seen.items() if len(vals) > 1)


def rows_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(("n", "strategy", "wall_time", "result"))
    for r in rows:
        out.writerow((r.n, r.strategy, f"{r.wall_time:.6f}", r.result))
    return buf.getvalue()
