"""Octagonal lattice regions and the digit-expansion sets ``B_n``.

``Oct_n`` is the octagon ``|a|, |b| <= w(n) - 2``, ``|a| + |b| <= w(n+1) - 3``.
``S_n`` drops 0 and the points with both coordinates even, ``D_n`` keeps only
odd coordinate sums, and ``B_n`` (the Gaussian integers with a (1+i)-ary
expansion of at most ``n + 1`` digits) is ``{0}`` plus the disjoint union of
``2**j * S_{n-2j}`` for ``0 <= j <= n // 2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .gaussian import GaussInt, as_gauss, two_adic_val
from .phi import w

DEFAULT_CAP = 30


class CapExceeded(ValueError):
    """A requested level is above the configured enumeration cap."""


class Kind(str, enum.Enum):
    OCT = "Oct"
    S = "S"
    D = "D"
    B = "B"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        for kind in cls:
            if kind.value.lower() == text.lower():
                return kind
        raise ValueError(f"unknown region kind {text!r}; expected one of Oct, S, D, B")


@dataclass(frozen=True)
class RegionQuery:
    kind: Kind
    level: int

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind.parse(self.kind))
        if self.level < 0:
            raise ValueError(f"level must be >= 0, got {self.level}")


@dataclass(frozen=True)
class RegionSet:
    query: RegionQuery
    elements: frozenset

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return as_gauss(x) in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))


def _in_oct(a: int, b: int, n: int) -> bool:
    a, b = abs(a), abs(b)
    return max(a, b) <= w(n) - 2 and a + b <= w(n + 1) - 3


def _in_s(a: int, b: int, n: int) -> bool:
    if (a | b) & 1 == 0:  # both even, including 0
        return False
    return _in_oct(a, b, n)


def _in_d(a: int, b: int, n: int) -> bool:
    if (a + b) & 1 == 0:
        return False
    return _in_oct(a, b, n)


def decompose(x, n: int) -> tuple[int, GaussInt] | None:
    """Split ``x`` in ``B_n`` as ``2**j * reduced`` with ``reduced`` in ``S_{n-2j}``.

    Returns ``None`` when ``x`` is not in ``B_n``.  The pieces of the union
    are disjoint, so ``j`` is just the 2-adic valuation of ``x``.
    """
    x = as_gauss(x)
    if not x:
        raise ValueError("decompose needs x != 0")
    if not _in_b(x.re, x.im, n):
        return None
    j = two_adic_val(x)
    return j, GaussInt(x.re >> j, x.im >> j)


def _in_b(a: int, b: int, n: int) -> bool:
    if n < 0:
        return False
    v = a | b
    if v == 0:
        return True
    j = (v & -v).bit_length() - 1
    if j > n // 2:
        return False
    return _in_s(a >> j, b >> j, n - 2 * j)


_PREDICATES = {Kind.OCT: _in_oct, Kind.S: _in_s, Kind.D: _in_d, Kind.B: _in_b}


def in_region(q: RegionQuery, x) -> bool:
    x = as_gauss(x)
    return _PREDICATES[q.kind](x.re, x.im, q.level)


def _check_cap(level: int, cap: int) -> None:
    if level > cap:
        raise CapExceeded(f"level {level} exceeds the cap {cap}")


def _symmetric_closure(octant_points) -> set[GaussInt]:
    out = set()
    for a, b in octant_points:
        out.update((
            GaussInt(a, b), GaussInt(-a, b), GaussInt(a, -b), GaussInt(-a, -b),
            GaussInt(b, a), GaussInt(-b, a), GaussInt(b, -a), GaussInt(-b, -a),
        ))
    return out


def octant_points(q: RegionQuery) -> list[tuple[int, int]]:
    """Members ``a + bi`` of the region with ``a >= b >= 0``."""
    pred = _PREDICATES[q.kind]
    n = q.level
    r = w(n) - 2
    return [(a, b) for a in range(r + 1) for b in range(a + 1) if pred(a, b, n)]


def enumerate_region(q: RegionQuery, cap: int = DEFAULT_CAP) -> RegionSet:
    _check_cap(q.level, cap)
    return RegionSet(q, frozenset(_symmetric_closure(octant_points(q))))


def enumerate_region_scan(q: RegionQuery, cap: int = DEFAULT_CAP) -> RegionSet:
    """Same as :func:`enumerate_region` but scanning the whole bounding box."""
    _check_cap(q.level, cap)
    pred = _PREDICATES[q.kind]
    r = w(q.level) - 2
    pts = frozenset(
        GaussInt(a, b)
        for a in range(-r, r + 1)
        for b in range(-r, r + 1)
        if pred(a, b, q.level)
    )
    return RegionSet(q, pts)


def preimage(n: int, cap: int = DEFAULT_CAP) -> frozenset:
    """The Gaussian integers ``x`` with ``phi(x) == n`` (with 0 at ``n == 0``)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    current = enumerate_region(RegionQuery(Kind.B, n), cap).elements
    if n == 0:
        return current
    return current - enumerate_region(RegionQuery(Kind.B, n - 1), cap).elements


def _in_preimage_piece(a: int, b: int, n: int, j: int) -> bool:
    # Point with 2^j || a+bi that lies in B_n but not in B_{n-1}.
    a, b = abs(a), abs(b)
    p = 1 << j
    hi, total = max(a, b), a + b
    if hi > w(n) - 2 * p or total > w(n + 1) - 3 * p:
        return False
    if 2 * j == n:
        # Top piece {±2^k, ±2^k i}: absent from B_{n-1} outright.
        return True
    return hi > w(n - 1) - 2 * p or total > w(n) - 3 * p


def preimage_by_conditions(n: int, cap: int = DEFAULT_CAP) -> frozenset:
    """``phi``-pre-image of ``n`` built from the explicit inequality description.

    Independent of :func:`preimage`: the pieces are indexed by the exact
    power of two dividing the point, each cut out by its own bounds.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_cap(n, cap)
    if n == 0:
        return enumerate_region(RegionQuery(Kind.B, 0), cap).elements
    octant = []
    r = w(n) - 2
    for a in range(r + 1):
        for b in range(a + 1):
            if a == 0 and b == 0:
                continue
            j = two_adic_val(GaussInt(a, b))
            if j <= n // 2 and _in_preimage_piece(a, b, n, j):
                octant.append((a, b))
    return frozenset(_symmetric_closure(octant))


def region_bounds(q: RegionQuery) -> int:
    """Half-width of the square that contains the region."""
    return w(q.level) - 2
