"""Brute-force Motzkin sets of the Gaussian integers.

``A_0 = {0, ±1, ±i}`` and ``A_j`` adds every ``beta`` such that ``A_{j-1}``
contains a representative of each residue class modulo ``beta``.  Nothing
here uses the closed formula or the digit description; it is the oracle
the rest of the package is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gaussian import GaussInt, as_gauss, norm, orbit
from .regions import CapExceeded

DEFAULT_CAP = 8

LEVEL_ZERO = frozenset({GaussInt(0, 0), GaussInt(1, 0), GaussInt(-1, 0), GaussInt(0, 1), GaussInt(0, -1)})


@dataclass(frozen=True)
class ResidueBasis:
    """Triangular basis ``(g, h12), (0, h22)`` of the lattice ``m * Z[i]``.

    ``g * h22 == norm(m)``.  A point ``(x, y)`` reduces to the unique
    representative with ``0 <= x < g`` and ``0 <= y < h22``.
    """

    g: int
    h12: int
    h22: int

    @classmethod
    def of(cls, m) -> "ResidueBasis":
        a, b = as_gauss(m)
        if a == 0 and b == 0:
            raise ZeroDivisionError("residues modulo 0 are undefined")
        # Rows (a, b) and (-b, a) span m*Z[i]; combine them so the first
        # column becomes (gcd, 0).
        g, u, v = _xgcd(a, -b)
        if g < 0:
            g, u, v = -g, -u, -v
        h12 = u * b + v * a
        h22 = (a * a + b * b) // g
        return cls(g, h12 % h22, h22)

    def reduce(self, x: int, y: int) -> tuple[int, int]:
        q, r = divmod(x, self.g)
        return r, (y - q * self.h12) % self.h22

    def labels(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        q, r = np.divmod(xs, self.g)
        return r * self.h22 + (ys - q * self.h12) % self.h22


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def canonical_residue(x, m) -> GaussInt:
    """Canonical representative of ``x`` modulo ``m``.

    Two inputs get the same representative exactly when ``m`` divides
    their difference.
    """
    x = as_gauss(x)
    return GaussInt(*ResidueBasis.of(m).reduce(x.re, x.im))


@dataclass(frozen=True)
class CosetDomain:
    modulus: GaussInt
    points: frozenset = field(repr=False)


def coset_domain(m) -> CosetDomain:
    """The ``a x a`` square plus the ``b x b`` square hanging below it.

    For ``m = a + bi`` with ``a > b >= 0`` this set holds exactly one
    point of every residue class modulo ``m``.
    """
    m = as_gauss(m)
    a, b = m
    if not a > b >= 0:
        raise ValueError(f"coset_domain needs re > im >= 0, got {m}")
    pts = {GaussInt(x, y) for x in range(a) for y in range(a)}
    pts.update(GaussInt(x, y) for x in range(b) for y in range(-b, 0))
    return CosetDomain(m, frozenset(pts))


def _as_arrays(points) -> tuple[np.ndarray, np.ndarray]:
    pts = list(points)
    xs = np.fromiter((p[0] for p in pts), dtype=np.int64, count=len(pts))
    ys = np.fromiter((p[1] for p in pts), dtype=np.int64, count=len(pts))
    return xs, ys


def _surjects_arrays(xs: np.ndarray, ys: np.ndarray, m: GaussInt) -> bool:
    n = norm(m)
    if xs.size < n:
        return False
    labels = ResidueBasis.of(m).labels(xs, ys)
    return np.unique(labels).size == n


def surjects(points, m) -> bool:
    """True when ``points`` meets every residue class modulo ``m``."""
    m = as_gauss(m)
    if not m:
        raise ZeroDivisionError("residues modulo 0 are undefined")
    return _surjects_arrays(*_as_arrays(points), m)


def triangle(m) -> list[GaussInt]:
    """Points ``x + yi`` with ``x, y >= 0`` and ``x + y < max(|a|, |b|)``."""
    m = as_gauss(m)
    top = max(abs(m.re), abs(m.im))
    return [GaussInt(x, y) for x in range(top) for y in range(top - x)]


def _unit_closed(points: frozenset) -> bool:
    return all(GaussInt(-b, a) in points for a, b in points)


def surjects_via_triangle(points, m) -> bool:
    """Surjection test that only looks at the triangle below ``max(|a|, |b|)``.

    ``points`` must be closed under multiplication by units and ``m`` must
    not be divisible by ``1+i``.  ``m`` is first rotated by a unit so that
    ``re > 0`` and ``im >= 0``; it must then satisfy ``re > im``.
    """
    m = as_gauss(m)
    pts = frozenset(as_gauss(p) for p in points)
    if not m or (m.re + m.im) % 2 == 0:
        raise ValueError(f"(1+i) divides {m}")
    if not _unit_closed(pts):
        raise ValueError("point set is not closed under multiplication by units")
    a, b = m
    while not (a > 0 and b >= 0):
        a, b = -b, a
    if not a > b:
        raise ValueError(f"unit-normalized modulus {a}+{b}i needs re > im")
    basis = ResidueBasis.of(GaussInt(a, b))
    covered = set(basis.labels(*_as_arrays(pts)).tolist())
    needed = basis.labels(*_as_arrays(triangle(GaussInt(a, b))))
    return covered.issuperset(needed.tolist())


@dataclass(frozen=True)
class MotzkinLevel:
    level: int
    elements: frozenset = field(repr=False)
    candidates_checked: int = 0

    def __len__(self):
        return len(self.elements)


def octant_candidates(bound: int) -> list[GaussInt]:
    """Nonzero ``a + bi`` with ``a >= b >= 0`` and norm at most ``bound``."""
    out = []
    for a in range(1, math.isqrt(bound) + 1):
        for b in range(a + 1):
            if a * a + b * b <= bound:
                out.append(GaussInt(a, b))
    return out


def next_level(prev: frozenset, level: int) -> MotzkinLevel:
    xs, ys = _as_arrays(prev)
    new = set(prev)
    checked = 0
    # A surjection needs at least norm(beta) representatives.
    for beta in octant_candidates(len(prev)):
        if beta in prev:
            continue
        checked += 1
        if _surjects_arrays(xs, ys, beta):
            new |= orbit(beta)
    return MotzkinLevel(level, frozenset(new), checked)


def build_levels(n_max: int, cap: int = DEFAULT_CAP) -> list[MotzkinLevel]:
    """Motzkin sets ``A_0 .. A_{n_max}``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > cap:
        raise CapExceeded(f"level {n_max} exceeds the oracle cap {cap}")
    levels = [MotzkinLevel(0, LEVEL_ZERO)]
    for j in range(1, n_max + 1):
        levels.append(next_level(levels[-1].elements, j))
    return levels


@dataclass(frozen=True)
class CandidateSpace:
    norm_bound: int
    total: int
    known: int
    remaining: int


def candidate_space(level_set: frozenset) -> CandidateSpace:
    """Octant points a search for the next level would have to consider.

    ``total`` counts ``a >= b >= 0`` (0 included) with norm at most
    ``len(level_set)``, ``known`` those already in ``level_set``.
    """
    bound = len(level_set)
    pts = [GaussInt(0, 0), *octant_candidates(bound)]
    known = sum(1 for p in pts if p in level_set)
    return CandidateSpace(bound, len(pts), known, len(pts) - known)
