"""Expansions in base ``1+i`` with digits in ``{0, ±1, ±i}``."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .gaussian import ONE_PLUS_I, GaussInt, as_gauss, div_exact
from .phi import phi
from .regions import Kind, RegionQuery, in_region

DIGITS = (GaussInt(0, 0), GaussInt(1, 0), GaussInt(-1, 0), GaussInt(0, 1), GaussInt(0, -1))
# Tie-break order when several unit digits lead to a valid expansion.
UNIT_ORDER = DIGITS[1:]

_TEXT = {
    GaussInt(0, 0): "0",
    GaussInt(1, 0): "1",
    GaussInt(-1, 0): "-1",
    GaussInt(0, 1): "i",
    GaussInt(0, -1): "-i",
}
_PARSE = {v: k for k, v in _TEXT.items()}


class ExpansionError(RuntimeError):
    """No admissible digit was found; the membership tests are inconsistent."""


def _check_digit(d) -> GaussInt:
    d = as_gauss(d)
    if d not in _TEXT:
        raise ValueError(f"{d} is not a digit; digits are 0, ±1, ±i")
    return d


def evaluate(digits: Iterable) -> GaussInt:
    """``sum(d_j * (1+i)**j)``, digit 0 first (Horner from the top)."""
    acc = GaussInt(0, 0)
    for d in reversed([_check_digit(d) for d in digits]):
        acc = acc * ONE_PLUS_I + d
    return acc


def _in_b(x: GaussInt, n: int) -> bool:
    if n < 0:
        return not x
    return in_region(RegionQuery(Kind.B, n), x)


def _is_multiple_of_one_plus_i(x: GaussInt) -> bool:
    return (x.re + x.im) % 2 == 0


def expand_min(x, backtrack: bool = False) -> list[GaussInt]:
    """A shortest expansion of ``x != 0``; it has ``phi(x) + 1`` digits.

    Digits are chosen greedily: a residual divisible by ``1+i`` must take
    digit 0, otherwise the first unit in ``UNIT_ORDER`` whose quotient still
    fits in the remaining number of digits is used.  With ``backtrack=True``
    a plain depth-first search without the membership pruning is used
    instead (slow; for debugging).
    """
    x = as_gauss(x)
    if not x:
        raise ValueError("expand_min needs x != 0")
    n = phi(x)
    if backtrack:
        found = _search(x, n + 1)
        if found is None:
            raise ExpansionError(f"no expansion of {x} with {n + 1} digits")
        return found
    digits = []
    r = x
    for pos in range(n + 1):
        remaining = n - pos  # digits still available after this one
        if _is_multiple_of_one_plus_i(r):
            digits.append(DIGITS[0])
            r = div_exact(r, ONE_PLUS_I)
            continue
        for u in UNIT_ORDER:
            q = div_exact(r - u, ONE_PLUS_I)
            if _in_b(q, remaining - 1):
                digits.append(u)
                r = q
                break
        else:
            raise ExpansionError(f"no admissible digit at position {pos} while expanding {x}")
    if r:
        raise ExpansionError(f"residual {r} left after expanding {x}")
    return digits


def _search(x: GaussInt, length: int) -> list[GaussInt] | None:
    if not x:
        return [] if length >= 0 else None
    if length == 0:
        return None
    if _is_multiple_of_one_plus_i(x):
        rest = _search(div_exact(x, ONE_PLUS_I), length - 1)
        return None if rest is None else [DIGITS[0], *rest]
    for u in UNIT_ORDER:
        rest = _search(div_exact(x - u, ONE_PLUS_I), length - 1)
        if rest is not None:
            return [u, *rest]
    return None


def format_digits(digits: Sequence) -> str:
    return ",".join(_TEXT[_check_digit(d)] for d in digits)


def parse_digits(text: str) -> list[GaussInt]:
    text = text.strip()
    if not text:
        return []
    try:
        return [_PARSE[t.strip()] for t in text.split(",")]
    except KeyError as e:
        raise ValueError(f"bad digit {e.args[0]!r}") from None
