"""Weight sequence ``w`` and the closed-form minimal Euclidean function."""

from __future__ import annotations

from .gaussian import GaussInt, as_gauss, two_adic_val


def w(n: int) -> int:
    """``3 * 2**k`` for ``n = 2k`` and ``4 * 2**k`` for ``n = 2k + 1``."""
    if n < 0:
        raise ValueError(f"w(n) needs n >= 0, got {n}")
    k, odd = divmod(n, 2)
    return (4 if odd else 3) << k


def least_level(m: int) -> int:
    """Least ``n`` with ``m <= w(n)``."""
    if m < 3:
        raise ValueError(f"least_level needs m >= 3, got {m}")
    # w(2k) = 3*2^k <= m here, so at most a couple of steps remain.
    n = 2 * max((m // 3).bit_length() - 1, 0)
    while w(n) < m:
        n += 1
    return n


def phi(x) -> int:
    """Minimal Euclidean function of the Gaussian integer ``x`` (``x != 0``).

    Strip the largest power ``2**j`` dividing both coordinates, find the
    octagon level ``n`` that the reduced point's larger coordinate needs,
    and add one more level if its coordinate sum overshoots that octagon.
    """
    x = as_gauss(x)
    if not x:
        raise ValueError("phi undefined at 0")
    j = two_adic_val(x)
    a, b = abs(x.re) >> j, abs(x.im) >> j
    n = least_level(max(a, b) + 2)
    if a + b + 3 <= w(n + 1):
        return n + 2 * j
    return n + 2 * j + 1


def check_weight_identities(n_max: int) -> list[str]:
    """Evaluate the weight-sequence identities for ``2 <= n <= n_max``.

    Conditional identities are checked for every ``0 <= l <= n``.  The
    two-sided bound ``w(n-2) <= w(n+1) - w(n) <= w(n-2)`` is not checked:
    read literally it is an equality that fails for every even ``n``.
    Returns a description of each violation; empty means all hold.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    bad = []
    for n in range(2, n_max + 1):
        wn, wn1 = w(n), w(n + 1)
        gap = wn1 - wn
        half = n // 2
        if w(n + 2) != 2 * wn:
            bad.append(f"n={n}: w(n+2) != 2 w(n)")
        if not 2 * gap <= wn:
            bad.append(f"n={n}: 2(w(n+1)-w(n)) > w(n)")
        if not 3 * gap <= wn1:
            bad.append(f"n={n}: 3(w(n+1)-w(n)) > w(n+1)")
        for l in range(n + 1):
            p = 1 << l
            if 2 * p < wn and not l <= half:
                bad.append(f"n={n}, l={l}: 2^(l+1) < w(n) but l > n//2")
            if 2 * p <= wn and not p <= gap:
                bad.append(f"n={n}, l={l}: 2^(l+1) <= w(n) but 2^l > w(n+1)-w(n)")
            if gap <= p and not (n + 1) // 2 <= l:
                bad.append(f"n={n}, l={l}: w(n+1)-w(n) <= 2^l but (n+1)//2 > l")
            if l <= half:
                if (wn - p) % p:
                    bad.append(f"n={n}, l={l}: 2^l does not divide w(n)-2^l")
                if not p <= gap:
                    bad.append(f"n={n}, l={l}: 2^l > w(n+1)-w(n)")
                if not gap + p <= wn:
                    bad.append(f"n={n}, l={l}: w(n+1)-w(n)+2^l > w(n)")
    return bad
