"""Small exact-integer helpers used throughout the solver.

Everything here works on unbounded Python ints; there is no floating point
in any code path.
"""

from __future__ import annotations

import math

from .errors import DivisorLimitExceeded

# Trial division enumerates divisors in O(sqrt(n)); above this cap that is no
# longer a sane interactive operation, so larger inputs are rejected instead
# of silently hanging.  Overridable per call (and via CONIC_DIVISOR_CAP in
# the CLI).
DEFAULT_DIVISOR_CAP = 10**14


def integer_sqrt(n: int) -> int | None:
    """Exact square root of ``n``, or None when ``n`` is not a perfect square.

    Negative inputs are never squares, so they yield None rather than an
    error; callers use this directly as a "is this discriminant a square"
    test.
    """
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, nonnegative; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and a*u + b*v == g.

    Iterative extended Euclid.  Works for any signs; the final sign flip
    keeps g nonnegative so callers can use it as a divisor directly.
    """
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def positive_divisors(n: int, cap: int | None = None) -> list[int]:
    """All positive divisors of |n| in ascending order.

    Plain trial division up to sqrt(|n|).  ``n == 0`` is rejected (every
    integer divides zero), as is |n| above the cap.
    """
    if n == 0:
        raise ValueError("0 has no finite divisor list")
    if cap is None:
        cap = DEFAULT_DIVISOR_CAP
    n = abs(n)
    if n > cap:
        raise DivisorLimitExceeded(
            f"|{n}| exceeds the divisor enumeration cap {cap}"
        )
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large
