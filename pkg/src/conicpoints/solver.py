"""Solvers for the factored conic equation F1*F2 = I.

Finite case (I != 0): every integral point turns F1 and F2 into a pair of
integers whose product is I, so it arises from a splitting I = s1*s2.
Writing s1 = e*d with d a positive divisor of |I| and e = +-1 (then
s2 = I/s1), each of the 2*tau(|I|) assignments gives a 2x2 integer linear
system; the point is kept when the exact rational solution is integral.

Degenerate case (I == 0): the conic is the union of the two lines F1 = 0 and
F2 = 0, each an ordinary linear Diophantine equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .conic import (
    Conic,
    FactorForm,
    Invariants,
    LatticePoint,
    content_reduce,
    factor_forms,
    invariants_of,
    validate,
)
from .intmath import extended_gcd, gcd, positive_divisors


class DivisorAssignment(NamedTuple):
    """One splitting F1 = e*d, F2 = e*(big_i/d) with d > 0 a divisor of |big_i|."""

    d: int
    e: int


@dataclass(frozen=True)
class ParamLine:
    """Integral solutions of a*x + b*y = c, parametrized when solvable.

    When solvable, the solutions are exactly base + t*direction for integer
    t.  direction is (b/g, -a/g) with g = gcd(a, b), sign-normalized so its
    first nonzero component is positive; base is translated along direction
    so its leading coordinate is the smallest nonnegative representative,
    which makes the representation canonical.
    """

    a: int
    b: int
    c: int
    solvable: bool
    base: LatticePoint | None
    direction: tuple[int, int]

    def point_at(self, t: int) -> LatticePoint | None:
        if not self.solvable or self.base is None:
            return None
        return LatticePoint(
            self.base.x + t * self.direction[0],
            self.base.y + t * self.direction[1],
        )


@dataclass(frozen=True)
class FiniteSolutions:
    points: tuple[LatticePoint, ...]


@dataclass(frozen=True)
class LinePair:
    lines: tuple[ParamLine, ParamLine]


SolutionSet = FiniteSolutions | LinePair

MOD4_OBSTRUCTION = "mod4-obstruction"


@dataclass(frozen=True)
class SquareSplitResult:
    """Outcome for the pure difference-of-squares family.

    ``obstruction`` is set (and points empty) when emptiness follows from a
    congruence argument rather than from exhausting divisor splittings.
    """

    points: tuple[LatticePoint, ...]
    obstruction: str | None = None


def solve(
    conic: Conic, *, reduce: bool = True, divisor_cap: int | None = None
) -> SolutionSet:
    """Dispatch on the invariant of the original (unreduced) coefficients."""
    inv = invariants_of(conic)
    if inv.big_i == 0:
        return LinePair(solve_degenerate(conic, inv))
    pts = solve_finite(conic, inv, reduce=reduce, divisor_cap=divisor_cap)
    return FiniteSolutions(tuple(pts))


def candidate_point(
    conic: Conic, inv: Invariants, assignment: DivisorAssignment
) -> LatticePoint | None:
    """Closed-form solution of F1 = e*d, F2 = e*(I/d) on the unreduced forms.

    Eliminating between the two forms (determinant 4*alpha*k^3 != 0) gives

        x = (s1*(beta+k) - s2*(beta-k) - 2*delta*k^2 - 2*beta*M) / (4*alpha*k^2)
        y = (s2 - s1 + 2*M) / (2*k^2)

    with s1 = e*d, s2 = e*(I/d).  Returns the point when both divisions are
    exact, else None.
    """
    s1 = assignment.e * assignment.d
    s2 = inv.big_i // s1
    k, m = inv.k, inv.m
    ny = s2 - s1 + 2 * m
    dy = 2 * k * k
    if ny % dy:
        return None
    nx = (
        s1 * (conic.beta + k)
        - s2 * (conic.beta - k)
        - 2 * conic.delta * k * k
        - 2 * conic.beta * m
    )
    dx = 4 * conic.alpha * k * k
    if nx % dx:
        return None
    return LatticePoint(nx // dx, ny // dy)


def _point_from_forms(
    f1: FactorForm, f2: FactorForm, s1: int, s2: int
) -> LatticePoint | None:
    """Exact Cramer solve of f1(x,y) = s1, f2(x,y) = s2; None unless integral."""
    det = f1.cx * f2.cy - f1.cy * f2.cx
    r1 = s1 - f1.c0
    r2 = s2 - f2.c0
    nx = r1 * f2.cy - r2 * f1.cy
    ny = f1.cx * r2 - f2.cx * r1
    if nx % det or ny % det:
        return None
    return LatticePoint(nx // det, ny // det)


def solve_finite(
    conic: Conic,
    inv: Invariants,
    *,
    reduce: bool = True,
    divisor_cap: int | None = None,
) -> list[LatticePoint]:
    """All integral points when big_i != 0, sorted by (x, y).

    With ``reduce`` the divisor enumeration runs over the content-reduced
    forms and the correspondingly smaller right-hand side; the result is
    identical either way.  Distinct assignments can collapse to one point,
    hence the set.
    """
    if inv.big_i == 0:
        raise ValueError("big_i == 0 is the degenerate case; use solve_degenerate")
    points: set[LatticePoint] = set()
    if reduce:
        reduced = content_reduce(*factor_forms(conic, inv), inv.big_i)
        if reduced is None:
            # contents do not divide big_i: no lattice point can exist
            return []
        g1, g2, target = reduced
        for d in positive_divisors(target, cap=divisor_cap):
            for e in (1, -1):
                s1 = e * d
                p = _point_from_forms(g1, g2, s1, target // s1)
                if p is not None:
                    points.add(p)
    else:
        for d in positive_divisors(inv.big_i, cap=divisor_cap):
            for e in (1, -1):
                p = candidate_point(conic, inv, DivisorAssignment(d, e))
                if p is not None:
                    points.add(p)
    return sorted(points)


def solve_linear_diophantine(a: int, b: int, c: int) -> ParamLine:
    """Describe the integer solutions of a*x + b*y = c.

    Solvable exactly when gcd(a, b) divides c; a particular solution comes
    from the extended gcd, then gets shifted to the canonical representative
    described on ParamLine.
    """
    if a == 0 and b == 0:
        raise ValueError("a and b cannot both be zero")
    g, u, v = extended_gcd(a, b)
    dx, dy = b // g, -(a // g)
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    if c % g:
        return ParamLine(a, b, c, False, None, (dx, dy))
    q = c // g
    x0, y0 = u * q, v * q
    t = x0 // dx if dx else y0 // dy
    base = LatticePoint(x0 - t * dx, y0 - t * dy)
    return ParamLine(a, b, c, True, base, (dx, dy))


def solve_degenerate(conic: Conic, inv: Invariants) -> tuple[ParamLine, ParamLine]:
    """The two lines F1 = 0 and F2 = 0 when big_i == 0.

    Ordered like the factor forms: the (beta - k) line first.
    """
    if inv.big_i != 0:
        raise ValueError("big_i != 0 is the finite case; use solve_finite")
    k, m = inv.k, inv.m
    lead = 2 * conic.alpha * k
    rhs = -conic.delta * k
    line1 = solve_linear_diophantine(lead, k * (conic.beta - k), rhs - m)
    line2 = solve_linear_diophantine(lead, k * (conic.beta + k), rhs + m)
    return line1, line2


def solve_homogeneous(conic: Conic, inv: Invariants) -> tuple[ParamLine, ParamLine]:
    """Line pair for delta = epsilon = j = 0 (which forces big_i == 0).

    The k factor common to both forms cancels, leaving 2*alpha*x + (beta+-k)*y = 0.
    Ordered with the (beta + k) line first, mirroring the reduced system; as
    line sets this agrees with solve_degenerate, only the labels swap.
    """
    if conic.delta or conic.epsilon or conic.j:
        raise ValueError("homogeneous form requires delta = epsilon = j = 0")
    two_alpha = 2 * conic.alpha
    line1 = solve_linear_diophantine(two_alpha, conic.beta + inv.k, 0)
    line2 = solve_linear_diophantine(two_alpha, conic.beta - inv.k, 0)
    return line1, line2


# Deterministic Miller-Rabin.  This witness set is exact for n < 3.3 * 10^24,
# far beyond anything the divisor cap lets through.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def solve_difference_of_squares(
    l: int, m: int, j: int, *, divisor_cap: int | None = None
) -> SquareSplitResult:
    """Integral points of l^2*x^2 - m^2*y^2 + j = 0, i.e. (lx-my)(lx+my) = -j.

    Closed forms for the classic right-hand sides:

      -j = 1:            (+-1, 0) when l == 1, else empty
      -j = p odd prime:  (+-(p+1)/(2l), +-(p-1)/(2m)) when 2l | p+1 and
                         2m | p-1, else empty
      -j = 2 (mod 4):    empty; a product (lx-my)(lx+my) of two integers of
                         equal parity is odd or divisible by 4

    Any other nonzero j falls through to the general divisor solver on the
    modeled conic.  j = 0 is rejected: that is the degenerate line pair
    lx = +-my, not a finite set.
    """
    if l <= 0 or m <= 0:
        raise ValueError("l and m must be positive")
    if j == 0:
        raise ValueError(
            "j = 0 degenerates to the line pair l*x = +-m*y; use solve instead"
        )
    c = -j
    if c % 4 == 2:
        return SquareSplitResult((), MOD4_OBSTRUCTION)
    if c == 1:
        if l == 1:
            return SquareSplitResult((LatticePoint(-1, 0), LatticePoint(1, 0)))
        return SquareSplitResult(())
    if c > 2 and c % 2 and _is_prime(c):
        if (c + 1) % (2 * l) == 0 and (c - 1) % (2 * m) == 0:
            px = (c + 1) // (2 * l)
            py = (c - 1) // (2 * m)
            pts = sorted(
                LatticePoint(sx * px, sy * py) for sx in (-1, 1) for sy in (-1, 1)
            )
            return SquareSplitResult(tuple(pts))
        return SquareSplitResult(())
    conic, inv = validate(l * l, 0, -m * m, 0, 0, j)
    pts = solve_finite(conic, inv, divisor_cap=divisor_cap)
    return SquareSplitResult(tuple(pts))


def power_of_two_conic(beta: int, delta: int, epsilon: int, n: int) -> Conic:
    """The monic unit-k conic whose invariant is exactly 2^n.

    With alpha = 1, gamma = (beta^2 - 1)/4 (beta odd, beta != +-1) the
    discriminant is beta^2 - 4*gamma = 1, so k = 1 and
    I = delta^2 - 4*j - (2*epsilon - beta*delta)^2.  Solving I = 2^n for the
    constant term gives j = (delta^2 - M^2 - 2^n)/4, which is an integer for
    every odd beta and n >= 2.
    """
    if beta % 2 == 0:
        raise ValueError("beta must be odd")
    if beta * beta == 1:
        raise ValueError("beta = +-1 makes gamma zero")
    if n < 2:
        raise ValueError("n must be at least 2")
    m0 = 2 * epsilon - beta * delta
    num = delta * delta - m0 * m0 - (1 << n)
    if num % 4:
        raise ValueError("constant term is not an integer")
    gamma = (beta * beta - 1) // 4
    conic, _ = validate(1, beta, gamma, delta, epsilon, num // 4)
    return conic


def power_of_two_points(
    beta: int, delta: int, epsilon: int, n: int
) -> list[LatticePoint]:
    """The 2*(n-1) integral points of the power_of_two_conic family, sorted.

    The divisors of 2^n pair up as (2^(i-1), 2^(n-i+1)); indices i = 2..n are
    exactly the ones whose linear systems solve integrally, giving

        x_i = (e*2^(i-2)*(beta+1) - e*2^(n-i)*(beta-1) - delta - M*beta) / 2
        y_i = e*2^(n-i) - e*2^(i-2) + M

    for e = +-1, with M = 2*epsilon - beta*delta.  The numerator of x_i is
    even because beta^2 - 1 is divisible by 8 for odd beta.
    """
    power_of_two_conic(beta, delta, epsilon, n)  # argument validation
    m0 = 2 * epsilon - beta * delta
    points: set[LatticePoint] = set()
    for i in range(2, n + 1):
        lo = 1 << (i - 2)
        hi = 1 << (n - i)
        for e in (1, -1):
            num = e * lo * (beta + 1) - e * hi * (beta - 1) - delta - m0 * beta
            assert num % 2 == 0
            points.add(LatticePoint(num // 2, e * hi - e * lo + m0))
    return sorted(points)
