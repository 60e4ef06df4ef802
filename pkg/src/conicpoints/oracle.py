"""Independent cross-check machinery: search bounds, brute force, generators.

The brute-force search deliberately avoids the divisor route.  It scans y
and asks when the conic, read as a quadratic in x, has an integer root; the
only shared ingredient with the solver is exact integer arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .conic import Conic, Invariants, LatticePoint, invariants_of, validate
from .intmath import integer_sqrt, positive_divisors


@dataclass(frozen=True)
class SearchBound:
    bx: int
    by: int


def _ceil_div(n: int, d: int) -> int:
    # d > 0 everywhere this is used
    return -(-n // d)


def solution_bound(conic: Conic, inv: Invariants | None = None) -> SearchBound:
    """A box certain to contain every integral point (finite case only).

    At a solution, F1 and F2 are integers with product big_i, so each has
    absolute value at most |big_i|.  Feeding that into the elimination
    formulas

        2*k^2 * y      = s2 - s1 + 2*M
        4*alpha*k^2 * x = s1*(beta+k) - s2*(beta-k) - 2*delta*k^2 - 2*beta*M

    and bounding every term by absolute values gives

        |y| <= (2|I| + 2|M|) / (2 k^2)
        |x| <= (|I|(|beta+k| + |beta-k|) + 2|delta| k^2 + 2|beta||M|) / (4|alpha| k^2)

    rounded up to integers.
    """
    if inv is None:
        inv = invariants_of(conic)
    if inv.big_i == 0:
        raise ValueError("degenerate conic: the solution set has no finite box")
    k = inv.k
    abs_i, abs_m = abs(inv.big_i), abs(inv.m)
    by = _ceil_div(2 * abs_i + 2 * abs_m, 2 * k * k)
    bx = _ceil_div(
        abs_i * (abs(conic.beta + k) + abs(conic.beta - k))
        + 2 * abs(conic.delta) * k * k
        + 2 * abs(conic.beta) * abs_m,
        4 * abs(conic.alpha) * k * k,
    )
    return SearchBound(bx=bx, by=by)


def brute_force(conic: Conic, bound: SearchBound) -> list[LatticePoint]:
    """Every integral point with |x| <= bx and |y| <= by, sorted by (x, y).

    For each y the conic is alpha*x^2 + (beta*y + delta)*x + (gamma*y^2 +
    epsilon*y + j) = 0; integer roots require the discriminant to be a
    perfect square and the quadratic formula numerator to split evenly.
    """
    a = conic.alpha
    found: set[LatticePoint] = set()
    for y in range(-bound.by, bound.by + 1):
        lin = conic.beta * y + conic.delta
        disc = lin * lin - 4 * a * (conic.gamma * y * y + conic.epsilon * y + conic.j)
        s = integer_sqrt(disc)
        if s is None:
            continue
        for root in {s, -s}:
            num = root - lin
            if num % (2 * a) == 0:
                x = num // (2 * a)
                if abs(x) <= bound.bx:
                    found.add(LatticePoint(x, y))
    return sorted(found)


def random_valid_conic(
    seed: int, *, max_bk: int = 30, max_linear: int = 50
) -> Conic:
    """Deterministic sample from the admissible family.

    Draw k and a beta of matching parity with beta != +-k, so that
    (beta^2 - k^2)/4 is a nonzero integer; split it as alpha*gamma over a
    random divisor; draw the linear coefficients freely.  One draw in eight
    zeroes delta, epsilon and j to force degenerate (big_i = 0) instances
    into the stream.
    """
    rng = random.Random(seed)
    while True:
        k = rng.randint(1, max_bk)
        beta = rng.randint(-max_bk, max_bk)
        if (beta - k) % 2 or beta == k or beta == -k:
            continue
        prod = (beta * beta - k * k) // 4
        alpha = rng.choice(positive_divisors(prod)) * rng.choice((1, -1))
        gamma = prod // alpha
        if rng.random() < 0.125:
            delta = epsilon = j = 0
        else:
            delta = rng.randint(-max_linear, max_linear)
            epsilon = rng.randint(-max_linear, max_linear)
            j = rng.randint(-max_linear, max_linear)
        conic, _ = validate(alpha, beta, gamma, delta, epsilon, j)
        return conic
