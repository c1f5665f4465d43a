"""Closed-form upper bounds on the size of agreeing families."""

from __future__ import annotations

import math

from ..errors import OutOfRange

#: (sqrt(5) - 1) / 2, the reciprocal of the golden ratio
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

_LOG_FLOAT_MAX = math.log(1e300)


def ft_ternary_bound(n: int, t: int) -> int:
    """Exact value of ``3^(n-3t+1) * sum_{i<t} C(3t-1, i) 2^i`` for t-agreeing subsets of [3]^n.

    Valid for ``t >= 1`` and ``n >= 3t - 1``. The binomial terms are generated
    by the ratio recurrence so the whole evaluation stays in integers.
    """
    if t < 1:
        raise OutOfRange(f"t must be at least 1, got {t}")
    if n < 3 * t - 1:
        raise OutOfRange(f"need n >= 3t-1 = {3 * t - 1}, got n={n}")
    m = 3 * t - 1
    term = 1  # C(m, 0) * 2^0
    total = 0
    for i in range(t):
        total += term
        term = term * (m - i) * 2 // (i + 1)
    return 3 ** (n - m) * total


def log_golden_ratio_bound(n: int, t: int) -> float:
    """Natural log of :func:`golden_ratio_bound`."""
    if not 0 <= t <= n:
        raise OutOfRange(f"need 0 <= t <= n, got n={n}, t={t}")
    return n * math.log(2.0) + t * math.log(GOLDEN)


def golden_ratio_bound(n: int, t: int) -> float:
    """``2^n * ((sqrt 5 - 1)/2)^t``; ``inf`` once the value passes 1e300."""
    log_value = log_golden_ratio_bound(n, t)
    if log_value > _LOG_FLOAT_MAX:
        return math.inf
    return math.ldexp(GOLDEN**t, n)


def log_simplified_ternary_bound(n: int, t: int) -> float:
    if t < 1:
        raise OutOfRange(f"t must be at least 1, got {t}")
    return (n - t / 10.0) * math.log(3.0)


def simplified_ternary_bound(n: int, t: int) -> float:
    """``3^(n - t/10)``; ``inf`` once the value passes 1e300."""
    log_value = log_simplified_ternary_bound(n, t)
    if log_value > _LOG_FLOAT_MAX:
        return math.inf
    return 3.0 ** (n - t / 10.0)


def log_ft_ternary_bound(n: int, t: int) -> float:
    # math.log accepts arbitrarily large ints
    return math.log(ft_ternary_bound(n, t))
