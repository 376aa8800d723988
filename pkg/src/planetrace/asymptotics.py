"""Wright's asymptotic estimate for the number of plane partitions.

    pp(n) ~ zeta(3)^(7/36) / sqrt(12 pi) * (n/2)^(-25/36)
            * exp(3 zeta(3)^(1/3) (n/2)^(2/3) + zeta'(-1))

The power of ``n/2`` is negative.  With ``+25/36`` the ratio
``pp(n) / estimate`` falls towards 0 (about 0.0043, 0.0017, 0.0006 at
n = 100, 200, 400); with ``-25/36`` it rises towards 1 (0.9888, 0.9930,
0.9956).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

ZETA3 = 1.2020569031595942854
ZETA_PRIME_MINUS1 = -0.16542114370045092921
POWER = -25 / 36


class EstimateRangeError(OverflowError):
    """The estimate does not fit in a double."""


@dataclass(frozen=True)
class WrightEstimate:
    n: int
    estimate: float
    exact: Optional[int] = None
    ratio: Optional[float] = None

    def __post_init__(self):
        if not self.estimate > 0:
            raise ValueError("estimate must be positive")
        if (self.exact is None) != (self.ratio is None):
            raise ValueError("ratio is present exactly when exact is")


def log_wright(n: int) -> float:
    """Natural log of the estimate; finite for every n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    h = n / 2
    return (
        (7 / 36) * math.log(ZETA3)
        - 0.5 * math.log(12 * math.pi)
        + POWER * math.log(h)
        + 3 * ZETA3 ** (1 / 3) * h ** (2 / 3)
        + ZETA_PRIME_MINUS1
    )


def log_ratio(n: int, exact: int) -> float:
    """``log(exact) - log(estimate)``; works for integers beyond double range."""
    return math.log(exact) - log_wright(n)


def wright_pp(n: int, exact: Optional[int] = None) -> WrightEstimate:
    """Evaluate the estimate, attaching ``exact / estimate`` when ``exact`` is given."""
    le = log_wright(n)
    try:
        est = math.exp(le)
    except OverflowError:
        raise EstimateRangeError(f"estimate for n={n} exceeds double precision range") from None
    ratio = None if exact is None else math.exp(log_ratio(n, exact))
    return WrightEstimate(n, est, exact, ratio)
