"""Coin-problem denumerants.

p_A(n) counts nonnegative integer solutions of a1*x1 + ... + am*xm = n for a
finite set A of positive denominations.  Tables are exact big integers; the
only floating-point value in the module is the polynomial growth estimate
n^(m-1) / ((m-1)! * a1*...*am), valid when gcd(A) = 1.

Both partition families reduce to denumerants over A = {s, ..., s+L}:
the F-family count at n is p over A minus {k} evaluated at n-s, and the
C-family count at n is p over A minus {s} evaluated at n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd
from typing import Iterable

from ._backend import kernels
from .errors import ParameterError
from .partitions import GapParams

__all__ = [
    "CoinSystem",
    "denumerant_table",
    "asymptotic_estimate",
    "ratio_check",
    "f_counts",
    "c_counts",
]


@dataclass(frozen=True)
class CoinSystem:
    """A finite set of positive coin denominations (stored sorted, deduplicated)."""

    denominations: tuple[int, ...]

    def __init__(self, denominations: Iterable[int]):
        denoms = tuple(sorted({int(a) for a in denominations}))
        if not denoms:
            raise ParameterError("requires at least one denomination")
        if denoms[0] < 1:
            raise ParameterError("requires all denominations >= 1")
        object.__setattr__(self, "denominations", denoms)

    @property
    def gcd_value(self) -> int:
        return gcd(*self.denominations)

    def __len__(self) -> int:
        return len(self.denominations)


def denumerant_table(coins: CoinSystem, n_max: int) -> list[int]:
    """p[n] for n in 0..n_max, by the one-denomination-at-a-time DP."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return kernels.denumerant_table(coins.denominations, n_max)


def asymptotic_estimate(coins: CoinSystem, n: int) -> float:
    """n^(m-1) / ((m-1)! * product of denominations), as a double.

    Only meaningful (and only allowed) when gcd of the denominations is 1.
    """
    if coins.gcd_value != 1:
        raise ParameterError(
            "requires gcd(denominations) = 1 (got gcd=%d)" % coins.gcd_value
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    m = len(coins)
    denom = factorial(m - 1)
    for a in coins.denominations:
        denom *= a
    return n ** (m - 1) / denom


def ratio_check(coins: CoinSystem, n: int) -> float:
    """Exact p_A(n) divided by the growth estimate.

    The division is the only floating-point step; both operands are exact
    integers up to that point.
    """
    if coins.gcd_value != 1:
        raise ParameterError(
            "requires gcd(denominations) = 1 (got gcd=%d)" % coins.gcd_value
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    p_n = denumerant_table(coins, n)[n]
    m = len(coins)
    denom = factorial(m - 1)
    for a in coins.denominations:
        denom *= a
    return (p_n * denom) / n ** (m - 1)


def c_counts(params: GapParams, n_max: int) -> list[int]:
    """C-family counts 0..n_max: denumerants over {s+1, ..., s+L}."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    coins = tuple(range(params.s + 1, params.max_part + 1))
    return kernels.denumerant_table(coins, n_max)


def f_counts(params: GapParams, n_max: int) -> list[int]:
    """F-family counts 0..n_max: denumerants over {s,...,s+L} minus k, shifted.

    f[n] = p(n - s) for n >= s and 0 below s (the smallest part s must occur).
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    s = params.s
    if n_max < s:
        return [0] * (n_max + 1)
    coins = tuple(a for a in range(s, params.max_part + 1) if a != params.k)
    shifted = kernels.denumerant_table(coins, n_max - s)
    return [0] * s + shifted
