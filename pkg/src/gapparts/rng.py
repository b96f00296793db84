"""Deterministic random numbers for reproducible sampling.

The generator is SplitMix64: a 64-bit counter advanced by the constant
0x9E3779B97F4A7C15, with each counter value scrambled by two xor-shift
multiplies.  It is tiny, has no platform-dependent behaviour (everything is
integer arithmetic mod 2^64), and a given seed produces the same stream on
every machine and Python version.  Bounded draws use rejection sampling, so
they are exactly uniform and stay reproducible for bounds of any size,
including bounds wider than 64 bits.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 stream seeded with an arbitrary integer (reduced mod 2^64)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        """Return the next 64-bit output."""
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) for any bound >= 1.

        Draws ceil(bound.bit_length() / 64) words, assembles them
        little-endian into one integer, and rejects values past the largest
        multiple of `bound` so the result is unbiased.
        """
        if bound < 1:
            raise ValueError("randbelow requires bound >= 1")
        nwords = max(1, (bound.bit_length() + 63) // 64)
        span = 1 << (64 * nwords)
        limit = span - span % bound
        while True:
            x = 0
            for i in range(nwords):
                x |= self.next_u64() << (64 * i)
            if x < limit:
                return x % bound
